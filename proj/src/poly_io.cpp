#include "ybx/poly_io.hpp"

#include <sstream>

namespace ybx {

using nlohmann::ordered_json;

static std::string fam_tag(Fam f) {
    switch (f) {
        case Fam::x: return "x";
        case Fam::y: return "y";
        case Fam::t: return "t";
        case Fam::q: return "q";
        case Fam::beta: return "beta";
        case Fam::alpha: return "alpha";
        case Fam::lambda: return "lambda";
        case Fam::z: return "z";
        case Fam::h: return "h";
        case Fam::qij: return "qij";
        case Fam::p: return "p";
        case Fam::b: return "ab";
    }
    return "?";
}

static Fam fam_of_tag(const std::string& s) {
    if (s == "x") return Fam::x;
    if (s == "y") return Fam::y;
    if (s == "t") return Fam::t;
    if (s == "q") return Fam::q;
    if (s == "beta") return Fam::beta;
    if (s == "alpha") return Fam::alpha;
    if (s == "lambda") return Fam::lambda;
    if (s == "z") return Fam::z;
    if (s == "h") return Fam::h;
    if (s == "qij") return Fam::qij;
    if (s == "p") return Fam::p;
    if (s == "ab") return Fam::b;
    throw std::runtime_error("unknown variable family: " + s);
}

ordered_json poly_to_json(const ExactPoly& p) {
    auto vars = p.vars();
    ordered_json jv = ordered_json::array();
    for (auto& v : vars) {
        ordered_json e = ordered_json::array();
        e.push_back(fam_tag(v.fam));
        if (v.i >= 0) e.push_back((int)v.i);
        if (v.j >= 0) e.push_back((int)v.j);
        jv.push_back(e);
    }
    ordered_json jt = ordered_json::array();
    for (auto& [m, c] : p.terms()) {
        ordered_json term;
        std::vector<int> exps(vars.size(), 0);
        for (auto& [v, k] : m.e) {
            auto it = std::lower_bound(vars.begin(), vars.end(), v);
            exps[it - vars.begin()] = k;
        }
        term["exp"] = exps;
        term["num"] = c.get_num().get_str();
        term["den"] = c.get_den().get_str();
        jt.push_back(term);
    }
    ordered_json j;
    j["vars"] = jv;
    j["terms"] = jt;
    return j;
}

ExactPoly poly_from_json(const nlohmann::json& j) {
    std::vector<VarId> vars;
    for (auto& e : j.at("vars")) {
        VarId v{fam_of_tag(e.at(0).get<std::string>()), -1, -1};
        if (e.size() > 1) v.i = (std::int16_t)e.at(1).get<int>();
        if (e.size() > 2) v.j = (std::int16_t)e.at(2).get<int>();
        vars.push_back(v);
    }
    ExactPoly p;
    for (auto& t : j.at("terms")) {
        Monomial m;
        auto exps = t.at("exp");
        for (size_t k = 0; k < vars.size(); ++k) {
            int e = exps.at(k).get<int>();
            if (e) m.e.emplace_back(vars[k], e);
        }
        std::sort(m.e.begin(), m.e.end());
        Rat c(Int(t.at("num").get<std::string>()), Int(t.at("den").get<std::string>()));
        c.canonicalize();
        p.add_term(m, c);
    }
    return p;
}

std::string tuple_form(const ExactPoly& p, VarId v, const std::string& vname) {
    auto cs = p.univariate(v);
    std::ostringstream os;
    os << "(";
    for (size_t k = 0; k < cs.size(); ++k) {
        if (k) os << ",";
        os << cs[k].get_str();
    }
    os << ")_" << vname;
    return os.str();
}

static std::string latex_var(const VarId& v) {
    std::ostringstream os;
    switch (v.fam) {
        case Fam::beta: os << "\\beta"; break;
        case Fam::alpha: os << "\\alpha"; break;
        case Fam::lambda: os << "\\lambda"; break;
        case Fam::qij: os << "q"; break;
        case Fam::p: os << "p"; break;
        case Fam::b: os << (v.j == 0 ? "a" : "b"); break;
        default: {
            std::string s = v.str();
            return s;
        }
    }
    if (v.fam == Fam::qij || v.fam == Fam::p) {
        os << "_{" << (int)v.i << (int)v.j << "}";
    } else if (v.i >= 0) {
        os << "_{" << (int)v.i << "}";
    }
    return os.str();
}

std::string latex_form(const ExactPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : p.terms()) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool needc = (a != 1) || m.empty();
        if (needc) {
            if (a.get_den() == 1) os << a.get_num().get_str();
            else os << "\\tfrac{" << a.get_num().get_str() << "}{" << a.get_den().get_str() << "}";
        }
        for (auto& [v, k] : m.e) {
            os << latex_var(v);
            if (k != 1) os << "^{" << k << "}";
        }
    }
    return os.str();
}

ordered_json ncpoly_to_json(const NCPoly& p) {
    ordered_json words = ordered_json::array();
    for (auto& [w, c] : p) {
        ordered_json jw;
        ordered_json ls = ordered_json::array();
        for (auto& l : w.ls) ls.push_back({(int)l.i, (int)l.j});
        jw["letters"] = ls;
        jw["coef"] = poly_to_json(c);
        words.push_back(jw);
    }
    ordered_json j;
    j["words"] = words;
    return j;
}

} // namespace ybx
