#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ybx/dunklrep.hpp"
#include "ybx/graph.hpp"
#include "ybx/ncreduce.hpp"
#include "ybx/numfam.hpp"
#include "ybx/poly_io.hpp"
#include "ybx/verify.hpp"

using namespace ybx;
using nlohmann::ordered_json;

namespace {

constexpr int EXIT_USAGE = 2;
constexpr int EXIT_SIZE = 3;
constexpr int EXIT_INTERNAL = 4;

struct Output {
    std::string format = "json";   // json | csv | latex
    void poly(const std::string& name, const ExactPoly& p) {
        if (format == "json") {
            ordered_json j;
            j["name"] = name;
            j["poly"] = poly_to_json(p);
            j["text"] = p.str();
            std::cout << j.dump() << "\n";
        } else if (format == "csv") {
            std::cout << name << "," << p.str() << "\n";
        } else {
            std::cout << latex_form(p) << "\n";
        }
    }
    void value(const std::string& name, const Int& v) {
        if (format == "json") {
            ordered_json j;
            j["name"] = name;
            j["value"] = v.get_str();
            std::cout << j.dump() << "\n";
        } else if (format == "csv") {
            std::cout << name << "," << v.get_str() << "\n";
        } else {
            std::cout << v.get_str() << "\n";
        }
    }
};

std::vector<Letter> parse_word(const std::string& s) {
    // "12,23,34" or "1-2,2-3"
    std::vector<Letter> w;
    std::string tok;
    auto flush = [&]() {
        if (tok.empty()) return;
        int i, j;
        auto dash = tok.find('-');
        if (dash != std::string::npos) {
            i = std::stoi(tok.substr(0, dash));
            j = std::stoi(tok.substr(dash + 1));
        } else if (tok.size() == 2) {
            i = tok[0] - '0';
            j = tok[1] - '0';
        } else {
            throw CLI::ValidationError("word", "cannot parse letter '" + tok + "'");
        }
        w.emplace_back(i, j);
        tok.clear();
    };
    for (char c : s) {
        if (c == ',' || c == ' ') flush();
        else tok += c;
    }
    flush();
    return w;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ybx: exact Yang-Baxter / Schubert-Grothendieck / Tutte calculator"};
    app.require_subcommand(1);
    Output out;
    app.add_option("--format", out.format, "output format")->check(CLI::IsMember({"json", "csv", "latex"}));
    long max_fuel = 10000000;
    app.add_option("--max-fuel", max_fuel, "rewrite budget for reductions");
    int max_n = 9;
    app.add_option("--max-n", max_n, "size guard for table-building commands");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "reduced polynomial of a word in the algebra");
    std::string word_str, beta_str = "sym", alpha_str = "0", spec = "all-ones";
    bool commutative = false;
    reduce->add_option("--word", word_str, "letters, e.g. \"12,23,34\"");
    reduce->add_option("--beta", beta_str, "beta value: sym | integer");
    reduce->add_option("--alpha", alpha_str, "alpha value: sym | integer");
    reduce->add_option("--spec", spec, "specialization")
        ->check(CLI::IsMember({"all-ones", "last-column-t", "row-ti", "first-row-t", "qt", "none"}));
    reduce->add_flag("--commutative", commutative, "use the commutative (a') mode");

    // groth
    auto* groth = app.add_subcommand("groth", "beta-Grothendieck polynomials");
    std::string perm_str, Astr, gspec = "none";
    groth->add_option("--perm", perm_str, "one-line permutation, e.g. \"1,5,4,3,2\"")->required();
    groth->add_option("--A", Astr, "parameter vector a,b,c,h,e (integers)");
    groth->add_option("--spec", gspec, "specialization")
        ->check(CLI::IsMember({"none", "ones", "q1", "principal", "R", "H", "F"}));

    // rep
    auto* repc = app.add_subcommand("rep", "exact representation checks");
    std::string kind = "bruhat", which_check = "all";
    int rep_n = 3;
    repc->add_option("--kind", kind, "bruhat | qbruhat | gaudin | nabla")
        ->check(CLI::IsMember({"bruhat", "qbruhat", "gaudin", "nabla"}));
    repc->add_option("--n", rep_n, "size");
    repc->add_option("--check", which_check, "which checks (all)");

    // tutte
    auto* tutte = app.add_subcommand("tutte", "graph polynomials");
    std::string graph_file;
    bool want_universal = false, want_chrom = false, want_hilb = false;
    tutte->add_option("--graph", graph_file, "graph file: first line n; lines \"i j m\"");
    tutte->add_flag("--universal", want_universal, "universal Tutte polynomial (needs --n)");
    tutte->add_flag("--chromatic", want_chrom, "chromatic polynomial");
    tutte->add_flag("--hilb", want_hilb, "Hilbert polynomial of the abelianization");
    int tutte_n = 0;
    tutte->add_option("--n", tutte_n, "number of vertices for --universal");

    // family
    auto* fam = app.add_subcommand("family", "closed-form number families");
    std::string fam_name;
    std::vector<int> fam_args;
    int fam_n = -1;
    fam->add_option("--name", fam_name, "family name")->required();
    fam->add_option("--n", fam_n, "first argument");
    fam->add_option("--args", fam_args, "additional arguments");

    // hilb
    auto* hilb = app.add_subcommand("hilb", "Hilbert series of the named algebras");
    std::string alg;
    int hn = 3, hm = 0, trunc = -1;
    hilb->add_option("--algebra", alg, "6T | 6Tdual | CYB | 4T | 4NT | McCoolDual | "
                                       "McCoolPlusDual | ANC | BKLdual | super6Tdual | OSgeneric")
        ->required();
    hilb->add_option("--n", hn, "n");
    hilb->add_option("--m", hm, "m (super family)");
    hilb->add_option("--trunc", trunc, "series truncation order for rational answers");

    // verify
    auto* ver = app.add_subcommand("verify", "run acceptance suites");
    std::string suite = "all";
    ver->add_option("--suite", suite, "suite name or 'all'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : EXIT_USAGE;
    }

    try {
        if (*reduce) {
            AlgebraParams P;
            P.commutative = commutative;
            P.fuel = max_fuel;
            P.beta_uniform = beta_str == "sym" ? ExactPoly::var(VarId::Beta())
                                               : ExactPoly(std::stol(beta_str));
            P.alpha_uniform = alpha_str == "sym" ? ExactPoly::var(VarId::Alpha())
                                                 : ExactPoly(std::stol(alpha_str));
            auto word = parse_word(word_str);
            int n = 2;
            for (auto& l : word) n = std::max(n, (int)l.j);
            if (spec == "none" && !commutative) {
                NCPoly red = fold_reduce(word, P);
                std::cout << ncpoly_to_json(red).dump() << "\n";
                return 0;
            }
            SpecRule rule = SpecRule::all_ones;
            if (spec == "last-column-t") rule = SpecRule::last_column_t;
            else if (spec == "row-ti") rule = SpecRule::row_ti;
            else if (spec == "first-row-t") rule = SpecRule::first_row_t;
            else if (spec == "qt") rule = SpecRule::qt;
            ExactPoly result = commutative
                                   ? specialize_nc(fold_reduce_commutative(word, P), rule, n)
                                   : specialize_nc(fold_reduce(word, P), rule, n);
            out.poly("reduce(" + word_str + ")", result);
            return 0;
        }
        if (*groth) {
            Permutation w = Permutation::parse(perm_str);
            if (w.n() > max_n) {
                std::cerr << "size error: permutation too large\n";
                return EXIT_SIZE;
            }
            ExactPoly result;
            if (!Astr.empty()) {
                std::vector<long> v;
                std::string tok;
                for (char c : Astr + ",") {
                    if (c == ',') { v.push_back(std::stol(tok)); tok.clear(); }
                    else tok += c;
                }
                if (v.size() != 5) {
                    std::cerr << "usage error: --A needs 5 integers a,b,c,h,e\n";
                    return EXIT_USAGE;
                }
                ParamVectorA A{ExactPoly(v[0]), ExactPoly(v[1]), ExactPoly(v[2]),
                               ExactPoly(v[3]), ExactPoly(v[4])};
                if (!A.coxeter_valid()) {
                    std::cerr << "usage error: A fails (a+b)(a-c)+he=0\n";
                    return EXIT_USAGE;
                }
                out.poly("groth_A(" + perm_str + ")", generalized_schubert(w, A));
                return 0;
            }
            if (gspec == "ones") result = groth_all_ones(w);
            else if (gspec == "q1" || gspec == "R") result = specialize_R(w);
            else if (gspec == "principal") result = groth_principal(w);
            else if (gspec == "H") result = double_special_H(w);
            else if (gspec == "F") result = groth_F(w);
            else result = grothendieck(w);
            out.poly("groth(" + perm_str + ")", result);
            return 0;
        }
        if (*repc) {
            CheckReport r;
            if (kind == "bruhat") {
                r = relations_check(bruhat_rep(rep_n), RepKind::bruhat);
                auto v = vanishing_check(rep_n, RepKind::bruhat);
                r.lines.insert(r.lines.end(), v.lines.begin(), v.lines.end());
            } else if (kind == "qbruhat") {
                r = relations_check(quantum_bruhat_rep(rep_n), RepKind::qbruhat);
                auto v = vanishing_check(rep_n, RepKind::qbruhat);
                r.lines.insert(r.lines.end(), v.lines.begin(), v.lines.end());
            } else if (kind == "gaudin") {
                std::vector<Rat> z;
                for (int i = 0; i < rep_n; ++i) z.push_back(Rat(2 * i + 1, 1 + (i % 3)));
                r = gaudin_check(rep_n, z);
            } else {
                r = nabla_check(rep_n, 5);
            }
            ordered_json j = ordered_json::array();
            bool all = true;
            for (auto& line : r.lines) {
                j.push_back({{"identity", line.name}, {"status", line.pass ? "pass" : "fail"}});
                if (!line.pass) all = false;
            }
            std::cout << j.dump() << "\n";
            return all ? 0 : EXIT_INTERNAL;
        }
        if (*tutte) {
            if (want_universal) {
                if (tutte_n < 2) {
                    std::cerr << "usage error: --universal needs --n\n";
                    return EXIT_USAGE;
                }
                out.poly("universal_tutte(" + std::to_string(tutte_n) + ")",
                         universal_tutte(tutte_n));
                return 0;
            }
            if (graph_file.empty()) {
                std::cerr << "usage error: need --graph\n";
                return EXIT_USAGE;
            }
            std::ifstream in(graph_file);
            if (!in) {
                std::cerr << "usage error: cannot open " << graph_file << "\n";
                return EXIT_USAGE;
            }
            std::stringstream ss;
            ss << in.rdbuf();
            Multigraph g = Multigraph::parse(ss.str());
            if (want_chrom) out.poly("chromatic", chromatic(g));
            else if (want_hilb) out.poly("hilb_ab", hilb_ab(g));
            else out.poly("tutte", tutte_dc(g));
            return 0;
        }
        if (*fam) {
            std::vector<int> args;
            if (fam_n >= 0) args.push_back(fam_n);
            args.insert(args.end(), fam_args.begin(), fam_args.end());
            auto r = family(fam_name, args);
            if (r.is_poly) out.poly(fam_name, r.poly);
            else out.value(fam_name, r.value);
            return 0;
        }
        if (*hilb) {
            auto r = hilbert_series(hilb_algebra_of(alg), hn, hm);
            if (r.is_rational) {
                if (trunc >= 0) {
                    out.poly("hilb_" + alg + "_series", r.fun.series(VarId::T(), trunc));
                } else if (out.format == "json") {
                    ordered_json j;
                    j["algebra"] = alg;
                    j["num"] = poly_to_json(r.fun.num());
                    j["den"] = poly_to_json(r.fun.den());
                    j["text"] = r.fun.str();
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << r.fun.str() << "\n";
                }
            } else {
                out.poly("hilb_" + alg, r.poly);
            }
            return 0;
        }
        if (*ver) {
            std::vector<SuiteReport> reports;
            if (suite == "all") reports = run_all_suites();
            else reports.push_back(run_suite(suite));
            bool all = true;
            ordered_json j = ordered_json::array();
            for (auto& r : reports) {
                for (auto& line : r.checks.lines) {
                    ordered_json e;
                    e["suite"] = r.suite;
                    e["identity"] = line.name;
                    e["status"] = line.pass ? "pass" : "fail";
                    if (!r.blocking && !line.pass) e["status"] = "fail(non-blocking)";
                    j.push_back(e);
                }
                if (!r.passed()) all = false;
                std::cerr << (r.passed() ? "PASS " : "FAIL ") << r.suite << " ("
                          << r.checks.lines.size() << " checks, " << r.seconds << "s)\n";
            }
            std::cout << j.dump() << "\n";
            return all ? 0 : 1;
        }
    } catch (const NonterminationError& e) {
        std::cerr << "fuel exhausted: " << e.what() << "\n";
        return EXIT_SIZE;
    } catch (const std::exception& e) {
        std::string msg = e.what();
        std::cerr << "error: " << msg << "\n";
        if (msg.find("<=") != std::string::npos || msg.find("too large") != std::string::npos ||
            msg.find("too many") != std::string::npos)
            return EXIT_SIZE;
        return EXIT_INTERNAL;
    }
    return 0;
}
