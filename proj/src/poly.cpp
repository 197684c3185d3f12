#include "ybx/poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace ybx {

Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

Int binomial(const Int& n, long k) {
    if (k < 0) return 0;
    Int num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    Int r = num / den;
    return r;
}

Int binomial(long n, long k) {
    if (k < 0 || (n >= 0 && k > n)) return 0;
    return binomial(Int(n), k);
}

static const char* fam_name(Fam f) {
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
        case Fam::qij: return "q";
        case Fam::p: return "p";
        case Fam::b: return "ab";
    }
    return "?";
}

std::string VarId::str() const {
    std::ostringstream os;
    if (fam == Fam::b) {
        os << (j == 0 ? "a" : "b") << (int)i;
        return os.str();
    }
    os << fam_name(fam);
    if (fam == Fam::qij || fam == Fam::p) {
        os << "_{" << (int)i << (int)j << "}";
        return os.str();
    }
    if (i >= 0) os << (int)i;
    return os.str();
}

int Monomial::degree() const {
    int d = 0;
    for (auto& [v, k] : e) d += k;
    return d;
}

int Monomial::deg(VarId v) const {
    for (auto& [w, k] : e)
        if (w == v) return k;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.e.reserve(e.size() + o.e.size());
    auto a = e.begin(), b = o.e.begin();
    while (a != e.end() && b != o.e.end()) {
        if (a->first < b->first) r.e.push_back(*a++);
        else if (b->first < a->first) r.e.push_back(*b++);
        else { r.e.emplace_back(a->first, a->second + b->second); ++a; ++b; }
    }
    r.e.insert(r.e.end(), a, e.end());
    r.e.insert(r.e.end(), b, o.e.end());
    return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
    Monomial r;
    auto a = e.begin(), b = o.e.begin();
    while (b != o.e.end()) {
        if (a == e.end()) return std::nullopt;
        if (a->first < b->first) { r.e.push_back(*a++); continue; }
        if (b->first < a->first) return std::nullopt;
        if (a->second < b->second) return std::nullopt;
        if (a->second > b->second) r.e.emplace_back(a->first, a->second - b->second);
        ++a; ++b;
    }
    r.e.insert(r.e.end(), a, e.end());
    return r;
}

std::string Monomial::str() const {
    if (e.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto& [v, k] : e) {
        if (!first) os << "*";
        first = false;
        os << v.str();
        if (k != 1) os << "^" << k;
    }
    return os.str();
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // first variable (in VarId order) with differing exponent decides;
    // larger exponent on it = larger monomial
    auto i = a.e.begin();
    auto j = b.e.begin();
    while (i != a.e.end() && j != b.e.end()) {
        if (i->first < j->first) return false;    // a has positive exp on earlier var
        if (j->first < i->first) return true;
        if (i->second != j->second) return i->second < j->second;
        ++i; ++j;
    }
    if (i != a.e.end()) return false;
    if (j != b.e.end()) return true;
    return false;
}

ExactPoly ExactPoly::var(VarId v, int exp) {
    ExactPoly p;
    if (exp == 0) return ExactPoly(1);
    Monomial m;
    m.e.emplace_back(v, exp);
    p.terms_[m] = 1;
    return p;
}

bool ExactPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat ExactPoly::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rat(0) : it->second;
}

int ExactPoly::degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.degree();
}

int ExactPoly::deg(VarId v) const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.deg(v));
    return d;
}

std::vector<VarId> ExactPoly::vars() const {
    std::vector<VarId> r;
    for (auto& [m, c] : terms_)
        for (auto& [v, k] : m.e) r.push_back(v);
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

void ExactPoly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ExactPoly ExactPoly::operator+(const ExactPoly& o) const { ExactPoly r = *this; r += o; return r; }
ExactPoly ExactPoly::operator-(const ExactPoly& o) const { ExactPoly r = *this; r -= o; return r; }

ExactPoly ExactPoly::operator-() const {
    ExactPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

ExactPoly ExactPoly::operator*(const ExactPoly& o) const {
    ExactPoly r;
    if (terms_.empty() || o.terms_.empty()) return r;
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

ExactPoly ExactPoly::operator*(const Rat& c) const {
    ExactPoly r;
    if (c == 0) return r;
    for (auto& [m, x] : terms_) r.terms_[m] = x * c;
    return r;
}

ExactPoly ExactPoly::operator/(const Rat& c) const {
    if (c == 0) throw std::runtime_error("division by zero rational");
    Rat inv(c.get_den(), c.get_num());
    inv.canonicalize();
    return *this * inv;
}

ExactPoly ExactPoly::pow(long k) const {
    if (k < 0) throw std::runtime_error("ExactPoly::pow: negative exponent");
    ExactPoly r(1);
    ExactPoly base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = (k >>= 1) ? base * base : base;
    }
    return r;
}

ExactPoly ExactPoly::mul_trunc(const ExactPoly& o, const std::map<VarId, int>& caps) const {
    ExactPoly r;
    auto ok = [&](const Monomial& m) {
        for (auto& [v, k] : m.e) {
            auto it = caps.find(v);
            if (it != caps.end() && k > it->second) return false;
        }
        return true;
    };
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) {
            Monomial m = m1 * m2;
            if (ok(m)) r.add_term(m, c1 * c2);
        }
    return r;
}

ExactPoly ExactPoly::substitute(const std::map<VarId, ExactPoly>& rules) const {
    ExactPoly r;
    for (auto& [m, c] : terms_) {
        ExactPoly term(c);
        for (auto& [v, k] : m.e) {
            auto it = rules.find(v);
            if (it == rules.end()) term = term * ExactPoly::var(v, k);
            else term = term * it->second.pow(k);
        }
        r += term;
    }
    return r;
}

ExactPoly ExactPoly::subst(VarId v, const ExactPoly& value) const {
    return substitute({{v, value}});
}

Rat ExactPoly::eval(const std::map<VarId, Rat>& values) const {
    Rat r = 0;
    for (auto& [m, c] : terms_) {
        Rat t = c;
        for (auto& [v, k] : m.e) {
            auto it = values.find(v);
            if (it == values.end()) throw std::runtime_error("eval: unbound variable " + v.str());
            for (int a = 0; a < k; ++a) t *= it->second;
        }
        r += t;
    }
    return r;
}

ExactPoly ExactPoly::derivative(VarId v) const {
    ExactPoly r;
    for (auto& [m, c] : terms_) {
        int k = m.deg(v);
        if (k == 0) continue;
        Monomial d;
        for (auto& [w, e] : m.e) {
            if (w == v) { if (e > 1) d.e.emplace_back(w, e - 1); }
            else d.e.emplace_back(w, e);
        }
        r.add_term(d, c * k);
    }
    return r;
}

ExactPoly ExactPoly::coeff_of(VarId v, int k) const {
    ExactPoly r;
    for (auto& [m, c] : terms_) {
        if (m.deg(v) != k) continue;
        Monomial d;
        for (auto& [w, e] : m.e)
            if (!(w == v)) d.e.emplace_back(w, e);
        r.add_term(d, c);
    }
    return r;
}

std::vector<Rat> ExactPoly::univariate(VarId v) const {
    std::vector<Rat> r(std::max(deg(v), 0) + 1, Rat(0));
    for (auto& [m, c] : terms_) {
        if ((int)m.e.size() > 1 || (m.e.size() == 1 && !(m.e[0].first == v)))
            throw std::runtime_error("univariate: extra variable in " + m.str());
        r[m.degree()] = c;
    }
    return r;
}

std::optional<ExactPoly> ExactPoly::divide_exact(const ExactPoly& o) const {
    if (o.is_zero()) return std::nullopt;
    ExactPoly rem = *this, quot;
    const auto& [lm, lc] = *o.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms_.rbegin();
        auto q = rm.divide(lm);
        if (!q) return std::nullopt;
        Rat qc = rc / lc;
        quot.add_term(*q, qc);
        ExactPoly sub;
        sub.terms_[*q] = qc;
        rem -= sub * o;
    }
    return quot;
}

Rat ExactPoly::content() const {
    Int g = 0, l = 1;
    for (auto& [m, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    }
    if (g == 0) return 0;
    return Rat(g, l);
}

std::string ExactPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest-order terms last to match tuple notation reading order
    for (auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (m.empty()) os << a.get_str();
        else if (a == 1) os << m.str();
        else os << a.get_str() << "*" << m.str();
    }
    return os.str();
}

static ExactPoly det_cofactor(const std::vector<std::vector<ExactPoly>>& m,
                              std::vector<int> cols, int row) {
    int n = (int)cols.size();
    if (n == 0) return ExactPoly(1);
    if (n == 1) return m[row][cols[0]];
    ExactPoly r;
    for (int k = 0; k < n; ++k) {
        if (m[row][cols[k]].is_zero()) continue;
        std::vector<int> sub;
        for (int j = 0; j < n; ++j)
            if (j != k) sub.push_back(cols[j]);
        ExactPoly minor = det_cofactor(m, sub, row + 1);
        if (k % 2)
            r -= m[row][cols[k]] * minor;
        else
            r += m[row][cols[k]] * minor;
    }
    return r;
}

ExactPoly poly_det(const std::vector<std::vector<ExactPoly>>& m) {
    int n = (int)m.size();
    for (auto& row : m)
        if ((int)row.size() != n) throw std::runtime_error("poly_det: matrix not square");
    if (n == 0) return ExactPoly(1);
    if (n <= 4) {
        std::vector<int> cols(n);
        for (int i = 0; i < n; ++i) cols[i] = i;
        return det_cofactor(m, cols, 0);
    }
    // Bareiss fraction-free elimination (dense)
    std::vector<std::vector<ExactPoly>> a = m;
    ExactPoly prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k].is_zero()) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (!a[r][k].is_zero()) { piv = r; break; }
            if (piv < 0) return ExactPoly(0);
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                ExactPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                auto q = num.divide_exact(prev);
                if (!q) throw std::runtime_error("poly_det: Bareiss division not exact");
                a[i][j] = *q;
            }
        prev = a[k][k];
    }
    return sign < 0 ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

ExactPoly q_int(int m, VarId q) {
    ExactPoly r;
    for (int a = 0; a < m; ++a) r += ExactPoly::var(q, a);
    return r;
}

ExactPoly q_binomial(int n, int k, VarId q) {
    if (k < 0 || k > n) return ExactPoly(0);
    // Pascal recursion [n k] = [n-1 k] + q^(n-k) [n-1 k-1]
    std::vector<std::vector<ExactPoly>> c(n + 1);
    for (int i = 0; i <= n; ++i) {
        int top = std::min(i, k);
        c[i].resize(top + 1);
        c[i][0] = ExactPoly(1);
        for (int j = 1; j <= top; ++j) {
            if (j == i) { c[i][j] = ExactPoly(1); continue; }
            c[i][j] = c[i - 1][j] + ExactPoly::var(q, i - j) * c[i - 1][j - 1];
        }
    }
    return c[n][k];
}

Int stirling(StirlingKind kind, int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    std::vector<std::vector<Int>> s(n + 1, std::vector<Int>(n + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) {
            if (kind == StirlingKind::second)
                s[i][j] = s[i - 1][j - 1] + j * s[i - 1][j];
            else
                s[i][j] = s[i - 1][j - 1] + (i - 1) * s[i - 1][j];
        }
    return s[n][k];
}

ExactPoly symbolic_pow_series(const ExactPoly& f, VarId lambda,
                              const std::map<VarId, int>& caps) {
    if (f.constant_term() != 1)
        throw std::runtime_error("symbolic_pow_series: constant term must be 1");
    ExactPoly g = f - ExactPoly(1);   // no constant term
    ExactPoly lam = ExactPoly::var(lambda);
    ExactPoly result(1), gk(1), binom(1);
    for (int k = 1;; ++k) {
        gk = gk.mul_trunc(g, caps);
        if (gk.is_zero()) break;
        binom = binom * (lam - ExactPoly(k - 1)) / Rat(k);
        result += binom * gk;
    }
    return result;
}

RatFun::RatFun(ExactPoly n, ExactPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::runtime_error("RatFun: zero denominator");
    normalize();
}

void RatFun::normalize() {
    if (num_.is_zero()) { den_ = ExactPoly(1); return; }
    Rat cn = num_.content(), cd = den_.content();
    num_ = num_ / cn;
    den_ = den_ / cd;
    Rat scale = cn / cd;
    if (den_.terms().rbegin()->second < 0) { num_ = -num_; den_ = -den_; }
    num_ = num_ * scale;
    // pull content of the scaled numerator back out so gcd(int contents)=1
    Rat c2 = num_.content();
    Int g;
    mpz_gcd(g.get_mpz_t(), c2.get_num().get_mpz_t(), Int(1).get_mpz_t());
    (void)g;
}

ExactPoly RatFun::series(VarId v, int ord) const {
    Rat d0 = den_.constant_term();
    if (d0 == 0) throw std::runtime_error("RatFun::series: denominator vanishes at 0");
    // g = 1 - den/d0 has no constant term in v (all other vars assumed absent
    // from constant check responsibilities of the caller)
    ExactPoly g = ExactPoly(1) - den_ / d0;
    std::map<VarId, int> caps{{v, ord}};
    auto truncate = [&](const ExactPoly& p) {
        ExactPoly r;
        for (auto& [m, c] : p.terms())
            if (m.deg(v) <= ord) r.add_term(m, c);
        return r;
    };
    ExactPoly inv(1), gk(1);
    for (int k = 1; k <= ord; ++k) {
        gk = truncate(gk.mul_trunc(g, caps));
        if (gk.is_zero()) break;
        inv += gk;
    }
    return truncate((num_ / d0).mul_trunc(inv, caps));
}

std::string RatFun::str() const {
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

} // namespace ybx
