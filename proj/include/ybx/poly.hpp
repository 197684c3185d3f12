#ifndef YBX_POLY_HPP
#define YBX_POLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ybx {

using Rat = mpq_class;
using Int = mpz_class;

Int factorial(long n);
Int binomial(const Int& n, long k);
Int binomial(long n, long k);

// Symbol families, in canonical variable order.
enum class Fam : std::uint8_t {
    x = 0, y, t, q, beta, alpha, lambda, z, h, qij, p, b,
};

// A variable is a family plus up to two small indices (-1 = unused).
struct VarId {
    Fam fam;
    std::int16_t i = -1;
    std::int16_t j = -1;

    friend bool operator==(const VarId&, const VarId&) = default;
    friend auto operator<=>(const VarId&, const VarId&) = default;

    std::string str() const;

    static VarId X(int k) { return {Fam::x, (std::int16_t)k, -1}; }
    static VarId Y(int k = -1) { return {Fam::y, (std::int16_t)k, -1}; }
    static VarId T(int k = -1) { return {Fam::t, (std::int16_t)k, -1}; }
    static VarId Q() { return {Fam::q, -1, -1}; }
    static VarId Qi(int k) { return {Fam::q, (std::int16_t)k, -1}; }
    static VarId Beta(int k = -1) { return {Fam::beta, (std::int16_t)k, -1}; }
    static VarId Alpha(int k = -1) { return {Fam::alpha, (std::int16_t)k, -1}; }
    static VarId Lambda() { return {Fam::lambda, -1, -1}; }
    static VarId Z(int k = -1) { return {Fam::z, (std::int16_t)k, -1}; }
    static VarId H(int k = -1) { return {Fam::h, (std::int16_t)k, -1}; }
    static VarId Qij(int a, int c) { return {Fam::qij, (std::int16_t)a, (std::int16_t)c}; }
    static VarId Pij(int a, int c) { return {Fam::p, (std::int16_t)a, (std::int16_t)c}; }
    static VarId A(int k) { return {Fam::b, (std::int16_t)k, 0}; }   // a_k of §5.4.2
    static VarId B(int k) { return {Fam::b, (std::int16_t)k, 1}; }   // b_k of §5.4.2
};

// Exponent vector, sparse: sorted by VarId, exponents > 0.
struct Monomial {
    std::vector<std::pair<VarId, int>> e;

    int degree() const;
    int deg(VarId v) const;
    bool empty() const { return e.empty(); }
    Monomial operator*(const Monomial& o) const;
    // componentwise division; nullopt if not divisible
    std::optional<Monomial> divide(const Monomial& o) const;
    friend bool operator==(const Monomial&, const Monomial&) = default;
    std::string str() const;
};

// Graded lex on the fixed VarId order (a genuine monomial order).
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class ExactPoly {
public:
    using Terms = std::map<Monomial, Rat, GrlexLess>;

    ExactPoly() = default;
    ExactPoly(long c) { if (c != 0) terms_[Monomial{}] = Rat(c); }
    ExactPoly(const Rat& c) { if (c != 0) terms_[Monomial{}] = c; }
    ExactPoly(const Int& c) { if (c != 0) terms_[Monomial{}] = Rat(c); }
    static ExactPoly var(VarId v, int exp = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_term() const;
    int degree() const;
    int deg(VarId v) const;
    std::vector<VarId> vars() const;
    size_t n_terms() const { return terms_.size(); }

    ExactPoly& operator+=(const ExactPoly& o);
    ExactPoly& operator-=(const ExactPoly& o);
    ExactPoly operator+(const ExactPoly& o) const;
    ExactPoly operator-(const ExactPoly& o) const;
    ExactPoly operator-() const;
    ExactPoly operator*(const ExactPoly& o) const;
    ExactPoly& operator*=(const ExactPoly& o) { *this = *this * o; return *this; }
    ExactPoly operator*(const Rat& c) const;
    ExactPoly operator/(const Rat& c) const;
    friend bool operator==(const ExactPoly& a, const ExactPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ExactPoly& a, const ExactPoly& b) { return !(a == b); }

    ExactPoly pow(long k) const;
    // truncated product/power: drop monomials whose degree in any capped
    // variable exceeds the cap (cap map; missing var = uncapped)
    ExactPoly mul_trunc(const ExactPoly& o, const std::map<VarId, int>& caps) const;

    ExactPoly substitute(const std::map<VarId, ExactPoly>& rules) const;
    ExactPoly subst(VarId v, const ExactPoly& value) const;
    Rat eval(const std::map<VarId, Rat>& values) const;
    ExactPoly derivative(VarId v) const;

    // coefficient of v^k (a polynomial in the remaining variables)
    ExactPoly coeff_of(VarId v, int k) const;
    // univariate coefficient list (c0, c1, ..., cdeg) in v; rest must be constant
    std::vector<Rat> univariate(VarId v) const;

    // exact division; nullopt if o does not divide *this
    std::optional<ExactPoly> divide_exact(const ExactPoly& o) const;

    // content (gcd of coefficients, positive) -- zero poly has content 0
    Rat content() const;

    void add_term(const Monomial& m, const Rat& c);
    std::string str() const;

private:
    Terms terms_;
};

inline ExactPoly operator*(const Rat& c, const ExactPoly& p) { return p * c; }
inline ExactPoly operator+(long c, const ExactPoly& p) { return ExactPoly(c) + p; }
inline ExactPoly operator*(long c, const ExactPoly& p) { return p * Rat(c); }

// determinant of a square matrix of polynomials: cofactor expansion for
// size <= 4, fraction-free Bareiss elimination otherwise
ExactPoly poly_det(const std::vector<std::vector<ExactPoly>>& m);

// Gaussian binomial coefficient [n k]_q in the variable q
ExactPoly q_binomial(int n, int k, VarId q = VarId::Q());
// q-integer [m]_q = 1 + q + ... + q^{m-1}
ExactPoly q_int(int m, VarId q = VarId::Q());

enum class StirlingKind { first, second };
// signless Stirling numbers; zero outside 0 <= k <= n
Int stirling(StirlingKind kind, int n, int k);

// Sum_{k>=0} binom(lambda,k) (f-1)^k truncated to per-variable caps.
// f must have constant term exactly 1.
ExactPoly symbolic_pow_series(const ExactPoly& f, VarId lambda,
                              const std::map<VarId, int>& caps);

// rational function num/den, reduced by content, den's leading coeff > 0
class RatFun {
public:
    RatFun() : num_(0), den_(1) {}
    RatFun(ExactPoly n, ExactPoly d);
    RatFun(const ExactPoly& n) : num_(n), den_(1) {}

    const ExactPoly& num() const { return num_; }
    const ExactPoly& den() const { return den_; }
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    RatFun operator*(const RatFun& o) const { return RatFun(num_ * o.num_, den_ * o.den_); }
    RatFun operator+(const RatFun& o) const {
        return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    // power-series expansion in variable v to order `ord` (den(0) != 0)
    ExactPoly series(VarId v, int ord) const;
    std::string str() const;

private:
    void normalize();
    ExactPoly num_, den_;
};

} // namespace ybx

#endif
