#ifndef YBX_NCREDUCE_HPP
#define YBX_NCREDUCE_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ybx/poly.hpp"

namespace ybx {

// generator x_{ij}, always stored with i < j
struct Letter {
    std::int16_t i, j;
    Letter(int a, int b) : i((std::int16_t)a), j((std::int16_t)b) {
        if (!(0 < a && a < b)) throw std::runtime_error("Letter: need 0 < i < j");
    }
    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
    bool disjoint(const Letter& o) const {
        return i != o.i && i != o.j && j != o.i && j != o.j;
    }
    std::string str() const;
};

struct NCWord {
    std::vector<Letter> ls;
    // lexicographically least representative of the commutation (trace) class;
    // within it maximal runs of pairwise-disjoint letters are sorted
    void canonicalize();
    friend bool operator==(const NCWord&, const NCWord&) = default;
    friend bool operator<(const NCWord& a, const NCWord& b) { return a.ls < b.ls; }
    std::string str() const;
};

using NCPoly = std::map<NCWord, ExactPoly>;

// commutative monomial in the x_{ij}: sorted (letter, exponent>0) pairs
using CMon = std::vector<std::pair<Letter, int>>;
using CPoly = std::map<CMon, ExactPoly>;

struct NonterminationError : std::runtime_error {
    NonterminationError() : std::runtime_error("reduction fuel exhausted") {}
};

// relation: x_{ij} x_{jk} -> a_i x_{ik}x_{ij} + b_i x_{jk}x_{ik} + beta_i x_{ik} + alpha_i
struct AlgebraParams {
    bool commutative = false;                 // mode (a'): all generators commute
    ExactPoly beta_uniform = ExactPoly(0);    // used when per-row entries absent
    ExactPoly alpha_uniform = ExactPoly(0);
    std::map<int, ExactPoly> a_row, b_row, beta_row, alpha_row;
    long fuel = 10000000;

    ExactPoly a(int i) const { auto it = a_row.find(i); return it == a_row.end() ? ExactPoly(1) : it->second; }
    ExactPoly b(int i) const { auto it = b_row.find(i); return it == b_row.end() ? ExactPoly(1) : it->second; }
    ExactPoly beta(int i) const { auto it = beta_row.find(i); return it == beta_row.end() ? beta_uniform : it->second; }
    ExactPoly alpha(int i) const { auto it = alpha_row.find(i); return it == alpha_row.end() ? alpha_uniform : it->second; }

    static AlgebraParams symbolic(bool commut = false) {
        AlgebraParams p;
        p.commutative = commut;
        p.beta_uniform = ExactPoly::var(VarId::Beta());
        p.alpha_uniform = ExactPoly::var(VarId::Alpha());
        return p;
    }
    static AlgebraParams beta_only(bool commut = false) {
        AlgebraParams p;
        p.commutative = commut;
        p.beta_uniform = ExactPoly::var(VarId::Beta());
        return p;
    }
    // fully generic a_i, b_i, beta_i, alpha_i up to row n-1
    static AlgebraParams multiparameter(int n);
    // per-row beta_i only (multiparameter Narayana setting)
    static AlgebraParams beta_rows(int n);
};

// left-to-right folding with rightmost-cascade rewriting (noncommutative)
NCPoly fold_reduce(const std::vector<Letter>& word, const AlgebraParams& params);
// scan a word for a reducible pair; used as an independent irreducibility check
bool nc_reducible(const NCWord& w);
// reduce an arbitrary NCPoly to normal form, rewriting sites in the given
// order ("rightmost" = canonical; "leftmost" used by the order-robustness test)
NCPoly nc_normal_form(NCPoly input, const AlgebraParams& params, bool leftmost = false);

// commutative analogue: fold exponent-multisets, rewriting the
// lexicographically-first reducible pair
CPoly fold_reduce_commutative(const std::vector<Letter>& word, const AlgebraParams& params);
bool c_reducible(const CMon& m);

// --------------------------------------------------------------------------

enum class SpecRule { all_ones, last_column_t, row_ti, first_row_t, qt };

// commutative image of an NCPoly/CPoly under a named specialization;
// n = ambient index (for column rules)
ExactPoly specialize_nc(const NCPoly& p, SpecRule rule, int n);
ExactPoly specialize_nc(const CPoly& p, SpecRule rule, int n);
ExactPoly specialize_nc(const NCPoly& p, const std::map<Letter, ExactPoly>& values);
ExactPoly specialize_nc(const CPoly& p, const std::map<Letter, ExactPoly>& values);

// Coxeter word x_{12} x_{23} ... x_{m,m+1} (m letters)
std::vector<Letter> coxeter_word(int m);
NCPoly coxeter_reduced(int m, const AlgebraParams& params);

// dominant monomial x_{12}^{m_1} x_{23}^{m_2} ... folded left to right in the
// commutative algebra; returns the all-ones specialization P_M(beta)
ExactPoly dominant_reduced(const std::vector<int>& m, const AlgebraParams& params);
ExactPoly dominant_reduced_t(const std::vector<int>& m, const AlgebraParams& params);

// longest element prod_{i<j<=n} x_{ij} (lex order), commutative mode;
// optional exponent matrix exp[{i,j}] (default 1)
CPoly longest_reduced(int n, const AlgebraParams& params,
                      const std::map<std::pair<int, int>, int>& exponents = {});
ExactPoly longest_Q(int n);          // Q_n(beta): alpha=0, x_{ij}=1
ExactPoly longest_Qhat(int n);       // Qhat_n(q,t;beta): alpha=0, last column q/t
// Meszaros monomial M_{n,m} = (prod_j x_{1j})^{m+1} prod_{j>=2} prod_{k>=j+2} x_{jk}
CPoly meszaros_reduced(int n, int m);

// multiparameter Narayana polynomial Q(beta_1..beta_{n-1}) from the n-letter
// Coxeter word with per-row beta_i, all x->1, then beta_i -> beta_i - 1
ExactPoly multiparam_narayana(int n);

// --------------------------------------------------------------------------

struct CryReport {
    int n = 0;
    std::vector<Int> counts;   // iota(CRY_{n+1}, m), m = 0..order
    bool series_match = false;
};
// brute-force lattice-point counts of dilations of CRY_{n+1} checked against
// the series Q_n(beta-1) = (sum iota beta^m)(1-beta)^{C(n+1,2)+1}
CryReport cry_ehrhart_check(int n, int order);
Int cry_points(int m_vertices, int dilation);

// --------------------------------------------------------------------------

struct LambdaReport {
    bool ok = false;
    ExactPoly reduced_spec;   // P_{M_lambda}(x_{ij}=t_i; beta)
    ExactPoly groth_side;     // t^lambda * G_{1 x w_lambda}(t^{-1})
};
std::vector<Letter> lambda_monomial(const std::vector<int>& lambda);
LambdaReport lambda_monomial_check(const std::vector<int>& lambda);

// --------------------------------------------------------------------------

struct DissectionExpansion {
    NCPoly reduced;                       // full multiparameter reduced form
    ExactPoly weighted;                   // PL_m: sum c(U) * x/y/z-weight
    ExactPoly B;                          // B_m(a, y): b=beta=1, alpha=0, z=1, x=1
};
DissectionExpansion dissection_expand(int m);

} // namespace ybx

#endif
