#ifndef YBX_NUMFAM_HPP
#define YBX_NUMFAM_HPP

#include <map>
#include <string>
#include <vector>

#include "ybx/poly.hpp"

namespace ybx {

// ---------------------------------------------------------------------------
// closed-form number families
// ---------------------------------------------------------------------------

Int catalan(int n);
Int narayana(int n, int k);                 // N(n,k) = (1/n) C(n,k) C(n,k+1)
ExactPoly narayana_poly(int n);             // sum_k N(n,k) beta^k
// Carlitz-Riordan q-Catalan: C_0 = C_1 = 1, C_{m+1} = sum_j q^j C_j C_{m-j}
ExactPoly q_catalan(int n, VarId q = VarId::Q());
// Schroeder polynomial P_n(beta): P_{n+1} = (2+beta)P_n + (1+beta) sum P_k P_{n-k}
ExactPoly schroder_poly(int n);
// q-Schroeder S_n(q;beta) via the recurrence with shifted middle argument
ExactPoly q_schroder(int n);
// Catalan-Hankel number C_n^{(k)} = prod_{1<=i<=j<=n-k} (2k+i+j)/(i+j)
Int catalan_hankel(int n, int k);
// q-analogue via DET|C_{n+k-i-j}(q)| = q^{k(k-1)(6n-2k-5)/6} C_n^{(k)}(q)
ExactPoly q_catalan_hankel(int n, int k);
// generalized Fuss-Catalan FC_n^{(p)}(b) = (1+b)/(1+b+(n-1)p) binom(np+b, n)
Int fuss_catalan(int n, int p, int b);
Int ballot(int p, int m, int n);            // Bal_p(m,n)
Int rothe(int n, int a, int b);             // R_n(a,b)
// Fuss-Narayana polynomial sum_j (1/n) C(n,j) C(pn, j-1) t^{j-1}
ExactPoly fuss_narayana(int n, int p);
Int motzkin(int n);
Int riordan(int n);                          // Motzkin sum MS_n
Int fine(int n);
Int delannoy(int n, int m);                  // central Delannoy D(n,m)
Int bell(int n);
Int lah(int n, int k);                       // L(n,k) = C(n-1,k-1) n!/k!
Int euler_updown(int n);                     // A000111
Int vsasm(int n);
Int cstcpp(int n);
Int asm_count(int n);
Int schroder_large(int n);                   // Sch(n) = P_n(1)
Int schroder_little(int n);                  // s_n
Int T_nkr(int n, int k, int r);             // T_n(k,r) of the Coxeter count
Int tab(int n, int k);                       // Tab(n,k) ballot-type count
Int schroder_T(int n, int k);                // T(n,k) Schroeder path count

// generic dispatcher used by the CLI: evaluates family `name` at integer args
// (polynomial-valued families return their beta/q polynomial)
struct FamilyResult {
    bool is_poly = false;
    Int value = 0;
    ExactPoly poly;
};
FamilyResult family(const std::string& name, const std::vector<int>& args);

// ---------------------------------------------------------------------------
// Hilbert series
// ---------------------------------------------------------------------------

enum class HilbAlgebra { T6, T6dual, CYB, CYBdual, T4, NT4, NT4dual,
                         McCoolDual, McCoolPlusDual, ANC, BKLdual,
                         super6Tdual, OSgeneric };

struct HilbResult {
    bool is_rational = false;   // true: rational function; false: polynomial
    RatFun fun;
    ExactPoly poly;
};
// n (and m for the super family) <= 12
HilbResult hilbert_series(HilbAlgebra alg, int n, int m = 0);
HilbAlgebra hilb_algebra_of(const std::string& name);

// super-(6T)^! dual Hilbert polynomials, two independent routes:
// inverting the Stirling2 convolution vs the Stirling1 closed form
ExactPoly super6t_dual_by_inversion(int n, int m);
ExactPoly super6t_dual_closed(int n, int m);

// ---------------------------------------------------------------------------
// Lagrange inversion
// ---------------------------------------------------------------------------

// w_n coefficients of the inverse of f(x) = x - sum_k y_k x^{k+1}, as
// polynomials in y_1..y_order (deg y_k = k), via the multinomial formula
std::vector<ExactPoly> lagrange_inverse(int order);
// independent oracle: iterative series inversion
std::vector<ExactPoly> lagrange_inverse_iterative(int order);
// b_n(p_1..p_n) = (1/(n+1)) multinomial(n + sum p; n, p_1, ..., p_n)
Int lagrange_b(int n, const std::vector<int>& p);

// ---------------------------------------------------------------------------
// identity suites (report lines for the CLI `verify` command live in verify.cpp)
// ---------------------------------------------------------------------------

bool identity_motzkin(int letters, Int expect);
bool identity_riordan(int letters, Int expect);
bool identity_ex331(int n, int k);   // subset q-power identity = [n k]_q

} // namespace ybx

#endif
