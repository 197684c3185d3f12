#ifndef YBX_GROTH_HPP
#define YBX_GROTH_HPP

#include <map>
#include <optional>
#include <vector>

#include "ybx/permutation.hpp"
#include "ybx/poly.hpp"

namespace ybx {

// ---------------------------------------------------------------------------
// Id-Coxeter expansion engine (e_i^2 = beta e_i)
// ---------------------------------------------------------------------------

using GrothTable = std::map<Permutation, ExactPoly>;

// Expand A_1(x_1)...A_{n-1}(x_{n-1}) with A_i(x) = h_{n-1}(x)...h_i(x),
// h_a(x) = 1 + x e_a.  Returns the coefficient of e_w for every w in S_n;
// xs[i] is the value substituted for x_{i+1} (size n-1), beta the value of
// the algebra parameter.
GrothTable idc_expand(int n, const std::vector<ExactPoly>& xs, const ExactPoly& beta);
// symbolic variables x_1..x_{n-1} and beta
GrothTable idc_expand(int n);

// Coefficient of e_w only, pruning intermediate terms outside the Bruhat
// interval [e, w].
ExactPoly groth_coeff(const Permutation& w, const std::vector<ExactPoly>& xs,
                      const ExactPoly& beta);

// convenience: beta-Grothendieck of w in symbolic x_1..x_{n-1}, beta
ExactPoly grothendieck(const Permutation& w);
// G_w^{(beta)}(x_i = 1 for all i), beta symbolic
ExactPoly groth_all_ones(const Permutation& w);
// F_w(beta) = G_w^{(beta-1)}(1), nonnegative coefficients (Thm on H/F specializations)
ExactPoly groth_F(const Permutation& w);
// principal specialization G_w^{(beta)}(1, q, q^2, ...)
ExactPoly groth_principal(const Permutation& w);

// ---------------------------------------------------------------------------
// A-parameter divided differences
// ---------------------------------------------------------------------------

struct ParamVectorA {
    ExactPoly a, b, c, h, e;
    // Coxeter braid relations hold iff (a+b)(a-c)+h*e == 0
    bool coxeter_valid() const { return ((a + b) * (a - c) + h * e).is_zero(); }

    static ParamVectorA schubert() { return {ExactPoly(0), ExactPoly(0), ExactPoly(0), ExactPoly(1), ExactPoly(0)}; }
    static ParamVectorA beta_grothendieck(const ExactPoly& beta) {
        return {-beta, beta, ExactPoly(0), ExactPoly(1), ExactPoly(0)};
    }
    static ParamVectorA dual_grothendieck() { return {ExactPoly(0), ExactPoly(1), ExactPoly(0), ExactPoly(1), ExactPoly(0)}; }
    static ParamVectorA dzj() { return {ExactPoly(-1), ExactPoly(2), ExactPoly(0), ExactPoly(1), ExactPoly(1)}; }
    static ParamVectorA demazure() { return {ExactPoly(1), ExactPoly(0), ExactPoly(1), ExactPoly(0), ExactPoly(0)}; }
    static ParamVectorA key_grothendieck(const ExactPoly& beta) {
        return {ExactPoly(1), ExactPoly(0), ExactPoly(1), ExactPoly(0), beta};
    }
};

// Newton divided difference (f - s_i f)/(x_i - x_{i+1})
ExactPoly divided_difference_simple(const ExactPoly& f, int i);
// dd_i^A = a f + (b x_i + c x_{i+1} + h + e x_i x_{i+1}) dd_i f
ExactPoly divided_difference(const ExactPoly& f, int i, const ParamVectorA& A);
// generalized Schubert S_w^A = dd^A_{w^{-1} w_0} x^{delta_n}
ExactPoly generalized_schubert(const Permutation& w, const ParamVectorA& A);
// generalized key/Demazure K_alpha^A = dd^A_{w_alpha} x^{sorted(alpha)}
ExactPoly key_polynomial(const std::vector<int>& alpha, const ParamVectorA& A);

// ---------------------------------------------------------------------------
// Determinantal formulas and specializations
// ---------------------------------------------------------------------------

// complete homogeneous symmetric polynomial h_m(x_1..x_k)
ExactPoly complete_h(int m, int k);

// ratio-of-determinants formula for a grassmannian permutation of shape
// lambda with descent at n; single: DET|x_i^{l_j+n-j}(1+beta x_i)^{j-1}| / Vandermonde;
// double mode replaces x_i^{...} by prod_a (x_i + y_a + beta x_i y_a).
ExactPoly grassmannian_det(const std::vector<int>& lambda, int n, bool double_mode = false);

// Wachs determinant DET( h_{lambda_i - i + j}(X_{phi_i}) ) for a vexillary
// permutation of the given shape and flag
ExactPoly wachs_determinant(const std::vector<int>& lambda, const std::vector<int>& phi);

// R_w(q,beta): G_w^{(beta-1)}(x_1=q, x_i=1) = q^{w(1)-1} R_w(q,beta)
ExactPoly specialize_R(const Permutation& w);
// H_w(q,t;beta) = (q+t+beta q t)^{l(w)} F_w((1+beta q)(1+beta t))
ExactPoly double_special_H(const Permutation& w);

// D(n,k,r,b,p): determinant of binomial coefficients (Schubert value of the
// five-parameter vexillary family), plus the product form
Int wachs_D(int n, int k, int r, int b, int p);
Int wachs_D_product(int n, int k, int r, int b, int p);

// pi_k^(n) = 1^k x w0^(n-k)
Permutation richardson(int n, int k);
// sigma_{n,k,p,b}: grassmannian permutation with shape
// ((n+1)^b, n^p, ..., 1^p) and flag (k,...,k)
Permutation sigma_nkpb(int n, int k, int p, int b);
// varpi_{n,k,p}: vexillary permutation of shape p*(n,...,1), flag (k+1..k+n)
Permutation varpi_nkp(int n, int k, int p);
// w_k^- and w_k^+ of Prop on VSASM/CSTCPP Schubert values
Permutation w_minus(int k);
Permutation w_plus(int k);

} // namespace ybx

#endif
