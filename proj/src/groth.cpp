#include "ybx/groth.hpp"

#include <algorithm>
#include <stdexcept>

namespace ybx {

// multiply the IdC element `cur` on the right by h_a(x) = 1 + x e_a
static void mul_h(std::map<Permutation, ExactPoly>& cur, int a, const ExactPoly& x,
                  const ExactPoly& beta) {
    std::map<Permutation, ExactPoly> next;
    for (auto& [w, c] : cur) {
        ExactPoly xc = c * x;
        next[w] += c;
        if (w(a) < w(a + 1)) {
            next[w.right_s(a)] += xc;
        } else {
            next[w] += xc * beta;
        }
    }
    for (auto it = next.begin(); it != next.end();) {
        if (it->second.is_zero()) it = next.erase(it);
        else ++it;
    }
    cur = std::move(next);
}

GrothTable idc_expand(int n, const std::vector<ExactPoly>& xs, const ExactPoly& beta) {
    if ((int)xs.size() != n - 1) throw std::runtime_error("idc_expand: need n-1 x-values");
    if (n > 9) throw std::runtime_error("idc_expand: table size n! too large (n <= 9)");
    std::map<Permutation, ExactPoly> cur{{Permutation::identity(n), ExactPoly(1)}};
    for (int i = 1; i <= n - 1; ++i)
        for (int a = n - 1; a >= i; --a) mul_h(cur, a, xs[i - 1], beta);
    return cur;
}

GrothTable idc_expand(int n) {
    std::vector<ExactPoly> xs;
    for (int i = 1; i < n; ++i) xs.push_back(ExactPoly::var(VarId::X(i)));
    return idc_expand(n, xs, ExactPoly::var(VarId::Beta()));
}

ExactPoly groth_coeff(const Permutation& w, const std::vector<ExactPoly>& xs,
                      const ExactPoly& beta) {
    int n = w.n();
    if ((int)xs.size() != n - 1) throw std::runtime_error("groth_coeff: need n-1 x-values");
    std::map<Permutation, ExactPoly> cur{{Permutation::identity(n), ExactPoly(1)}};
    for (int i = 1; i <= n - 1; ++i)
        for (int a = n - 1; a >= i; --a) {
            mul_h(cur, a, xs[i - 1], beta);
            for (auto it = cur.begin(); it != cur.end();) {
                if (!it->first.bruhat_leq(w)) it = cur.erase(it);
                else ++it;
            }
        }
    auto it = cur.find(w);
    return it == cur.end() ? ExactPoly(0) : it->second;
}

ExactPoly grothendieck(const Permutation& w) {
    std::vector<ExactPoly> xs;
    for (int i = 1; i < w.n(); ++i) xs.push_back(ExactPoly::var(VarId::X(i)));
    return groth_coeff(w, xs, ExactPoly::var(VarId::Beta()));
}

ExactPoly groth_all_ones(const Permutation& w) {
    std::vector<ExactPoly> xs(w.n() - 1, ExactPoly(1));
    return groth_coeff(w, xs, ExactPoly::var(VarId::Beta()));
}

ExactPoly groth_F(const Permutation& w) {
    std::vector<ExactPoly> xs(w.n() - 1, ExactPoly(1));
    ExactPoly beta = ExactPoly::var(VarId::Beta()) - ExactPoly(1);
    return groth_coeff(w, xs, beta);
}

ExactPoly groth_principal(const Permutation& w) {
    std::vector<ExactPoly> xs;
    for (int i = 1; i < w.n(); ++i) xs.push_back(ExactPoly::var(VarId::Q(), i - 1));
    return groth_coeff(w, xs, ExactPoly::var(VarId::Beta()));
}

// ---------------------------------------------------------------------------

ExactPoly divided_difference_simple(const ExactPoly& f, int i) {
    VarId xi = VarId::X(i), xj = VarId::X(i + 1);
    ExactPoly sf = f.substitute({{xi, ExactPoly::var(xj)}, {xj, ExactPoly::var(xi)}});
    ExactPoly num = f - sf;
    if (num.is_zero()) return ExactPoly(0);
    auto q = num.divide_exact(ExactPoly::var(xi) - ExactPoly::var(xj));
    if (!q) throw std::runtime_error("divided difference: division not exact");
    return *q;
}

ExactPoly divided_difference(const ExactPoly& f, int i, const ParamVectorA& A) {
    ExactPoly xi = ExactPoly::var(VarId::X(i)), xj = ExactPoly::var(VarId::X(i + 1));
    ExactPoly op = A.b * xi + A.c * xj + A.h + A.e * xi * xj;
    return A.a * f + op * divided_difference_simple(f, i);
}

static ExactPoly apply_word(const std::vector<int>& word, ExactPoly f, const ParamVectorA& A) {
    // word (i_1..i_l) for v = s_{i_1}...s_{i_l}; dd_v = dd_{i_1} o ... o dd_{i_l}
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        f = divided_difference(f, *it, A);
    return f;
}

ExactPoly generalized_schubert(const Permutation& w, const ParamVectorA& A) {
    if (!A.coxeter_valid())
        throw std::runtime_error("generalized_schubert: parameter vector fails (a+b)(a-c)+he=0");
    int n = w.n();
    ExactPoly f(1);
    for (int i = 1; i < n; ++i) f = f * ExactPoly::var(VarId::X(i), n - i);
    Permutation v = w.inverse() * Permutation::w0(n);
    return apply_word(v.reduced_word(), f, A);
}

ExactPoly key_polynomial(const std::vector<int>& alpha, const ParamVectorA& A) {
    if (!A.coxeter_valid())
        throw std::runtime_error("key_polynomial: parameter vector fails (a+b)(a-c)+he=0");
    std::vector<int> sorted = alpha;
    std::sort(sorted.rbegin(), sorted.rend());
    ExactPoly f(1);
    for (size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] > 0) f = f * ExactPoly::var(VarId::X((int)i + 1), sorted[i]);
    Permutation w_alpha = sorting_permutation(alpha);
    return apply_word(w_alpha.reduced_word(), f, A);
}

// ---------------------------------------------------------------------------

ExactPoly complete_h(int m, int k) {
    if (m < 0) return ExactPoly(0);
    if (m == 0) return ExactPoly(1);
    if (k == 0) return ExactPoly(0);
    // h_m(x_1..x_k) = h_m(x_1..x_{k-1}) + x_k h_{m-1}(x_1..x_k)
    std::vector<std::vector<ExactPoly>> h(m + 1, std::vector<ExactPoly>(k + 1));
    for (int j = 0; j <= k; ++j) h[0][j] = ExactPoly(1);
    for (int d = 1; d <= m; ++d) {
        h[d][0] = ExactPoly(0);
        for (int j = 1; j <= k; ++j)
            h[d][j] = h[d][j - 1] + ExactPoly::var(VarId::X(j)) * h[d - 1][j];
    }
    return h[m][k];
}

ExactPoly grassmannian_det(const std::vector<int>& lambda, int n, bool double_mode) {
    if ((int)lambda.size() > n) throw std::runtime_error("grassmannian_det: l(lambda) > n");
    std::vector<int> lam = lambda;
    lam.resize(n, 0);
    ExactPoly beta = ExactPoly::var(VarId::Beta());
    std::vector<std::vector<ExactPoly>> M(n, std::vector<ExactPoly>(n));
    for (int i = 1; i <= n; ++i) {
        ExactPoly xi = ExactPoly::var(VarId::X(i));
        for (int j = 1; j <= n; ++j) {
            int e = lam[j - 1] + n - j;
            ExactPoly entry;
            if (!double_mode) {
                entry = ExactPoly::var(VarId::X(i), e);
                if (e == 0) entry = ExactPoly(1);
            } else {
                entry = ExactPoly(1);
                for (int a = 1; a <= e; ++a) {
                    ExactPoly ya = ExactPoly::var(VarId::Y(a));
                    entry = entry * (xi + ya + beta * xi * ya);
                }
            }
            entry = entry * (ExactPoly(1) + beta * xi).pow(j - 1);
            M[i - 1][j - 1] = entry;
        }
    }
    ExactPoly det = poly_det(M);
    // iterated synthetic division by the Vandermonde factors (x_i - x_j)
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            auto q = det.divide_exact(ExactPoly::var(VarId::X(i)) - ExactPoly::var(VarId::X(j)));
            if (!q) throw std::runtime_error("grassmannian_det: Vandermonde division not exact");
            det = *q;
        }
    return det;
}

ExactPoly wachs_determinant(const std::vector<int>& lambda, const std::vector<int>& phi) {
    int r = (int)lambda.size();
    std::vector<std::vector<ExactPoly>> M(r, std::vector<ExactPoly>(r));
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j)
            M[i - 1][j - 1] = complete_h(lambda[i - 1] - i + j, phi[i - 1]);
    return poly_det(M);
}

ExactPoly specialize_R(const Permutation& w) {
    int n = w.n();
    std::vector<ExactPoly> xs(n - 1, ExactPoly(1));
    if (n >= 2) xs[0] = ExactPoly::var(VarId::Q());
    ExactPoly beta = ExactPoly::var(VarId::Beta()) - ExactPoly(1);
    ExactPoly cal_R = groth_coeff(w, xs, beta);
    int k = w(1) - 1;
    if (k == 0) return cal_R;
    auto q = cal_R.divide_exact(ExactPoly::var(VarId::Q(), k));
    if (!q) throw std::runtime_error("specialize_R: q^{w(1)-1} does not divide");
    return *q;
}

ExactPoly double_special_H(const Permutation& w) {
    ExactPoly F = groth_F(w);
    ExactPoly q = ExactPoly::var(VarId::Q()), t = ExactPoly::var(VarId::T());
    ExactPoly beta = ExactPoly::var(VarId::Beta());
    ExactPoly arg = (ExactPoly(1) + beta * q) * (ExactPoly(1) + beta * t);
    ExactPoly Fsub = F.subst(VarId::Beta(), arg);
    return (q + t + beta * q * t).pow(w.length()) * Fsub;
}

Int wachs_D(int n, int k, int r, int b, int p) {
    int sz = n + 1;
    std::vector<std::vector<ExactPoly>> M(sz, std::vector<ExactPoly>(sz));
    for (int i = 1; i <= sz; ++i)
        for (int j = 1; j <= sz; ++j) {
            long top = (long)(n - i + 1) * p + b - i + j + k + (long)(i - 1) * r;
            long bot = k + (long)(i - 1) * r;
            M[i - 1][j - 1] = ExactPoly(binomial(Int(top), bot));
        }
    ExactPoly d = poly_det(M);
    Rat c = d.constant_term();
    if (c.get_den() != 1) throw std::runtime_error("wachs_D: non-integer determinant");
    return c.get_num();
}

Int wachs_D_product(int n, int k, int r, int b, int p) {
    // D = prod_{j=1}^{n+1} ((n-j+1)p+b+k+(j-1)(r-1))! (n-j+1)! /
    //       [ (k+(j-1)r)! ((n-j+1)(p+1)+b)! ]
    //     * prod_{1<=i<=j<=n} ((k-i+1)(p+1)+jr+(np+b)r)
    Rat acc = 1;
    for (int j = 1; j <= n + 1; ++j) {
        long a1 = (long)(n - j + 1) * p + b + k + (long)(j - 1) * (r - 1);
        long a2 = n - j + 1;
        long b1 = k + (long)(j - 1) * r;
        long b2 = (long)(n - j + 1) * (p + 1) + b;
        acc *= Rat(factorial(a1) * factorial(a2), factorial(b1) * factorial(b2));
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            acc *= Rat(Int((long)(k - i + 1) * (p + 1) + (long)j * r + (long)(n * p + b) * r));
    if (acc.get_den() != 1) throw std::runtime_error("wachs_D_product: non-integer value");
    return acc.get_num();
}

Permutation richardson(int n, int k) {
    return Permutation::w0(n - k).shift(k);
}

Permutation sigma_nkpb(int n, int k, int p, int b) {
    std::vector<int> nu;
    for (int i = 0; i < b; ++i) nu.push_back(n + 1);
    for (int v = n; v >= 1; --v)
        for (int i = 0; i < p; ++i) nu.push_back(v);
    return grassmannian_of_shape(nu, k);
}

Permutation varpi_nkp(int n, int k, int p) {
    std::vector<int> lambda, phi;
    for (int i = 0; i < n; ++i) {
        lambda.push_back((n - i) * p);
        phi.push_back(k + 1 + i);
    }
    return vexillary_of_shape_flag(lambda, phi);
}

Permutation w_minus(int k) {
    std::vector<int> v;
    for (int i = 1; i <= k; ++i) v.push_back(2 * i);
    for (int i = k; i >= 1; --i) v.push_back(2 * i - 1);
    return Permutation(v);
}

Permutation w_plus(int k) {
    std::vector<int> v;
    for (int i = 1; i <= k; ++i) v.push_back(2 * i);
    v.push_back(2 * k + 1);
    for (int i = k; i >= 1; --i) v.push_back(2 * i - 1);
    return Permutation(v);
}

} // namespace ybx
