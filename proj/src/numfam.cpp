#include "ybx/numfam.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "ybx/ncreduce.hpp"

namespace ybx {

Int catalan(int n) {
    if (n < 0) return 0;
    return binomial(2 * n, n) / (n + 1);
}

Int narayana(int n, int k) {
    if (n <= 0 || k < 0 || k >= n) return n == 0 && k == 0 ? 1 : 0;
    return binomial(n, k) * binomial(n, k + 1) / n;
}

ExactPoly narayana_poly(int n) {
    ExactPoly r;
    for (int k = 0; k < n; ++k)
        r += ExactPoly(narayana(n, k)) * ExactPoly::var(VarId::Beta(), k);
    if (n == 0) r = ExactPoly(1);
    return r;
}

ExactPoly q_catalan(int n, VarId q) {
    std::vector<ExactPoly> c(std::max(n + 1, 2));
    c[0] = ExactPoly(1);
    c[1] = ExactPoly(1);
    for (int m = 1; m < n; ++m) {
        ExactPoly s;
        for (int j = 0; j <= m; ++j)
            s += ExactPoly::var(q, j) * c[j] * c[m - j];
        c[m + 1] = s;
    }
    return c[n];
}

ExactPoly schroder_poly(int n) {
    if (n < 0) throw std::runtime_error("schroder_poly: n >= 0");
    ExactPoly beta = ExactPoly::var(VarId::Beta());
    std::vector<ExactPoly> p(std::max(n + 1, 2));
    p[0] = ExactPoly(1);
    p[1] = ExactPoly(1);
    for (int m = 1; m < n; ++m) {
        ExactPoly s = (ExactPoly(2) + beta) * p[m];
        ExactPoly conv;
        for (int k = 1; k <= m - 1; ++k) conv += p[k] * p[m - k];
        p[m + 1] = s + (ExactPoly(1) + beta) * conv;
    }
    return p[n];
}

ExactPoly q_schroder(int n) {
    // S_{n+1}(q;b) = (1+q^n+b q^n) S_n(q;b)
    //             + sum_{k=1}^{n-1} (q^k + b q^{n-k}) S_k(q; q^{n-k} b) S_{n-k}(q;b)
    // computed with b symbolic so the shifted middle argument is a substitution
    VarId q = VarId::Q(), b = VarId::Beta();
    std::vector<ExactPoly> s(std::max(n + 1, 2));
    s[1] = ExactPoly(1);
    for (int m = 1; m < n; ++m) {
        ExactPoly qb = ExactPoly::var(b);
        ExactPoly acc = (ExactPoly(1) + ExactPoly::var(q, m) + qb * ExactPoly::var(q, m)) * s[m];
        for (int k = 1; k <= m - 1; ++k) {
            ExactPoly shifted = s[k].subst(b, ExactPoly::var(q, m - k) * qb);
            acc += (ExactPoly::var(q, k) + qb * ExactPoly::var(q, m - k)) * shifted * s[m - k];
        }
        s[m + 1] = acc;
    }
    return s[n];
}

Int catalan_hankel(int n, int k) {
    if (k > n) return 0;
    Rat r = 1;
    for (int i = 1; i <= n - k; ++i)
        for (int j = i; j <= n - k; ++j) {
            Rat f(2 * k + i + j, i + j);
            f.canonicalize();
            r *= f;
        }
    if (r.get_den() != 1) throw std::runtime_error("catalan_hankel: non-integer");
    return r.get_num();
}

ExactPoly q_catalan_hankel(int n, int k) {
    std::vector<std::vector<ExactPoly>> m(k, std::vector<ExactPoly>(k));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) m[i - 1][j - 1] = q_catalan(n + k - i - j);
    ExactPoly det = poly_det(m);
    long e = (long)k * (k - 1) * (6 * n - 2 * k - 5) / 6;
    if (e == 0) return det;
    auto qq = det.divide_exact(ExactPoly::var(VarId::Q(), (int)e));
    if (!qq) throw std::runtime_error("q_catalan_hankel: power of q does not factor");
    return *qq;
}

Int fuss_catalan(int n, int p, int b) {
    if (n == 0) return 1;
    Rat r0(1 + b, 1 + b + (long)(p - 1) * n); r0.canonicalize(); Rat r = r0 * Rat(binomial(Int((long)n * p + b), n));
    if (r.get_den() != 1) throw std::runtime_error("fuss_catalan: non-integer");
    return r.get_num();
}

Int ballot(int p, int m, int n) {
    Rat r0(n - (long)m * p + 1, n + m + 1); r0.canonicalize(); Rat r = r0 * Rat(binomial(Int(n + m + 1), m));
    if (r.get_den() != 1) throw std::runtime_error("ballot: non-integer");
    return r.get_num();
}

Int rothe(int n, int a, int b) {
    if (n == 0) return 1;
    Rat r0(a, a + (long)b * n); r0.canonicalize(); Rat r = r0 * Rat(binomial(Int(a + (long)b * n), n));
    if (r.get_den() != 1) throw std::runtime_error("rothe: non-integer");
    return r.get_num();
}

ExactPoly fuss_narayana(int n, int p) {
    ExactPoly r;
    for (int j = 1; j <= n; ++j) {
        Int c = binomial(n, j) * binomial((long)p * n, j - 1) / n;
        r += ExactPoly(c) * ExactPoly::var(VarId::Beta(), j - 1);
    }
    return r;
}

Int motzkin(int n) {
    std::vector<Int> m(std::max(n + 1, 2));
    m[0] = 1;
    m[1] = 1;
    for (int k = 2; k <= n; ++k) {
        m[k] = m[k - 1];
        for (int j = 0; j <= k - 2; ++j) m[k] += m[j] * m[k - 2 - j];
    }
    return m[n];
}

Int riordan(int n) {
    // MS_0 = 1, MS_1 = 0, MS_{n} = (n-1)(2 MS_{n-1} + 3 MS_{n-2})/(n+1)
    std::vector<Int> r(std::max(n + 1, 2));
    r[0] = 1;
    r[1] = 0;
    for (int k = 2; k <= n; ++k) {
        Int num = (k - 1) * (2 * r[k - 1] + 3 * r[k - 2]);
        if (num % (k + 1) != 0) throw std::runtime_error("riordan: recurrence failed");
        r[k] = num / (k + 1);
    }
    return r[n];
}

Int fine(int n) {
    // F_0=1, F_1=0, Catalan convolution: C_n = 2F_n + F_{n-1}
    std::vector<Int> f(std::max(n + 1, 2));
    f[0] = 1;
    f[1] = 0;
    for (int k = 2; k <= n; ++k) {
        Int v = catalan(k) - f[k - 1];
        if (v % 2 != 0) throw std::runtime_error("fine: recurrence failed");
        f[k] = v / 2;
    }
    return f[n];
}

Int delannoy(int n, int m) {
    std::vector<std::vector<Int>> d(n + 1, std::vector<Int>(m + 1, 0));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= m; ++j) {
            if (i == 0 || j == 0) { d[i][j] = 1; continue; }
            d[i][j] = d[i - 1][j] + d[i][j - 1] + d[i - 1][j - 1];
        }
    return d[n][m];
}

Int bell(int n) {
    Int b = 0;
    for (int k = 0; k <= n; ++k) b += stirling(StirlingKind::second, n, k);
    return b;
}

Int lah(int n, int k) {
    if (k < 1 || k > n) return n == 0 && k == 0 ? 1 : 0;
    return binomial(n - 1, k - 1) * factorial(n) / factorial(k);
}

Int euler_updown(int n) {
    // boustrophedon transform
    std::vector<std::vector<Int>> t(n + 1);
    t[0] = {1};
    for (int i = 1; i <= n; ++i) {
        t[i].resize(i + 1);
        t[i][0] = 0;
        for (int j = 1; j <= i; ++j) t[i][j] = t[i][j - 1] + t[i - 1][i - j];
    }
    return t[n][n];
}

Int vsasm(int n) {
    Rat r = 1;
    for (int j = 1; j <= n - 1; ++j)
        r *= Rat(Int(3 * j + 2) * factorial(6 * j + 3) * factorial(2 * j + 1),
                 factorial(4 * j + 2) * factorial(4 * j + 3));
    if (r.get_den() != 1) throw std::runtime_error("vsasm: non-integer");
    return r.get_num();
}

Int cstcpp(int n) {
    Rat r = 1;
    for (int j = 1; j <= n - 1; ++j)
        r *= Rat(Int(3 * j + 1) * factorial(6 * j) * factorial(2 * j),
                 factorial(4 * j + 1) * factorial(4 * j));
    if (r.get_den() != 1) throw std::runtime_error("cstcpp: non-integer");
    return r.get_num();
}

Int asm_count(int n) {
    Rat r = 1;
    for (int j = 0; j <= n - 1; ++j)
        r *= Rat(factorial(3 * j + 1), factorial(n + j));
    if (r.get_den() != 1) throw std::runtime_error("asm: non-integer");
    return r.get_num();
}

Int schroder_large(int n) {
    ExactPoly p = schroder_poly(n);
    return p.eval({{VarId::Beta(), Rat(1)}}).get_num();
}

Int schroder_little(int n) {
    // s_n = sum_d s_n(d), s_n(d) = (1/(n+1)) C(2n-d, n) C(n-1, d)
    Int s = 0;
    for (int d = 0; d <= n - 1; ++d)
        s += binomial(2 * n - d, n) * binomial(n - 1, d) / (n + 1);
    if (n == 0) s = 1;
    return s;
}

Int T_nkr(int n, int k, int r) {
    if (r < 1 || k < r || k > n - 1) return 0;
    Rat v0(r, k);
    v0.canonicalize();
    Rat v = v0 * Rat(binomial(n + k - r - 2, n - 2) * binomial(n - 2, k - 1));
    if (v.get_den() != 1) throw std::runtime_error("T_nkr: non-integer");
    return v.get_num();
}

Int tab(int n, int k) {
    // Tab(n,k) = (k+1)/(n+1) C(2n-k, n), # SYT of shape (n, n-k)
    Rat v0(k + 1, n + 1);
    v0.canonicalize();
    Rat v = v0 * Rat(binomial(2 * n - k, n));
    if (v.get_den() != 1) throw std::runtime_error("tab: non-integer");
    return v.get_num();
}

Int schroder_T(int n, int k) {
    Rat v = Rat(binomial(n + k, k) * binomial(n, k)) / Rat(k + 1);
    if (v.get_den() != 1) throw std::runtime_error("schroder_T: non-integer");
    return v.get_num();
}

FamilyResult family(const std::string& name, const std::vector<int>& a) {
    auto need = [&](size_t k) {
        if (a.size() < k) throw std::runtime_error("family " + name + ": missing arguments");
    };
    FamilyResult r;
    auto ret = [&](Int v) { r.value = v; return r; };
    auto retp = [&](ExactPoly p) { r.is_poly = true; r.poly = std::move(p); return r; };
    if (name == "catalan") { need(1); return ret(catalan(a[0])); }
    if (name == "q_catalan") { need(1); return retp(q_catalan(a[0])); }
    if (name == "narayana_poly") { need(1); return retp(narayana_poly(a[0])); }
    if (name == "schroder_poly") { need(1); return retp(schroder_poly(a[0])); }
    if (name == "q_schroder") { need(1); return retp(q_schroder(a[0])); }
    if (name == "catalan_hankel") { need(2); return ret(catalan_hankel(a[0], a[1])); }
    if (name == "fuss_catalan") { need(3); return ret(fuss_catalan(a[0], a[1], a[2])); }
    if (name == "ballot") { need(3); return ret(ballot(a[0], a[1], a[2])); }
    if (name == "rothe") { need(3); return ret(rothe(a[0], a[1], a[2])); }
    if (name == "fuss_narayana") { need(2); return retp(fuss_narayana(a[0], a[1])); }
    if (name == "motzkin") { need(1); return ret(motzkin(a[0])); }
    if (name == "riordan") { need(1); return ret(riordan(a[0])); }
    if (name == "fine") { need(1); return ret(fine(a[0])); }
    if (name == "delannoy") { need(2); return ret(delannoy(a[0], a[1])); }
    if (name == "bell") { need(1); return ret(bell(a[0])); }
    if (name == "lah") { need(2); return ret(lah(a[0], a[1])); }
    if (name == "euler_updown") { need(1); return ret(euler_updown(a[0])); }
    if (name == "vsasm") { need(1); return ret(vsasm(a[0])); }
    if (name == "cstcpp") { need(1); return ret(cstcpp(a[0])); }
    if (name == "asm") { need(1); return ret(asm_count(a[0])); }
    if (name == "schroder_large") { need(1); return ret(schroder_large(a[0])); }
    if (name == "schroder_little") { need(1); return ret(schroder_little(a[0])); }
    if (name == "Tnk_r") { need(3); return ret(T_nkr(a[0], a[1], a[2])); }
    if (name == "tab") { need(2); return ret(tab(a[0], a[1])); }
    if (name == "stirling1") { need(2); return ret(stirling(StirlingKind::first, a[0], a[1])); }
    if (name == "stirling2") { need(2); return ret(stirling(StirlingKind::second, a[0], a[1])); }
    throw std::runtime_error("unknown family: " + name);
}

// ---------------------------------------------------------------------------

HilbAlgebra hilb_algebra_of(const std::string& name) {
    if (name == "6T") return HilbAlgebra::T6;
    if (name == "6Tdual") return HilbAlgebra::T6dual;
    if (name == "CYB") return HilbAlgebra::CYB;
    if (name == "CYBdual") return HilbAlgebra::CYBdual;
    if (name == "4T") return HilbAlgebra::T4;
    if (name == "4NT") return HilbAlgebra::NT4;
    if (name == "4NTdual") return HilbAlgebra::NT4dual;
    if (name == "McCoolDual") return HilbAlgebra::McCoolDual;
    if (name == "McCoolPlusDual") return HilbAlgebra::McCoolPlusDual;
    if (name == "ANC") return HilbAlgebra::ANC;
    if (name == "BKLdual") return HilbAlgebra::BKLdual;
    if (name == "super6Tdual") return HilbAlgebra::super6Tdual;
    if (name == "OSgeneric") return HilbAlgebra::OSgeneric;
    throw std::runtime_error("unknown algebra: " + name);
}

static ExactPoly t6_dual_poly(int n) {
    ExactPoly p;
    for (int k = 0; k <= n - 1; ++k)
        p += ExactPoly(stirling(StirlingKind::second, n, n - k)) * ExactPoly::var(VarId::T(), k);
    return p;
}

static ExactPoly cyb_dual_poly(int n) {
    ExactPoly p;
    for (int k = 0; k <= n - 1; ++k)
        p += ExactPoly(Int(factorial(k + 1) * narayana(n, k))) * ExactPoly::var(VarId::T(), k);
    return p;
}

ExactPoly super6t_dual_closed(int n, int m) {
    // Hilb((6T_{n,m})^!, t) = sum_k c_k Hilb(6T_{n-k}^!) Hilb(6T_{m-k}^!) t^{2k}
    // with c_k = [t^k] prod_{j=1}^{n-1} (1 - j t) = (-1)^k |s(n, n-k)|
    if (n > m) std::swap(n, m);
    ExactPoly acc;
    for (int k = 0; k <= n - 1; ++k) {
        Int s1 = stirling(StirlingKind::first, n, n - k);
        Int coeff = (k % 2 ? -s1 : s1);
        acc += ExactPoly(coeff) * t6_dual_poly(n - k) * t6_dual_poly(m - k) *
               ExactPoly::var(VarId::T(), 2 * k);
    }
    return acc;
}

ExactPoly super6t_dual_by_inversion(int n, int m) {
    // invert Hilb(6T_n^!) Hilb(6T_m^!) = sum_k S2(min, min-k) Hilb(6T_{n-k,m-k}^!) t^{2k}
    if (n > m) std::swap(n, m);
    if (n <= 1) return t6_dual_poly(m);   // 6T_{1,m} = 6T_m (no extra generators)
    ExactPoly acc = t6_dual_poly(n) * t6_dual_poly(m);
    for (int k = 1; k <= n - 1; ++k) {
        Int s2 = stirling(StirlingKind::second, n, n - k);
        acc -= ExactPoly(s2) * super6t_dual_by_inversion(n - k, m - k) *
               ExactPoly::var(VarId::T(), 2 * k);
    }
    return acc;
}

HilbResult hilbert_series(HilbAlgebra alg, int n, int m) {
    if (n > 12 || m > 12) throw std::runtime_error("hilbert_series: n, m <= 12");
    HilbResult r;
    VarId t = VarId::T();
    switch (alg) {
        case HilbAlgebra::T6: {
            ExactPoly den;
            for (int k = 0; k <= n - 1; ++k)
                den += ExactPoly(Int((k % 2 ? -1 : 1) * stirling(StirlingKind::second, n, n - k))) *
                       ExactPoly::var(t, k);
            r.is_rational = true;
            r.fun = RatFun(ExactPoly(1), den);
            return r;
        }
        case HilbAlgebra::T6dual: r.poly = t6_dual_poly(n); return r;
        case HilbAlgebra::CYB:
        case HilbAlgebra::NT4: {
            ExactPoly den;
            for (int k = 0; k <= n - 1; ++k)
                den += ExactPoly(Int((k % 2 ? -1 : 1) * factorial(k + 1) * narayana(n, k))) *
                       ExactPoly::var(t, k);
            r.is_rational = true;
            r.fun = RatFun(ExactPoly(1), den);
            return r;
        }
        case HilbAlgebra::CYBdual:
        case HilbAlgebra::NT4dual: r.poly = cyb_dual_poly(n); return r;
        case HilbAlgebra::T4: {
            ExactPoly den(1);
            for (int j = 1; j <= n - 1; ++j)
                den = den * (ExactPoly(1) - ExactPoly(j) * ExactPoly::var(t));
            r.is_rational = true;
            r.fun = RatFun(ExactPoly(1), den);
            return r;
        }
        case HilbAlgebra::McCoolDual:
            r.poly = (ExactPoly(1) + ExactPoly(n) * ExactPoly::var(t)).pow(n - 1);
            return r;
        case HilbAlgebra::McCoolPlusDual: {
            ExactPoly p(1);
            for (int j = 1; j <= n - 1; ++j)
                p = p * (ExactPoly(1) + ExactPoly(j) * ExactPoly::var(t));
            r.poly = p;
            return r;
        }
        case HilbAlgebra::ANC: {
            ExactPoly p = q_int(n, t);
            for (int j = 1; j <= n - 1; ++j) p = p * q_int(j * (n - j), t);
            r.poly = p;
            return r;
        }
        case HilbAlgebra::BKLdual: {
            ExactPoly p;
            for (int k = 0; k <= n - 1; ++k)
                p += ExactPoly(schroder_T(n - 1, k)) * ExactPoly::var(t, k);
            r.poly = p;
            return r;
        }
        case HilbAlgebra::super6Tdual: r.poly = super6t_dual_closed(n, m); return r;
        case HilbAlgebra::OSgeneric: {
            // Hilb(OS^+(Gamma_n), t) = t^{n-1} Tutte(K_n; 1 + t^{-1}, 1):
            // computed from the forest generating function in graph.cpp; here via
            // the exponential formula on trees: sum over forests t^{#edges}
            // F(n) via recurrence with tree counts k^{k-2}
            std::vector<ExactPoly> F(n + 1);
            F[0] = ExactPoly(1);
            for (int v = 1; v <= n; ++v) {
                ExactPoly acc;
                for (int k = 1; k <= v; ++k) {
                    Int trees = k == 1 ? 1 : 1;
                    if (k >= 2) {
                        trees = 1;
                        for (int e = 0; e < k - 2; ++e) trees *= k;
                    }
                    acc += ExactPoly(Int(binomial(v - 1, k - 1) * trees)) *
                           ExactPoly::var(t, k - 1) * F[v - k];
                }
                F[v] = acc;
            }
            r.poly = F[n];
            return r;
        }
    }
    throw std::runtime_error("hilbert_series: unhandled algebra");
}

// ---------------------------------------------------------------------------

std::vector<ExactPoly> lagrange_inverse(int order) {
    std::vector<ExactPoly> w(order + 1);
    w[0] = ExactPoly(0);
    for (int n = 1; n <= order; ++n) {
        ExactPoly acc;
        // sum over p_1.. with sum j p_j = n
        std::vector<int> p(n + 1, 0);
        std::function<void(int, int)> rec = [&](int j, int left) {
            if (j > n) {
                if (left) return;
                long sp = 0;
                for (int a = 1; a <= n; ++a) sp += p[a];
                Int mult = factorial(n + sp);
                for (int a = 1; a <= n; ++a) mult /= factorial(p[a]);
                mult /= factorial(n);
                mult /= (n + 1);
                Monomial m;
                for (int a = 1; a <= n; ++a)
                    if (p[a]) m.e.emplace_back(VarId::Y(a), p[a]);
                acc.add_term(m, Rat(mult));
                return;
            }
            for (int v = 0; v * j <= left; ++v) {
                p[j] = v;
                rec(j + 1, left - v * j);
            }
            p[j] = 0;
        };
        rec(1, n);
        w[n] = acc;
    }
    return w;
}

std::vector<ExactPoly> lagrange_inverse_iterative(int order) {
    // g(u) solves g = u + sum_k y_k g^{k+1}; iterate with weighted-degree cap
    // (deg u = 1, deg y_k = 0 but track powers of u up to `order`)
    VarId u = VarId::T();
    std::map<VarId, int> cap{{u, order}};
    ExactPoly g = ExactPoly::var(u);
    for (int it = 0; it < order + 1; ++it) {
        ExactPoly next = ExactPoly::var(u);
        for (int k = 1; k <= order; ++k) {
            ExactPoly gk(1);
            for (int a = 0; a < k + 1; ++a) gk = gk.mul_trunc(g, cap);
            next += ExactPoly::var(VarId::Y(k)) * gk;
        }
        // trim y-monomials that cannot matter: total weighted degree > order
        ExactPoly trimmed;
        for (auto& [m, c] : next.terms()) {
            long wdeg = 0;
            for (auto& [v, e] : m.e) {
                if (v == u) wdeg += e;
                else wdeg += (long)v.i * e;   // y_k has weight k
            }
            if (wdeg <= order) trimmed.add_term(m, c);
        }
        if (trimmed == g) break;
        g = trimmed;
    }
    std::vector<ExactPoly> w(order + 1);
    for (int n = 0; n <= order; ++n) w[n] = g.coeff_of(u, n);
    return w;
}

Int lagrange_b(int n, const std::vector<int>& p) {
    long sp = 0, wsum = 0;
    for (size_t a = 0; a < p.size(); ++a) {
        sp += p[a];
        wsum += (long)(a + 1) * p[a];
    }
    if (wsum != n) return 0;
    Int mult = factorial(n + sp) / factorial(n);
    for (int a : p) mult /= factorial(a);
    return mult / (n + 1);
}

// ---------------------------------------------------------------------------

bool identity_motzkin(int letters, Int expect) {
    AlgebraParams p = AlgebraParams::symbolic(true);
    auto red = fold_reduce_commutative(coxeter_word(letters), p);
    ExactPoly v = specialize_nc(red, SpecRule::last_column_t, letters + 1);
    Rat r = v.eval({{VarId::T(), 1}, {VarId::Alpha(), 1}, {VarId::Beta(), -1}});
    return r == Rat(expect);
}

bool identity_riordan(int letters, Int expect) {
    AlgebraParams p = AlgebraParams::symbolic(true);
    auto red = fold_reduce_commutative(coxeter_word(letters), p);
    ExactPoly v = specialize_nc(red, SpecRule::last_column_t, letters + 1);
    Rat r = v.eval({{VarId::T(), 0}, {VarId::Alpha(), 1}, {VarId::Beta(), -1}});
    return r == Rat(expect);
}

bool identity_ex331(int n, int k) {
    // sum over 1 <= i_1 < ... < i_k <= n of prod_a q^{n-k-i_a+a} = [n k]_q
    VarId q = VarId::Q();
    ExactPoly lhs;
    std::vector<int> idx(k);
    std::function<void(int, int)> rec = [&](int pos, int lo) {
        if (pos == k) {
            long e = 0;
            for (int a = 1; a <= k; ++a) e += n - k - idx[a - 1] + a;
            lhs += ExactPoly::var(q, (int)e);
            return;
        }
        for (int v = lo; v <= n; ++v) {
            idx[pos] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 1);
    return lhs == q_binomial(n, k, q);
}

} // namespace ybx
