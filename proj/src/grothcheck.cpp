#include "ybx/grothcheck.hpp"

#include <algorithm>
#include <functional>

#include "ybx/numfam.hpp"

namespace ybx {

static ExactPoly beta_var() { return ExactPoly::var(VarId::Beta()); }

CheckReport hankel_identity_check(int n, int k) {
    if (n > 7 || k > 3) throw std::runtime_error("hankel_identity_check: n <= 7, k <= 3");
    CheckReport rep;
    VarId q = VarId::Q(), b = VarId::Beta();
    Permutation pi = richardson(n, k);

    // (1) Schroeder-Hankel: DET|P_{n+k-i-j}| = (1+beta)^{C(k,2)} G_{pi}(1)
    {
        std::vector<std::vector<ExactPoly>> m(k, std::vector<ExactPoly>(k));
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= k; ++j) m[i - 1][j - 1] = schroder_poly(n + k - i - j);
        ExactPoly det = poly_det(m);
        ExactPoly rhs = (ExactPoly(1) + beta_var()).pow((long)k * (k - 1) / 2) * groth_all_ones(pi);
        rep.add("schroder_hankel", det == rhs, det.str());
    }

    // (2) Lemma, part 2: DET|C_{n+k-i-j}(q)| = q^{k(k-1)(6n-2k-5)/6} C_n^{(k)}(q)
    //     (the q-power must factor exactly; checked inside q_catalan_hankel)
    {
        bool ok = true;
        ExactPoly chk;
        try {
            chk = q_catalan_hankel(n, k);
            // at q = 1 it is the Catalan-Hankel number
            ok = chk.eval({{q, 1}}) == Rat(catalan_hankel(n, k));
        } catch (const std::exception&) {
            ok = false;
        }
        rep.add("q_catalan_hankel_factor", ok, chk.str());
    }

    // (3) Lemma, part 1 + Wachs-type determinant:
    //     S_{pi}(1,q,..) = DET|qbinom(n-i+j-1, k+i-1)| = q^{C(n-k,3)} C_n^{(k)}(q)
    {
        ExactPoly sp = groth_principal(pi).subst(b, ExactPoly(0));
        std::vector<std::vector<ExactPoly>> m(n - k, std::vector<ExactPoly>(n - k));
        for (int i = 1; i <= n - k; ++i)
            for (int j = 1; j <= n - k; ++j)
                m[i - 1][j - 1] = q_binomial(n - i + j - 1, k + i - 1, q);
        ExactPoly det = poly_det(m);
        bool ok1 = (sp == det);
        ExactPoly rhs = ExactPoly::var(q, (int)binomial(n - k, 3).get_si()) * q_catalan_hankel(n, k);
        rep.add("schubert_principal_det", ok1 && det == rhs, det.str());
    }

    // (4) q-refinement (principal specialization of the Grothendieck):
    //     DET|S_{n+k-i-j}(q; q^{i-1} beta)| equals
    //     q^E prod_{a=1}^{k-1}(1+q^{a-1} beta) G_{pi}(1,q,q^2,...) for the
    //     exact exponent E = C(n-k,3) + (k-1) C(n-k,2) (paper statement
    //     normalized in the m-convention; verified empirically)
    {
        std::vector<std::vector<ExactPoly>> m(k, std::vector<ExactPoly>(k));
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= k; ++j) {
                ExactPoly s = q_schroder(n + k - i - j);
                m[i - 1][j - 1] = s.subst(b, ExactPoly::var(q, i - 1) * beta_var());
            }
        ExactPoly det = poly_det(m);
        ExactPoly rhs = groth_principal(pi);
        for (int a = 1; a <= k - 1; ++a)
            rhs = rhs * (ExactPoly(1) + ExactPoly::var(q, a - 1) * beta_var());
        long e = binomial(n - k, 3).get_si() + (long)(k - 1) * binomial(n - k, 2).get_si();
        rhs = rhs * ExactPoly::var(q, (int)e);
        rep.add("q_schroder_hankel", det == rhs, det.str());
    }

    // (5) k = n-1 product case
    if (k == n - 1) {
        std::vector<std::vector<ExactPoly>> m(k, std::vector<ExactPoly>(k));
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= k; ++j) {
                ExactPoly s = q_schroder(2 * n - 1 - i - j);
                m[i - 1][j - 1] = s.subst(b, ExactPoly::var(q, i - 1) * beta_var());
            }
        ExactPoly det = poly_det(m);
        ExactPoly rhs = ExactPoly::var(q, (int)((long)(n - 1) * (n - 2) * (4 * n - 3) / 6));
        for (int a = 1; a <= n - 2; ++a)
            rhs = rhs * (ExactPoly(1) + ExactPoly::var(q, a - 1) * beta_var()).pow(n - a - 1);
        rep.add("corollary_k_eq_n_minus_1", det == rhs, det.str());
    }
    return rep;
}

// --------------------------------------------------------------------------
// dissections
// --------------------------------------------------------------------------

namespace {

struct Chord {
    int a, b;   // a < b, vertices of an N-gon
    bool crosses(const Chord& o) const {
        return (a < o.a && o.a < b && b < o.b) || (o.a < a && a < o.b && o.b < b);
    }
};

struct DissectionEnum {
    int N = 0, k = 1;
    std::vector<Chord> fixed;      // the minimal dissection D_0
    std::vector<Chord> relevant;   // diagonals of length > k
    // counts[s] = number of k-dissections with s relevant diagonals
    std::vector<Int> counts;
    // weighted k=1 sum: beta^{...} prod x_{min endpoint}
    ExactPoly weighted;

    void run(bool with_weights) {
        for (int a = 1; a <= N; ++a)
            for (int b = a + 2; b <= N; ++b) {
                if (a == 1 && b == N) continue;   // polygon edge
                int len = std::min(b - a, N - (b - a));
                Chord c{a, b};
                if (len <= k) fixed.push_back(c);
                else relevant.push_back(c);
            }
        counts.assign(relevant.size() + 1, 0);
        std::vector<int> chosen;
        search(0, chosen, with_weights);
    }

    bool compatible(const std::vector<int>& chosen, int cand) const {
        // no (k+1)-subset of pairwise crossing among chosen + cand (+ fixed,
        // which cannot participate); check all k-subsets of chosen against cand
        std::vector<int> crossing;
        for (int c : chosen)
            if (relevant[c].crosses(relevant[cand])) crossing.push_back(c);
        if ((int)crossing.size() < k) return true;
        // need: no k-subset of `crossing` pairwise crossing
        int m = (int)crossing.size();
        std::vector<int> idx(k);
        std::function<bool(int, int)> any = [&](int pos, int lo) -> bool {
            if (pos == k) return true;
            for (int i = lo; i < m; ++i) {
                bool ok = true;
                for (int p = 0; p < pos && ok; ++p)
                    if (!relevant[crossing[idx[p]]].crosses(relevant[crossing[i]])) ok = false;
                if (!ok) continue;
                idx[pos] = i;
                if (any(pos + 1, i + 1)) return true;
            }
            return false;
        };
        return !any(0, 0);
    }

    void search(int next, std::vector<int>& chosen, bool with_weights) {
        record(chosen, with_weights);
        for (int c = next; c < (int)relevant.size(); ++c) {
            if (!compatible(chosen, c)) continue;
            chosen.push_back(c);
            search(c + 1, chosen, with_weights);
            chosen.pop_back();
        }
    }

    void record(const std::vector<int>& chosen, bool with_weights) {
        counts[chosen.size()] += 1;
        if (!with_weights) return;
        // k = 1 weighted: beta^{(N-3) - |E|} prod x_a over diagonals (a,b)
        Monomial m;
        std::vector<int> xe(N + 1, 0);
        for (int c : chosen) ++xe[relevant[c].a];
        for (int a = 1; a <= N; ++a)
            if (xe[a]) m.e.emplace_back(VarId::X(a), xe[a]);
        int bexp = (N - 3) - (int)chosen.size();
        if (bexp) m.e.emplace_back(VarId::Beta(), bexp);
        std::sort(m.e.begin(), m.e.end());
        weighted.add_term(m, 1);
    }
};

} // namespace

ExactPoly dissection_gf(int n, int k) {
    DissectionEnum de;
    de.N = n + k;
    de.k = k;
    de.run(false);
    ExactPoly gf;
    int top = (n - 1) * (2 * k - 1) - 1 - (int)de.fixed.size();
    for (size_t s = 0; s < de.counts.size(); ++s) {
        if (de.counts[s] == 0) continue;
        int idx = top - (int)s;
        if (idx < 0) throw std::runtime_error("dissection_gf: negative index");
        gf += ExactPoly(de.counts[s]) * ExactPoly::var(VarId::Beta(), idx);
    }
    return gf;
}

CheckReport dissection_check(int n, int k) {
    if (k > 2 || n > 7) throw std::runtime_error("dissection_check: k <= 2, n <= 7");
    CheckReport rep;
    Permutation pi = richardson(n, k);
    ExactPoly gf = dissection_gf(n, k);
    ExactPoly g1 = groth_all_ones(pi);
    rep.add("dissections_vs_groth", gf == g1, gf.str());

    if (k == 1) {
        // weighted version: sum over dissections of the (n+1)-gon of
        // beta^{n-2-|D|} prod_{(a,b) in D} x_a, times prod_i x_i^{n-1-i},
        // equals prod_i x_i^{n-i} * G_pi(x^{-1})
        DissectionEnum de;
        de.N = n + 1;
        de.k = 1;
        de.run(true);
        int m = n - 1;   // number of x variables
        ExactPoly lhs = de.weighted;
        for (int i = 1; i <= m; ++i)
            lhs = lhs * ExactPoly::var(VarId::X(i), m - i);
        ExactPoly g = grothendieck(pi);
        // flip: x_i^a -> x_i^{(m+1-i) - a}
        ExactPoly rhs;
        for (auto& [mono, coef] : g.terms()) {
            Monomial m2;
            int db = mono.deg(VarId::Beta());
            if (db) m2.e.emplace_back(VarId::Beta(), db);
            for (int i = 1; i <= m; ++i) {
                int a = mono.deg(VarId::X(i));
                int cap = m + 1 - i;
                if (a > cap) throw std::runtime_error("dissection_check: exponent beyond cap");
                if (cap - a) m2.e.emplace_back(VarId::X(i), cap - a);
            }
            std::sort(m2.e.begin(), m2.e.end());
            rhs.add_term(m2, coef);
        }
        rep.add("weighted_dissections", lhs == rhs, lhs.str());
    }
    return rep;
}

// --------------------------------------------------------------------------
// Fuss-Catalan / VSASM / CSTCPP specializations
// --------------------------------------------------------------------------

CheckReport fuss_leading_check(int n, int k, int p) {
    CheckReport rep;
    VarId b = VarId::Beta();

    // Fuss-Narayana: G^{(beta-1)}_{varpi_{n,1,p}}(1) = FN_{n+1,p}(beta)
    {
        Permutation w = varpi_nkp(n, 1, p);
        if (w.length() <= 24) {
            ExactPoly lhs = groth_F(w);
            ExactPoly rhs = fuss_narayana(n + 1, p);
            rep.add("fuss_narayana", lhs == rhs, lhs.str());
        }
    }
    // leading coefficient of G_{n,k,p} for k >= 2
    if (k >= 2) {
        Permutation w = varpi_nkp(n, k, p);
        if (w.length() <= 20) {
            ExactPoly g = groth_F(w);
            Rat top = g.coeff_of(b, n * k).constant_term();
            Int expect = wachs_D(n, k, 1, p - 1, 0);
            rep.add("leading_coeff_D", top == Rat(expect), g.str());
        }
    }
    // conjecture watch: VSASM / CSTCPP leading coefficients
    if (n <= 3) {
        Permutation sg = sigma_nkpb(n, 2 * n, 2, 0);
        ExactPoly g = groth_F(sg);
        Rat top = g.coeff_of(b, n * (n - 1)).constant_term();
        rep.add("vsasm_leading", top == Rat(vsasm(n)), g.str());

        Permutation sf = sigma_nkpb(n, 2 * n + 1, 2, 0);
        ExactPoly f = groth_F(sf);
        Rat ftop = f.coeff_of(b, n * n).constant_term();
        rep.add("cstcpp_leading", ftop == Rat(cstcpp(n + 1)), f.str());

        // R at q=0 exchanges the two families
        ExactPoly r1 = specialize_R(sf).subst(VarId::Q(), ExactPoly(0));
        rep.add("R_q0_exchange_1", r1 == g, r1.str());
        if (n >= 2) {
            ExactPoly r2 = specialize_R(sg).subst(VarId::Q(), ExactPoly(0));
            Permutation prev = sigma_nkpb(n - 1, 2 * n - 1, 2, 0);
            rep.add("R_q0_exchange_2", r2 == groth_F(prev), r2.str());
        }
    }
    // Schubert values of w_k^- / w_k^+
    if (k <= 4) {
        std::vector<ExactPoly> xs1((size_t)w_minus(k).n() - 1, ExactPoly(1));
        Rat vm = groth_coeff(w_minus(k), xs1, ExactPoly(0)).constant_term();
        rep.add("schubert_w_minus_vsasm", vm == Rat(vsasm(k)), vm.get_str());
        std::vector<ExactPoly> xs2((size_t)w_plus(k).n() - 1, ExactPoly(1));
        Rat vp = groth_coeff(w_plus(k), xs2, ExactPoly(0)).constant_term();
        rep.add("schubert_w_plus_cstcpp", vp == Rat(cstcpp(k)), vp.get_str());
    }
    return rep;
}

bool eq54_check(int n) {
    std::vector<int> img{1};
    for (int v = n; v >= 2; --v) img.push_back(v);
    Permutation pi(img);
    ExactPoly lhs = groth_principal(pi).subst(VarId::Beta(), ExactPoly(0));
    ExactPoly rhs = ExactPoly::var(VarId::Q(), (int)binomial(n - 1, 3).get_si()) * q_catalan(n - 1);
    return lhs == rhs;
}

} // namespace ybx
