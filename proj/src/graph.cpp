#include "ybx/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ybx {

Multigraph Multigraph::complete(int n) {
    Multigraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.mult[i][j] = g.mult[j][i] = 1;
    return g;
}

Multigraph Multigraph::multipartite(const std::vector<int>& parts, int l) {
    int r = (int)parts.size();
    std::vector<std::vector<int>> lm(r, std::vector<int>(r, l));
    return multipartite_weighted(parts, lm);
}

Multigraph Multigraph::multipartite_weighted(const std::vector<int>& parts,
                                             const std::vector<std::vector<int>>& l) {
    int n = 0;
    for (int p : parts) n += p;
    Multigraph g(n);
    std::vector<int> part_of;
    for (size_t p = 0; p < parts.size(); ++p)
        for (int c = 0; c < parts[p]; ++c) part_of.push_back((int)p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int pi = part_of[i], pj = part_of[j];
            if (pi == pj) continue;
            int w = l[std::min(pi, pj)][std::max(pi, pj)];
            g.mult[i][j] = g.mult[j][i] = w;
        }
    return g;
}

Multigraph Multigraph::parse(const std::string& text) {
    std::istringstream is(text);
    int n;
    if (!(is >> n)) throw std::runtime_error("graph parse: missing vertex count");
    Multigraph g(n);
    int i, j, m;
    while (is >> i >> j >> m) {
        if (i < 1 || j < 1 || i > n || j > n || i == j)
            throw std::runtime_error("graph parse: bad edge");
        g.mult[i - 1][j - 1] += m;
        g.mult[j - 1][i - 1] += m;
    }
    return g;
}

void Multigraph::add_edge(int i, int j, int m) {
    mult[i - 1][j - 1] += m;
    mult[j - 1][i - 1] += m;
}

int Multigraph::edges() const {
    int e = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e += mult[i][j];
    return e;
}

int Multigraph::components() const {
    std::vector<int> comp(n, -1);
    int c = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w)
                if (mult[v][w] > 0 && comp[w] < 0) {
                    comp[w] = c;
                    stack.push_back(w);
                }
        }
        ++c;
    }
    return c;
}

// --------------------------------------------------------------------------
// deletion-contraction with loop bookkeeping and memoization on a canonical
// certificate (degree-refined adjacency form; adequate at <= 8 vertices)
// --------------------------------------------------------------------------

namespace {

struct DCGraph {
    int n;
    std::vector<std::vector<int>> mult;   // off-diagonal multiplicities
    int loops = 0;                        // accumulated loop count (global y-power)
};

std::string canonical_key(const DCGraph& g) {
    // refine by degree sequence, then brute-force minimize over permutations
    // within color classes
    int n = g.n;
    std::vector<int> deg(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) deg[i] += g.mult[i][j];
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] < deg[b]; });
    std::string best;
    std::vector<int> perm = order;
    // permute only within equal-degree blocks
    std::function<void(int)> rec = [&](int lo) {
        if (lo >= n) {
            std::string key;
            key.reserve(n * n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    key += (char)('0' + std::min(g.mult[perm[i]][perm[j]], 60));
            if (best.empty() || key < best) best = key;
            return;
        }
        int hi = lo;
        while (hi < n && deg[perm[hi]] == deg[perm[lo]]) ++hi;
        std::sort(perm.begin() + lo, perm.begin() + hi);
        do {
            rec(hi);
        } while (std::next_permutation(perm.begin() + lo, perm.begin() + hi));
    };
    rec(0);
    return best;
}

ExactPoly tutte_rec(DCGraph g, std::map<std::string, ExactPoly>& memo) {
    // strip isolated vertices
    {
        std::vector<int> keep;
        for (int i = 0; i < g.n; ++i) {
            bool iso = true;
            for (int j = 0; j < g.n; ++j)
                if (g.mult[i][j]) iso = false;
            if (!iso) keep.push_back(i);
        }
        if ((int)keep.size() != g.n) {
            DCGraph h;
            h.n = (int)keep.size();
            h.loops = g.loops;
            h.mult.assign(h.n, std::vector<int>(h.n, 0));
            for (int a = 0; a < h.n; ++a)
                for (int b = 0; b < h.n; ++b) h.mult[a][b] = g.mult[keep[a]][keep[b]];
            g = h;
        }
    }
    if (g.n <= 1) return ExactPoly::var(VarId::Y()).pow(g.loops);
    int loops = g.loops;
    g.loops = 0;
    std::string key = canonical_key(g);
    auto it = memo.find(key);
    if (it != memo.end())
        return loops ? it->second * ExactPoly::var(VarId::Y()).pow(loops) : it->second;

    // find an edge; prefer a bridge shortcut via x-factor when the edge is the
    // last connection (detected by multiplicity-1 edge whose removal disconnects)
    int ei = -1, ej = -1;
    for (int i = 0; i < g.n && ei < 0; ++i)
        for (int j = i + 1; j < g.n && ei < 0; ++j)
            if (g.mult[i][j]) { ei = i; ej = j; }
    ExactPoly result;
    {
        // contract: merge ej into ei; parallel edges between them become loops
        DCGraph c;
        c.n = g.n - 1;
        c.loops = g.mult[ei][ej] - 1;
        c.mult.assign(c.n, std::vector<int>(c.n, 0));
        auto idx = [&](int v) { return v < ej ? v : v - 1; };
        for (int a = 0; a < g.n; ++a)
            for (int b = a + 1; b < g.n; ++b) {
                if (a == ei && b == ej) continue;
                int na = (a == ej) ? idx(ei) : idx(a);
                int nb = (b == ej) ? idx(ei) : idx(b);
                if (na == nb) { c.loops += g.mult[a][b]; continue; }
                c.mult[std::min(na, nb)][std::max(na, nb)] += g.mult[a][b];
                c.mult[std::max(na, nb)][std::min(na, nb)] =
                    c.mult[std::min(na, nb)][std::max(na, nb)];
            }
        result += tutte_rec(c, memo);
    }
    {
        // delete one copy of the edge; if it was a bridge, use the x-shortcut
        DCGraph d = g;
        d.mult[ei][ej]--;
        d.mult[ej][ei]--;
        Multigraph probe(d.n);
        probe.mult = d.mult;
        Multigraph orig(g.n);
        orig.mult = g.mult;
        if (g.mult[ei][ej] == 1 && probe.components() > orig.components()) {
            // bridge: Tutte(G) = x * Tutte(G/e); the contraction term is
            // already in `result`
            result = result * ExactPoly::var(VarId::X(-1));
        } else {
            result += tutte_rec(d, memo);
        }
    }
    memo[key] = result;
    return loops ? result * ExactPoly::var(VarId::Y()).pow(loops) : result;
}

} // namespace

ExactPoly tutte_dc(const Multigraph& g) {
    if (g.edges() > 40) throw std::runtime_error("tutte_dc: too many edges");
    // product over connected components
    std::vector<int> comp(g.n, -1);
    int nc = 0;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = nc;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < g.n; ++w)
                if (g.mult[v][w] > 0 && comp[w] < 0) {
                    comp[w] = nc;
                    stack.push_back(w);
                }
        }
        ++nc;
    }
    ExactPoly total(1);
    std::map<std::string, ExactPoly> memo;
    for (int c = 0; c < nc; ++c) {
        std::vector<int> verts;
        for (int v = 0; v < g.n; ++v)
            if (comp[v] == c) verts.push_back(v);
        DCGraph sub;
        sub.n = (int)verts.size();
        sub.mult.assign(sub.n, std::vector<int>(sub.n, 0));
        for (int a = 0; a < sub.n; ++a)
            for (int b = 0; b < sub.n; ++b) sub.mult[a][b] = g.mult[verts[a]][verts[b]];
        total = total * tutte_rec(sub, memo);
    }
    return total;
}

// --------------------------------------------------------------------------
// universal Tutte via set partitions
// --------------------------------------------------------------------------

static void enumerate_partitions(int n, std::vector<std::vector<std::vector<int>>>& out) {
    std::vector<std::vector<int>> cur;
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            out.push_back(cur);
            return;
        }
        for (auto& block : cur) {
            block.push_back(v);
            rec(v + 1);
            block.pop_back();
        }
        cur.push_back({v});
        rec(v + 1);
        cur.pop_back();
    };
    rec(0);
}

ExactPoly universal_tutte(int n) {
    if (n > 5) throw std::runtime_error("universal_tutte: n <= 5");
    // (x-1) T_n = (y-1)^{-n} sum_{partitions pi of [n]}
    //   prod_{a=0}^{|pi|-1} ((x-1)(y-1) - a) * prod_{B in pi} W_B,
    //   W_B = prod_{i<j in B} (1 + (y-1) q_ij)
    ExactPoly x = ExactPoly::var(VarId::X(-1)), y = ExactPoly::var(VarId::Y());
    ExactPoly lam = (x - ExactPoly(1)) * (y - ExactPoly(1));
    std::vector<std::vector<std::vector<int>>> partitions;
    enumerate_partitions(n, partitions);
    ExactPoly total;
    for (auto& pi : partitions) {
        ExactPoly w(1);
        for (auto& B : pi)
            for (size_t a = 0; a < B.size(); ++a)
                for (size_t b = a + 1; b < B.size(); ++b)
                    w = w * (ExactPoly(1) +
                             (y - ExactPoly(1)) * ExactPoly::var(VarId::Qij(B[a] + 1, B[b] + 1)));
        ExactPoly fall(1);
        for (size_t a = 0; a < pi.size(); ++a) fall = fall * (lam - ExactPoly((long)a));
        total += fall * w;
    }
    for (int a = 0; a < n; ++a) {
        auto q = total.divide_exact(y - ExactPoly(1));
        if (!q) throw std::runtime_error("universal_tutte: (y-1)^n does not clear");
        total = *q;
    }
    auto q = total.divide_exact(x - ExactPoly(1));
    if (!q) throw std::runtime_error("universal_tutte: (x-1) does not divide");
    return *q;
}

ExactPoly universal_tutte_specialize(const ExactPoly& universal, const Multigraph& g) {
    std::map<VarId, ExactPoly> rules;
    ExactPoly y = ExactPoly::var(VarId::Y());
    for (int i = 1; i <= g.n; ++i)
        for (int j = i + 1; j <= g.n; ++j) {
            int m = g.mult[i - 1][j - 1];
            rules[VarId::Qij(i, j)] = q_int(m, VarId::Y());   // [m]_y
        }
    (void)y;
    return universal.substitute(rules);
}

// --------------------------------------------------------------------------
// multipartite Tutte via the EGF coefficient (multiset partitions of the
// composition vector)
// --------------------------------------------------------------------------

ExactPoly multipartite_tutte(const std::vector<int>& parts,
                             const std::vector<std::vector<int>>& l) {
    int r = (int)parts.size();
    int N = 0;
    for (int p : parts) N += p;
    if (N > 10) throw std::runtime_error("multipartite_tutte: N <= 10");
    ExactPoly x = ExactPoly::var(VarId::X(-1)), y = ExactPoly::var(VarId::Y());
    ExactPoly lam = (x - ExactPoly(1)) * (y - ExactPoly(1));

    // enumerate unordered collections of nonzero vectors m <= parts summing to
    // parts; weight = falling(lam, k) prod_s y^{q(m^s)} * multinomial /
    // symmetry, all over (y-1)^N
    std::vector<std::vector<int>> vecs;   // all nonzero vectors v <= parts
    std::vector<int> cur(r, 0);
    std::function<void(int)> gen = [&](int idx) {
        if (idx == r) {
            for (int c : cur)
                if (c) { vecs.push_back(cur); break; }
            return;
        }
        for (int v = 0; v <= parts[idx]; ++v) {
            cur[idx] = v;
            gen(idx + 1);
        }
        cur[idx] = 0;
    };
    gen(0);
    std::sort(vecs.begin(), vecs.end());

    ExactPoly total;
    std::vector<int> remaining = parts;
    // choose multiset of vectors in nonincreasing index order
    std::function<void(size_t, int, Rat, long, ExactPoly)> rec =
        [&](size_t vi, int count, Rat weight, long blocks, ExactPoly ypow) {
            bool done = true;
            for (int c : remaining)
                if (c) done = false;
            if (done) {
                ExactPoly fall(1);
                for (long a = 0; a < blocks; ++a) fall = fall * (lam - ExactPoly(a));
                total += fall * ypow * ExactPoly(weight);
                return;
            }
            if (vi >= vecs.size()) return;
            // number of copies of vecs[vi]; divide by copies! for the multiset
            rec(vi + 1, 0, weight, blocks, ypow);
            auto& v = vecs[vi];
            bool fits = true;
            for (int c = 0; c < r; ++c)
                if (v[c] > remaining[c]) fits = false;
            if (!fits) return;
            for (int c = 0; c < r; ++c) remaining[c] -= v[c];
            // per-copy weight: prod_j binom-ish 1/prod m_j!; q(m) = sum l_ij m_i m_j
            Rat w = weight;
            for (int c = 0; c < r; ++c) w /= Rat(factorial(v[c]));
            w /= Rat(count + 1);   // growing multiplicity factorial
            long q = 0;
            for (int a = 0; a < r; ++a)
                for (int b = a + 1; b < r; ++b) q += (long)l[a][b] * v[a] * v[b];
            rec(vi, count + 1, w, blocks + 1, ypow * ExactPoly::var(VarId::Y(), (int)q));
            for (int c = 0; c < r; ++c) remaining[c] += v[c];
        };
    rec(0, 0, Rat(1), 0, ExactPoly(1));

    for (int j = 0; j < r; ++j) total = total * ExactPoly(factorial(parts[j]));
    // divide by (y-1)^N and clear kappa-1 powers of (x-1) later at the caller;
    // here return (x-1)^{kappa} T / (x-1) = (x-1)^{kappa-1} T
    for (int a = 0; a < N; ++a) {
        auto q = total.divide_exact(y - ExactPoly(1));
        if (!q) throw std::runtime_error("multipartite_tutte: (y-1)^N does not clear");
        total = *q;
    }
    auto q = total.divide_exact(x - ExactPoly(1));
    if (!q) throw std::runtime_error("multipartite_tutte: (x-1) does not divide");
    return *q;
}

ExactPoly multipartite_tutte(const std::vector<int>& parts, int l) {
    int r = (int)parts.size();
    std::vector<std::vector<int>> lm(r, std::vector<int>(r, l));
    return multipartite_tutte(parts, lm);
}

// --------------------------------------------------------------------------

ExactPoly chromatic_multipartite(const std::vector<int>& parts) {
    // Chrom = sum_k prod_j S(n_j, k_j) (t)_{|k|} with falling factorial (t)_m
    int r = (int)parts.size();
    ExactPoly t = ExactPoly::var(VarId::T());
    ExactPoly total;
    std::vector<int> k(r, 0);
    std::function<void(int, Int, int)> rec = [&](int idx, Int coef, int ksum) {
        if (idx == r) {
            ExactPoly fall(1);
            for (int a = 0; a < ksum; ++a) fall = fall * (t - ExactPoly(a));
            total += ExactPoly(coef) * fall;
            return;
        }
        for (k[idx] = (parts[idx] ? 1 : 0); k[idx] <= parts[idx]; ++k[idx])
            rec(idx + 1, coef * stirling(StirlingKind::second, parts[idx], k[idx]),
                ksum + k[idx]);
    };
    rec(0, 1, 0);
    return total;
}

ExactPoly chromatic(const Multigraph& g) {
    // Chrom(G, t) = (-1)^{n - kappa} t^kappa Tutte(G; 1 - t, 0)
    ExactPoly tut = tutte_dc(g);
    ExactPoly t = ExactPoly::var(VarId::T());
    int kappa = g.components();
    ExactPoly sub = tut.substitute({{VarId::X(-1), ExactPoly(1) - t},
                                    {VarId::Y(), ExactPoly(0)}});
    ExactPoly r = sub * t.pow(kappa);
    if ((g.n - kappa) % 2) r = -r;
    return r;
}

// --------------------------------------------------------------------------
// universal chromatic
// --------------------------------------------------------------------------

ExactPoly universal_chromatic(int n) {
    if (n > 6) throw std::runtime_error("universal_chromatic: n <= 6");
    // Ch_n = -L_(n) + sum_{partitions, k>=2 blocks} Tutte(K_k; x, 0)
    //        (-1)^k p_B, with Tutte(K_k; x, 0) = prod_{j=1}^{k-1} (x + j - 1)
    ExactPoly x = ExactPoly::var(VarId::X(-1));
    std::vector<std::vector<std::vector<int>>> partitions;
    enumerate_partitions(n, partitions);
    ExactPoly total;
    for (auto& pi : partitions) {
        ExactPoly pB(1);
        for (auto& B : pi)
            for (size_t a = 0; a < B.size(); ++a)
                for (size_t b = a + 1; b < B.size(); ++b)
                    pB = pB * ExactPoly::var(VarId::Pij(B[a] + 1, B[b] + 1));
        int k = (int)pi.size();
        if (k == 1) {
            total -= pB;   // beta^{-1} L_(n) at beta = -1
            continue;
        }
        ExactPoly tutte(1);
        for (int j = 1; j <= k - 1; ++j) tutte = tutte * (x + ExactPoly(j - 1));
        if (k % 2) total -= tutte * pB;   // beta^{k-2} at beta=-1 is (-1)^k
        else total += tutte * pB;
    }
    return total;
}

ExactPoly universal_chromatic_specialize(const ExactPoly& uc, const Multigraph& g) {
    std::map<VarId, ExactPoly> rules;
    for (int i = 1; i <= g.n; ++i)
        for (int j = i + 1; j <= g.n; ++j)
            rules[VarId::Pij(i, j)] = ExactPoly(g.mult[i - 1][j - 1] > 0 ? 0 : 1);
    return uc.substitute(rules);
}

// --------------------------------------------------------------------------

ExactPoly hilb_ab(const Multigraph& g) {
    // per connected component: t^{v-1} Tutte(C; 1 + 1/t, 0) = sum_k a_k
    // t^{v-1-k} (1+t)^k where Tutte(C; x, 0) = sum a_k x^k
    ExactPoly total(1);
    std::vector<int> comp(g.n, -1);
    int nc = 0;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = nc;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < g.n; ++w)
                if (g.mult[v][w] > 0 && comp[w] < 0) {
                    comp[w] = nc;
                    stack.push_back(w);
                }
        }
        ++nc;
    }
    ExactPoly t = ExactPoly::var(VarId::T());
    for (int c = 0; c < nc; ++c) {
        std::vector<int> verts;
        for (int v = 0; v < g.n; ++v)
            if (comp[v] == c) verts.push_back(v);
        Multigraph sub((int)verts.size());
        for (size_t a = 0; a < verts.size(); ++a)
            for (size_t b = 0; b < verts.size(); ++b)
                sub.mult[a][b] = g.mult[verts[a]][verts[b]];
        ExactPoly tut = tutte_dc(sub).subst(VarId::Y(), ExactPoly(0));
        int v = sub.n;
        ExactPoly acc;
        for (int k = 0; k <= tut.deg(VarId::X(-1)); ++k) {
            ExactPoly a = tut.coeff_of(VarId::X(-1), k);
            if (a.is_zero()) continue;
            acc += a * t.pow(v - 1 - k) * (ExactPoly(1) + t).pow(k);
        }
        total = total * acc;
    }
    return total;
}

Int poly_bernoulli(int n, int m) {
    Int total = 0;
    for (int j = 0; j <= std::min(n, m); ++j) {
        Int f = factorial(j);
        total += f * f * stirling(StirlingKind::second, n + 1, j + 1) *
                 stirling(StirlingKind::second, m + 1, j + 1);
    }
    return total;
}

ForestPolys forest_polys(int n) {
    if (n > 9) throw std::runtime_error("forest_polys: n <= 9");
    ForestPolys out;
    ExactPoly tut = tutte_dc(Multigraph::complete(n));
    // F_n(x,t) = sum_{k,l} a_{kl} (xt)^{n-1-k} (1+xt)^k (t-1)^l
    ExactPoly x = ExactPoly::var(VarId::X(-1)), t = ExactPoly::var(VarId::T());
    ExactPoly u = x * t;
    ExactPoly acc;
    for (auto& [mono, c] : tut.terms()) {
        int k = mono.deg(VarId::X(-1)), l = mono.deg(VarId::Y());
        acc += ExactPoly(c) * u.pow(n - 1 - k) * (ExactPoly(1) + u).pow(k) *
               (t - ExactPoly(1)).pow(l);
    }
    out.F = acc;
    // I_n(t): coefficient of x^{n-1}, then divide by t^{n-1}
    ExactPoly top = acc.coeff_of(VarId::X(-1), n - 1);
    auto q = top.divide_exact(t.pow(n - 1));
    if (!q) throw std::runtime_error("forest_polys: top coefficient not divisible by t^{n-1}");
    out.I = *q;
    out.DU = acc.substitute({{VarId::X(-1), ExactPoly(-1) * x}, {VarId::T(), ExactPoly(-1)}});
    return out;
}

} // namespace ybx
