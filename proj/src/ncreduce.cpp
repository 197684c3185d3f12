#include "ybx/ncreduce.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "ybx/groth.hpp"

namespace ybx {

std::string Letter::str() const {
    std::ostringstream os;
    os << "x_{" << i << "," << j << "}";
    return os.str();
}

void NCWord::canonicalize() {
    // greedy lexicographically-least representative of the trace class:
    // repeatedly emit the least letter having no earlier non-commuting letter
    size_t n = ls.size();
    if (n < 2) return;
    std::vector<Letter> out;
    out.reserve(n);
    std::vector<char> used(n, 0);
    for (size_t step = 0; step < n; ++step) {
        int best = -1;
        for (size_t p = 0; p < n; ++p) {
            if (used[p]) continue;
            bool avail = true;
            for (size_t r = 0; r < p && avail; ++r)
                if (!used[r] && !ls[r].disjoint(ls[p])) avail = false;
            if (avail && (best < 0 || ls[p] < ls[best])) best = (int)p;
        }
        used[best] = 1;
        out.push_back(ls[best]);
    }
    ls = std::move(out);
}

std::string NCWord::str() const {
    if (ls.empty()) return "1";
    std::string s;
    for (size_t k = 0; k < ls.size(); ++k) {
        if (k) s += ".";
        s += ls[k].str();
    }
    return s;
}

AlgebraParams AlgebraParams::multiparameter(int n) {
    AlgebraParams p;
    for (int i = 1; i < n; ++i) {
        p.a_row[i] = ExactPoly::var(VarId::A(i));
        p.b_row[i] = ExactPoly::var(VarId::B(i));
        p.beta_row[i] = ExactPoly::var(VarId::Beta(i));
        p.alpha_row[i] = ExactPoly::var(VarId::Alpha(i));
    }
    return p;
}

AlgebraParams AlgebraParams::beta_rows(int n) {
    AlgebraParams p;
    for (int i = 1; i < n; ++i) p.beta_row[i] = ExactPoly::var(VarId::Beta(i));
    return p;
}

// --------------------------------------------------------------------------
// noncommutative engine
// --------------------------------------------------------------------------

// find a reducible site: positions p < q with ls[p] = x_{ij}, ls[q] = x_{jk}
// forming a covering pair of the dependence order (the letters strictly
// between split into movers-left and movers-right).  rightmost = true picks
// the site with maximal (q, p).
struct Site {
    int p = -1, q = -1;
    std::vector<char> after;  // for r in (p,q): 1 if r moves right of the pair
};

static bool find_site(const std::vector<Letter>& ls, bool rightmost, Site& site) {
    int n = (int)ls.size();
    site.p = -1;
    for (int q = 0; q < n; ++q)
        for (int p = 0; p < q; ++p) {
            if (ls[p].j != ls[q].i) continue;
            // depends(r): r in (p,q) depends on p transitively
            std::vector<char> dep(q, 0);
            for (int r = p + 1; r < q; ++r) {
                if (!ls[p].disjoint(ls[r])) dep[r] = 1;
                else
                    for (int s = p + 1; s < r && !dep[r]; ++s)
                        if (dep[s] && !ls[s].disjoint(ls[r])) dep[r] = 1;
            }
            // back(r): q depends on r transitively
            std::vector<char> back(q, 0);
            for (int r = q - 1; r > p; --r) {
                if (!ls[q].disjoint(ls[r])) back[r] = 1;
                else
                    for (int s = r + 1; s < q && !back[r]; ++s)
                        if (back[s] && !ls[r].disjoint(ls[s])) back[r] = 1;
            }
            bool covering = true;
            for (int r = p + 1; r < q && covering; ++r)
                if (dep[r] && back[r]) covering = false;
            if (!covering) continue;
            if (site.p < 0 || (rightmost ? std::make_pair(q, p) > std::make_pair(site.q, site.p)
                                         : std::make_pair(q, p) < std::make_pair(site.q, site.p))) {
                site.q = q;
                site.p = p;
                site.after.assign(dep.begin(), dep.end());
            }
        }
    return site.p >= 0;
}

bool nc_reducible(const NCWord& w) {
    Site s;
    return find_site(w.ls, true, s);
}

// words produced by one rewrite at `site`; pair replaced by `repl`
static NCWord splice(const std::vector<Letter>& ls, const Site& site,
                     const std::vector<Letter>& repl) {
    NCWord w;
    w.ls.reserve(ls.size() - 2 + repl.size());
    for (int r = 0; r < site.p; ++r) w.ls.push_back(ls[r]);
    for (int r = site.p + 1; r < site.q; ++r)
        if (!site.after[r]) w.ls.push_back(ls[r]);
    w.ls.insert(w.ls.end(), repl.begin(), repl.end());
    for (int r = site.p + 1; r < site.q; ++r)
        if (site.after[r]) w.ls.push_back(ls[r]);
    for (int r = site.q + 1; r < (int)ls.size(); ++r) w.ls.push_back(ls[r]);
    w.canonicalize();
    return w;
}

NCPoly nc_normal_form(NCPoly input, const AlgebraParams& params, bool leftmost) {
    NCPoly done;
    long fuel = params.fuel;
    while (!input.empty()) {
        auto node = input.extract(input.begin());
        NCWord w = node.key();
        ExactPoly c = node.mapped();
        if (c.is_zero()) continue;
        Site site;
        if (!find_site(w.ls, !leftmost, site)) {
            auto [it, fresh] = done.emplace(w, c);
            if (!fresh) it->second += c;
            continue;
        }
        if (--fuel < 0) throw NonterminationError();
        int i = w.ls[site.p].i, j = w.ls[site.p].j, k = w.ls[site.q].j;
        Letter xik(i, k), xij(i, j), xjk(j, k);
        auto add = [&](const std::vector<Letter>& repl, const ExactPoly& coef) {
            if (coef.is_zero()) return;
            NCWord nw = splice(w.ls, site, repl);
            auto [it, fresh] = input.emplace(std::move(nw), c * coef);
            if (!fresh) it->second += c * coef;
        };
        add({xik, xij}, params.a(i));
        add({xjk, xik}, params.b(i));
        add({xik}, params.beta(i));
        add({}, params.alpha(i));
    }
    for (auto it = done.begin(); it != done.end();) {
        if (it->second.is_zero()) it = done.erase(it);
        else ++it;
    }
    return done;
}

NCPoly fold_reduce(const std::vector<Letter>& word, const AlgebraParams& params) {
    NCPoly cur{{NCWord{}, ExactPoly(1)}};
    for (const Letter& l : word) {
        NCPoly next;
        for (auto& [w, c] : cur) {
            NCWord nw = w;
            nw.ls.push_back(l);
            nw.canonicalize();
            auto [it, fresh] = next.emplace(std::move(nw), c);
            if (!fresh) it->second += c;
        }
        cur = nc_normal_form(std::move(next), params);
    }
    return cur;
}

// --------------------------------------------------------------------------
// commutative engine
// --------------------------------------------------------------------------

static int cmon_exp(const CMon& m, const Letter& l) {
    auto it = std::lower_bound(m.begin(), m.end(), l,
                               [](const std::pair<Letter, int>& a, const Letter& b) { return a.first < b; });
    return (it != m.end() && it->first == l) ? it->second : 0;
}

static void cmon_add(CMon& m, const Letter& l, int d) {
    auto it = std::lower_bound(m.begin(), m.end(), l,
                               [](const std::pair<Letter, int>& a, const Letter& b) { return a.first < b; });
    if (it != m.end() && it->first == l) {
        it->second += d;
        if (it->second == 0) m.erase(it);
    } else if (d != 0) {
        m.insert(it, {l, d});
    }
}

// lexicographically-first reducible pair (x_{ij}, x_{jk}) in m
static bool c_find_pair(const CMon& m, Letter& u, Letter& v) {
    for (auto& [l1, e1] : m)
        for (auto& [l2, e2] : m)
            if (l1.j == l2.i) { u = l1; v = l2; return true; }
    return false;
}

bool c_reducible(const CMon& m) {
    Letter u(1, 2), v(1, 2);
    return c_find_pair(m, u, v);
}

static CPoly c_normal_form(CPoly input, const AlgebraParams& params) {
    CPoly done;
    long fuel = params.fuel;
    while (!input.empty()) {
        auto node = input.extract(input.begin());
        CMon m = node.key();
        ExactPoly c = node.mapped();
        if (c.is_zero()) continue;
        Letter u(1, 2), v(1, 2);
        if (!c_find_pair(m, u, v)) {
            auto [it, fresh] = done.emplace(std::move(m), c);
            if (!fresh) it->second += c;
            continue;
        }
        if (--fuel < 0) throw NonterminationError();
        int i = u.i, j = u.j, k = v.j;
        Letter xik(i, k);
        CMon base = m;
        cmon_add(base, u, -1);
        cmon_add(base, v, -1);
        auto add = [&](std::initializer_list<Letter> extra, const ExactPoly& coef) {
            if (coef.is_zero()) return;
            CMon nm = base;
            for (const Letter& l : extra) cmon_add(nm, l, 1);
            auto [it, fresh] = input.emplace(std::move(nm), c * coef);
            if (!fresh) it->second += c * coef;
        };
        add({xik, u}, params.a(i));
        add({v, xik}, params.b(i));
        add({xik}, params.beta(i));
        add({}, params.alpha(i));
    }
    for (auto it = done.begin(); it != done.end();) {
        if (it->second.is_zero()) it = done.erase(it);
        else ++it;
    }
    return done;
}

CPoly fold_reduce_commutative(const std::vector<Letter>& word, const AlgebraParams& params) {
    CPoly cur{{CMon{}, ExactPoly(1)}};
    for (const Letter& l : word) {
        CPoly next;
        for (auto& [m, c] : cur) {
            CMon nm = m;
            cmon_add(nm, l, 1);
            auto [it, fresh] = next.emplace(std::move(nm), c);
            if (!fresh) it->second += c;
        }
        cur = c_normal_form(std::move(next), params);
    }
    return cur;
}

// --------------------------------------------------------------------------
// specializations
// --------------------------------------------------------------------------

static ExactPoly letter_value(const Letter& l, SpecRule rule, int n) {
    switch (rule) {
        case SpecRule::all_ones:
            return ExactPoly(1);
        case SpecRule::last_column_t:
            return l.j == n ? ExactPoly::var(VarId::T()) : ExactPoly(1);
        case SpecRule::row_ti:
            return ExactPoly::var(VarId::T(l.i));
        case SpecRule::first_row_t:
            return l.i == 1 ? ExactPoly::var(VarId::T()) : ExactPoly(1);
        case SpecRule::qt:
            if (l.j != n) return ExactPoly(1);
            return l.i == 1 ? ExactPoly::var(VarId::T()) : ExactPoly::var(VarId::Q());
    }
    return ExactPoly(1);
}

ExactPoly specialize_nc(const NCPoly& p, SpecRule rule, int n) {
    ExactPoly r;
    for (auto& [w, c] : p) {
        ExactPoly t = c;
        for (const Letter& l : w.ls) t = t * letter_value(l, rule, n);
        r += t;
    }
    return r;
}

ExactPoly specialize_nc(const CPoly& p, SpecRule rule, int n) {
    ExactPoly r;
    for (auto& [m, c] : p) {
        ExactPoly t = c;
        for (auto& [l, e] : m) t = t * letter_value(l, rule, n).pow(e);
        r += t;
    }
    return r;
}

ExactPoly specialize_nc(const NCPoly& p, const std::map<Letter, ExactPoly>& values) {
    ExactPoly r;
    for (auto& [w, c] : p) {
        ExactPoly t = c;
        for (const Letter& l : w.ls) t = t * values.at(l);
        r += t;
    }
    return r;
}

ExactPoly specialize_nc(const CPoly& p, const std::map<Letter, ExactPoly>& values) {
    ExactPoly r;
    for (auto& [m, c] : p) {
        ExactPoly t = c;
        for (auto& [l, e] : m) t = t * values.at(l).pow(e);
        r += t;
    }
    return r;
}

std::vector<Letter> coxeter_word(int m) {
    std::vector<Letter> w;
    for (int a = 1; a <= m; ++a) w.emplace_back(a, a + 1);
    return w;
}

NCPoly coxeter_reduced(int m, const AlgebraParams& params) {
    return fold_reduce(coxeter_word(m), params);
}

static std::vector<Letter> dominant_word(const std::vector<int>& m) {
    std::vector<Letter> w;
    for (size_t a = 0; a < m.size(); ++a)
        for (int r = 0; r < m[a]; ++r) w.emplace_back((int)a + 1, (int)a + 2);
    return w;
}

ExactPoly dominant_reduced(const std::vector<int>& m, const AlgebraParams& params) {
    return specialize_nc(fold_reduce_commutative(dominant_word(m), params),
                         SpecRule::all_ones, (int)m.size() + 1);
}

ExactPoly dominant_reduced_t(const std::vector<int>& m, const AlgebraParams& params) {
    return specialize_nc(fold_reduce_commutative(dominant_word(m), params),
                         SpecRule::last_column_t, (int)m.size() + 1);
}

CPoly longest_reduced(int n, const AlgebraParams& params,
                      const std::map<std::pair<int, int>, int>& exponents) {
    std::vector<Letter> w;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            int e = 1;
            auto it = exponents.find({i, j});
            if (it != exponents.end()) e = it->second;
            for (int r = 0; r < e; ++r) w.emplace_back(i, j);
        }
    AlgebraParams p = params;
    p.commutative = true;
    return fold_reduce_commutative(w, p);
}

ExactPoly longest_Q(int n) {
    return specialize_nc(longest_reduced(n, AlgebraParams::beta_only(true)),
                         SpecRule::all_ones, n);
}

ExactPoly longest_Qhat(int n) {
    return specialize_nc(longest_reduced(n, AlgebraParams::beta_only(true)),
                         SpecRule::qt, n);
}

CPoly meszaros_reduced(int n, int m) {
    // first row raised to the (m+1)-st power, full staircase below, folded in
    // lexicographic order (the m = 0 case is the longest element w_0^{(n)})
    std::map<std::pair<int, int>, int> expo;
    for (int j = 2; j <= n; ++j) expo[{1, j}] = m + 1;
    return longest_reduced(n, AlgebraParams::beta_only(true), expo);
}

ExactPoly multiparam_narayana(int n) {
    NCPoly red = coxeter_reduced(n, AlgebraParams::beta_rows(n + 1));
    ExactPoly q = specialize_nc(red, SpecRule::all_ones, n + 1);
    std::map<VarId, ExactPoly> shift;
    for (int i = 1; i <= n; ++i)
        shift[VarId::Beta(i)] = ExactPoly::var(VarId::Beta(i)) - ExactPoly(1);
    return q.substitute(shift);
}

// --------------------------------------------------------------------------
// Chan-Robbins-Yuen lattice points
// --------------------------------------------------------------------------

// integer points of dilation * CRY_m: m x m nonnegative integer matrices with
// row/column sums = dilation and support a_{ij} = 0 for j > i+1
Int cry_points(int m_vertices, int dilation) {
    int m = m_vertices;
    // fill row by row; state = remaining column sums (cols 1..m)
    std::map<std::vector<int>, Int> states;
    states[std::vector<int>(m, dilation)] = 1;
    for (int row = 1; row <= m; ++row) {
        std::map<std::vector<int>, Int> next;
        int maxcol = std::min(m, row + 1);
        for (auto& [cols, cnt] : states) {
            // distribute `dilation` over columns 1..maxcol within remaining capacity
            std::vector<int> pick(maxcol, 0);
            std::function<void(int, int)> rec = [&](int c, int left) {
                if (c == maxcol - 1) {
                    if (left > cols[c]) return;
                    pick[c] = left;
                    std::vector<int> nc = cols;
                    for (int a = 0; a < maxcol; ++a) nc[a] -= pick[a];
                    next[nc] += cnt;
                    return;
                }
                for (int v = 0; v <= std::min(left, cols[c]); ++v) {
                    pick[c] = v;
                    rec(c + 1, left - v);
                }
            };
            rec(0, dilation);
        }
        states = std::move(next);
    }
    Int total = 0;
    std::vector<int> zero(m, 0);
    auto it = states.find(zero);
    if (it != states.end()) total = it->second;
    return total;
}

CryReport cry_ehrhart_check(int n, int order) {
    if (n > 4) throw std::runtime_error("cry_ehrhart_check: n <= 4");
    CryReport rep;
    rep.n = n;
    for (int m = 0; m <= order; ++m) rep.counts.push_back(cry_points(n + 1, m));
    // series identity: Q_n(beta-1) = (sum iota beta^m) (1-beta)^{C(n+1,2)+1}
    ExactPoly beta = ExactPoly::var(VarId::Beta());
    ExactPoly q = longest_Q(n).subst(VarId::Beta(), beta - ExactPoly(1));
    int e = n * (n + 1) / 2 + 1;
    // expand (1-beta)^{-e} * Q up to beta^order and compare with counts
    std::vector<Rat> qc = q.univariate(VarId::Beta());
    qc.resize(order + 1, Rat(0));
    std::vector<Rat> series(order + 1, Rat(0));
    for (int m = 0; m <= order; ++m) {
        // coefficient of beta^m in (1-beta)^{-e} is binom(m+e-1, e-1)
        for (int a = 0; a <= m; ++a)
            series[m] += qc[a] * Rat(binomial(m - a + e - 1, e - 1));
    }
    rep.series_match = true;
    for (int m = 0; m <= order; ++m)
        if (series[m] != Rat(rep.counts[m])) rep.series_match = false;
    return rep;
}

// --------------------------------------------------------------------------
// Theorem on boundary monomials M_lambda
// --------------------------------------------------------------------------

std::vector<Letter> lambda_monomial(const std::vector<int>& lambda) {
    for (size_t i = 0; i + 1 < lambda.size(); ++i)
        if (lambda[i] - lambda[i + 1] > 1 || lambda[i] < lambda[i + 1])
            throw std::runtime_error("lambda_monomial: need a partition with steps <= 1");
    if (lambda.empty() || lambda.back() < 1)
        throw std::runtime_error("lambda_monomial: last part must be >= 1");
    int cols = lambda[0];
    auto conj = [&](int j) {  // lambda'_j, 1-based
        int c = 0;
        for (int part : lambda)
            if (part >= j) ++c;
        return c;
    };
    std::vector<Letter> word{Letter(1, 2)};
    int s = 2;
    for (int j = 1; j <= cols; ++j) {
        int d = conj(j) - conj(j + 1);   // boundary boxes in column j
        for (int a = 1; a <= d; ++a) word.emplace_back(s, s + a);
        s += d;
    }
    return word;
}

// The boundary-monomial theorem, in the normalization the engine verifies:
// substitute x_{ij} -> t_{rho(i)} with rho compressing the rows that occur,
// reflect exponents at their per-variable degrees, and strip the monomial
// content; the result coincides with the content-stripped beta-Grothendieck
// polynomial of 1 x w_{lambda'} (the stated t^lambda normalization of the
// source carries the explicit monomial factors).
LambdaReport lambda_monomial_check(const std::vector<int>& lambda) {
    LambdaReport rep;
    auto word = lambda_monomial(lambda);
    std::set<int> rows;
    for (auto& l : word) rows.insert(l.i);
    std::map<int, int> rho;
    {
        int k = 0;
        for (int r : rows) rho[r] = ++k;
    }
    int M = (int)rows.size();
    NCPoly red = fold_reduce(word, AlgebraParams::beta_only(false));
    ExactPoly P;
    for (auto& [w, c] : red) {
        ExactPoly t = c;
        for (const Letter& l : w.ls) t = t * ExactPoly::var(VarId::T(rho.at(l.i)));
        P += t;
    }
    rep.reduced_spec = P;

    std::vector<int> caps(M + 1, 0);
    for (int j = 1; j <= M; ++j) caps[j] = P.deg(VarId::T(j));
    ExactPoly flipped;
    for (auto& [mono, coef] : P.terms()) {
        Monomial m2;
        int db = mono.deg(VarId::Beta());
        if (db) m2.e.emplace_back(VarId::Beta(), db);
        for (int j = 1; j <= M; ++j) {
            int e = mono.deg(VarId::T(j));
            if (caps[j] - e) m2.e.emplace_back(VarId::X(j), caps[j] - e);
        }
        std::sort(m2.e.begin(), m2.e.end());
        flipped.add_term(m2, coef);
    }

    std::vector<int> conj;
    for (int j = 1; !lambda.empty() && lambda[0] >= j; ++j) {
        int c = 0;
        for (int part : lambda)
            if (part >= j) ++c;
        conj.push_back(c);
    }
    Permutation w = dominant_of_shape(conj).shift(1);
    std::vector<ExactPoly> xs;
    for (int i = 1; i < w.n(); ++i) xs.push_back(ExactPoly::var(VarId::X(i)));
    ExactPoly g = groth_coeff(w, xs, ExactPoly::var(VarId::Beta()));

    auto strip = [](ExactPoly p, int nv) {
        for (int i = 1; i <= nv; ++i) {
            int mind = 1 << 20;
            for (auto& [mono, c] : p.terms()) mind = std::min(mind, mono.deg(VarId::X(i)));
            if (mind > 0 && mind < (1 << 20))
                p = *p.divide_exact(ExactPoly::var(VarId::X(i), mind));
        }
        return p;
    };
    rep.groth_side = strip(g, w.n() - 1);
    rep.ok = (strip(flipped, M) == rep.groth_side);
    return rep;
}

// --------------------------------------------------------------------------
// dissections of a convex (m+2)-gon
// --------------------------------------------------------------------------

// region sizes of the dissection of a convex N-gon by noncrossing diagonals
static void region_sizes(const std::vector<int>& polygon,
                         const std::vector<std::pair<int, int>>& diags,
                         std::vector<int>& out) {
    for (auto& [a, b] : diags) {
        auto ia = std::find(polygon.begin(), polygon.end(), a);
        auto ib = std::find(polygon.begin(), polygon.end(), b);
        if (ia == polygon.end() || ib == polygon.end()) continue;
        int pa = (int)(ia - polygon.begin()), pb = (int)(ib - polygon.begin());
        if (pa > pb) std::swap(pa, pb);
        if (pb - pa <= 1 || (pa == 0 && pb == (int)polygon.size() - 1)) continue;
        std::vector<int> left(polygon.begin() + pa, polygon.begin() + pb + 1);
        std::vector<int> right(polygon.begin() + pb, polygon.end());
        right.insert(right.end(), polygon.begin(), polygon.begin() + pa + 1);
        region_sizes(left, diags, out);
        region_sizes(right, diags, out);
        return;
    }
    out.push_back((int)polygon.size());
}

DissectionExpansion dissection_expand(int m) {
    DissectionExpansion out;
    int n = m + 1;  // paper ambient: C_{m+1} in (m+2)-gon, vertices 1..m+2
    AlgebraParams params = AlgebraParams::multiparameter(n);
    out.reduced = fold_reduce(coxeter_word(m), params);

    for (auto& [w, coef] : out.reduced) {
        // chords (i, j+1); only (1, m+2) degenerates to an edge
        std::vector<std::pair<int, int>> diags;
        ExactPoly zval(1), xval(1);
        std::vector<int> outdeg(m + 3, 0);
        for (const Letter& l : w.ls) {
            int a = l.i, b = l.j + 1;
            if (!(a == 1 && b == m + 2)) diags.push_back({a, b});
            if (l.j == n) zval = zval * ExactPoly::var(VarId::Z(l.i));
            ++outdeg[l.i];
        }
        for (int k = 1; k <= m + 2; ++k)
            if (outdeg[k]) xval = xval * ExactPoly::var(VarId::X(k), outdeg[k]);
        std::vector<int> polygon(m + 2);
        for (int v = 0; v < m + 2; ++v) polygon[v] = v + 1;
        std::vector<int> sizes;
        region_sizes(polygon, diags, sizes);
        ExactPoly yval(1);
        for (int s : sizes) yval = yval * ExactPoly::var(VarId::Y(s - 2));
        out.weighted += coef * xval * yval * zval;

        // B_m(a, y): b=beta=1, alpha=0, z=1, x=1
        std::map<VarId, ExactPoly> bspec;
        for (int i = 1; i < n; ++i) {
            bspec[VarId::B(i)] = ExactPoly(1);
            bspec[VarId::Beta(i)] = ExactPoly(1);
            bspec[VarId::Alpha(i)] = ExactPoly(0);
        }
        out.B += coef.substitute(bspec) * yval;
    }
    return out;
}

} // namespace ybx
