#ifndef YBX_GRAPH_HPP
#define YBX_GRAPH_HPP

#include <string>
#include <vector>

#include "ybx/poly.hpp"

namespace ybx {

// n labeled vertices, symmetric multiplicity matrix, zero diagonal
struct Multigraph {
    int n = 0;
    std::vector<std::vector<int>> mult;

    explicit Multigraph(int n_) : n(n_), mult(n_, std::vector<int>(n_, 0)) {}
    static Multigraph complete(int n);
    // complete multipartite K_{n_1,...,n_r} with uniform weight l
    static Multigraph multipartite(const std::vector<int>& parts, int l = 1);
    // weighted multipartite with per-pair weights l[{i,j}] indexed by part pairs
    static Multigraph multipartite_weighted(const std::vector<int>& parts,
                                            const std::vector<std::vector<int>>& l);
    static Multigraph parse(const std::string& text);   // "n" then lines "i j m"

    void add_edge(int i, int j, int m = 1);
    int edges() const;
    int components() const;
    bool connected() const { return components() == 1; }
};

// Tutte polynomial by deletion-contraction (x, y variables)
ExactPoly tutte_dc(const Multigraph& g);

// universal Tutte polynomial T_n({q_ij}, x, y)
ExactPoly universal_tutte(int n);
// substitute q_ij -> [m_ij]_y for a multigraph; equals (x-1)^{kappa-1} Tutte(g)
ExactPoly universal_tutte_specialize(const ExactPoly& universal, const Multigraph& g);

// Tutte polynomial of the weighted complete multipartite graph from the
// exponential generating function (coefficient extraction); equals
// (x-1)^{kappa-1} Tutte
ExactPoly multipartite_tutte(const std::vector<int>& parts,
                             const std::vector<std::vector<int>>& l);
ExactPoly multipartite_tutte(const std::vector<int>& parts, int l = 1);

// chromatic polynomial of K_{n_1..n_r} via Stirling numbers
ExactPoly chromatic_multipartite(const std::vector<int>& parts);
// chromatic polynomial of an arbitrary multigraph (from Tutte)
ExactPoly chromatic(const Multigraph& g);

// universal chromatic polynomial Ch_n({p_ij}, x) via the partition formula
ExactPoly universal_chromatic(int n);
// specialize p_ij: 0 on edges of g, 1 off edges; then
// Chrom(g, t) = (-1)^{n-1} t * Ch(x = 1 - t)
ExactPoly universal_chromatic_specialize(const ExactPoly& uc, const Multigraph& g);

// Hilbert polynomial of the abelianized nil graph algebra:
// t^{|V|-1} Tutte(G; 1 + 1/t, 0) per connected component (product over
// components)
ExactPoly hilb_ab(const Multigraph& g);

// poly-Bernoulli B_n^{(-m)} = sum_j (j!)^2 S(n+1,j+1) S(m+1,j+1)
Int poly_bernoulli(int n, int m);

// forest polynomials
struct ForestPolys {
    ExactPoly F;    // F_n(x,t) = (xt)^{n-1} Tutte(K_n; 1+1/(xt), t-1)
    ExactPoly I;    // tree inversion polynomial: coeff of (xt)^{n-1}
    ExactPoly DU;   // DU_n(x) = F_n(-x, -1)
};
ForestPolys forest_polys(int n);

} // namespace ybx

#endif
