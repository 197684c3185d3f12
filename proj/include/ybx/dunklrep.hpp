#ifndef YBX_DUNKLREP_HPP
#define YBX_DUNKLREP_HPP

#include <map>
#include <vector>

#include "ybx/grothcheck.hpp"
#include "ybx/linop.hpp"
#include "ybx/poly.hpp"

namespace ybx {

// family of operators u_{ij} (i<j) on Z[S_n] plus the basis
struct RepFamily {
    SnBasis basis;
    // ops[{i,j}] for 1 <= i < j <= n
    std::map<std::pair<int, int>, LinOp> ops;
    explicit RepFamily(int n) : basis(n) {}
    const LinOp& u(int i, int j) const { return ops.at({i, j}); }
    // u_{ji} = -u_{ij} at beta = 0
    LinOp u_signed(int i, int j) const;
    LinOp dunkl(int i) const;           // theta_i = sum_{j != i} u_{ij}
    int n() const { return basis.n; }
};

// Bruhat representation: u_{ij} w = w s_{ij} if l(w s_{ij}) = l(w)+1, else 0
RepFamily bruhat_rep(int n);
// quantum Bruhat with q_{ij} = q_i q_{i+1} ... q_{j-1} on the down-rule
RepFamily quantum_bruhat_rep(int n);
// Gaudin representation u_{ij} = p_{ij} s_{ij} with rational p_{ij} = 1/(z_i - z_j)
RepFamily gaudin_rep(int n, const std::vector<Rat>& z);

// multiparameter quantum elementary polynomial e_k^{(q)}(x_1..x_n); vars[i]
// is the value of x_{i+1}; qv maps (i,j) to the quantum parameter
ExactPoly quantum_elementary(int k, const std::vector<ExactPoly>& vars,
                             const std::map<std::pair<int, int>, ExactPoly>& qv);
// symbolic q_{ij} variables for all pairs
std::map<std::pair<int, int>, ExactPoly> symbolic_qij(int n);
// chain values: q_{i,i+1} = q_i, else 0
std::map<std::pair<int, int>, ExactPoly> chain_qij(int n);

// defining-relations check: locality, unitarity (beta=0), both 3-term
// relations, plus u^2 behaviour appropriate to the family kind
enum class RepKind { bruhat, qbruhat, gaudin };
CheckReport relations_check(const RepFamily& F, RepKind kind);

// e_k(theta) = 0 (bruhat) / e_k^{(q)}(theta) = 0 (quantum chain) and the
// noncommutative L_k(theta) = 0 Pieri-type vanishing
CheckReport vanishing_check(int n, RepKind kind);

// Theorem on multiplicative Dunkl elements at beta = 0 over Z[q_ij, t]:
// sum_{|I|=k} (prod_{j in I} A_j) prod_{(a<b) not in I} (1 - t^2 q_ab)
//   = binom(n,k) prod_{all a<b} (1 - t^2 q_ab) Id, where A_j is the
// denominator-cleared Theta_j, plus pairwise commutativity
CheckReport multiplicative_dunkl_check(int n);

// Gaudin relations at rational z: G_{m,k,r} vanishing for m > k,
// G_{0,0,r} = e_r(d_2..d_n) with classical Jucys-Murphy d_j, centrality of
// p_{23} theta_1 + p_{13} theta_2 (n=3), Examples display
CheckReport gaudin_check(int n, const std::vector<Rat>& z);

// Fulton universal ring: c_k(n) via the recurrence, g_a[b] solved in terms of
// q and x, reproducing the closed g-displays and c_k(n) = e_k^{(q)}(X_n)
struct FultonReport {
    CheckReport checks;
    std::map<std::pair<int, int>, ExactPoly> g;   // g_a[b]
};
FultonReport fulton_coeffs(int n);

// nabla representation on the free algebra truncated at total degree cap
CheckReport nabla_check(int n, int cap);

// Pfaffian/Hafnian identity and quantum elementary via skew determinant
CheckReport pfaffian_hafnian_check(int n, const std::vector<Rat>& z);

} // namespace ybx

#endif
