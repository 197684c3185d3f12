#ifndef YBX_GROTHCHECK_HPP
#define YBX_GROTHCHECK_HPP

#include <string>
#include <vector>

#include "ybx/groth.hpp"
#include "ybx/poly.hpp"

namespace ybx {

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckLine> lines;
    bool all_pass() const {
        for (auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
    void add(const std::string& name, bool pass, const std::string& detail = "") {
        lines.push_back({name, pass, detail});
    }
};

// Schroeder-Hankel determinant identities:
//   DET|P_{n+k-i-j}(beta)| = (1+beta)^{C(k,2)} G_{pi_k^(n)}(1,..,1)
// q-refinements (Lemma on q-Catalan Hankel determinants, principal
// specializations, the k=n-1 product case), all as exact polynomial identities
CheckReport hankel_identity_check(int n, int k);

// k-dissections of a convex (n+k)-gon against G_{pi_k^(n)}(1): every
// dissection contains the minimal one D_0 (short diagonals (a, a+r), r <= k);
// index i(E) = (n-1)(2k-1) - 1 - |E|.  For k = 1 also the x_i-weighted version.
CheckReport dissection_check(int n, int k);
// the generating function T^{(k)}(beta) itself (for tests)
ExactPoly dissection_gf(int n, int k);

// Fuss-Catalan / Fuss-Narayana / VSASM / CSTCPP specializations
CheckReport fuss_leading_check(int n, int k, int p);

// principal specialization S_{(1,n,n-1,..,2)}(1,q,...,q^{n-1}) = q^C(n-1,3) C_{n-1}(q)
bool eq54_check(int n);

} // namespace ybx

#endif
