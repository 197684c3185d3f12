#ifndef YBX_LINOP_HPP
#define YBX_LINOP_HPP

#include <map>
#include <vector>

#include "ybx/permutation.hpp"
#include "ybx/poly.hpp"

namespace ybx {

// basis of Z[S_n]: permutations in lexicographic one-line order
struct SnBasis {
    int n = 0;
    std::vector<Permutation> elems;
    std::map<Permutation, int> index;
    explicit SnBasis(int n_) : n(n_), elems(all_permutations(n_)) {
        for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = (int)i;
    }
    int dim() const { return (int)elems.size(); }
};

// sparse exact linear operator on the group algebra; rows[r][c] = entry (r,c)
class LinOp {
public:
    LinOp() = default;
    explicit LinOp(int dim) : dim_(dim), rows_(dim) {}
    static LinOp identity(int dim);
    static LinOp zero(int dim) { return LinOp(dim); }

    int dim() const { return dim_; }
    const std::map<int, ExactPoly>& row(int r) const { return rows_[r]; }
    void add(int r, int c, const ExactPoly& v);

    LinOp operator+(const LinOp& o) const;
    LinOp operator-(const LinOp& o) const;
    LinOp operator*(const LinOp& o) const;
    LinOp operator*(const ExactPoly& s) const;
    bool is_zero() const;
    friend bool operator==(const LinOp& a, const LinOp& b) { return (a - b).is_zero(); }

private:
    int dim_ = 0;
    std::vector<std::map<int, ExactPoly>> rows_;
};

// noncommutative elementary polynomial L_k(ops) = sum over increasing index
// subsets of ordered products
LinOp elementary_sym(const std::vector<LinOp>& ops, int k);

} // namespace ybx

#endif
