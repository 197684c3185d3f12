#include "ybx/linop.hpp"

#include <functional>

namespace ybx {

LinOp LinOp::identity(int dim) {
    LinOp r(dim);
    for (int i = 0; i < dim; ++i) r.rows_[i][i] = ExactPoly(1);
    return r;
}

void LinOp::add(int r, int c, const ExactPoly& v) {
    if (v.is_zero()) return;
    auto& cell = rows_[r][c];
    cell += v;
    if (cell.is_zero()) rows_[r].erase(c);
}

LinOp LinOp::operator+(const LinOp& o) const {
    LinOp r = *this;
    for (int i = 0; i < dim_; ++i)
        for (auto& [c, v] : o.rows_[i]) r.add(i, c, v);
    return r;
}

LinOp LinOp::operator-(const LinOp& o) const {
    LinOp r = *this;
    for (int i = 0; i < dim_; ++i)
        for (auto& [c, v] : o.rows_[i]) r.add(i, c, -v);
    return r;
}

LinOp LinOp::operator*(const LinOp& o) const {
    LinOp r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (auto& [k, v] : rows_[i]) {
            for (auto& [j, w] : o.rows_[k]) r.add(i, j, v * w);
        }
    return r;
}

LinOp LinOp::operator*(const ExactPoly& s) const {
    LinOp r(dim_);
    if (s.is_zero()) return r;
    for (int i = 0; i < dim_; ++i)
        for (auto& [c, v] : rows_[i]) r.rows_[i][c] = v * s;
    return r;
}

bool LinOp::is_zero() const {
    for (auto& row : rows_)
        if (!row.empty()) return false;
    return true;
}

LinOp elementary_sym(const std::vector<LinOp>& ops, int k) {
    int dim = ops.empty() ? 0 : ops[0].dim();
    if (k == 0) return LinOp::identity(dim);
    // DP over the prefix: e[j] accumulates ordered products over increasing
    // j-subsets; j descends so each operator is used at most once
    std::vector<LinOp> e(k + 1, LinOp::zero(dim));
    e[0] = LinOp::identity(dim);
    for (const LinOp& op : ops)
        for (int j = k; j >= 1; --j) e[j] = e[j] + e[j - 1] * op;
    return e[k];
}

} // namespace ybx
