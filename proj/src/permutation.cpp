#include "ybx/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ybx {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size() + 1, 0);
    for (int v : img_) {
        if (v < 1 || v > (int)img_.size() || seen[v])
            throw std::runtime_error("not a permutation");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::w0(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = n - i;
    return Permutation(std::move(v));
}

Permutation Permutation::transposition(int n, int i, int j) {
    auto w = identity(n);
    std::swap(w.img_[i - 1], w.img_[j - 1]);
    return w;
}

Permutation Permutation::parse(const std::string& s) {
    std::vector<int> v;
    std::string tok;
    for (char c : s) {
        if (c == ',' || c == ' ') {
            if (!tok.empty()) { v.push_back(std::stoi(tok)); tok.clear(); }
        } else tok += c;
    }
    if (!tok.empty()) v.push_back(std::stoi(tok));
    return Permutation(std::move(v));
}

Permutation Permutation::from_code(const std::vector<int>& code) {
    int n = (int)code.size();
    std::vector<int> avail(n);
    std::iota(avail.begin(), avail.end(), 1);
    std::vector<int> img;
    img.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (code[i] < 0 || code[i] >= (int)avail.size())
            throw std::runtime_error("invalid Lehmer code");
        img.push_back(avail[code[i]]);
        avail.erase(avail.begin() + code[i]);
    }
    return Permutation(std::move(img));
}

int Permutation::length() const {
    int l = 0;
    for (size_t i = 0; i < img_.size(); ++i)
        for (size_t j = i + 1; j < img_.size(); ++j)
            if (img_[i] > img_[j]) ++l;
    return l;
}

std::vector<int> Permutation::code() const {
    std::vector<int> c(img_.size(), 0);
    for (size_t i = 0; i < img_.size(); ++i)
        for (size_t j = i + 1; j < img_.size(); ++j)
            if (img_[i] > img_[j]) ++c[i];
    return c;
}

std::vector<int> Permutation::descents() const {
    std::vector<int> d;
    for (int i = 1; i < n(); ++i)
        if (img_[i - 1] > img_[i]) d.push_back(i);
    return d;
}

Permutation Permutation::inverse() const {
    std::vector<int> v(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) v[img_[i] - 1] = (int)i + 1;
    return Permutation(std::move(v));
}

Permutation Permutation::operator*(const Permutation& o) const {
    if (n() != o.n()) throw std::runtime_error("size mismatch");
    std::vector<int> v(img_.size());
    for (int i = 1; i <= n(); ++i) v[i - 1] = (*this)(o(i));
    return Permutation(std::move(v));
}

Permutation Permutation::right_s(int a) const {
    Permutation r = *this;
    std::swap(r.img_[a - 1], r.img_[a]);
    return r;
}

Permutation Permutation::right_t(int i, int j) const {
    Permutation r = *this;
    std::swap(r.img_[i - 1], r.img_[j - 1]);
    return r;
}

Permutation Permutation::shift(int k) const {
    std::vector<int> v(k + img_.size());
    for (int i = 0; i < k; ++i) v[i] = i + 1;
    for (size_t i = 0; i < img_.size(); ++i) v[k + i] = img_[i] + k;
    return Permutation(std::move(v));
}

Permutation Permutation::extend(int m) const {
    if (m < n()) throw std::runtime_error("extend: target smaller than current size");
    std::vector<int> v = img_;
    for (int i = n() + 1; i <= m; ++i) v.push_back(i);
    return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= n(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

bool Permutation::is_grassmannian() const { return descents().size() <= 1; }

bool Permutation::is_dominant() const {
    auto c = code();
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] > c[i - 1]) return false;
    return true;
}

bool Permutation::is_vexillary() const {
    int m = n();
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b)
            for (int c = b + 1; c <= m; ++c)
                for (int d = c + 1; d <= m; ++d)
                    if (img_[b - 1] < img_[a - 1] && img_[a - 1] < img_[d - 1] &&
                        img_[d - 1] < img_[c - 1])
                        return false;
    return true;
}

std::vector<int> Permutation::shape() const {
    auto c = code();
    std::sort(c.rbegin(), c.rend());
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

std::vector<int> Permutation::flag() const {
    auto lam = shape();
    auto c = code();
    std::vector<int> phi(lam.size());
    for (size_t k = 0; k < lam.size(); ++k) {
        int best = -1;
        for (size_t j = 0; j < c.size(); ++j)
            if (c[j] >= lam[k]) best = (int)j + 1;
        phi[k] = best;
    }
    return phi;
}

bool Permutation::bruhat_leq(const Permutation& v) const {
    if (n() != v.n()) throw std::runtime_error("size mismatch");
    // tableau criterion: sorted prefixes of *this entrywise <= those of v
    std::vector<int> a, b;
    for (int i = 1; i <= n(); ++i) {
        a.insert(std::upper_bound(a.begin(), a.end(), img_[i - 1]), img_[i - 1]);
        b.insert(std::upper_bound(b.begin(), b.end(), v.img_[i - 1]), v.img_[i - 1]);
        for (int k = 0; k < i; ++k)
            if (a[k] > b[k]) return false;
    }
    return true;
}

std::vector<int> Permutation::reduced_word() const {
    std::vector<int> w = img_, word;
    // bubble sort; swapping an ascent of the inverse... record simple
    // transpositions applied on positions
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i + 1 < (int)w.size(); ++i)
            if (w[i] > w[i + 1]) {
                std::swap(w[i], w[i + 1]);
                word.push_back(i + 1);
                changed = true;
            }
    }
    // w * s_{word[0]} * ... = id  =>  w = s_{last} * ... * s_{first} read in
    // application order; reversing gives a reduced word for w
    std::reverse(word.begin(), word.end());
    return word;
}

std::string Permutation::str() const {
    std::ostringstream os;
    for (int i = 0; i < n(); ++i) {
        if (i) os << ",";
        os << img_[i];
    }
    return os.str();
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> r;
    do {
        r.push_back(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return r;
}

Permutation dominant_of_shape(const std::vector<int>& lambda) {
    // minimal ambient size: need lambda_i <= n - i for every row
    int n = 1;
    for (size_t i = 0; i < lambda.size(); ++i)
        n = std::max(n, lambda[i] + (int)i + 1);
    n = std::max(n, (int)lambda.size());
    std::vector<int> code = lambda;
    code.resize(n, 0);
    return Permutation::from_code(code);
}

Permutation vexillary_of_shape_flag(const std::vector<int>& lambda,
                                    const std::vector<int>& flag) {
    if (lambda.size() != flag.size()) throw std::runtime_error("shape/flag size mismatch");
    int n = 0;
    for (size_t i = 0; i < lambda.size(); ++i) n = std::max(n, flag[i] + lambda[i]);
    std::vector<int> code(n, 0);
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (i && flag[i] <= flag[i - 1]) throw std::runtime_error("flag must be strictly increasing");
        code[flag[i] - 1] = lambda[i];
    }
    return Permutation::from_code(code);
}

Permutation grassmannian_of_shape(const std::vector<int>& nu, int descent) {
    if ((int)nu.size() > descent) throw std::runtime_error("shape too long for descent");
    std::vector<int> code(descent, 0);
    for (size_t i = 0; i < nu.size(); ++i) code[descent - 1 - i] = nu[i];
    int n = descent + (nu.empty() ? 0 : nu[0]);
    code.resize(n, 0);
    return Permutation::from_code(code);
}

Permutation sorting_permutation(const std::vector<int>& alpha) {
    int n = (int)alpha.size();
    // w^{-1}(i) = position of the i-th entry of the sorted-decreasing alpha,
    // equal entries taken left to right (minimal length)
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return alpha[a] > alpha[b]; });
    std::vector<int> winv(n);
    for (int i = 0; i < n; ++i) winv[i] = idx[i] + 1;
    return Permutation(winv).inverse();
}

} // namespace ybx
