#ifndef YBX_PERMUTATION_HPP
#define YBX_PERMUTATION_HPP

#include <string>
#include <vector>

namespace ybx {

// One-line notation, 1-based: w maps i to images[i-1].
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    static Permutation from_code(const std::vector<int>& code);
    // longest element of S_n
    static Permutation w0(int n);
    // transposition (i j) in S_n
    static Permutation transposition(int n, int i, int j);
    static Permutation parse(const std::string& oneline);

    int n() const { return (int)img_.size(); }
    int operator()(int i) const { return img_[i - 1]; }
    const std::vector<int>& images() const { return img_; }

    int length() const;               // inversion count
    std::vector<int> code() const;    // Lehmer code c_i = #{j>i : w_j < w_i}
    std::vector<int> descents() const;
    Permutation inverse() const;
    // (this*o)(i) = this(o(i))
    Permutation operator*(const Permutation& o) const;
    // right multiplication by adjacent transposition s_a (swap positions a,a+1)
    Permutation right_s(int a) const;
    // right multiplication by transposition (i j)
    Permutation right_t(int i, int j) const;
    Permutation shift(int k) const;   // 1^k x w
    Permutation extend(int m) const;  // embed into S_m, m >= n

    bool is_identity() const;
    bool is_grassmannian() const;     // at most one descent
    bool is_dominant() const;         // code weakly decreasing
    bool is_vexillary() const;        // 2143-avoiding
    // shape = decreasing sort of the code (trailing zeros dropped)
    std::vector<int> shape() const;
    // flag of a vexillary permutation: phi_k = max{ j : c_j >= lambda_k }
    std::vector<int> flag() const;

    // w <= v in Bruhat order (tableau criterion)
    bool bruhat_leq(const Permutation& v) const;

    // any reduced word (as indices of simple transpositions)
    std::vector<int> reduced_word() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

    std::string str() const;

private:
    std::vector<int> img_;
};

// all permutations of S_n in lexicographic one-line order
std::vector<Permutation> all_permutations(int n);

// unique dominant permutation of shape lambda (code = lambda)
Permutation dominant_of_shape(const std::vector<int>& lambda);
// vexillary permutation with given shape (decreasing) and strictly increasing
// flag: code has lambda_i at position phi_i
Permutation vexillary_of_shape_flag(const std::vector<int>& lambda,
                                    const std::vector<int>& flag);
// grassmannian permutation with shape nu (partition) and single descent at d
Permutation grassmannian_of_shape(const std::vector<int>& nu, int descent);
// minimal-length permutation sorting composition a into a partition:
// w_alpha(alpha) = sorted decreasing
Permutation sorting_permutation(const std::vector<int>& alpha);

} // namespace ybx

#endif
