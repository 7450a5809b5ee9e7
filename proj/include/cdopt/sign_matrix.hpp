#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cdopt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class DihedralGroup;

// Dense +-1 matrix of order n <= 64, one bit-packed word per row (bit j-1
// set means entry (i,j) = -1). Row and column indices are 1-based.
class SignMatrix {
public:
    SignMatrix() = default;
    explicit SignMatrix(int n);   // all +1
    static SignMatrix from_rows(int n, std::vector<std::uint64_t> rows);

    int order() const { return n_; }
    int at(int i, int j) const;
    void set(int i, int j, int value);   // value in {-1, +1}
    void flip(int i, int j);

    std::uint64_t row_bits(int i) const;
    const std::uint64_t* data() const { return rows_.data(); }
    std::uint64_t* data() { return rows_.data(); }
    const std::vector<std::uint64_t>& rows() const { return rows_; }

    int row_sum(int i) const;
    int col_sum(int j) const;

    SignMatrix pointwise(const SignMatrix& other) const;   // entrywise product
    SignMatrix transposed() const;

    bool operator==(const SignMatrix&) const = default;

    // Text form: first line the order, then n lines of n '+'/'-' characters.
    std::string to_text() const;
    static SignMatrix from_text(std::string_view text);

private:
    int n_ = 0;
    std::vector<std::uint64_t> rows_;
    std::size_t idx(int i, int j) const;
};

// Symmetric integer Gram matrix; diagonal entries equal the order.
struct GramMatrix {
    int n = 0;
    std::vector<int> entries;   // row-major n*n

    int at(int i, int j) const {
        return entries[std::size_t(i - 1) * std::size_t(n) + std::size_t(j - 1)];
    }
    bool operator==(const GramMatrix&) const = default;
};

// |det M| by fraction-free (Bareiss) elimination. Dispatches to a 128-bit
// integer fast path for n <= 26 (where intermediates provably fit) and to
// arbitrary precision above that.
BigInt determinant(const SignMatrix& m);

// Arbitrary-precision path regardless of order, for cross-checking the
// dispatch. Same contract as determinant().
BigInt determinant_reference(const SignMatrix& m);

// Absolute leading principal minors A(1), ..., A(n).
std::vector<BigInt> principal_minors(const SignMatrix& m);

// RE(M) = sum over rows 2..n of |row sum|.
int row_excess(const SignMatrix& m);

// Cocyclic Hadamard test: every row after the first sums to zero.
bool hadamard_test(const SignMatrix& m);

GramMatrix gram_rows(const SignMatrix& m);   // M M^T
GramMatrix gram_cols(const SignMatrix& m);   // M^T M

// Gram matrices of a cocyclic matrix computed from the cocycle identity
// instead of the full product:
//   [Gr]_ij = M(k, j) * rowsum(k) with g_k = g_i g_j^{-1},
//   [Gc]_ij = M(i, k) * colsum(k) with g_k = g_i^{-1} g_j.
GramMatrix gram_rows_cocyclic(const DihedralGroup& g, const SignMatrix& m);
GramMatrix gram_cols_cocyclic(const DihedralGroup& g, const SignMatrix& m);

// Largest determinant of a +-1 matrix of order 2t, t odd: (4t-2)(2t-2)^(t-1).
BigInt maxdet_bound(int t);

// det / maxdet_bound(t) as an exact rational in lowest terms.
Rational efficiency(const BigInt& det, int t);

}
