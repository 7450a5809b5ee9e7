#include "cdopt/sign_matrix.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "cdopt/dihedral.hpp"

namespace cdopt {

namespace {

std::uint64_t row_mask(int n) {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

BigInt to_bigint(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                              : static_cast<unsigned __int128>(v);
    BigInt r = static_cast<std::uint64_t>(u >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(u);
    return neg ? BigInt(-r) : r;
}

// Fraction-free elimination on the leading k x k block; every intermediate
// value is a minor of the block, so for k <= 26 the Hadamard bound keeps the
// update's cross products inside 128 bits.
template <class I>
I bareiss_abs_det(const SignMatrix& m, int k) {
    std::vector<I> a(std::size_t(k) * k);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            a[std::size_t(i - 1) * k + (j - 1)] = m.at(i, j);

    I prev = 1;
    for (int s = 0; s < k - 1; ++s) {
        if (a[std::size_t(s) * k + s] == 0) {
            int p = -1;
            for (int r = s + 1; r < k; ++r)
                if (a[std::size_t(r) * k + s] != 0) { p = r; break; }
            if (p < 0) return 0;
            for (int c = s; c < k; ++c)
                std::swap(a[std::size_t(s) * k + c], a[std::size_t(p) * k + c]);
        }
        const I piv = a[std::size_t(s) * k + s];
        for (int r = s + 1; r < k; ++r) {
            const I lead = a[std::size_t(r) * k + s];
            for (int c = s + 1; c < k; ++c) {
                I& x = a[std::size_t(r) * k + c];
                x = (x * piv - lead * a[std::size_t(s) * k + c]) / prev;
            }
        }
        prev = piv;
    }
    I d = a[std::size_t(k - 1) * k + (k - 1)];
    return d < 0 ? I(-d) : d;
}

BigInt abs_det(const SignMatrix& m, int k) {
    if (k <= 26) return to_bigint(bareiss_abs_det<__int128>(m, k));
    return bareiss_abs_det<BigInt>(m, k);
}

}

SignMatrix::SignMatrix(int n) : n_(n) {
    if (n < 1 || n > 64)
        throw std::invalid_argument("matrix order must be in [1, 64]");
    rows_.assign(std::size_t(n), 0);
}

SignMatrix SignMatrix::from_rows(int n, std::vector<std::uint64_t> rows) {
    SignMatrix m(n);
    if (rows.size() != std::size_t(n))
        throw std::invalid_argument("row count does not match order");
    for (std::uint64_t r : rows)
        if (r & ~row_mask(n))
            throw std::invalid_argument("row bits beyond matrix order");
    m.rows_ = std::move(rows);
    return m;
}

std::size_t SignMatrix::idx(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        throw std::invalid_argument("matrix index out of range");
    return std::size_t(i - 1);
}

int SignMatrix::at(int i, int j) const {
    return (rows_[idx(i, j)] >> (j - 1)) & 1 ? -1 : 1;
}

void SignMatrix::set(int i, int j, int value) {
    if (value != 1 && value != -1)
        throw std::invalid_argument("entries must be +1 or -1");
    const std::size_t r = idx(i, j);
    const std::uint64_t bit = std::uint64_t{1} << (j - 1);
    if (value == -1)
        rows_[r] |= bit;
    else
        rows_[r] &= ~bit;
}

void SignMatrix::flip(int i, int j) {
    rows_[idx(i, j)] ^= std::uint64_t{1} << (j - 1);
}

std::uint64_t SignMatrix::row_bits(int i) const { return rows_[idx(i, 1)]; }

int SignMatrix::row_sum(int i) const {
    return n_ - 2 * std::popcount(rows_[idx(i, 1)]);
}

int SignMatrix::col_sum(int j) const {
    idx(1, j);
    const std::uint64_t bit = std::uint64_t{1} << (j - 1);
    int neg = 0;
    for (std::uint64_t r : rows_) neg += (r & bit) != 0;
    return n_ - 2 * neg;
}

SignMatrix SignMatrix::pointwise(const SignMatrix& other) const {
    if (other.n_ != n_) throw std::invalid_argument("order mismatch");
    SignMatrix out(n_);
    for (int r = 0; r < n_; ++r) out.rows_[r] = rows_[r] ^ other.rows_[r];
    return out;
}

SignMatrix SignMatrix::transposed() const {
    SignMatrix out(n_);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            if (at(i, j) < 0) out.flip(j, i);
    return out;
}

std::string SignMatrix::to_text() const {
    std::string s = std::to_string(n_);
    s.push_back('\n');
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) s.push_back(at(i, j) < 0 ? '-' : '+');
        s.push_back('\n');
    }
    return s;
}

SignMatrix SignMatrix::from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("empty matrix text");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    int n = 0;
    try {
        std::size_t pos = 0;
        n = std::stoi(line, &pos);
        if (pos != line.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("matrix text must start with the order");
    }
    SignMatrix m(n);
    for (int i = 1; i <= n; ++i) {
        if (!std::getline(in, line))
            throw std::invalid_argument("matrix text ends early");
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.size() != std::size_t(n))
            throw std::invalid_argument("matrix row has wrong length");
        for (int j = 1; j <= n; ++j) {
            if (line[j - 1] == '-')
                m.flip(i, j);
            else if (line[j - 1] != '+')
                throw std::invalid_argument("matrix entries must be '+' or '-'");
        }
    }
    return m;
}

BigInt determinant(const SignMatrix& m) { return abs_det(m, m.order()); }

BigInt determinant_reference(const SignMatrix& m) {
    return bareiss_abs_det<BigInt>(m, m.order());
}

std::vector<BigInt> principal_minors(const SignMatrix& m) {
    std::vector<BigInt> out;
    out.reserve(m.order());
    for (int k = 1; k <= m.order(); ++k) out.push_back(abs_det(m, k));
    return out;
}

int row_excess(const SignMatrix& m) {
    int re = 0;
    for (int i = 2; i <= m.order(); ++i) {
        const int s = m.row_sum(i);
        re += s < 0 ? -s : s;
    }
    return re;
}

bool hadamard_test(const SignMatrix& m) {
    for (int i = 2; i <= m.order(); ++i)
        if (m.row_sum(i) != 0) return false;
    return true;
}

namespace {

GramMatrix gram_of_rows(const SignMatrix& m) {
    const int n = m.order();
    GramMatrix g{n, std::vector<int>(std::size_t(n) * n)};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            g.entries[std::size_t(i - 1) * n + (j - 1)] =
                n - 2 * std::popcount(m.row_bits(i) ^ m.row_bits(j));
    return g;
}

}

GramMatrix gram_rows(const SignMatrix& m) { return gram_of_rows(m); }

GramMatrix gram_cols(const SignMatrix& m) { return gram_of_rows(m.transposed()); }

GramMatrix gram_rows_cocyclic(const DihedralGroup& g, const SignMatrix& m) {
    const int n = m.order();
    if (n != g.order()) throw std::invalid_argument("order mismatch");
    std::vector<int> rowsum(n + 1);
    for (int i = 1; i <= n; ++i) rowsum[i] = m.row_sum(i);
    GramMatrix out{n, std::vector<int>(std::size_t(n) * n)};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const int k = g.mul(i, g.inverse(j));
            out.entries[std::size_t(i - 1) * n + (j - 1)] = m.at(k, j) * rowsum[k];
        }
    return out;
}

GramMatrix gram_cols_cocyclic(const DihedralGroup& g, const SignMatrix& m) {
    const int n = m.order();
    if (n != g.order()) throw std::invalid_argument("order mismatch");
    std::vector<int> colsum(n + 1);
    for (int j = 1; j <= n; ++j) colsum[j] = m.col_sum(j);
    GramMatrix out{n, std::vector<int>(std::size_t(n) * n)};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const int k = g.mul(g.inverse(i), j);
            out.entries[std::size_t(i - 1) * n + (j - 1)] = m.at(i, k) * colsum[k];
        }
    return out;
}

BigInt maxdet_bound(int t) {
    if (t < 1 || t % 2 == 0)
        throw std::invalid_argument("t must be odd and positive");
    BigInt b = 4 * t - 2;
    for (int i = 1; i < t; ++i) b *= 2 * t - 2;
    return b;
}

Rational efficiency(const BigInt& det, int t) {
    if (det < 0) throw std::invalid_argument("determinant must be non-negative");
    return Rational(det, maxdet_bound(t));
}

}
