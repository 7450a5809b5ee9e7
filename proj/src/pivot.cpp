#include "cdopt/pivot.hpp"

#include <numeric>
#include <stdexcept>

#include "cdopt/restriction.hpp"

namespace cdopt {

namespace {

BigInt big_abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

}

PivotReport ge_complete_pivoting(const SignMatrix& m) {
    const int n = m.order();
    PivotReport rep;
    rep.n = n;
    rep.pivots.assign(n, Rational(0));
    rep.row_perm.resize(n);
    rep.col_perm.resize(n);
    std::iota(rep.row_perm.begin(), rep.row_perm.end(), 1);
    std::iota(rep.col_perm.begin(), rep.col_perm.end(), 1);
    rep.was_cp = true;
    rep.rank = n;

    // Fraction-free elimination: after step s the trailing entries share the
    // denominator d_s, so integer magnitude comparison is the true complete
    // pivoting comparison, and the s-th pivot is |d_s| / |d_{s-1}|.
    std::vector<BigInt> a(std::size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[std::size_t(i) * n + j] = m.at(i + 1, j + 1);
    auto e = [&](int r, int c) -> BigInt& { return a[std::size_t(r) * n + c]; };

    BigInt prev = 1;
    for (int s = 0; s < n; ++s) {
        int br = s, bc = s;
        BigInt bv = big_abs(e(s, s));
        for (int r = s; r < n; ++r)
            for (int c = s; c < n; ++c) {
                BigInt v = big_abs(e(r, c));
                if (v > bv) { br = r; bc = c; bv = std::move(v); }
            }
        if (bv == 0) {
            rep.singular = true;
            rep.rank = s;
            break;
        }
        if (br != s || bc != s) {
            rep.was_cp = false;
            if (br != s) {
                for (int c = 0; c < n; ++c) std::swap(e(s, c), e(br, c));
                std::swap(rep.row_perm[s], rep.row_perm[br]);
            }
            if (bc != s) {
                for (int r = 0; r < n; ++r) std::swap(e(r, s), e(r, bc));
                std::swap(rep.col_perm[s], rep.col_perm[bc]);
            }
        }
        rep.pivots[s] = Rational(bv, big_abs(prev));
        const BigInt piv = e(s, s);
        for (int r = s + 1; r < n; ++r) {
            const BigInt lead = e(r, s);
            for (int c = s + 1; c < n; ++c)
                e(r, c) = (e(r, c) * piv - lead * e(s, c)) / prev;
        }
        prev = piv;
    }

    Rational mx(0);
    for (const Rational& p : rep.pivots)
        if (p > mx) mx = p;
    if (rep.pivots[0] != 0) rep.growth = mx / rep.pivots[0];
    return rep;
}

bool is_cp(const SignMatrix& m) { return ge_complete_pivoting(m).was_cp; }

CpTransform cp_transform(const SignMatrix& m) {
    const PivotReport rep = ge_complete_pivoting(m);
    const int n = m.order();
    SignMatrix out(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (m.at(rep.row_perm[i - 1], rep.col_perm[j - 1]) < 0) out.flip(i, j);
    return CpTransform{std::move(out), rep.row_perm, rep.col_perm, rep.singular};
}

MinorPivots pivots_from_minors(const SignMatrix& m) {
    if (!is_cp(m))
        throw std::invalid_argument("pivots from minors require a CP matrix");
    const std::vector<BigInt> minors = principal_minors(m);
    MinorPivots out;
    BigInt prev = 1;
    for (const BigInt& mn : minors) {
        out.pivots.emplace_back(mn, prev);
        if (mn == 0) break;
        prev = mn;
    }
    out.defined = out.pivots.size();
    return out;
}

Rational growth_factor(const SignMatrix& m) {
    return ge_complete_pivoting(m).growth;
}

ExtensionMaxDet extension_maxdet_check(const SignMatrix& core) {
    if (core.order() != 7)
        throw std::invalid_argument("extension check needs a 7x7 core");
    SignMatrix work(8);
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j)
            if (core.at(i, j) < 0) work.flip(i, j);

    ExtensionMaxDet result{BigInt(0), 0};
    for (std::uint32_t mask = 0; mask < (1u << 13); ++mask) {
        // bits 0..5: column 8 rows 2..7; bits 6..12: row 8 columns 2..8
        for (int i = 2; i <= 7; ++i)
            work.set(i, 8, (mask >> (i - 2)) & 1 ? 1 : -1);
        for (int j = 2; j <= 8; ++j)
            work.set(8, j, (mask >> (4 + j)) & 1 ? 1 : -1);
        const BigInt d = determinant(work);
        if (d > result.max_det) {
            result.max_det = d;
            result.attained = 1;
        } else if (d == result.max_det) {
            ++result.attained;
        }
    }
    return result;
}

BigInt embedded_minor_value(const SignMatrix& m) {
    return determinant(restrict_matrix(m));
}

}
