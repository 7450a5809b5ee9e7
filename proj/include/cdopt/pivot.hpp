#pragma once

#include <cstdint>
#include <vector>

#include "cdopt/sign_matrix.hpp"

namespace cdopt {

// Exact Gaussian elimination with complete pivoting: at each step the
// largest-magnitude entry of the trailing block is moved to the pivot
// position, ties resolved by row-major scan order with the incumbent
// diagonal entry winning. Pivots are exact rationals.
struct PivotReport {
    int n = 0;
    std::vector<Rational> pivots;     // n values; zero entries past the rank
    std::vector<int> row_perm;        // position k holds the original row index
    std::vector<int> col_perm;
    Rational growth;                  // max |pivot| / |first pivot|
    bool was_cp = false;              // no exchanges were needed
    bool singular = false;
    int rank = 0;
};

PivotReport ge_complete_pivoting(const SignMatrix& m);

// True when complete pivoting never exchanges rows or columns (ties at the
// incumbent position count as no exchange).
bool is_cp(const SignMatrix& m);

// Row/column permutation of m recorded by complete pivoting, so that the
// result is CP with the same pivot magnitudes.
struct CpTransform {
    SignMatrix matrix;
    std::vector<int> row_perm;
    std::vector<int> col_perm;
    bool singular = false;
};
CpTransform cp_transform(const SignMatrix& m);

// For a CP matrix, pivots as ratios of consecutive leading principal minors
// A(j)/A(j-1). A zero intermediate minor leaves the later ratios undefined;
// `defined` counts the leading pivots that are.
struct MinorPivots {
    std::vector<Rational> pivots;
    std::size_t defined = 0;
};
MinorPivots pivots_from_minors(const SignMatrix& m);

Rational growth_factor(const SignMatrix& m);

// Largest |det| over the 2^13 sign completions of the 8x8 matrix whose
// leading 7x7 block is the given core, with the border corners (1,8) and
// (8,1) fixed at +1 and the other 13 border entries free.
struct ExtensionMaxDet {
    BigInt max_det;
    std::uint64_t attained = 0;   // completions reaching the maximum
};
ExtensionMaxDet extension_maxdet_check(const SignMatrix& core);

// det of the order-2t submatrix embedded in an order-4t matrix at the odd
// row and column indices.
BigInt embedded_minor_value(const SignMatrix& m);

}
