#include "cdopt/kernels.hpp"

#include <bit>

namespace cdopt::kernels {
namespace {

void xor_rows_scalar(std::uint64_t* acc, const std::uint64_t* mask, int nrows) {
    for (int r = 0; r < nrows; ++r) acc[r] ^= mask[r];
}

bool rows_balanced_scalar(const std::uint64_t* rows, int nrows, int order) {
    const int half = order / 2;
    for (int r = 1; r < nrows; ++r)
        if (std::popcount(rows[r]) != half) return false;
    return true;
}

int row_excess_scalar(const std::uint64_t* rows, int nrows, int order) {
    int re = 0;
    for (int r = 1; r < nrows; ++r) {
        const int s = order - 2 * std::popcount(rows[r]);
        re += s < 0 ? -s : s;
    }
    return re;
}

}

const Ops& scalar() {
    static const Ops ops{"scalar", &xor_rows_scalar, &rows_balanced_scalar,
                         &row_excess_scalar};
    return ops;
}

}
