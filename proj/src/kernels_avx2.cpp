#include "cdopt/kernels.hpp"

#if defined(__x86_64__) && defined(__GNUC__)

#include <immintrin.h>

// Compiled for the generic baseline; AVX2 codegen is enabled per function so
// the binary still runs on older CPUs (dispatch happens in kernels.cpp).
#define CDOPT_TARGET_AVX2 __attribute__((target("avx2")))

namespace cdopt::kernels {
namespace {

// Nibble-LUT popcount, summed per 64-bit lane.
CDOPT_TARGET_AVX2 inline __m256i popcount_epi64(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
    const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo),
                                        _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

CDOPT_TARGET_AVX2 void xor_rows_avx2(std::uint64_t* acc, const std::uint64_t* mask,
                                     int nrows) {
    int r = 0;
    for (; r + 4 <= nrows; r += 4) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + r));
        const __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(mask + r));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + r), _mm256_xor_si256(a, m));
    }
    for (; r < nrows; ++r) acc[r] ^= mask[r];
}

CDOPT_TARGET_AVX2 bool rows_balanced_avx2(const std::uint64_t* rows, int nrows,
                                          int order) {
    const __m256i half = _mm256_set1_epi64x(order / 2);
    int r = 1;
    for (; r + 4 <= nrows; r += 4) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows + r));
        const __m256i eq = _mm256_cmpeq_epi64(popcount_epi64(v), half);
        if (_mm256_movemask_epi8(eq) != -1) return false;
    }
    for (; r < nrows; ++r)
        if (__builtin_popcountll(rows[r]) != order / 2) return false;
    return true;
}

CDOPT_TARGET_AVX2 int row_excess_avx2(const std::uint64_t* rows, int nrows, int order) {
    alignas(32) std::uint64_t pc[4];
    int re = 0;
    int r = 1;
    for (; r + 4 <= nrows; r += 4) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows + r));
        _mm256_store_si256(reinterpret_cast<__m256i*>(pc), popcount_epi64(v));
        for (int k = 0; k < 4; ++k) {
            const int s = order - 2 * static_cast<int>(pc[k]);
            re += s < 0 ? -s : s;
        }
    }
    for (; r < nrows; ++r) {
        const int s = order - 2 * __builtin_popcountll(rows[r]);
        re += s < 0 ? -s : s;
    }
    return re;
}

}

bool avx2_supported() { return __builtin_cpu_supports("avx2"); }

const Ops& avx2() {
    static const Ops ops{"avx2", &xor_rows_avx2, &rows_balanced_avx2, &row_excess_avx2};
    return ops;
}

}

#endif
