#pragma once

#include <cstdint>
#include <vector>

namespace cdopt::kernels {

// Packed sign-row kernels. A +-1 matrix row is one 64-bit word, bit j set
// meaning entry j+1 equals -1; bits at and above the order stay zero.
//
// These are the inner loops of the Hadamard scans (2^25..2^33 candidates per
// run), so each operation has a scalar reference implementation and an AVX2
// variant selected at runtime. Variants must agree bit-for-bit on every
// input; test_kernels.cpp checks that across implementations.
struct Ops {
    const char* name;
    // acc[r] ^= mask[r] for r in [0, nrows)
    void (*xor_rows)(std::uint64_t* acc, const std::uint64_t* mask, int nrows);
    // true iff popcount(rows[r]) == order/2 for every r in [1, nrows)
    bool (*rows_balanced)(const std::uint64_t* rows, int nrows, int order);
    // sum over r in [1, nrows) of |order - 2*popcount(rows[r])|
    int (*row_excess)(const std::uint64_t* rows, int nrows, int order);
};

const Ops& scalar();

#if defined(__x86_64__) && defined(__GNUC__)
const Ops& avx2();
bool avx2_supported();
#endif

// Implementation picked once at startup: AVX2 when the CPU has it, else
// scalar. Set CDOPT_KERNELS=scalar (or avx2) to override.
const Ops& active();

// Every implementation runnable on this machine.
std::vector<const Ops*> available();

}
