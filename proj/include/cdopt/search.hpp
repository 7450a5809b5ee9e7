#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdopt/cocycle.hpp"
#include "cdopt/restriction.hpp"
#include "cdopt/sign_matrix.hpp"

namespace cdopt {

// One line of a determinant spectrum: Hadamard specs over D_{4t} grouped by
// the determinant (and row excess) of their order-2t restriction.
struct SpectrumRecord {
    int t = 0;
    BigInt det;
    BigInt det_over_pow2;          // det / 2^(2t-1)
    std::uint64_t count = 0;       // Hadamard specs in the group
    std::uint64_t distinct = 0;    // distinct restricted matrices
    int re = 0;                    // row excess of the restrictions
    Rational eff;                  // det / maxdet_bound(t)
    bool operator==(const SpectrumRecord&) const = default;
};

class IntegrityError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Candidate space for Hadamard specs over D_{4t} carrying beta2 and gamma:
// all subsets of the coboundaries {2, ..., 4t-2}; bit p of a mask selects
// coboundary p+2.
std::uint64_t hadamard_space_size(int t);   // 2^(4t-3)
CocycleSpec hadamard_spec_from_mask(int t, std::uint64_t mask);

// First beta1-free extension-family member whose matrix is Hadamard, in
// family index order, or nothing when the seed is not embeddable.
std::optional<CocycleSpec> embed_search(const CocycleSpec& tilde);

// Chunked scan state over the candidate space. Chunks are contiguous
// counter ranges; each completed chunk stores its hit masks in ascending
// order, so merged results do not depend on scan order or worker count.
struct SearchCheckpoint {
    int t = 0;
    std::uint64_t chunk_size = 0;   // power of two dividing the space size
    std::vector<std::uint8_t> done;
    std::vector<std::vector<std::uint64_t>> chunk_hits;

    static SearchCheckpoint fresh(int t, std::uint64_t chunk_size);
    std::uint64_t chunk_count() const { return done.size(); }
    std::uint64_t remaining() const;
    bool complete() const { return remaining() == 0; }
    std::vector<std::uint64_t> all_hits() const;   // ascending masks

    // Versioned little-endian binary with a per-record checksum; load
    // throws IntegrityError on any mismatch or truncation.
    void save(const std::string& path) const;
    static SearchCheckpoint load(const std::string& path);
};

struct RunOptions {
    int workers = 1;
    std::uint64_t max_chunks = UINT64_MAX;   // chunk budget for this call
    std::string persist_path;                // save after every chunk when set
};

// Process pending chunks until done or out of budget.
void run_chunked(SearchCheckpoint& ck, const RunOptions& opts = {});

std::uint64_t default_chunk_size(int t);

// All Hadamard masks at t, ascending. Workers only affect wall time.
std::vector<std::uint64_t> enumerate_hadamard(int t, int workers = 1);

// Group masks into spectrum records (determinant descending, row excess
// ascending) and keep those with efficiency >= kappa.
std::vector<SpectrumRecord> records_from_masks(int t,
                                               const std::vector<std::uint64_t>& masks,
                                               const Rational& kappa);

std::vector<SpectrumRecord> spectrum(int t, const Rational& kappa, int workers = 1);

// Same records by the reverse route: enumerate specs over D_{2t}, filter by
// efficiency, and count the gamma-bearing Hadamard extension members of
// each, so that both routes agree record for record.
std::vector<SpectrumRecord> spectrum_via_embedding(int t, const Rational& kappa);

}
