#pragma once

#include <cstdint>
#include <vector>

#include "cdopt/cocycle.hpp"
#include "cdopt/sign_matrix.hpp"

namespace cdopt {

// Delete the even-indexed rows and columns of an order-4t matrix, keeping
// the odd indices 1, 3, ..., 4t-1 in order. Under the group embedding of
// D_{2t} as <a^2, b>, this restricts a cocyclic matrix to the subgroup.
SignMatrix restrict_matrix(const SignMatrix& m);

// Coboundary image of gamma's restriction over D_{2t}, t odd:
// {2i, 2t-2i+1 : 1 <= i <= (t-1)/2}, sorted.
std::vector<int> gamma_restriction_deltas(int t);

// Compensating coboundaries over D_{4t} whose restriction cancels gamma's:
// {4i-1, 4t-4i+1 : 1 <= i <= (t-1)/2}, sorted.
std::vector<int> gamma_compensator_deltas(int t);

// Spec-level counterpart of restrict_matrix for specs over D_{4t} (m = 2t
// with t odd): even coboundaries vanish, odd d maps to (d+1)/2, beta1
// vanishes, beta2 restricts to beta2, gamma restricts to the coboundary set
// above; contributions combine by symmetric difference.
CocycleSpec restrict_spec(const CocycleSpec& spec);

// Specs over D_{4t} whose restriction is a given spec over D_{2t} (t odd,
// carrying beta2): the seed lift plus free choices over the even
// coboundaries, gamma (paired with its compensator) and beta1.
//
// Member index bit layout: bits 0..2t-2 select the even coboundaries
// 2, 4, ..., 4t-2; bit 2t-1 adds gamma with its compensator; bit 2t adds
// beta1. Indices below beta1_off_size() are exactly the beta1-free members.
class ExtensionFamily {
public:
    explicit ExtensionFamily(CocycleSpec tilde);

    int t() const { return tilde_.m; }
    std::uint64_t size() const;            // 2^(2t+1)
    std::uint64_t beta1_off_size() const;  // 2^(2t)
    CocycleSpec member(std::uint64_t index) const;
    const CocycleSpec& seed() const { return tilde_; }

private:
    CocycleSpec tilde_;
    std::vector<int> fixed_odd_;   // lifts of the seed's coboundaries
};

}
