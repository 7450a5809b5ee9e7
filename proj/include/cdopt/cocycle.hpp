#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cdopt/sign_matrix.hpp"

namespace cdopt {

// Largest coboundary index usable over D_{2m}: the cocycle basis is
// {d_2..d_{2m-1}, beta2} for odd m and {d_2..d_{2m-2}, beta1, beta2, gamma}
// for even m (d_1 and, for even m, d_{2m-1} are dependent and excluded).
int basis_delta_max(int m);

// Symbolic cocyclic matrix over D_{2m}: a set of elementary coboundaries
// plus representative flags (k1 = beta1, k2 = beta2, k3 = gamma; beta1 and
// gamma exist only for even m).
struct CocycleSpec {
    int m = 1;
    std::vector<int> deltas;   // strictly increasing, within basis range
    bool k1 = false, k2 = false, k3 = false;

    void validate() const;   // throws std::invalid_argument

    // Pointwise product of the two cocycles: symmetric difference of the
    // coboundary sets, XOR of the flags. Both specs must share m.
    CocycleSpec combined(const CocycleSpec& other) const;

    // One line "m=<int>; d=<comma list>; k1=<0|1>; k2=<0|1>; k3=<0|1>",
    // with "d=" left empty for no coboundaries.
    std::string to_text() const;
    static CocycleSpec parse(std::string_view line);

    bool operator==(const CocycleSpec&) const = default;
};

// Matrix of the elementary coboundary of the d-th basis function over D_{2m}:
// entry (i,j) = f(i) f(j) f(ij) with f = -1 exactly at index d.
SignMatrix coboundary_matrix(int m, int d);

// Representative cocycles over D_{2m} (beta1 and gamma need m even).
SignMatrix beta1_matrix(int m);
SignMatrix beta2_matrix(int m);
SignMatrix gamma_matrix(int m);

// Matrix of the spec's cocycle: pointwise product of the selected
// coboundary matrices and representative matrices.
SignMatrix assemble(const CocycleSpec& spec);

// Check psi(gi,gj) psi(gi gj, gk) = psi(gj,gk) psi(gi, gj gk) over all
// triples; M must have order 2m.
bool verify_cocycle(int m, const SignMatrix& M);

}
