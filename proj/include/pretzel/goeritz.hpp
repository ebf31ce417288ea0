#pragma once

#include <vector>

#include "pretzel/params.hpp"

namespace pretzel {

// Dense symmetric integer matrix.
struct SymIntMatrix {
    int n = 0;
    std::vector<long long> a; // row-major, n*n, kept symmetric

    explicit SymIntMatrix(int dim = 0) : n(dim), a(static_cast<size_t>(dim) * dim, 0) {}

    long long at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
    void set(int i, int j, long long v) {
        a[static_cast<size_t>(i) * n + j] = v;
        a[static_cast<size_t>(j) * n + i] = v;
    }
};

// Goeritz matrix of the checkerboard coloring of the standard 3-strand
// pretzel diagram (black bigons inside the twist regions, outer white region
// deleted): [[p+q, -q], [-q, q+r]]. |det| equals the knot determinant.
SymIntMatrix goeritz_matrix(const PretzelParams& params);

// Signature (#positive - #negative eigenvalues) by exact symmetric congruence
// diagonalization over the rationals. A zero diagonal pivot with a nonzero
// off-diagonal entry is repaired by the congruence row+column addition, which
// turns the rank-2 hyperbolic block into a +/- pivot pair contributing 0.
int matrix_signature(const SymIntMatrix& m);

// Exact determinant (fraction-free Bareiss elimination).
long long matrix_determinant(const SymIntMatrix& m);

// Gordon-Litherland correction term for the diagram above: the sum of t_i
// over the twist regions whose two strands run in the same vertical
// direction. The orientation is found by tracing the standard diagram; the
// overall sign convention is pinned by signature_oracle(P(1,1,1)) = +2 and
// then has no remaining freedom.
long long gordon_litherland_mu(const PretzelParams& params);

// Diagram-level signature oracle: sig(Goeritz) - mu. Works on the parameters
// exactly as given (no canonicalization), independent of the closed formulas.
long long signature_oracle(const PretzelParams& params);

} // namespace pretzel
