#pragma once

#include <optional>

#include "pretzel/params.hpp"

namespace pretzel {

// Rasmussen invariant s(P(p,q,r)) from the published case formulas
// (R. Suzuki 2010 for the odd case, Lewark 2014 for the even case) and
// connected-sum additivity for p = 0. Canonicalizes first, negates when
// mirrored. Even integer; s/2 is the slice-torus normalization.
long long s_invariant(const PretzelParams& params);

// Slice-torus value of the (2,n) torus knot, antisymmetry-consistent:
// (n-1)/2 for n > 0 and (n+1)/2 for n < 0.
long long torus_2n_slice_torus(long long n);

// Table evaluation on the given ordering without canonicalization. Defined
// for: all odd with p,q > 0; p > 0 even with q <= r; p = 0. nullopt
// otherwise. Rows are tried strictly in the published order.
std::optional<long long> raw_s(long long p, long long q, long long r);

// The commonly printed closed form for the p = 0 connected sum
// (|q+r-2|/2 for qr > 0, |q-r|/2 for qr < 0), kept for discrepancy
// reporting: it fails mirror antisymmetry outside q, r > 0.
long long printed_p0_slice_torus(long long q, long long r);

// True iff P(p,q,r) is ribbon: {1, a, -a-4} = {p, q, r} for some integer a,
// or (p+q)(q+r)(r+p) = 0 (Greene-Jabuka 2011, Lecuona 2015).
bool is_ribbon(const PretzelParams& params);

} // namespace pretzel
