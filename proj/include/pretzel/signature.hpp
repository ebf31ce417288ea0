#pragma once

#include <optional>

#include "pretzel/params.hpp"

namespace pretzel {

// Knot signature of P(p,q,r) via the closed formulas of Jabuka (2010) plus
// the torus connected-sum rule for p = 0. The input is canonicalized first;
// mirrored inputs negate the result. Always even for knots.
long long signature(const PretzelParams& params);

// Signature in the special range p > 0 even, q < 0 odd, r > 0 odd, r != -q:
//   -(q+r)     if 1/p + 1/q + 1/r > 0,
//   -(q+r) + 2 if 1/p + 1/q + 1/r < 0.
// Must agree with signature() on its whole domain.
long long signature_corollary(const PretzelParams& params);

// Exact sign of 1/p + 1/q + 1/r for nonzero p, q, r. The comparison is done
// in integers as sign(qr + pr + pq) * sign(pqr); never in floating point.
int euler_sum_sign(long long p, long long q, long long r);

// Case formula evaluated directly on the given ordering, no canonicalization:
//   all odd      -> Sign(p+q) + Sign((p+q)(pq+qr+rp))
//   p even, != 0 -> -Sign(q)(|q|-1) - Sign(r)(|r|-1) - Sign(qr(q+r))
//                   + Sign((q+r)(pq+qr+rp))
//   p = 0        -> -Sign(q)(|q|-1) - Sign(r)(|r|-1)
// nullopt when no case applies (even entry not in first position).
std::optional<long long> raw_signature(long long p, long long q, long long r);

} // namespace pretzel
