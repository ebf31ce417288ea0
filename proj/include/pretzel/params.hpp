#pragma once

#include <array>
#include <string>

#include "pretzel/arith.hpp"

namespace pretzel {

// Largest |p|, |q|, |r| admitted by default. Period scans cost lcm(|p|,|q|,|r|)
// steps, so the cap keeps them bounded; override per call where supported.
inline constexpr long long kDefaultMagnitudeCap = 1'000'000;

// Signed half-twist counts of the three strands of P(p, q, r).
struct PretzelParams {
    long long p = 0;
    long long q = 0;
    long long r = 0;

    std::array<long long, 3> as_array() const { return {p, q, r}; }
    bool operator==(const PretzelParams&) const = default;
    std::string str() const;
};

// P(p,q,r) is a knot iff all three parameters are odd or exactly one is even.
bool is_knot(long long p, long long q, long long r);
inline bool is_knot(const PretzelParams& t) { return is_knot(t.p, t.q, t.r); }

void check_magnitude(long long p, long long q, long long r,
                     long long cap = kDefaultMagnitudeCap);

// Validated constructor: throws NotAKnot / MagnitudeCapExceeded.
PretzelParams make_params(long long p, long long q, long long r,
                          long long cap = kDefaultMagnitudeCap);

// Normal form of a knot triple under the 12 diagram symmetries
// (6 permutations x optional mirror). The normalized triple satisfies
// exactly one of
//   (ODD)  all entries odd, first two positive;
//   (EVEN) first entry even and >= 0, second <= third.
// Among the admissible representatives the lexicographically smallest triple
// wins; ties between mirrored and unmirrored representatives resolve to
// mirrored = false. Applying `permutation` and then (if mirrored) entrywise
// negation to `params` recovers the original input.
struct CanonicalForm {
    PretzelParams params;
    bool mirrored = false;
    std::array<int, 3> permutation = {0, 1, 2};

    PretzelParams recover_input() const;
};

CanonicalForm canonicalize(const PretzelParams& params);

// |pq + qr + rp|, the knot determinant.
long long determinant(const PretzelParams& params);

namespace detail {
bool odd_normal_form(const std::array<long long, 3>& t);
bool even_normal_form(const std::array<long long, 3>& t);
} // namespace detail

} // namespace pretzel
