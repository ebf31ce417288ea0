#include "pretzel/rasmussen.hpp"

#include <algorithm>
#include <cstdlib>

#include "pretzel/errors.hpp"

namespace pretzel {

long long torus_2n_slice_torus(long long n) {
    // f(T_{2,n}); antisymmetry-consistent on both signs (f(-K) = -f(K)).
    return n > 0 ? (n - 1) / 2 : (n + 1) / 2;
}

long long printed_p0_slice_torus(long long q, long long r) {
    if (checked_mul(int128(q), r) > 0) return std::llabs(q + r - 2) / 2;
    return std::llabs(q - r) / 2;
}

bool is_ribbon(const PretzelParams& params) {
    if (!is_knot(params))
        throw NotAKnot(params.str() + " is a link, not a knot");
    long long p = params.p, q = params.q, r = params.r;
    if (p + q == 0 || q + r == 0 || r + p == 0) return true;
    // {1, a, -a-4} as a multiset: one entry equals 1 and the other two sum to -4.
    auto t = params.as_array();
    for (int i = 0; i < 3; ++i) {
        if (t[i] != 1) continue;
        long long x = t[(i + 1) % 3], y = t[(i + 2) % 3];
        if (x + y == -4) return true;
    }
    return false;
}

std::optional<long long> raw_s(long long p, long long q, long long r) {
    bool podd = p % 2 != 0, qodd = q % 2 != 0, rodd = r % 2 != 0;
    if (podd && qodd && rodd) {
        if (!(p > 0 && q > 0)) return std::nullopt;
        return std::min(p, q) <= -r ? 0 : -2;
    }
    if (podd || !qodd || !rodd) return std::nullopt;
    if (p == 0)
        return 2 * (torus_2n_slice_torus(q) + torus_2n_slice_torus(r));
    if (!(p > 0 && q <= r)) return std::nullopt;
    // Even-case rows, tried strictly in the published order.
    if (q > 0 && r > 0) return q + r - 2;
    if (q < 0 && r > 0 && q + r <= 0) return q + r;
    if (q < 0 && r > 0 && q + r > 0 && p + q > 0) return q + r - 2;
    if (q < 0 && r > 0 && q + r > 0 && p + q < 0) return q + r;
    if (q < 0 && r < 0) return q + r;
    throw Unsupported("no published s-invariant row applies to " +
                      PretzelParams{p, q, r}.str());
}

long long s_invariant(const PretzelParams& params) {
    CanonicalForm c = canonicalize(params);
    auto raw = raw_s(c.params.p, c.params.q, c.params.r);
    if (!raw)
        throw InvariantViolation("canonical form of " + params.str() + " matched no s-table case");
    return c.mirrored ? -*raw : *raw;
}

} // namespace pretzel
