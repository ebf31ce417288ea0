#include "pretzel/signature.hpp"

#include <cstdlib>

#include "pretzel/errors.hpp"

namespace pretzel {

namespace {

int128 pqr_sum(int128 p, int128 q, int128 r) {
    // pq + qr + rp
    return checked_add(checked_add(checked_mul(p, q), checked_mul(q, r)), checked_mul(r, p));
}

long long jabuka_all_odd(int128 p, int128 q, int128 r) {
    return sign3(p + q) + sign3(checked_mul(p + q, pqr_sum(p, q, r)));
}

long long jabuka_even(int128 p, int128 q, int128 r) {
    // p even, p != 0
    long long aq = std::llabs(static_cast<long long>(q));
    long long ar = std::llabs(static_cast<long long>(r));
    int128 sig = -sign3(q) * (aq - 1) - sign3(r) * (ar - 1);
    sig -= sign3(checked_mul(checked_mul(q, r), q + r));
    sig += sign3(checked_mul(q + r, pqr_sum(p, q, r)));
    return static_cast<long long>(sig);
}

long long torus_sum_p0(int128 q, int128 r) {
    long long aq = std::llabs(static_cast<long long>(q));
    long long ar = std::llabs(static_cast<long long>(r));
    return -sign3(q) * (aq - 1) - sign3(r) * (ar - 1);
}

} // namespace

int euler_sum_sign(long long p, long long q, long long r) {
    // sign(1/p + 1/q + 1/r) = sign(qr + pr + pq) * sign(pqr)
    return sign3(pqr_sum(p, q, r)) * sign3(checked_mul(checked_mul(int128(p), q), r));
}

std::optional<long long> raw_signature(long long p, long long q, long long r) {
    bool podd = p % 2 != 0, qodd = q % 2 != 0, rodd = r % 2 != 0;
    if (podd && qodd && rodd) return jabuka_all_odd(p, q, r);
    if (!podd && qodd && rodd) {
        if (p == 0) return torus_sum_p0(q, r);
        return jabuka_even(p, q, r);
    }
    return std::nullopt;
}

long long signature(const PretzelParams& params) {
    CanonicalForm c = canonicalize(params);
    auto raw = raw_signature(c.params.p, c.params.q, c.params.r);
    if (!raw)
        throw InvariantViolation("canonical form of " + params.str() + " matched no signature case");
    return c.mirrored ? -*raw : *raw;
}

long long signature_corollary(const PretzelParams& params) {
    long long p = params.p, q = params.q, r = params.r;
    if (!(p > 0 && p % 2 == 0 && q < 0 && q % 2 != 0 && r > 0 && r % 2 != 0 && r != -q))
        throw PreconditionViolated(
            "signature_corollary requires p > 0 even, q < 0 odd, r > 0 odd, r != -q; got " +
            params.str());
    int es = euler_sum_sign(p, q, r);
    if (es > 0) return -(q + r);
    if (es < 0) return -(q + r) + 2;
    // Impossible: q, r odd and p even force 1/p + 1/q + 1/r != 0.
    throw InvariantViolation("euler sum vanished on corollary domain for " + params.str());
}

} // namespace pretzel
