#include "pretzel/params.hpp"

#include <algorithm>
#include <cstdlib>

#include "pretzel/errors.hpp"

namespace pretzel {

namespace {

constexpr std::array<std::array<int, 3>, 6> kPerms = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

std::array<long long, 3> apply_perm(const std::array<int, 3>& perm,
                                    const std::array<long long, 3>& t) {
    return {t[perm[0]], t[perm[1]], t[perm[2]]};
}

std::array<int, 3> invert_perm(const std::array<int, 3>& perm) {
    std::array<int, 3> inv{};
    for (int i = 0; i < 3; ++i) inv[perm[i]] = i;
    return inv;
}

bool odd3(long long v) { return v % 2 != 0; }

} // namespace

std::string PretzelParams::str() const {
    return "P(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
}

bool is_knot(long long p, long long q, long long r) {
    int evens = (p % 2 == 0) + (q % 2 == 0) + (r % 2 == 0);
    return evens == 0 || evens == 1;
}

void check_magnitude(long long p, long long q, long long r, long long cap) {
    if (std::llabs(p) > cap || std::llabs(q) > cap || std::llabs(r) > cap)
        throw MagnitudeCapExceeded("parameter magnitude exceeds cap " + std::to_string(cap));
}

PretzelParams make_params(long long p, long long q, long long r, long long cap) {
    check_magnitude(p, q, r, cap);
    if (!is_knot(p, q, r))
        throw NotAKnot(PretzelParams{p, q, r}.str() + " is a link, not a knot");
    return PretzelParams{p, q, r};
}

namespace detail {

bool odd_normal_form(const std::array<long long, 3>& t) {
    return odd3(t[0]) && odd3(t[1]) && odd3(t[2]) && t[0] > 0 && t[1] > 0;
}

bool even_normal_form(const std::array<long long, 3>& t) {
    return t[0] % 2 == 0 && t[0] >= 0 && odd3(t[1]) && odd3(t[2]) && t[1] <= t[2];
}

} // namespace detail

PretzelParams CanonicalForm::recover_input() const {
    auto out = apply_perm(permutation, params.as_array());
    if (mirrored)
        for (auto& v : out) v = -v;
    return PretzelParams{out[0], out[1], out[2]};
}

CanonicalForm canonicalize(const PretzelParams& params) {
    if (!is_knot(params))
        throw NotAKnot(params.str() + " is a link, not a knot");

    const std::array<long long, 3> input = params.as_array();
    bool found = false;
    CanonicalForm best;

    for (int mirror = 0; mirror < 2; ++mirror) {
        std::array<long long, 3> base = input;
        if (mirror)
            for (auto& v : base) v = -v;
        for (const auto& perm : kPerms) {
            auto t = apply_perm(perm, base);
            if (!detail::odd_normal_form(t) && !detail::even_normal_form(t)) continue;
            bool better = !found;
            if (found) {
                auto cur = best.params.as_array();
                if (t < cur) better = true;
                // On an exact tie the unmirrored representative was already
                // seen first (mirror loop order), so keep it.
            }
            if (better) {
                best.params = PretzelParams{t[0], t[1], t[2]};
                best.mirrored = mirror != 0;
                best.permutation = invert_perm(perm);
                found = true;
            }
        }
    }

    if (!found)
        throw InvariantViolation("no normal form found for " + params.str());
    return best;
}

long long determinant(const PretzelParams& params) {
    if (!is_knot(params))
        throw NotAKnot(params.str() + " is a link, not a knot");
    int128 p = params.p, q = params.q, r = params.r;
    int128 d = checked_add(checked_add(checked_mul(p, q), checked_mul(q, r)), checked_mul(r, p));
    return checked_narrow(d < 0 ? -d : d, "determinant");
}

} // namespace pretzel
