#include "pretzel/graded_root.hpp"

#include "pretzel/errors.hpp"

namespace pretzel {

long long delta(const SeifertInvariants& s, long long n) {
    int128 d = 1;
    d = checked_add(d, -checked_mul(int128(s.e0), n));
    for (const auto& leg : s.legs)
        d = checked_add(d, floor_div(checked_mul(int128(-leg.beta), n), leg.alpha));
    return checked_narrow(d, "Delta(n)");
}

std::vector<long long> tau_sequence(const SeifertInvariants& s, long long N) {
    std::vector<long long> tau;
    tau.reserve(static_cast<size_t>(N) + 1);
    tau.push_back(0);
    int128 acc = 0;
    for (long long n = 0; n < N; ++n) {
        acc = checked_add(acc, delta(s, n));
        tau.push_back(checked_narrow(acc, "tau(n)"));
    }
    return tau;
}

DeltaProfile is_tau_nondecreasing(const SeifertInvariants& s) {
    s.validate();
    const Rational e = s.euler();
    if (e.sign() >= 0)
        throw NonNegativeEuler("orbifold Euler number " + e.str() + " is not negative for " +
                               s.str());

    int128 period = 1;
    for (const auto& leg : s.legs) period = lcm128(period, leg.alpha);
    const long long L = checked_narrow(period, "period");

    // increment = -e * L = -e0*L - sum(beta_i * L / alpha_i), an integer.
    int128 inc = -checked_mul(int128(s.e0), L);
    for (const auto& leg : s.legs)
        inc = checked_add(inc, -checked_mul(int128(leg.beta), L / leg.alpha));

    DeltaProfile profile;
    profile.seifert = s;
    profile.period = L;
    profile.increment = checked_narrow(inc, "increment");

    long long min_seen = 0;
    bool have_min = false;
    for (long long n = 0; n < L; ++n) {
        long long d = delta(s, n);
        if (!have_min || d < min_seen) {
            min_seen = d;
            have_min = true;
        }
        if (d < 0 && !profile.first_violation) profile.first_violation = n;
    }
    profile.min_over_period = min_seen;
    return profile;
}

long long delta_with_offsets(const SeifertInvariants& s,
                             const std::vector<long long>& offsets, long long n) {
    if (offsets.size() != s.legs.size() + 1)
        throw std::invalid_argument("offsets must have length legs + 1");
    for (long long a : offsets)
        if (a < 0) throw std::invalid_argument("offsets must be nonnegative");

    int128 d = checked_add(int128(1), offsets[0]);
    d = checked_add(d, -checked_mul(int128(s.e0), n));
    for (size_t i = 0; i < s.legs.size(); ++i) {
        int128 num = checked_add(checked_mul(int128(-s.legs[i].beta), n), offsets[i + 1]);
        d = checked_add(d, floor_div(num, s.legs[i].alpha));
    }
    return checked_narrow(d, "Delta_A(n)");
}

nlohmann::json DeltaProfile::to_json() const {
    nlohmann::json j{{"L", period},
                     {"increment", increment},
                     {"min", min_over_period},
                     {"nondecreasing", nondecreasing()}};
    j["first_violation"] = first_violation ? nlohmann::json(*first_violation) : nlohmann::json(nullptr);
    return j;
}

} // namespace pretzel
