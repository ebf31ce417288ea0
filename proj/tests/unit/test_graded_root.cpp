#include <doctest.h>

#include <random>

#include "pretzel/errors.hpp"
#include "pretzel/graded_root.hpp"

using namespace pretzel;

namespace {

SeifertInvariants presentation_of(long long p, long long q, long long r) {
    return seifert_presentation(PretzelParams{p, q, r}).seifert;
}

} // namespace

TEST_CASE("floor division rounds toward -infinity for every sign combination") {
    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(7, -2) == -4);
    CHECK(floor_div(-7, -2) == 3);
    CHECK(floor_div(6, 3) == 2);
    CHECK(floor_div(-6, 3) == -2);
    CHECK(floor_div(0, -5) == 0);
    CHECK(floor_div(3, -3) == -1);
    // floor(n/q) with q < 0 equals -ceil(n/|q|)
    for (long long n = 0; n <= 30; ++n)
        for (long long q = 2; q <= 7; ++q)
            CHECK(floor_div(n, -q) == -((n + q - 1) / q));
}

TEST_CASE("delta pinned values") {
    auto s = presentation_of(4, -3, 5);
    CHECK(delta(s, 0) == 1);
    CHECK(delta(s, 3) == 0); // 1 + 0 - 1 + 0

    auto s11 = presentation_of(4, -3, 11);
    CHECK(delta(s11, 10) == -1); // 1 + 2 - 4 + 0
}

TEST_CASE("delta agrees with the simplified branch formulas") {
    // branch 1: 1 + floor(n/p) + floor(n/q) + floor(n/r)
    for (long long n = 0; n <= 200; ++n) {
        auto s = presentation_of(4, -3, 5);
        CHECK(delta(s, n) == 1 + floor_div(n, 4) + floor_div(n, -3) + floor_div(n, 5));
        auto s2 = presentation_of(6, -5, 7);
        CHECK(delta(s2, n) == 1 + floor_div(n, 6) + floor_div(n, -5) + floor_div(n, 7));
        // branch 2: 1 + floor(-n/p) + floor(-n/q) + floor(-n/r)
        auto s3 = presentation_of(4, -3, 13);
        CHECK(delta(s3, n) == 1 + floor_div(-n, 4) + floor_div(-n, -3) + floor_div(-n, 13));
    }
}

TEST_CASE("tau sequence pinned values") {
    auto s = presentation_of(4, -3, 5);
    CHECK(tau_sequence(s, 5) == std::vector<long long>{0, 1, 1, 1, 1, 1});
    CHECK(tau_sequence(s, 0) == std::vector<long long>{0});

    auto s11 = presentation_of(4, -3, 11);
    auto tau = tau_sequence(s11, 11);
    CHECK(tau[11] < tau[10]); // dips after the Delta(10) = -1 step
}

TEST_CASE("one-period decision pinned values") {
    auto profile = is_tau_nondecreasing(presentation_of(4, -3, 5));
    CHECK(profile.nondecreasing());
    CHECK(profile.period == 60);
    CHECK(profile.increment == 7); // -e*L = (7/60)*60
    CHECK(profile.min_over_period == 0);

    profile = is_tau_nondecreasing(presentation_of(6, -5, 7));
    CHECK(profile.nondecreasing());
    CHECK(profile.period == 210);

    profile = is_tau_nondecreasing(presentation_of(4, -3, 11));
    CHECK_FALSE(profile.nondecreasing());
    // Delta(7) = 1 + 1 - 3 + 0 = -1 is the earliest violation.
    CHECK(profile.first_violation == 7);
    CHECK(profile.min_over_period == -1);
}

TEST_CASE("NonNegativeEuler rejected") {
    SeifertInvariants s{0, {{2, 1}, {3, 2}, {5, 4}}};
    CHECK(s.euler().sign() > 0);
    CHECK_THROWS_AS(is_tau_nondecreasing(s), NonNegativeEuler);
}

TEST_CASE("quasi-periodicity over [0, 3L) across the region grid") {
    for (long long p = 2; p <= 8; p += 2)
        for (long long q = -9; q <= -3; q += 2)
            for (long long r = 3; r <= 9; r += 2) {
                auto s = presentation_of(p, q, r);
                auto profile = is_tau_nondecreasing(s);
                long long L = profile.period;
                for (long long n = 0; n < 2 * L; ++n)
                    CHECK(delta(s, n + L) - delta(s, n) == profile.increment);
            }
}

TEST_CASE("one-period decision matches a brute-force scan over [0, 10L)") {
    // The full region sweep runs in the acceptance suite.
    for (long long p = 2; p <= 6; p += 2)
        for (long long q = -7; q <= -3; q += 2)
            for (long long r = 3; r <= 7; r += 2) {
                auto s = presentation_of(p, q, r);
                auto profile = is_tau_nondecreasing(s);
                std::optional<long long> brute;
                for (long long n = 0; n < 10 * profile.period && !brute; ++n)
                    if (delta(s, n) < 0) brute = n;
                CHECK(brute == profile.first_violation);
            }
}

TEST_CASE("tau monotonicity over [0, 2L] matches the profile verdict") {
    for (long long p = 2; p <= 8; p += 2)
        for (long long r = 3; r <= 11; r += 2) {
            for (long long q = -11; q <= -3; q += 2) {
                auto s = presentation_of(p, q, r);
                auto profile = is_tau_nondecreasing(s);
                auto tau = tau_sequence(s, 2 * profile.period);
                bool monotone = true;
                for (size_t i = 0; i + 1 < tau.size(); ++i)
                    if (tau[i + 1] < tau[i]) monotone = false;
                CHECK(monotone == profile.nondecreasing());
            }
        }
}

TEST_CASE("offset delta reduces to the base case at zero offsets") {
    auto s = presentation_of(4, -3, 5);
    std::vector<long long> zero(4, 0);
    for (long long n = 0; n <= 100; ++n) CHECK(delta_with_offsets(s, zero, n) == delta(s, n));

    CHECK(delta_with_offsets(s, {1, 0, 0, 0}, 0) == 2);
    // Single shifted floor term: 1 + floor(1/4) + 0 + 0 = 1.
    CHECK(delta_with_offsets(s, {0, 1, 0, 0}, 0) == 1);
    CHECK(delta_with_offsets(s, {0, 4, 0, 0}, 0) == 2);

    CHECK_THROWS_AS(delta_with_offsets(s, {0, 0, 0}, 0), std::invalid_argument);
    CHECK_THROWS_AS(delta_with_offsets(s, {0, -1, 0, 0}, 0), std::invalid_argument);
}

TEST_CASE("empirical: family offset sequences stay non-decreasing on [0, 2L]") {
    // Checks the monotonicity claim for sampled spin^c offsets; evidence, not
    // a proof.
    std::mt19937 rng(987654321);
    for (long long b = 1; b <= 6; ++b)
        for (long long a = b + 1; a <= 2 * b; ++a) {
            auto s = presentation_of(2 * b + 2, -(2 * b + 1), 2 * a + 1);
            auto profile = is_tau_nondecreasing(s);
            REQUIRE(profile.nondecreasing());
            for (int trial = 0; trial < 50; ++trial) {
                std::vector<long long> offsets(4, 0);
                offsets[0] = static_cast<long long>(rng() % 5);
                for (size_t i = 0; i < 3; ++i)
                    offsets[i + 1] =
                        static_cast<long long>(rng() % (2 * s.legs[i].alpha + 1));
                bool ok = true;
                for (long long n = 0; n <= 2 * profile.period && ok; ++n)
                    if (delta_with_offsets(s, offsets, n) < 0) ok = false;
                CHECK(ok);
            }
        }
}
