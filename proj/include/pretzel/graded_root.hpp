#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "pretzel/plumbing.hpp"

namespace pretzel {

// Quasi-periodicity data of the Delta-sequence of a Seifert presentation.
// Delta(n + period) = Delta(n) + increment for all n >= 0, with
// period = lcm(alpha_i) and increment = -e * period > 0.
struct DeltaProfile {
    SeifertInvariants seifert;
    long long period = 0;
    long long increment = 0;
    long long min_over_period = 0;
    std::optional<long long> first_violation; // least n with Delta(n) < 0

    bool nondecreasing() const { return !first_violation.has_value(); }
    nlohmann::json to_json() const; // {L, increment, min, first_violation, nondecreasing}
};

// Delta(n) = 1 - e0*n + sum_i floor(-beta_i * n / alpha_i), floor toward
// -infinity. For the pretzel presentations this simplifies to
// 1 + floor(n/p) + floor(n/q) + floor(n/r) (branch 1) and
// 1 + floor(-n/p) + floor(-n/q) + floor(-n/r) (branch 2).
long long delta(const SeifertInvariants& s, long long n);

// tau(0) = 0, tau(n+1) = tau(n) + Delta(n); returns tau(0..N), length N+1.
std::vector<long long> tau_sequence(const SeifertInvariants& s, long long N);

// Decides "Delta(n) >= 0 for all n >= 0" (equivalently: tau non-decreasing)
// by scanning one period. Requires e < 0, else throws NonNegativeEuler.
//
// Why one period suffices: Delta(n + L) = Delta(n) - e*L for L = lcm(alpha_i),
// and -e*L > 0 when e < 0, so along each residue class mod L the minimum is
// attained at the representative in [0, L). Hence Delta >= 0 everywhere iff
// Delta >= 0 on [0, L), and the least violating index overall, if any, is the
// least violating index in [0, L).
DeltaProfile is_tau_nondecreasing(const SeifertInvariants& s);

// Delta with spin^c offsets: A has length legs + 1 (A[0] is the constant
// offset, A[i] shifts leg i):
//   Delta_A(n) = 1 + A0 - e0*n + sum_i floor((-beta_i * n + A_i) / alpha_i).
long long delta_with_offsets(const SeifertInvariants& s,
                             const std::vector<long long>& offsets, long long n);

} // namespace pretzel
