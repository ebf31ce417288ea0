#pragma once

#include <string>

#include <json.hpp>

#include "pretzel/params.hpp"

namespace pretzel {

// Value of the q_M invariant: exact where a determination rule applies,
// otherwise the interval [-sigma/2 - 1, -sigma/2 + 1] from the bound
// |q_M + sigma/2| <= 1 (Iida-Taniguchi 2024).
struct QmResult {
    enum class Kind { Exact, Interval };

    Kind kind = Kind::Interval;
    long long value = 0; // meaningful when Exact; then lo == hi == value
    long long lo = 0;
    long long hi = 0;
    std::string rule;     // stable identifier of the rule that fired
    std::string citation; // human-readable provenance

    bool exact() const { return kind == Kind::Exact; }
    nlohmann::json to_json() const; // {kind, value?, lo, hi, rule, citation}
};

// Determines q_M(P(p,q,r)). Rule chain on the canonical form, first hit wins
// (Exact values negate when the input was mirrored):
//   1. ribbon                            -> 0
//   2. p = 0                             -> torus connected-sum additivity
//   3. all odd                           -> 0 / -1 split at min{p,q} <= -r
//   4. squeezed by a constructive rule   -> s/2
//   5. plumbing region, tau nondecreasing-> -sigma/2 (L-space certificate)
//   6. even-case table row               -> per row
//   7. otherwise                         -> interval around -sigma/2
QmResult qm(const PretzelParams& params);

// max(|s/2|, |q_M| when exact, 0) — a lower bound for the 4-ball genus.
long long g4_lower_bound(const PretzelParams& params);

} // namespace pretzel
