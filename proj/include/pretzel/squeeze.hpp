#pragma once

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "pretzel/params.hpp"

namespace pretzel {

enum class SqueezeStatus { Squeezed, NotSqueezed, Unknown };

const char* to_string(SqueezeStatus s);

// Verdict with rule provenance. NotSqueezed by invariant separation carries
// the separating pair (q_M, s/2) as a witness.
struct SqueezeVerdict {
    SqueezeStatus status = SqueezeStatus::Unknown;
    std::string rule;
    std::string citation;
    std::optional<std::pair<long long, long long>> witness; // (q_M, s/2)

    nlohmann::json to_json() const; // {status, rule, citation, witness?}
};

// Rule chain, evaluated on the canonical form (squeezedness is mirror- and
// permutation-invariant):
//   R1 all odd                                   -> Squeezed
//   R2 1 in {|p|,|q|,|r|}                        -> Squeezed (2-bridge)
//   R3 p even, p(q+r) <= 0 or qr > 0             -> Squeezed
//   R4 p even, (p+q)(p+r) < 0                    -> NotSqueezed
//   R5 p >= 2 even, q <= -3, r >= 5, q+r > 0, p+q < 0 -> NotSqueezed
//   R6 (p,q,r) = (2b+2, -(2b+1), 2a+1), b+1 <= a <= 2b -> NotSqueezed
//   R7 q_M exact and q_M != s/2                  -> NotSqueezed (witness)
//   R8 otherwise                                 -> Unknown
// Every Squeezed verdict is audited: an exact q_M must equal s/2 there,
// else InvariantViolation is thrown.
SqueezeVerdict classify(const PretzelParams& params);

// (a, b) iff the canonical form is (2b+2, -(2b+1), 2a+1) with b > 0 and
// b+1 <= a <= 2b; nullopt otherwise (including non-knots).
std::optional<std::pair<long long, long long>> family_member(const PretzelParams& params);

// The constructive rules R1-R4 alone, evaluated on a canonical triple.
// Shared with the q_M rule chain (which must not recurse into classify()).
struct BasicRuleHit {
    SqueezeStatus status;
    const char* rule;
    const char* citation;
};
std::optional<BasicRuleHit> basic_squeeze_rule(const PretzelParams& canonical);

} // namespace pretzel
