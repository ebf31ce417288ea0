#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "pretzel/graded_root.hpp"
#include "pretzel/params.hpp"
#include "pretzel/qm.hpp"
#include "pretzel/squeeze.hpp"

namespace pretzel {

struct ReportFlags {
    bool ribbon = false;
    bool two_bridge = false;
    bool not_quasi_alternating = false;
    // For p = 0: value of the commonly printed closed form evaluated on the
    // input orientation vs the antisymmetry-consistent additivity value.
    std::optional<long long> p0_printed;
    std::optional<long long> p0_consistent;
    bool p0_discrepancy = false;
};

struct TauSummary {
    long long period = 0;
    long long increment = 0;
    long long min_over_period = 0;
    std::optional<long long> first_violation;
    bool nondecreasing = false;
    bool mirror = false; // presentation is of the mirror's double cover
};

// Aggregated invariants of one knot. Construction re-checks the cross-module
// identities (formula signature == diagram oracle, determinant agreement,
// the |q_M + sigma/2| bound, the squeezed-consistency audit) and throws
// InvariantViolation on any mismatch.
struct InvariantReport {
    PretzelParams input;
    CanonicalForm canonical;
    long long det = 0;
    long long sigma = 0;
    long long sigma_oracle = 0;
    long long s = 0;
    QmResult qm;
    SqueezeVerdict squeeze;
    std::optional<TauSummary> tau;
    long long g4_lb = 0;
    ReportFlags flags;

    nlohmann::json to_json() const;
    std::string to_text() const;
};

InvariantReport build_report(long long p, long long q, long long r,
                             long long cap = kDefaultMagnitudeCap);

} // namespace pretzel
