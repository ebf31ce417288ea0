#include "pretzel/squeeze.hpp"

#include <cstdlib>

#include "pretzel/errors.hpp"
#include "pretzel/qm.hpp"
#include "pretzel/rasmussen.hpp"

namespace pretzel {

const char* to_string(SqueezeStatus s) {
    switch (s) {
        case SqueezeStatus::Squeezed: return "squeezed";
        case SqueezeStatus::NotSqueezed: return "not_squeezed";
        case SqueezeStatus::Unknown: return "unknown";
    }
    return "unknown";
}

std::optional<BasicRuleHit> basic_squeeze_rule(const PretzelParams& t) {
    const long long p = t.p, q = t.q, r = t.r;
    if (p % 2 != 0 && q % 2 != 0 && r % 2 != 0)
        return BasicRuleHit{SqueezeStatus::Squeezed, "R1",
                            "odd 3-pretzels are squeezed (Feller-Lewark-Lobb 2024, Example 2.13)"};
    if (std::llabs(p) == 1 || std::llabs(q) == 1 || std::llabs(r) == 1)
        return BasicRuleHit{SqueezeStatus::Squeezed, "R2",
                            "2-bridge, hence alternating (Goodrick 1972) and squeezed "
                            "(Feller-Lewark-Lobb 2024)"};
    if (p % 2 == 0 && (checked_mul(int128(p), q + r) <= 0 || checked_mul(int128(q), r) > 0))
        return BasicRuleHit{SqueezeStatus::Squeezed, "R3",
                            "p(q+r) <= 0 or qr > 0: squeezed (Feller-Lewark-Lobb 2024)"};
    if (p % 2 == 0 && checked_mul(int128(p + q), p + r) < 0)
        return BasicRuleHit{SqueezeStatus::NotSqueezed, "R4",
                            "(p+q)(p+r) < 0: not squeezed (Feller-Lewark-Lobb 2024)"};
    return std::nullopt;
}

std::optional<std::pair<long long, long long>> family_member(const PretzelParams& params) {
    if (!is_knot(params)) return std::nullopt;
    PretzelParams t = canonicalize(params).params;
    if (t.p < 4 || t.p % 2 != 0) return std::nullopt;
    if (t.p + t.q != 1) return std::nullopt; // q = -(p-1) = -(2b+1)
    if (t.r < 3 || t.r % 2 == 0) return std::nullopt;
    long long b = (t.p - 2) / 2;
    long long a = (t.r - 1) / 2;
    if (b > 0 && b + 1 <= a && a <= 2 * b) return std::make_pair(a, b);
    return std::nullopt;
}

namespace {

SqueezeVerdict verdict(SqueezeStatus status, std::string rule, std::string citation) {
    SqueezeVerdict v;
    v.status = status;
    v.rule = std::move(rule);
    v.citation = std::move(citation);
    return v;
}

// Audit: a squeezed knot has every slice-torus invariant equal, so an exact
// q_M must coincide with s/2. Runs on every Squeezed verdict.
void audit_squeezed(const PretzelParams& t) {
    QmResult res = qm(t);
    if (res.exact() && res.value != s_invariant(t) / 2)
        throw InvariantViolation("squeezed verdict for " + t.str() + " but q_M = " +
                                 std::to_string(res.value) + " differs from s/2 = " +
                                 std::to_string(s_invariant(t) / 2));
}

} // namespace

SqueezeVerdict classify(const PretzelParams& params) {
    CanonicalForm c = canonicalize(params);
    const PretzelParams& t = c.params;
    const long long p = t.p, q = t.q, r = t.r;

    if (auto hit = basic_squeeze_rule(t)) {
        if (hit->status == SqueezeStatus::Squeezed) audit_squeezed(t);
        return verdict(hit->status, hit->rule, hit->citation);
    }

    if (p >= 2 && p % 2 == 0 && q <= -3 && r >= 5 && q + r > 0 && p + q < 0)
        return verdict(SqueezeStatus::NotSqueezed, "R5",
                       "s vs sl3 Rasmussen invariant separation (Lewark 2014)");

    if (family_member(t)) {
        QmResult res = qm(t);
        if (!res.exact())
            throw InvariantViolation("family member " + t.str() + " without exact q_M");
        SqueezeVerdict v = verdict(SqueezeStatus::NotSqueezed, "R6",
                                   "family (2b+2,-(2b+1),2a+1), b+1 <= a <= 2b: q_M = a-b from "
                                   "the L-space certificate differs from s/2 = a-b-1");
        v.witness = std::make_pair(res.value, s_invariant(t) / 2);
        return v;
    }

    if (QmResult res = qm(t); res.exact() && res.value != s_invariant(t) / 2) {
        SqueezeVerdict v = verdict(SqueezeStatus::NotSqueezed, "R7",
                                   "slice-torus separation: q_M != s/2 (contrapositive of "
                                   "Feller-Lewark-Lobb 2024, Lemma 3.5)");
        v.witness = std::make_pair(res.value, s_invariant(t) / 2);
        return v;
    }

    return verdict(SqueezeStatus::Unknown, "R8", "no applicable criterion; squeezedness open");
}

nlohmann::json SqueezeVerdict::to_json() const {
    nlohmann::json j{{"status", to_string(status)}, {"rule", rule}, {"citation", citation}};
    j["witness"] = witness ? nlohmann::json{witness->first, witness->second} : nlohmann::json(nullptr);
    return j;
}

} // namespace pretzel
