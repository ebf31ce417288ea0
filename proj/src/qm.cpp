#include "pretzel/qm.hpp"

#include <algorithm>
#include <cstdlib>

#include "pretzel/errors.hpp"
#include "pretzel/graded_root.hpp"
#include "pretzel/plumbing.hpp"
#include "pretzel/rasmussen.hpp"
#include "pretzel/signature.hpp"
#include "pretzel/squeeze.hpp"

namespace pretzel {

namespace {

QmResult exact(long long v, std::string rule, std::string citation) {
    QmResult res;
    res.kind = QmResult::Kind::Exact;
    res.value = res.lo = res.hi = v;
    res.rule = std::move(rule);
    res.citation = std::move(citation);
    return res;
}

// Is the canonical triple inside the range where the L-space conclusion is
// already tabulated? Used only to phrase the provenance string.
std::string lspace_citation(const PretzelParams& t) {
    std::string base =
        "tau-sequence nondecreasing over one period, so the double branched cover is an "
        "L-space for the invariant spin^c structure (Nemethi 2005); then q_M = -sigma/2 "
        "(Iida-Taniguchi 2024)";
    if (family_member(t))
        return base + "; (2b+2,-(2b+1),2a+1) family certificate";
    if (t.p >= 2 && t.q <= -3 && t.r >= 5 && t.q + t.r > 0 && t.p + t.q < 0)
        return base + "; p+q < 0 range";
    return base + "; beyond published tables - verified via L-space certificate";
}

// Rule chain on the canonical representative.
QmResult qm_canonical(const PretzelParams& t) {
    const long long p = t.p, q = t.q, r = t.r;

    if (is_ribbon(t))
        return exact(0, "ribbon",
                     "ribbon pretzel (Greene-Jabuka 2011; Lecuona 2015): slice, all "
                     "slice-torus invariants vanish");

    if (p == 0)
        return exact(torus_2n_slice_torus(q) + torus_2n_slice_torus(r), "connected-sum",
                     "P(0,q,r) = T(2,q) # T(2,r); slice-torus additivity with "
                     "antisymmetry-consistent torus values");

    if (p % 2 != 0 && q % 2 != 0 && r % 2 != 0)
        return exact(std::min(p, q) <= -r ? 0 : -1, "odd",
                     "odd pretzels are squeezed (Feller-Lewark-Lobb 2024), value from the "
                     "Rasmussen table (R. Suzuki 2010)");

    if (auto hit = basic_squeeze_rule(t); hit && hit->status == SqueezeStatus::Squeezed)
        return exact(s_invariant(t) / 2, std::string("squeezed-") + hit->rule,
                     "squeezed knots: all slice-torus invariants agree "
                     "(Feller-Lewark-Lobb 2024, Lemma 3.5); value is s/2");

    const long long sigma = signature(t);

    if (in_plumbing_region(t)) {
        SeifertPresentation pres = seifert_presentation(t);
        DeltaProfile profile = is_tau_nondecreasing(pres.seifert);
        // Branch 2 presents the mirror's double cover; the mirrored theorem
        // value -sigma(-K)/2 negates back to -sigma(K)/2 either way.
        if (profile.nondecreasing())
            return exact(-sigma / 2, "lspace-tau", lspace_citation(t));
    }

    // Even-case table rows (p > 0 even, q <= r odd), in the published order.
    if (p > 0 && p % 2 == 0) {
        std::optional<long long> row;
        if (q > 0 && r > 0) row = (q + r) / 2 - 1;
        else if (q < 0 && r > 0 && q + r <= 0) row = (q + r) / 2;
        else if (q < 0 && r > 0 && q + r > 0 && p + q == 1 && 2 * q + r <= -1) row = (q + r) / 2;
        else if (q < 0 && r > 0 && q + r > 0 && p + q < 0) row = (q + r) / 2;
        else if (q < 0 && r < 0) row = (q + r) / 2;
        if (row)
            return exact(*row, "even-table",
                         "even 3-pretzel q_M row (signature formula + L-space certificate)");
    }

    QmResult res;
    res.kind = QmResult::Kind::Interval;
    res.lo = -sigma / 2 - 1;
    res.hi = -sigma / 2 + 1;
    res.value = 0;
    res.rule = "sigma-interval";
    res.citation = "|q_M + sigma/2| <= 1 for 3-pretzels (Iida-Taniguchi 2024)";
    return res;
}

} // namespace

QmResult qm(const PretzelParams& params) {
    CanonicalForm c = canonicalize(params);
    QmResult res = qm_canonical(c.params);
    if (c.mirrored) {
        res.value = -res.value;
        long long lo = -res.hi, hi = -res.lo;
        res.lo = lo;
        res.hi = hi;
    }
    return res;
}

long long g4_lower_bound(const PretzelParams& params) {
    long long bound = std::llabs(s_invariant(params) / 2);
    QmResult res = qm(params);
    if (res.exact()) bound = std::max(bound, std::llabs(res.value));
    return bound;
}

nlohmann::json QmResult::to_json() const {
    nlohmann::json j{{"kind", exact() ? "exact" : "interval"},
                     {"lo", lo},
                     {"hi", hi},
                     {"rule", rule},
                     {"citation", citation}};
    if (exact()) j["value"] = value;
    return j;
}

} // namespace pretzel
