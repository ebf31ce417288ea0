#include "pretzel/report.hpp"

#include <cstdlib>
#include <sstream>

#include "pretzel/errors.hpp"
#include "pretzel/goeritz.hpp"
#include "pretzel/plumbing.hpp"
#include "pretzel/rasmussen.hpp"
#include "pretzel/signature.hpp"

namespace pretzel {

namespace {

// The p = 0 closed form is evaluated on the orientation the caller gave,
// which is how the formula would be applied by hand.
void fill_p0_flags(const PretzelParams& input, const QmResult& qmres, ReportFlags& flags) {
    auto t = input.as_array();
    int zero = -1;
    for (int i = 0; i < 3; ++i)
        if (t[i] == 0) zero = i;
    if (zero < 0) return;
    long long q = t[(zero + 1) % 3], r = t[(zero + 2) % 3];
    flags.p0_printed = printed_p0_slice_torus(q, r);
    flags.p0_consistent = qmres.value;
    flags.p0_discrepancy = *flags.p0_printed != *flags.p0_consistent;
}

} // namespace

InvariantReport build_report(long long p, long long q, long long r, long long cap) {
    InvariantReport rep;
    rep.input = make_params(p, q, r, cap);
    rep.canonical = canonicalize(rep.input);
    rep.det = determinant(rep.input);
    rep.sigma = signature(rep.input);
    rep.sigma_oracle = signature_oracle(rep.input);
    rep.s = s_invariant(rep.input);
    rep.qm = qm(rep.input);
    rep.squeeze = classify(rep.input);
    rep.g4_lb = g4_lower_bound(rep.input);

    if (rep.sigma != rep.sigma_oracle)
        throw InvariantViolation("signature mismatch for " + rep.input.str() + ": formula " +
                                 std::to_string(rep.sigma) + " vs diagram oracle " +
                                 std::to_string(rep.sigma_oracle));
    if (std::llabs(matrix_determinant(goeritz_matrix(rep.input))) != rep.det)
        throw InvariantViolation("Goeritz determinant mismatch for " + rep.input.str());
    if (rep.qm.exact() && std::llabs(2 * rep.qm.value + rep.sigma) > 2)
        throw InvariantViolation("|q_M + sigma/2| > 1 for " + rep.input.str());

    if (in_plumbing_region(rep.canonical.params)) {
        SeifertPresentation pres = seifert_presentation(rep.canonical.params);
        DeltaProfile profile = is_tau_nondecreasing(pres.seifert);
        PlumbingGraph graph = plumbing_graph(pres.seifert);
        if (!is_negative_definite(graph))
            throw InvariantViolation("plumbing graph of " + rep.input.str() +
                                     " is not negative definite");
        if (std::llabs(matrix_determinant(graph.intersection_matrix())) != rep.det)
            throw InvariantViolation("plumbing determinant mismatch for " + rep.input.str());
        rep.tau = TauSummary{profile.period, profile.increment, profile.min_over_period,
                             profile.first_violation, profile.nondecreasing(), pres.mirror};
    }

    rep.flags.ribbon = is_ribbon(rep.canonical.params);
    auto abs_in = rep.input.as_array();
    rep.flags.two_bridge = std::llabs(abs_in[0]) == 1 || std::llabs(abs_in[1]) == 1 ||
                           std::llabs(abs_in[2]) == 1;
    // A quasi-alternating knot has tau = s/2 = -sigma/2; a violation by the
    // computed values certifies "not quasi-alternating".
    rep.flags.not_quasi_alternating =
        (rep.qm.exact() && 2 * rep.qm.value != -rep.sigma) || (rep.s != -rep.sigma);
    if (rep.qm.exact()) fill_p0_flags(rep.input, rep.qm, rep.flags);

    return rep;
}

nlohmann::json InvariantReport::to_json() const {
    nlohmann::json j;
    j["input"] = input.as_array();
    j["canonical"] = {{"params", canonical.params.as_array()},
                      {"mirrored", canonical.mirrored},
                      {"permutation", canonical.permutation}};
    j["det"] = det;
    j["signature"] = sigma;
    j["signature_oracle"] = sigma_oracle;
    j["s"] = s;
    j["qm"] = qm.to_json();
    j["squeeze"] = squeeze.to_json();
    if (tau) {
        j["tau"] = {{"L", tau->period},
                    {"increment", tau->increment},
                    {"min", tau->min_over_period},
                    {"first_violation",
                     tau->first_violation ? nlohmann::json(*tau->first_violation) : nlohmann::json(nullptr)},
                    {"nondecreasing", tau->nondecreasing},
                    {"mirror", tau->mirror}};
    } else {
        j["tau"] = nullptr;
    }
    j["g4_lower_bound"] = g4_lb;
    j["flags"] = {{"ribbon", flags.ribbon},
                  {"two_bridge", flags.two_bridge},
                  {"not_quasi_alternating", flags.not_quasi_alternating},
                  {"p0_printed", flags.p0_printed ? nlohmann::json(*flags.p0_printed) : nlohmann::json(nullptr)},
                  {"p0_consistent",
                   flags.p0_consistent ? nlohmann::json(*flags.p0_consistent) : nlohmann::json(nullptr)},
                  {"p0_discrepancy", flags.p0_discrepancy}};
    return j;
}

std::string InvariantReport::to_text() const {
    std::ostringstream out;
    out << input.str() << "\n";
    out << "  canonical: " << canonical.params.str() << (canonical.mirrored ? "  (mirrored)" : "")
        << "\n";
    out << "  det: " << det << "\n";
    out << "  signature: " << sigma << "  (diagram oracle: " << sigma_oracle << ")\n";
    out << "  s: " << s << "  (s/2 = " << s / 2 << ")\n";
    if (qm.exact())
        out << "  q_M: " << qm.value << "  [exact, " << qm.rule << "]\n";
    else
        out << "  q_M: in [" << qm.lo << ", " << qm.hi << "]  [" << qm.rule << "]\n";
    out << "      " << qm.citation << "\n";
    out << "  squeezed: " << to_string(squeeze.status) << "  [" << squeeze.rule << "]";
    if (squeeze.witness)
        out << "  witness (q_M, s/2) = (" << squeeze.witness->first << ", "
            << squeeze.witness->second << ")";
    out << "\n      " << squeeze.citation << "\n";
    if (tau) {
        out << "  tau: L=" << tau->period << " increment=" << tau->increment
            << " min=" << tau->min_over_period;
        if (tau->first_violation)
            out << " first_violation=" << *tau->first_violation;
        out << (tau->nondecreasing ? "  nondecreasing" : "  NOT nondecreasing");
        if (tau->mirror) out << "  (presentation of the mirror's double cover)";
        out << "\n";
    }
    out << "  g4 >= " << g4_lb << "\n";
    out << "  flags:";
    if (flags.ribbon) out << " ribbon";
    if (flags.two_bridge) out << " two-bridge";
    if (flags.not_quasi_alternating) out << " not-quasi-alternating";
    if (flags.p0_discrepancy)
        out << " p0-formula-discrepancy(printed=" << *flags.p0_printed
            << ", consistent=" << *flags.p0_consistent << ")";
    out << "\n";
    return out.str();
}

} // namespace pretzel
