#include "pretzel/scan.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace pretzel {

std::optional<Region> region_from_string(const std::string& name) {
    if (name == "odd") return Region::Odd;
    if (name == "even") return Region::Even;
    if (name == "evenx" || name == "even-x") return Region::EvenX;
    if (name == "eveny" || name == "even-y") return Region::EvenY;
    return std::nullopt;
}

bool in_region(const PretzelParams& t, Region region) {
    switch (region) {
        case Region::Odd:
            return t.p % 2 != 0;
        case Region::Even:
            return t.p % 2 == 0;
        case Region::EvenX:
            return t.p % 2 == 0 && t.p >= 2 && t.q <= -3 && t.r >= 5 && t.q + t.r > 0 &&
                   t.p + t.q > 0;
        case Region::EvenY:
            return t.p % 2 == 0 && t.p >= 2 && t.q <= -3 && t.r >= 5 && t.q + t.r > 0 &&
                   t.p + t.q < 0;
    }
    return false;
}

std::vector<InvariantReport> scan(const ScanOptions& opts) {
    check_magnitude(std::max(std::llabs(opts.p_min), std::llabs(opts.p_max)),
                    std::max(std::llabs(opts.q_min), std::llabs(opts.q_max)),
                    std::max(std::llabs(opts.r_min), std::llabs(opts.r_max)), opts.cap);

    // Canonical representatives, deduplicated; std::set keeps lex order.
    std::set<std::array<long long, 3>> canon;
    for (long long p = opts.p_min; p <= opts.p_max; ++p)
        for (long long q = opts.q_min; q <= opts.q_max; ++q)
            for (long long r = opts.r_min; r <= opts.r_max; ++r) {
                if (!is_knot(p, q, r)) continue;
                auto c = canonicalize(PretzelParams{p, q, r});
                if (opts.region_filter && !in_region(c.params, *opts.region_filter)) continue;
                canon.insert(c.params.as_array());
            }

    std::vector<std::array<long long, 3>> todo(canon.begin(), canon.end());
    std::vector<InvariantReport> rows(todo.size());

    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < todo.size(); ++i)
            rows[i] = build_report(todo[i][0], todo[i][1], todo[i][2], opts.cap);
    } else {
        // Fixed index slots make the merge deterministic for any worker count.
        std::vector<std::thread> workers;
        std::exception_ptr failure;
        std::mutex failure_mutex;
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w]() {
                try {
                    for (size_t i = static_cast<size_t>(w); i < todo.size(); i += jobs)
                        rows[i] = build_report(todo[i][0], todo[i][1], todo[i][2], opts.cap);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
        for (auto& t : workers) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    if (opts.status_filter) {
        std::vector<InvariantReport> filtered;
        for (auto& row : rows)
            if (row.squeeze.status == *opts.status_filter) filtered.push_back(std::move(row));
        rows = std::move(filtered);
    }
    return rows;
}

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

const char* kCsvHeader =
    "p,q,r,canonical_p,canonical_q,canonical_r,mirrored,det,signature,signature_oracle,s,"
    "qm_kind,qm_value,qm_lo,qm_hi,qm_rule,qm_citation,squeeze_status,squeeze_rule,"
    "squeeze_citation,witness_qm,witness_s_half,tau_L,tau_increment,tau_min,"
    "tau_first_violation,tau_nondecreasing,tau_mirror,g4_lower_bound,ribbon,two_bridge,"
    "not_quasi_alternating,p0_printed,p0_consistent,p0_discrepancy";

} // namespace

std::string scan_to_csv(const std::vector<InvariantReport>& rows) {
    std::ostringstream out;
    out << kCsvHeader << "\r\n";
    auto b = [](bool v) { return v ? "true" : "false"; };
    for (const auto& rep : rows) {
        out << rep.input.p << ',' << rep.input.q << ',' << rep.input.r << ','
            << rep.canonical.params.p << ',' << rep.canonical.params.q << ','
            << rep.canonical.params.r << ',' << b(rep.canonical.mirrored) << ',' << rep.det << ','
            << rep.sigma << ',' << rep.sigma_oracle << ',' << rep.s << ','
            << (rep.qm.exact() ? "exact" : "interval") << ','
            << (rep.qm.exact() ? std::to_string(rep.qm.value) : std::string()) << ',' << rep.qm.lo
            << ',' << rep.qm.hi << ',' << csv_escape(rep.qm.rule) << ','
            << csv_escape(rep.qm.citation) << ',' << to_string(rep.squeeze.status) << ','
            << csv_escape(rep.squeeze.rule) << ',' << csv_escape(rep.squeeze.citation) << ','
            << (rep.squeeze.witness ? std::to_string(rep.squeeze.witness->first) : std::string())
            << ','
            << (rep.squeeze.witness ? std::to_string(rep.squeeze.witness->second) : std::string())
            << ',' << (rep.tau ? std::to_string(rep.tau->period) : std::string()) << ','
            << (rep.tau ? std::to_string(rep.tau->increment) : std::string()) << ','
            << (rep.tau ? std::to_string(rep.tau->min_over_period) : std::string()) << ','
            << (rep.tau && rep.tau->first_violation ? std::to_string(*rep.tau->first_violation)
                                                    : std::string())
            << ',' << (rep.tau ? b(rep.tau->nondecreasing) : "") << ','
            << (rep.tau ? b(rep.tau->mirror) : "") << ',' << rep.g4_lb << ','
            << b(rep.flags.ribbon) << ',' << b(rep.flags.two_bridge) << ','
            << b(rep.flags.not_quasi_alternating) << ','
            << (rep.flags.p0_printed ? std::to_string(*rep.flags.p0_printed) : std::string())
            << ','
            << (rep.flags.p0_consistent ? std::to_string(*rep.flags.p0_consistent) : std::string())
            << ',' << b(rep.flags.p0_discrepancy) << "\r\n";
    }
    return out.str();
}

nlohmann::json scan_to_json(const std::vector<InvariantReport>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& rep : rows) arr.push_back(rep.to_json());
    return arr;
}

} // namespace pretzel
