#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pretzel/report.hpp"

namespace pretzel {

// Named parameter regions, tested against the canonical form.
enum class Region { Odd, Even, EvenX, EvenY };

std::optional<Region> region_from_string(const std::string& name);
bool in_region(const PretzelParams& canonical, Region region);

struct ScanOptions {
    long long p_min = 0, p_max = 0;
    long long q_min = 0, q_max = 0;
    long long r_min = 0, r_max = 0;
    std::optional<SqueezeStatus> status_filter;
    std::optional<Region> region_filter;
    int jobs = 1;
    long long cap = kDefaultMagnitudeCap;
};

// One report per canonical representative of the knots in the box,
// deduplicated, in lexicographic order of the canonical triple. The result
// is byte-identical for every worker count.
std::vector<InvariantReport> scan(const ScanOptions& opts);

// RFC-4180 CSV with a fixed header; one row per report.
std::string scan_to_csv(const std::vector<InvariantReport>& rows);

// JSON array of report objects (same schema as InvariantReport::to_json).
nlohmann::json scan_to_json(const std::vector<InvariantReport>& rows);

} // namespace pretzel
