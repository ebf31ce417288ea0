// pretzel: invariants of 3-strand pretzel knots P(p,q,r).
//
// Subcommands: report, scan, tau, cf, family. Exit codes: 0 success,
// 2 not a knot, 3 magnitude cap exceeded, 4 outside the plumbing region.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pretzel/pretzel.hpp"

namespace {

constexpr int kExitNotAKnot = 2;
constexpr int kExitMagnitudeCap = 3;
constexpr int kExitOutsideRegion = 4;

int run_report(long long p, long long q, long long r, const std::string& format, long long cap) {
    pretzel::InvariantReport rep = pretzel::build_report(p, q, r, cap);
    if (format == "json")
        std::cout << rep.to_json().dump(2) << "\n";
    else
        std::cout << rep.to_text();
    return 0;
}

int run_scan(const pretzel::ScanOptions& opts, const std::string& format) {
    auto rows = pretzel::scan(opts);
    if (format == "json")
        std::cout << pretzel::scan_to_json(rows).dump(2) << "\n";
    else
        std::cout << pretzel::scan_to_csv(rows);
    return 0;
}

int run_tau(long long p, long long q, long long r, long long max_n, long long cap) {
    auto params = pretzel::make_params(p, q, r, cap);
    auto c = pretzel::canonicalize(params);
    if (!pretzel::in_plumbing_region(c.params)) {
        std::cerr << "error: canonical form " << c.params.str()
                  << " is outside the plumbing region (needs p >= 2 even, q <= -2, r >= 2)\n";
        return kExitOutsideRegion;
    }
    auto pres = pretzel::seifert_presentation(c.params);
    auto profile = pretzel::is_tau_nondecreasing(pres.seifert);
    auto tau = pretzel::tau_sequence(pres.seifert, max_n);

    std::cout << "canonical: " << c.params.str() << (c.mirrored ? " (input mirrored)" : "") << "\n";
    std::cout << "seifert: " << pres.seifert.str()
              << (pres.mirror ? "  [presents the mirror's double cover]" : "") << "\n";
    std::cout << "plumbing: " << pretzel::plumbing_graph(pres.seifert).to_json().dump() << "\n";
    std::cout << "tau(0.." << max_n << "): [";
    for (size_t i = 0; i < tau.size(); ++i) std::cout << (i ? "," : "") << tau[i];
    std::cout << "]\n";
    std::cout << (profile.nondecreasing() ? "nondecreasing" : "NOT nondecreasing") << ", L="
              << profile.period << ", increment=" << profile.increment
              << ", min=" << profile.min_over_period;
    if (profile.first_violation) std::cout << ", first_violation=" << *profile.first_violation;
    std::cout << "\n";
    return 0;
}

int run_cf(long long num, long long den) {
    auto cf = pretzel::negative_continued_fraction(num, den);
    for (size_t i = 0; i < cf.size(); ++i) std::cout << (i ? " " : "") << cf[i];
    std::cout << "\n";
    return 0;
}

int run_family(long long b_max) {
    // Checks, for every member of the box b <= b_max, b+1 <= a <= 2b, that the
    // invariants take the certified values: tau nondecreasing, sigma = -2(a-b),
    // q_M = a-b exact, s/2 = a-b-1, verdict not squeezed.
    bool all_ok = true;
    std::printf("%4s %4s %18s %8s %6s %6s %14s %s\n", "b", "a", "P(p,q,r)", "sigma", "q_M",
                "s/2", "squeezed", "tau");
    for (long long b = 1; b <= b_max; ++b) {
        for (long long a = b + 1; a <= 2 * b; ++a) {
            pretzel::PretzelParams t{2 * b + 2, -(2 * b + 1), 2 * a + 1};
            auto rep = pretzel::build_report(t.p, t.q, t.r);
            bool ok = rep.sigma == -2 * (a - b) && rep.qm.exact() && rep.qm.value == a - b &&
                      rep.s / 2 == a - b - 1 &&
                      rep.squeeze.status == pretzel::SqueezeStatus::NotSqueezed && rep.tau &&
                      rep.tau->nondecreasing;
            all_ok = all_ok && ok;
            std::printf("%4lld %4lld %18s %8lld %6lld %6lld %14s %s%s\n", b, a, t.str().c_str(),
                        rep.sigma, rep.qm.value, rep.s / 2, to_string(rep.squeeze.status),
                        rep.tau && rep.tau->nondecreasing ? "nondecreasing" : "VIOLATION",
                        ok ? "" : "   <-- MISMATCH");
        }
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Concordance invariants of 3-strand pretzel knots"};
    app.require_subcommand(1);
    app.fallthrough(); // allow --max-abs after the subcommand name

    long long cap = pretzel::kDefaultMagnitudeCap;
    app.add_option("--max-abs", cap, "Magnitude cap for |p|, |q|, |r|")->capture_default_str();

    long long p = 0, q = 0, r = 0;
    std::string format = "text";

    auto* report = app.add_subcommand("report", "Full invariant report for one knot");
    report->add_option("p", p)->required();
    report->add_option("q", q)->required();
    report->add_option("r", r)->required();
    report->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    pretzel::ScanOptions scan_opts;
    std::string scan_format = "csv";
    std::string status_name, region_name;
    auto* scan = app.add_subcommand("scan", "Tabulate invariants over a parameter box");
    scan->add_option("--p-min", scan_opts.p_min)->required();
    scan->add_option("--p-max", scan_opts.p_max)->required();
    scan->add_option("--q-min", scan_opts.q_min)->required();
    scan->add_option("--q-max", scan_opts.q_max)->required();
    scan->add_option("--r-min", scan_opts.r_min)->required();
    scan->add_option("--r-max", scan_opts.r_max)->required();
    scan->add_option("--status", status_name, "Filter: squeezed, not_squeezed or unknown")
        ->check(CLI::IsMember({"squeezed", "not_squeezed", "unknown"}));
    scan->add_option("--region", region_name, "Filter: odd, even, evenx or eveny")
        ->check(CLI::IsMember({"odd", "even", "evenx", "eveny"}));
    scan->add_option("--jobs", scan_opts.jobs, "Worker threads (output is identical for any count)")
        ->capture_default_str();
    scan->add_option("--format", scan_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    long long max_n = 20;
    auto* tau = app.add_subcommand("tau", "Delta/tau sequence of the double branched cover");
    tau->add_option("p", p)->required();
    tau->add_option("q", q)->required();
    tau->add_option("r", r)->required();
    tau->add_option("--max-n", max_n, "Print tau(0..max_n)")->capture_default_str();

    long long cf_num = 0, cf_den = 0;
    auto* cf = app.add_subcommand("cf", "Negative continued fraction of num/den");
    cf->add_option("num", cf_num)->required();
    cf->add_option("den", cf_den)->required();

    long long b_max = 6;
    auto* family = app.add_subcommand("family",
                                      "Verify the (2b+2,-(2b+1),2a+1) non-squeezed family");
    family->add_option("--b-max", b_max)->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (report->parsed()) return run_report(p, q, r, format, cap);
        if (scan->parsed()) {
            scan_opts.cap = cap;
            if (!status_name.empty()) {
                if (status_name == "squeezed") scan_opts.status_filter = pretzel::SqueezeStatus::Squeezed;
                else if (status_name == "not_squeezed")
                    scan_opts.status_filter = pretzel::SqueezeStatus::NotSqueezed;
                else scan_opts.status_filter = pretzel::SqueezeStatus::Unknown;
            }
            if (!region_name.empty()) scan_opts.region_filter = pretzel::region_from_string(region_name);
            return run_scan(scan_opts, scan_format);
        }
        if (tau->parsed()) return run_tau(p, q, r, max_n, cap);
        if (cf->parsed()) return run_cf(cf_num, cf_den);
        if (family->parsed()) return run_family(b_max);
    } catch (const pretzel::NotAKnot& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotAKnot;
    } catch (const pretzel::MagnitudeCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMagnitudeCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
