#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pretzel/pretzel.hpp"

namespace py = pybind11;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    using nlohmann::json;
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<long long>());
        case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

pretzel::PretzelParams params(long long p, long long q, long long r) {
    return pretzel::PretzelParams{p, q, r};
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact concordance invariants of 3-strand pretzel knots";

    m.def("is_knot", [](long long p, long long q, long long r) { return pretzel::is_knot(p, q, r); },
          py::arg("p"), py::arg("q"), py::arg("r"),
          "True iff P(p,q,r) is a knot (all odd, or exactly one even).");

    m.def("canonical",
          [](long long p, long long q, long long r) {
              auto c = pretzel::canonicalize(params(p, q, r));
              return py::make_tuple(py::make_tuple(c.params.p, c.params.q, c.params.r), c.mirrored);
          },
          py::arg("p"), py::arg("q"), py::arg("r"),
          "((p,q,r), mirrored) normal form under permutation and mirror symmetry.");

    m.def("determinant",
          [](long long p, long long q, long long r) { return pretzel::determinant(params(p, q, r)); },
          py::arg("p"), py::arg("q"), py::arg("r"), "Knot determinant |pq + qr + rp|.");

    m.def("signature",
          [](long long p, long long q, long long r) { return pretzel::signature(params(p, q, r)); },
          py::arg("p"), py::arg("q"), py::arg("r"), "Knot signature (closed formulas).");

    m.def("signature_oracle",
          [](long long p, long long q, long long r) { return pretzel::signature_oracle(params(p, q, r)); },
          py::arg("p"), py::arg("q"), py::arg("r"),
          "Knot signature from the Goeritz form of the standard diagram.");

    m.def("s_invariant",
          [](long long p, long long q, long long r) { return pretzel::s_invariant(params(p, q, r)); },
          py::arg("p"), py::arg("q"), py::arg("r"), "Rasmussen invariant s.");

    m.def("qm",
          [](long long p, long long q, long long r) {
              return json_to_py(pretzel::qm(params(p, q, r)).to_json());
          },
          py::arg("p"), py::arg("q"), py::arg("r"),
          "q_M invariant: exact value or interval, with rule provenance.");

    m.def("squeeze",
          [](long long p, long long q, long long r) {
              return json_to_py(pretzel::classify(params(p, q, r)).to_json());
          },
          py::arg("p"), py::arg("q"), py::arg("r"),
          "Squeezedness verdict with rule provenance.");

    m.def("g4_lower_bound",
          [](long long p, long long q, long long r) { return pretzel::g4_lower_bound(params(p, q, r)); },
          py::arg("p"), py::arg("q"), py::arg("r"), "Lower bound for the 4-ball genus.");

    m.def("tau_profile",
          [](long long p, long long q, long long r) {
              auto c = pretzel::canonicalize(params(p, q, r));
              auto pres = pretzel::seifert_presentation(c.params);
              auto profile = pretzel::is_tau_nondecreasing(pres.seifert);
              auto j = profile.to_json();
              j["mirror"] = pres.mirror;
              return json_to_py(j);
          },
          py::arg("p"), py::arg("q"), py::arg("r"),
          "One-period Delta scan of the double branched cover's plumbing.");

    m.def("tau_sequence",
          [](long long p, long long q, long long r, long long n) {
              auto c = pretzel::canonicalize(params(p, q, r));
              auto pres = pretzel::seifert_presentation(c.params);
              return pretzel::tau_sequence(pres.seifert, n);
          },
          py::arg("p"), py::arg("q"), py::arg("r"), py::arg("n"),
          "tau(0..n) for the canonical plumbing presentation.");

    m.def("negative_continued_fraction", &pretzel::negative_continued_fraction,
          py::arg("num"), py::arg("den"),
          "Expansion [c1,...,ck], all ci <= -2, of num/den < -1.");

    m.def("report",
          [](long long p, long long q, long long r) {
              return json_to_py(pretzel::build_report(p, q, r).to_json());
          },
          py::arg("p"), py::arg("q"), py::arg("r"),
          "Full invariant report as a dict (same schema as the CLI JSON).");
}
