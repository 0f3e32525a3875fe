// Python bindings: every operation funnels through the same in-process
// entry point as the command-line tool, so the returned dicts match the
// JSON reports key for key (insertion order preserved).

#include <pybind11/pybind11.h>

#include "unitring/cli.hpp"

#include "json.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace py = pybind11;
using ordered_json = nlohmann::ordered_json;

namespace {

py::object to_py(const ordered_json& j) {
    switch (j.type()) {
    case ordered_json::value_t::null: return py::none();
    case ordered_json::value_t::boolean: return py::bool_(j.get<bool>());
    case ordered_json::value_t::number_integer: return py::int_(j.get<long long>());
    case ordered_json::value_t::number_unsigned:
        return py::int_(j.get<unsigned long long>());
    case ordered_json::value_t::number_float: return py::float_(j.get<double>());
    case ordered_json::value_t::string: return py::str(j.get<std::string>());
    case ordered_json::value_t::array: {
        py::list out;
        for (const auto& item : j) out.append(to_py(item));
        return out;
    }
    case ordered_json::value_t::object: {
        py::dict out;
        for (const auto& [key, value] : j.items()) out[py::str(key)] = to_py(value);
        return out;
    }
    default: return py::none();
    }
}

std::string strip_trailing_newline(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

py::object run_verb(std::vector<std::string> args, bool timings) {
    if (!timings) args.push_back("--no-timings");
    std::ostringstream out, err;
    const int code = unitring::run_cli(args, out, err);
    const std::string msg = strip_trailing_newline(err.str());
    if (code == 1) throw std::invalid_argument(msg);
    if (code != 0) throw std::runtime_error(msg);
    return to_py(ordered_json::parse(out.str()));
}

} // namespace

PYBIND11_MODULE(_unitring, m) {
    m.doc() = "Exact unit-group computations in group rings: hypercentrality "
              "and hyperbolicity decision procedures over Z, GF(p^n), and "
              "GF(p)(t) coefficients.";

    m.def(
        "classify_hypercentral",
        [](const std::string& group, bool timings) {
            return run_verb({"classify-hypercentral", "--group", group}, timings);
        },
        py::arg("group"), py::arg("timings") = false,
        "Decide whether the unit group of ZG is hypercentral; `group` uses "
        "the same grammar as the CLI (C<n>, D<n>, K8, Q16, E2^<k>, S3, "
        "products with 'x', or @file.json).");

    m.def(
        "classify_hyperbolic",
        [](const std::string& field, const std::string& group, const std::string& about,
           bool witness, int independence_bound, bool timings) {
            std::vector<std::string> args{"classify-hyperbolic", "--field", field,
                                          "--group", group,      "--about", about};
            if (witness) args.push_back("--witness");
            args.push_back("--independence-bound");
            args.push_back(std::to_string(independence_bound));
            return run_verb(std::move(args), timings);
        },
        py::arg("field"), py::arg("group"), py::arg("about") = "V", py::arg("witness") = false,
        py::arg("independence_bound") = 5, py::arg("timings") = false,
        "Decide hyperbolicity of V(KG) (about='V') or of the full unit group "
        "(about='U'); fields: GF(p), GF(p^n), GF(p)(t), algcl(p).");

    m.def(
        "enumerate_units",
        [](const std::string& field, const std::string& group, std::uint64_t budget,
           bool timings) {
            return run_verb({"enumerate-units", "--field", field, "--group", group, "--budget",
                             std::to_string(budget)},
                            timings);
        },
        py::arg("field"), py::arg("group"), py::arg("budget") = (std::uint64_t{1} << 20),
        py::arg("timings") = false,
        "Enumerate V(KG) over a finite field and report its structure.");

    m.def(
        "unit_search",
        [](const std::string& group, int bound, std::uint64_t budget, bool timings) {
            return run_verb({"unit-search", "--group", group, "--bound", std::to_string(bound),
                             "--budget", std::to_string(budget)},
                            timings);
        },
        py::arg("group"), py::arg("bound") = 1, py::arg("budget") = std::uint64_t{10'000'000},
        py::arg("timings") = false,
        "Exhaustively search ZG for units with coefficients in [-bound, bound].");

    m.def(
        "witness_z2",
        [](const std::string& field, const std::string& group, const std::string& element,
           int independence_bound, bool timings) {
            std::vector<std::string> args{"witness-z2", "--field", field, "--group", group};
            if (!element.empty()) {
                args.push_back("--element");
                args.push_back(element);
            }
            args.push_back("--independence-bound");
            args.push_back(std::to_string(independence_bound));
            return run_verb(std::move(args), timings);
        },
        py::arg("field"), py::arg("group"), py::arg("element") = "",
        py::arg("independence_bound") = 5, py::arg("timings") = false,
        "Construct and verify a free abelian rank-2 unit pair in GF(p)(t)G.");

    m.def(
        "central_series",
        [](const std::string& group, bool timings) {
            return run_verb({"central-series", "--group", group}, timings);
        },
        py::arg("group"), py::arg("timings") = false,
        "Compute the upper central series and nilpotency class of a finite group.");

    m.def(
        "verify_dedekind",
        [](const std::string& group, bool timings) {
            return run_verb({"verify-dedekind", "--group", group}, timings);
        },
        py::arg("group"), py::arg("timings") = false,
        "Check the four necessary conditions a hypercentral unit group "
        "imposes on the underlying finite group.");
}
