#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <random>
#include <vector>

#include <nlohmann/json.hpp>

#include "unint/closedforms.hpp"
#include "unint/errors.hpp"
#include "unint/integrals.hpp"
#include "unint/montecarlo.hpp"
#include "unint/tables.hpp"

namespace py = pybind11;
using namespace unint;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

IntegralSpec spec_from_input(const std::string& input) {
    std::size_t first = input.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && input[first] == '{')
        return IntegralSpec::from_json(nlohmann::json::parse(input));
    return IntegralSpec::parse_text(input);
}

Partition partition_from(const std::vector<int>& parts) { return Partition(parts); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact monomial integrals over the unitary group U(n)";

    py::class_<RatFunc>(m, "RationalFunction")
        .def("__str__", &RatFunc::to_string)
        .def("__repr__",
             [](const RatFunc& f) { return "RationalFunction(" + f.to_string() + ")"; })
        .def("__eq__", [](const RatFunc& a, const RatFunc& b) { return a == b; })
        .def("__hash__", [](const RatFunc& f) { return py::hash(py::str(f.to_string())); })
        .def("__add__", [](const RatFunc& a, const RatFunc& b) { return a + b; })
        .def("__sub__", [](const RatFunc& a, const RatFunc& b) { return a - b; })
        .def("__mul__", [](const RatFunc& a, const RatFunc& b) { return a * b; })
        .def("__truediv__", [](const RatFunc& a, const RatFunc& b) { return a / b; })
        .def("is_zero", &RatFunc::is_zero)
        .def("latex", &RatFunc::to_latex)
        .def("to_json", [](const RatFunc& f) { return json_to_py(f.to_json()); })
        .def(
            "at",
            [](const RatFunc& f, long n) {
                return f.evaluate_at(BigInt(n)).get_str();
            },
            py::arg("n"), "Exact value at integer n, as a rational string like '1/135'.")
        .def_static("from_json", [](const py::object& obj) {
            auto dumped = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
            return RatFunc::from_json(nlohmann::json::parse(dumped));
        });

    m.def(
        "evaluate",
        [](const std::string& input) { return evaluate_gtm(spec_from_input(input)); },
        py::arg("integral"),
        "Exact value of a monomial integral given in the text or JSON grammar; "
        "vanishing integrals give the zero function.");

    m.def(
        "classify",
        [](const std::string& input) {
            CanonicalResult result = canonicalize(spec_from_input(input));
            if (std::holds_alternative<ZeroIntegral>(result))
                return std::string("Zero: ") + std::get<ZeroIntegral>(result).describe();
            return to_string(classify_orderly(std::get<CanonicalIntegral>(result)));
        },
        py::arg("integral"));

    m.def(
        "xi", [](const std::vector<int>& c) { return xi(partition_from(c)); }, py::arg("cycle_type"),
        "Primitive integral for the given cycle type.");
    m.def(
        "fan", [](long mult) { return fan_integral(mult); }, py::arg("m"));
    m.def("z", &z_integral, py::arg("m1"), py::arg("m2"), py::arg("m3"));
    m.def(
        "stack", [](const std::vector<long>& parts) { return stack_integral(parts); },
        py::arg("multiplicities"));
    m.def("special_double_fan", &special_double_fan, py::arg("alpha"));
    m.def(
        "closed",
        [](const std::string& expr) { return evaluate_closed_expr(parse_closed_expr(expr)); },
        py::arg("expr"), "Evaluate 'fan m', 'z m1 m2 m3', 'stack p1 p2 ..' or '[Aa+2Ab][Aa]'.");

    m.def(
        "character_table", [](int p) { return json_to_py(tables_json(p)["characters"][p - 1]); },
        py::arg("p"));
    m.def(
        "tables", [](int pmax) { return json_to_py(tables_json(pmax)); }, py::arg("pmax"));

    m.def(
        "haar_sample",
        [](int n, std::uint64_t seed) {
            std::mt19937_64 rng(seed);
            Eigen::MatrixXcd u = sample_haar(n, rng);
            std::vector<std::vector<std::complex<double>>> rows(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) rows[static_cast<std::size_t>(i)].push_back(u(i, j));
            return rows;
        },
        py::arg("n"), py::arg("seed"), "One Haar-distributed unitary as nested lists.");

    m.def(
        "mc_check",
        [](const std::string& input, int n, std::uint64_t samples, std::uint64_t seed, int jobs,
           double threshold) {
            McReport report =
                mc_estimate(spec_from_input(input), n, samples, seed, jobs, threshold);
            return json_to_py(report.to_json());
        },
        py::arg("integral"), py::arg("n"), py::arg("samples") = 100000, py::arg("seed") = 1,
        py::arg("jobs") = 1, py::arg("threshold") = 5.0);

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const PoleAtValue& e) {
            PyErr_SetString(PyExc_ZeroDivisionError, e.what());
        } catch (const DivisionByZero& e) {
            PyErr_SetString(PyExc_ZeroDivisionError, e.what());
        } catch (const IndexOutOfRange& e) {
            PyErr_SetString(PyExc_IndexError, e.what());
        } catch (const DegreeTooLarge& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });
}
