#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hopfdiag/boson.hpp"
#include "hopfdiag/combinatorics.hpp"
#include "hopfdiag/diagrams.hpp"
#include "hopfdiag/errors.hpp"
#include "hopfdiag/hopf.hpp"
#include "hopfdiag/json_io.hpp"
#include "hopfdiag/series.hpp"

namespace py = pybind11;
using namespace hopfdiag;

namespace {

// Rationals cross the boundary as fractions.Fraction, big integers as int.
py::object to_py(const Rational& r) {
    return py::module_::import("fractions").attr("Fraction")(r.to_string());
}

py::object to_py(const BigInt& n) { return py::module_::import("builtins").attr("int")(n.get_str()); }

Rational from_py(const py::handle& h) {
    const auto frac = py::module_::import("fractions").attr("Fraction")(h);
    return Rational::parse(py::str(frac).cast<std::string>());
}

std::vector<Rational> rationals(const py::iterable& xs) {
    std::vector<Rational> out;
    for (auto x : xs) out.push_back(from_py(x));
    return out;
}

py::list to_py(const std::vector<Rational>& xs) {
    py::list out;
    for (const auto& x : xs) out.append(to_py(x));
    return out;
}

py::list to_py(const EGFSeries& s) { return to_py(std::vector<Rational>(s.coeffs().begin(), s.coeffs().end())); }

py::dict to_py(const ZPolynomial& p) {
    py::dict out;
    for (const auto& [key, c] : p.terms()) out[py::make_tuple(key.first, key.second)] = to_py(c);
    return out;
}

py::dict to_py(const NormalForm& f) {
    py::dict out;
    for (const auto& [key, c] : f.terms()) out[py::make_tuple(key.first, key.second)] = to_py(c);
    return out;
}

// A polynomial is a {(zbar, z): coeff} mapping or a plain number.
ZPolynomial zpoly_from_py(const py::handle& h) {
    if (!py::isinstance<py::dict>(h)) return ZPolynomial(from_py(h));
    ZPolynomial p;
    for (auto [key, c] : h.cast<py::dict>()) {
        const auto k = key.cast<std::pair<unsigned, unsigned>>();
        p.add(k, from_py(c));
    }
    return p;
}

std::vector<ZPolynomial> zpolys(const py::iterable& xs) {
    std::vector<ZPolynomial> out;
    for (auto x : xs) out.push_back(zpoly_from_py(x));
    return out;
}

py::list zpolys_to_py(const std::vector<ZPolynomial>& ps) {
    py::list out;
    for (const auto& p : ps) out.append(to_py(p));
    return out;
}

py::object json_to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Algebra algebra_from(const std::string& name) {
    if (name == "bell") return Algebra::bell;
    if (name == "diag") return Algebra::diag;
    throw std::invalid_argument("algebra must be 'bell' or 'diag'");
}

GeneratorMap generator_map_from(const std::string& name) {
    if (name == "bell") return phi_bell();
    if (name == "contract") return phi_contract();
    if (name == "zero") return phi_zero();
    throw std::invalid_argument("map must be 'bell', 'contract' or 'zero'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact combinatorics of boson normal ordering, Feynman-type diagrams and their Hopf algebras";

    py::register_exception<BoundExceeded>(m, "BoundExceeded", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("stirling2", [](unsigned n, unsigned k) { return to_py(stirling2(n, k)); }, py::arg("n"), py::arg("k"));
    m.def("bell_number", [](unsigned n) { return to_py(bell_number(n)); }, py::arg("n"));
    m.def("bell_polynomial", [](unsigned n) { return to_py(bell_polynomial(n)); }, py::arg("n"),
          "Coefficients of B_n(y) in ascending powers of y.");
    m.def(
        "set_partitions",
        [](std::size_t n) {
            std::vector<std::vector<std::vector<unsigned>>> out;
            for (const auto& p : enumerate_set_partitions(n)) out.push_back(p.blocks());
            return out;
        },
        py::arg("n"));
    m.def(
        "integer_partitions",
        [](std::size_t n) {
            std::vector<std::vector<unsigned>> out;
            for (const auto& p : enumerate_integer_partitions(n)) out.push_back(p.parts());
            return out;
        },
        py::arg("n"));

    m.def("series_exp", [](const py::iterable& f) { return to_py(series_exp(EGFSeries(rationals(f)))); },
          py::arg("coeffs"), "EGF exponential; coefficients are a_n in sum a_n x^n/n!.");
    m.def("series_log", [](const py::iterable& f) { return to_py(series_log(EGFSeries(rationals(f)))); },
          py::arg("coeffs"));

    m.def("normal_order", [](const std::string& w) { return to_py(normal_order(BosonWord::parse(w))); },
          py::arg("word"), "Normal form as {(creation, annihilation): coeff}.");
    m.def("forget_normal_order",
          [](const std::string& w) { return to_py(forget_normal_order(BosonWord::parse(w))); }, py::arg("word"));
    m.def(
        "coherent_expectation",
        [](const std::string& w) { return to_py(coherent_expectation(normal_order(BosonWord::parse(w)))); },
        py::arg("word"), "<z|w|z> as {(zbar_power, z_power): coeff}.");
    m.def(
        "word_moments",
        [](const std::string& w, std::size_t order) { return zpolys_to_py(word_moments(BosonWord::parse(w), order)); },
        py::arg("word"), py::arg("order"));
    m.def("moments_to_cumulants", [](const py::iterable& w) { return zpolys_to_py(moments_to_cumulants(zpolys(w))); },
          py::arg("moments"));
    m.def("cumulants_to_moments", [](const py::iterable& v) { return zpolys_to_py(cumulants_to_moments(zpolys(v))); },
          py::arg("cumulants"));
    m.def("free_boson_partition_function", &free_boson_partition_function, py::arg("beta_eps"));

    m.def("canonicalize", [](const MultMatrix& mult) { return canonicalize(mult).matrix(); }, py::arg("mult"));
    m.def("is_connected", [](const MultMatrix& mult) { return is_connected(canonicalize(mult)); }, py::arg("mult"));
    m.def(
        "diag_diagrams",
        [](std::size_t n) {
            py::list out;
            for (const auto& [d, mult] : enumerate_diag_diagrams(n)) out.append(py::make_tuple(d.matrix(), to_py(mult)));
            return out;
        },
        py::arg("n"), "Canonical diagrams of grade n with their multiplicities.");
    m.def(
        "bell_diagrams",
        [](std::size_t n) {
            py::list out;
            for (const auto& [shape, mult] : enumerate_bell_diagrams(n)) out.append(py::make_tuple(shape.parts(), to_py(mult)));
            return out;
        },
        py::arg("n"));
    m.def("to_dot", [](const MultMatrix& mult, const std::string& name) { return to_dot(canonicalize(mult), name); },
          py::arg("mult"), py::arg("name") = "diagram");
    m.def(
        "pfi_by_diagrams",
        [](std::size_t order, const py::iterable& l, const py::iterable& v) {
            return to_py(pfi_by_diagrams(order, rationals(l), rationals(v)));
        },
        py::arg("order"), py::arg("L"), py::arg("V"));
    m.def(
        "pfi_by_series",
        [](std::size_t order, const py::iterable& l, const py::iterable& v) {
            return to_py(pfi_by_series(order, rationals(l), rationals(v)));
        },
        py::arg("order"), py::arg("L"), py::arg("V"));
    m.def(
        "connected_generating_check",
        [](std::size_t order, const py::iterable& l, const py::iterable& v) {
            return connected_generating_check(order, rationals(l), rationals(v));
        },
        py::arg("order"), py::arg("L"), py::arg("V"));

    m.def("graded_dimension", [](const std::string& a, unsigned n) { return graded_dimension(algebra_from(a), n); },
          py::arg("algebra"), py::arg("n"));
    m.def(
        "check_hopf_axioms",
        [](const std::string& a, unsigned grade) { return json_to_py(json(check_hopf_axioms(algebra_from(a), grade))); },
        py::arg("algebra"), py::arg("grade"));
    m.def(
        "check_hopf_morphism",
        [](const std::string& map, unsigned grade) {
            return json_to_py(json(check_hopf_morphism(generator_map_from(map), grade, map)));
        },
        py::arg("map"), py::arg("grade"), "Check one of the built-in maps 'bell', 'contract' or 'zero'.");
}
