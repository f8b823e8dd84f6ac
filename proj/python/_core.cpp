#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cliffdkp/cli.hpp"
#include "cliffdkp/dkp.hpp"
#include "cliffdkp/expr_parser.hpp"
#include "cliffdkp/field_calculus.hpp"
#include "cliffdkp/subspaces.hpp"
#include "cliffdkp/verify.hpp"

namespace py = pybind11;
using namespace cliffdkp;

namespace {

// Rationals cross the boundary as fractions.Fraction; ints and "p/q"
// strings are accepted on input.
Rational to_rational(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

py::object to_fraction(const Rational& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_string(q));
}

std::vector<Rational> to_rationals(const py::sequence& s) {
    std::vector<Rational> v;
    for (auto h : s)
        v.push_back(to_rational(h));
    return v;
}

RationalMatrix to_matrix(const py::object& m, int n) {
    if (m.is_none())
        return RationalMatrix::identity(n);
    if (py::isinstance<py::str>(m))
        return parse_matrix(m.cast<std::string>(), n);
    std::vector<std::vector<Rational>> rows;
    for (auto r : m.cast<py::sequence>())
        rows.push_back(to_rationals(r.cast<py::sequence>()));
    return RationalMatrix(rows);
}

MultiIndex to_index(const std::vector<int>& v, int n) { return MultiIndex(v, n); }

py::list element_terms(const AlgebraElement& a) {
    py::list out;
    for (const auto& [b, c] : a.terms())
        out.append(py::make_tuple(b.upper.entries(), b.lower.entries(), to_fraction(c)));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact projector-basis Clifford algebra with DKP generators and field-equation tools";

    py::register_exception<Error>(m, "AlgebraError", PyExc_ValueError);

    py::class_<AlgebraElement>(m, "Element")
        .def(py::init<int>(), py::arg("n"))
        .def_property_readonly("n", &AlgebraElement::dim)
        .def("terms", &element_terms, "List of (upper, lower, coefficient) in basis order.")
        .def("coefficient",
             [](const AlgebraElement& a, const std::vector<int>& upper, const std::vector<int>& lower) {
                 return to_fraction(a.coefficient({to_index(upper, a.dim()), to_index(lower, a.dim())}));
             })
        .def("is_zero", &AlgebraElement::is_zero)
        .def("__mul__", [](const AlgebraElement& a, const AlgebraElement& b) { return mul(a, b); })
        .def("__add__", [](const AlgebraElement& a, const AlgebraElement& b) { return a + b; })
        .def("__sub__", [](const AlgebraElement& a, const AlgebraElement& b) { return a - b; })
        .def("__neg__", [](const AlgebraElement& a) { return -a; })
        .def("__rmul__", [](const AlgebraElement& a, const py::object& s) { return to_rational(s) * a; })
        .def("__eq__", [](const AlgebraElement& a, const AlgebraElement& b) { return a == b; })
        .def("__str__", [](const AlgebraElement& a) { return to_string(a); })
        .def("__repr__", [](const AlgebraElement& a) { return "Element(" + to_string(a) + ")"; });

    m.def("basis", [](const std::vector<int>& upper, const std::vector<int>& lower, int n) {
        return basis(to_index(upper, n), to_index(lower, n), n);
    }, py::arg("upper"), py::arg("lower"), py::arg("n"));
    m.def("embed_vector", [](const py::sequence& v) { return embed_vector(to_rationals(v)); });
    m.def("embed_covector", [](const py::sequence& a) { return embed_covector(to_rationals(a)); });
    m.def("projector_P", &projector_P, py::arg("n"));
    m.def("projector_Pi", &projector_Pi, py::arg("p"), py::arg("n"));
    m.def("unit", &unit, py::arg("n"));
    m.def("adjoint", [](const AlgebraElement& a, const py::object& g) {
        return adjoint(a, Metric(to_matrix(g, a.dim())));
    }, py::arg("a"), py::arg("metric") = py::none());
    m.def("contract", [](const AlgebraElement& a, int p) { return contract(a, p); });

    m.def("dkp_generator", [](const std::string& family, const py::object& arg, int n, const py::object& g) {
        const DkpFamily f = parse_family(family);
        const Metric metric(to_matrix(g, n));
        DkpArg a;
        if (f == DkpFamily::beta_lower || f == DkpFamily::beta_lower_neg)
            a = BasisIndex{arg.cast<int>()};
        else if (f == DkpFamily::b_lower_neg)
            a = Vector{to_rationals(arg)};
        else
            a = Covector{to_rationals(arg)};
        return make_generator(f, a, metric);
    }, py::arg("family"), py::arg("arg"), py::arg("n"), py::arg("metric") = py::none());

    m.def("dim_zp", &dim_zp, py::arg("n"), py::arg("p"));
    m.def("zp_basis", [](int n, int p) {
        py::list out;
        for (const auto& b : zp_basis(n, p))
            out.append(py::make_tuple(b.upper.entries(), b.lower.entries()));
        return out;
    });
    m.def("in_zp", &in_zp, py::arg("x"), py::arg("n"), py::arg("p"));

    m.def("parse_expr", [](const std::string& src, int n, int p) { return parse_expr(src, n, p).str(); },
          "Parse and return the canonical printed form.", py::arg("src"), py::arg("n"), py::arg("p"));
    m.def("derive_dwh", [](const std::string& H, int n, int p, const py::object& lambda) {
        const auto eqs = dwh_derive(parse_expr(H, n, p), p, FrameMap(to_matrix(lambda, n)));
        py::list out;
        for (const auto& e : eqs.normalized)
            out.append(py::make_tuple(e.label, e.lhs.str(), e.rhs.str()));
        return out;
    }, py::arg("H"), py::arg("n"), py::arg("p"), py::arg("lambda_") = py::none());
    m.def("bracket", [](const std::string& G, const std::string& F, int mu, int n, int p, const py::object& lambda) {
        return bracket(parse_expr(G, n, p), parse_expr(F, n, p), mu, p, FrameMap(to_matrix(lambda, n))).str();
    }, py::arg("G"), py::arg("F"), py::arg("mu"), py::arg("n"), py::arg("p"), py::arg("lambda_") = py::none());

    m.def("verify", [](const std::string& suite, int n, std::uint64_t seed) {
        VerifyOptions o;
        o.n = n;
        o.seed = seed;
        py::list out;
        for (const auto& c : run_suite(suite, o)) {
            py::dict d;
            d["name"] = c.name;
            d["pass"] = c.pass();
            d["run"] = c.run;
            d["failed"] = c.failed;
            d["detail"] = c.detail;
            out.append(d);
        }
        return out;
    }, py::arg("suite") = "all", py::arg("n") = 3, py::arg("seed") = 42);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int rc = cli::run(args, out, err);
        return py::make_tuple(rc, out.str(), err.str());
    });
}
