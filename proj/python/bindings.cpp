#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <numeric>
#include <utility>
#include <vector>

#include "coprimes/compositions.hpp"
#include "coprimes/constlang.hpp"
#include "coprimes/enumerator.hpp"
#include "coprimes/euclid.hpp"
#include "coprimes/gf2poly.hpp"
#include "coprimes/oracle.hpp"

namespace py = pybind11;
using namespace coprimes;

namespace {

py::object big_to_py(const BigInt& value) {
    return py::module_::import("builtins").attr("int")(value.str());
}

BigInt py_to_big(const py::int_& value) {
    return BigInt(py::cast<std::string>(py::repr(value)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Coprime pairs of binary polynomials with nonzero constant term";
    m.attr("__version__") = "0.1.0";

    py::enum_<PolyFormat>(m, "PolyFormat")
        .value("bin", PolyFormat::bin)
        .value("hex", PolyFormat::hex)
        .value("human", PolyFormat::human);

    py::class_<Gf2Poly>(m, "Gf2Poly")
        .def(py::init<>())
        .def_static("one", &Gf2Poly::one)
        .def_static("monomial", &Gf2Poly::monomial, py::arg("exponent"))
        .def_static("from_mask", &Gf2Poly::from_mask, py::arg("coeff_bits"))
        .def("is_zero", &Gf2Poly::is_zero)
        .def("is_one", &Gf2Poly::is_one)
        .def("degree",
             [](const Gf2Poly& p) -> std::optional<std::size_t> { return p.degree(); })
        .def("coeff", &Gf2Poly::coeff, py::arg("exponent"))
        .def("constant_term", &Gf2Poly::constant_term)
        .def("__add__", [](const Gf2Poly& a, const Gf2Poly& b) { return a + b; },
             py::is_operator())
        .def("__mul__", [](const Gf2Poly& a, const Gf2Poly& b) { return a * b; },
             py::is_operator())
        .def("__eq__", [](const Gf2Poly& a, const Gf2Poly& b) { return a == b; },
             py::is_operator())
        .def("__lt__", [](const Gf2Poly& a, const Gf2Poly& b) { return a < b; },
             py::is_operator())
        .def("__hash__",
             [](const Gf2Poly& p) { return py::hash(py::str(to_text(p, PolyFormat::bin))); })
        .def("__str__", [](const Gf2Poly& p) { return to_text(p, PolyFormat::human); })
        .def("__repr__",
             [](const Gf2Poly& p) { return "Gf2Poly('" + to_text(p, PolyFormat::human) + "')"; });

    m.def("parse", &parse, py::arg("text"), py::arg("format") = PolyFormat::bin);
    m.def("to_text", &to_text, py::arg("p"), py::arg("format") = PolyFormat::bin);
    m.def("divmod", &divmod, py::arg("dividend"), py::arg("divisor"));
    m.def("gcd", &gcd, py::arg("a"), py::arg("b"));
    m.def("in_sn", &in_sn, py::arg("p"), py::arg("n"));

    py::class_<EuclidTrace>(m, "EuclidTrace")
        .def_readonly("quotients", &EuclidTrace::quotients)
        .def_readonly("final_pair", &EuclidTrace::final_pair);
    m.def("euclid_trace", &euclid_trace, py::arg("f"), py::arg("g"));
    m.def(
        "dilcue_apply",
        [](std::pair<Gf2Poly, Gf2Poly> start, const std::vector<Gf2Poly>& quotients) {
            return dilcue_apply(std::move(start), quotients);
        },
        py::arg("start"), py::arg("quotients"));
    m.def("bijection_flip", &bijection_flip, py::arg("f"), py::arg("g"));
    m.def("render_trace", &render_trace, py::arg("f"), py::arg("g"),
          py::arg("format") = PolyFormat::bin);

    m.def("accepts", &accepts, py::arg("word"));
    m.def("count_words", [](int k) { return big_to_py(count_words_closed(k)); }, py::arg("k"));
    m.def("count_words_dfa", [](int k) { return big_to_py(count_words_dfa(k)); }, py::arg("k"));
    m.def(
        "words",
        [](int k) {
            std::vector<std::string> out;
            const WordTable table(k);
            for (auto w = table.first(); w; w = table.next(*w)) out.push_back(*w);
            return out;
        },
        py::arg("k"));
    m.def("first_word", &first_word, py::arg("k"));
    m.def("next_word", &next_word, py::arg("word"));
    m.def(
        "unrank_word",
        [](int k, const py::int_& rank) { return unrank_word(k, py_to_big(rank)); },
        py::arg("k"), py::arg("rank"));

    py::class_<Composition>(m, "Composition")
        .def(py::init([](std::vector<int> parts) {
                 Composition c;
                 c.n = std::accumulate(parts.begin(), parts.end(), 0);
                 c.parts = std::move(parts);
                 return c;
             }),
             py::arg("parts"))
        .def_readonly("parts", &Composition::parts)
        .def_readonly("n", &Composition::n)
        .def("__eq__", [](const Composition& a, const Composition& b) { return a == b; },
             py::is_operator())
        .def("__repr__", [](const Composition& c) {
            std::string out = "Composition([";
            for (std::size_t j = 0; j < c.parts.size(); ++j) {
                if (j > 0) out += ", ";
                out += std::to_string(c.parts[j]);
            }
            return out + "])";
        });
    m.def("from_boxes", &from_boxes, py::arg("boxes"));
    m.def("to_boxes", &to_boxes, py::arg("c"));
    m.def(
        "count_compositions",
        [](int n, int k) { return big_to_py(count_compositions(n, k)); },
        py::arg("n"), py::arg("k"));
    m.def(
        "compositions",
        [](int n, int k) {
            std::vector<std::vector<int>> out;
            for (auto c = first_composition(n, k); c; c = next_composition(*c))
                out.push_back(c->parts);
            return out;
        },
        py::arg("n"), py::arg("k"));

    m.def("assemble", &assemble, py::arg("comp"), py::arg("inter_bits"), py::arg("word"));
    m.def("build_pair", &build_pair, py::arg("comp"), py::arg("inter_bits"), py::arg("word"));

    py::class_<PairCursor>(m, "PairCursor")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init<int, int>(), py::arg("n"), py::arg("k"))
        .def("next", &PairCursor::next)
        .def("__iter__", [](PairCursor& c) -> PairCursor& { return c; })
        .def("__next__", [](PairCursor& c) {
            auto p = c.next();
            if (!p) throw py::stop_iteration();
            return *p;
        });
    m.def(
        "enumerate_pairs",
        [](int n, std::optional<int> k) { return k ? PairCursor(n, *k) : PairCursor(n); },
        py::arg("n"), py::arg("k") = std::nullopt);
    m.def("count_pairs", [](int n) { return big_to_py(count_pairs(n)); }, py::arg("n"));
    m.def(
        "count_pairs_by_k", [](int n, int k) { return big_to_py(count_pairs_by_k(n, k)); },
        py::arg("n"), py::arg("k"));

    m.def("enumerate_sn", &enumerate_sn, py::arg("n"));
    m.def("brute_force_an", &brute_force_an, py::arg("n"));

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_readonly("n", &VerifyReport::n)
        .def_property_readonly(
            "oracle_count", [](const VerifyReport& r) { return big_to_py(r.oracle_count); })
        .def_property_readonly(
            "enumerator_count",
            [](const VerifyReport& r) { return big_to_py(r.enumerator_count); })
        .def_property_readonly(
            "formula_count", [](const VerifyReport& r) { return big_to_py(r.formula_count); })
        .def_readonly("missing", &VerifyReport::missing)
        .def_readonly("extra", &VerifyReport::extra)
        .def_readonly("ok", &VerifyReport::ok)
        .def("__repr__", [](const VerifyReport& r) {
            return "VerifyReport(n=" + std::to_string(r.n) + ", ok=" + (r.ok ? "True" : "False") +
                   ")";
        });
    m.def("verify", &verify, py::arg("n"), py::arg("allow_large") = false);
}
