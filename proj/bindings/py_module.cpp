#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ncnat/arithmetic.hpp"
#include "ncnat/congruence.hpp"
#include "ncnat/errors.hpp"
#include "ncnat/invariants.hpp"
#include "ncnat/search.hpp"
#include "ncnat/term.hpp"

namespace py = pybind11;
using namespace ncnat;

namespace {

// Route BigInt through python's arbitrary-precision int via its decimal form.
py::int_ to_py_int(const BigInt& v) {
    return py::int_(py::str(v.to_string()));
}

DeformationSpec spec_from_name(const std::string& name) {
    if (name == "ell") return DeformationSpec::ell();
    if (name == "ell-a" || name == "ell_a") return DeformationSpec::ell_a();
    throw py::value_error("unknown deformation name: " + name);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Noncommutative natural numbers: binary trees modulo the medial "
              "rewrite, with grafting multiplication and polynomial invariants.";

    py::register_exception<ParseError>(m, "TermParseError", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
    py::register_exception<SiteError>(m, "SiteError", PyExc_ValueError);

    py::class_<Term>(m, "Term")
        .def(py::init([](const std::string& text) { return Term::parse(text); }),
             py::arg("text"), "Parse a term, e.g. '(1 (1 1))'.")
        .def_static("leaf", &Term::leaf)
        .def_static("node", &Term::node, py::arg("left"), py::arg("right"))
        .def_property_readonly("is_leaf", &Term::is_leaf)
        .def_property_readonly("magnitude", &Term::magnitude)
        .def_property_readonly("left", [](const Term& t) { return t.left(); })
        .def_property_readonly("right", [](const Term& t) { return t.right(); })
        .def("code", [](const Term& t) { return TermCode::encode(t).bits(); },
             "Preorder bit code, '1' per internal node, '0' per leaf.")
        .def_static("from_code",
                    [](const std::string& bits) { return TermCode::from_string(bits).decode(); },
                    py::arg("bits"))
        .def("__str__", &Term::to_string)
        .def("__repr__", [](const Term& t) { return "Term('" + t.to_string() + "')"; })
        .def("__eq__", [](const Term& a, const Term& b) { return a == b; }, py::is_operator())
        .def("__lt__", [](const Term& a, const Term& b) { return a < b; }, py::is_operator())
        .def("__hash__", &Term::hash);

    py::class_<RewriteSite>(m, "RewriteSite")
        .def(py::init([](const std::string& path) { return RewriteSite::parse(path); }),
             py::arg("path"), "Path of 'L'/'R' steps from the root; '' is the root.")
        .def("__str__", &RewriteSite::to_string)
        .def("__repr__",
             [](const RewriteSite& s) { return "RewriteSite('" + s.to_string() + "')"; })
        .def("__eq__", [](const RewriteSite& a, const RewriteSite& b) { return a == b; },
             py::is_operator());

    py::class_<ClassId>(m, "ClassId")
        .def_readonly("n", &ClassId::n)
        .def_readonly("index", &ClassId::index)
        .def_readonly("rep", &ClassId::rep)
        .def("__eq__", [](const ClassId& a, const ClassId& b) { return a == b; },
             py::is_operator())
        .def("__lt__", [](const ClassId& a, const ClassId& b) { return a < b; },
             py::is_operator())
        .def("__hash__",
             [](const ClassId& c) { return std::hash<long long>()(c.n * (1ll << 32) + c.index); })
        .def("__repr__", [](const ClassId& c) {
            std::ostringstream out;
            out << "ClassId(n=" << c.n << ", index=" << c.index << ", rep='"
                << c.rep.to_string() << "')";
            return out.str();
        });

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init([](const std::string& text) { return Polynomial::parse(text); }),
             py::arg("text"), "Parse e.g. '5 - 2q + q^2'.")
        .def_property_readonly("is_zero", &Polynomial::is_zero)
        .def_property_readonly("degree", &Polynomial::degree)
        .def("coefficient",
             [](const Polynomial& p, std::size_t deg) { return to_py_int(p.coefficient(deg)); },
             py::arg("degree"))
        .def("__call__",
             [](const Polynomial& p, long long x) { return to_py_int(p.evaluate(BigInt{x})); },
             py::arg("x"))
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; },
             py::is_operator())
        .def("__str__", &Polynomial::to_string)
        .def("__repr__",
             [](const Polynomial& p) { return "Polynomial('" + p.to_string() + "')"; });

    py::class_<DeformationSpec>(m, "DeformationSpec")
        .def(py::init([](const std::string& name) { return spec_from_name(name); }),
             py::arg("name"), "'ell' or 'ell-a'.")
        .def_static("custom",
                    [](const Polynomial& alpha, const Polynomial& beta) {
                        return DeformationSpec::custom(alpha, beta);
                    },
                    py::arg("alpha"), py::arg("beta"))
        .def_readonly("alpha", &DeformationSpec::alpha)
        .def_readonly("beta", &DeformationSpec::beta)
        .def_readonly("name", &DeformationSpec::name)
        .def("__repr__",
             [](const DeformationSpec& s) { return "DeformationSpec('" + s.name + "')"; });

    py::class_<Factor>(m, "Factor")
        .def_readonly("cls", &Factor::cls)
        .def_readonly("irreducible", &Factor::irreducible);

    py::class_<Factorization>(m, "Factorization")
        .def_readonly("factors", &Factorization::factors)
        .def("__repr__", [](const Factorization& f) {
            std::string out = "Factorization([";
            for (std::size_t i = 0; i < f.factors.size(); ++i) {
                if (i) out += ", ";
                out += "'" + f.factors[i].cls.rep.to_string() + "'";
            }
            return out + "])";
        });

    py::class_<NonCancelWitness>(m, "NonCancelWitness")
        .def_readonly("a", &NonCancelWitness::a)
        .def_readonly("b1", &NonCancelWitness::b1)
        .def_readonly("b2", &NonCancelWitness::b2)
        .def_readonly("product", &NonCancelWitness::product);

    py::class_<StepVerdict>(m, "StepVerdict")
        .def_readonly("ok", &StepVerdict::ok)
        .def_readonly("site", &StepVerdict::site);

    py::class_<ChainVerdict>(m, "ChainVerdict")
        .def_readonly("steps", &ChainVerdict::steps)
        .def_property_readonly("valid", &ChainVerdict::valid)
        .def_property_readonly("first_invalid", [](const ChainVerdict& v) -> py::object {
            auto idx = v.first_invalid();
            return idx ? py::cast(*idx) : py::none();
        });

    py::class_<StratumStore>(m, "StratumStore")
        .def(py::init([](int n_max, const std::string& cache_dir) {
                 Config cfg;
                 cfg.n_max = n_max;
                 if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
                 return std::make_unique<StratumStore>(cfg);
             }),
             py::arg("n_max") = kDefaultNMax, py::arg("cache_dir") = std::string{})
        .def_property_readonly("n_max", &StratumStore::n_max)
        .def("stratum_size", [](StratumStore& s, int n) { return s.stratum(n).term_count(); },
             py::arg("n"))
        .def("class_count", &StratumStore::class_count, py::arg("n"))
        .def("are_equal", &StratumStore::are_equal, py::arg("a"), py::arg("b"))
        .def("class_of", &StratumStore::class_of, py::arg("t"))
        .def("list_classes", &StratumStore::list_classes, py::arg("n"))
        .def("multiply_classes",
             [](StratumStore& s, const ClassId& a, const ClassId& b) {
                 return multiply_classes(s, a, b);
             },
             py::arg("a"), py::arg("b"))
        .def("is_irreducible",
             [](StratumStore& s, const ClassId& c) { return is_irreducible(s, c); },
             py::arg("c"))
        .def("factorize", [](StratumStore& s, const ClassId& c) { return factorize(s, c); },
             py::arg("c"))
        .def("invariant_table",
             [](StratumStore& s, const DeformationSpec& spec, int n) {
                 return invariant_table(s, spec, n);
             },
             py::arg("spec"), py::arg("n"))
        .def("find_collisions",
             [](StratumStore& s, const DeformationSpec& spec, int n) {
                 return find_collisions(s, spec, n);
             },
             py::arg("spec"), py::arg("n"))
        .def("bordered_candidates",
             [](StratumStore& s, int max_inner) { return bordered_candidates(s, max_inner); },
             py::arg("max_inner_magnitude"))
        .def("search_noncancel",
             [](StratumStore& s, int n, int multiplier_max) {
                 return search_noncancel(s, n, multiplier_max);
             },
             py::arg("n"), py::arg("multiplier_max"));

    m.def("oplus", [](const Term& a, const Term& b) { return oplus(a, b); }, py::arg("a"),
          py::arg("b"), "The sum: a new root over the operands.");
    m.def("multiply", &multiply, py::arg("a"), py::arg("b"),
          "Grafting product: every leaf of a replaced by a copy of b.");
    m.def("magnitude", [](const Term& t) { return t.magnitude(); }, py::arg("t"));
    m.def("enumerate_stratum", &enumerate_stratum, py::arg("n"), py::arg("n_max") = kDefaultNMax,
          "All terms of magnitude n in canonical order.");
    m.def("stratum_size", &stratum_size, py::arg("n"));
    m.def("rewrite_sites", &rewrite_sites, py::arg("t"));
    m.def("apply_rewrite", &apply_rewrite, py::arg("t"), py::arg("site"));
    m.def("eval_morphism", &eval_morphism, py::arg("spec"), py::arg("t"));
    m.def("magnitude_via_ell", &magnitude_via_ell, py::arg("t"));
    m.def("verify_chain", [](const std::vector<Term>& steps) {
              return verify_chain(RewriteChain{steps});
          },
          py::arg("steps"));
    m.def("load_chain",
          [](const std::string& path) { return load_chain(std::filesystem::path(path)).steps; },
          py::arg("path"));

    m.attr("DEFAULT_N_MAX") = kDefaultNMax;
    m.attr("__version__") = "0.1.0";
}
