#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kmu/catalog.hpp"
#include "kmu/checks.hpp"
#include "kmu/parser.hpp"
#include "kmu/singularity.hpp"
#include "kmu/unprojection.hpp"

namespace py = pybind11;
using namespace kmu;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& e : j) out.append(json_to_py(e));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (const auto& [k, v] : j.items()) out[py::str(k)] = json_to_py(v);
            return out;
        }
        default: return py::none();
    }
}

Field field_of(const std::string& name) { return Field::parse(name); }

// pybind11 cannot hold a shared_ptr<const T>; wrap the ring handle
struct PyRing {
    RingPtr ptr;
};

}  // namespace

PYBIND11_MODULE(pykmu, m) {
    m.doc() = "Kustin-Miller unprojection toolkit";

    py::register_exception<BudgetExceededError>(m, "BudgetExceeded");
    py::register_exception<Error>(m, "KmuError");

    py::class_<PyRing>(m, "GradedRing")
        .def_static(
            "make",
            [](std::vector<std::string> vars, std::vector<int> weights, const std::string& field) {
                return PyRing{GradedRing::make(std::move(vars), std::move(weights), field_of(field))};
            },
            py::arg("vars"), py::arg("weights"), py::arg("field") = "F101")
        .def_static(
            "weighted",
            [](std::vector<int> weights, const std::string& field) {
                return PyRing{GradedRing::weighted(std::move(weights), field_of(field))};
            },
            py::arg("weights"), py::arg("field") = "F101")
        .def_property_readonly("vars", [](const PyRing& r) { return r.ptr->vars(); })
        .def_property_readonly("weights", [](const PyRing& r) { return r.ptr->weights(); })
        .def_property_readonly("field", [](const PyRing& r) { return r.ptr->field().name(); })
        .def("extend", [](const PyRing& r, const std::string& name, int weight) {
            return PyRing{r.ptr->extend(name, weight)};
        }, py::arg("name"), py::arg("weight"))
        .def("__repr__", [](const PyRing& r) {
            std::string s = "GradedRing(";
            for (std::size_t i = 0; i < r.ptr->nvars(); ++i)
                s += (i ? ", " : "") + r.ptr->vars()[i] + ":" + std::to_string(r.ptr->weight(i));
            return s + "; " + r.ptr->field().name() + ")";
        });

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init([](const std::string& text, const PyRing& ring) {
                 return parse_polynomial(text, ring.ptr);
             }),
             py::arg("text"), py::arg("ring"))
        .def_property_readonly("ring", [](const Polynomial& p) { return PyRing{p.ring()}; })
        .def("__str__", &Polynomial::str)
        .def("__repr__", [](const Polynomial& p) { return "Polynomial(" + p.str() + ")"; })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("pow", &Polynomial::pow)
        .def("derivative", &Polynomial::derivative, py::arg("var"))
        .def("is_zero", &Polynomial::is_zero)
        .def("is_homogeneous", &Polynomial::is_homogeneous)
        .def("weighted_degree", [](const Polynomial& p) -> py::object {
            auto d = p.try_weighted_degree();
            return d ? py::cast(*d) : py::object(py::none());
        });

    m.def(
        "random_form",
        [](const PyRing& ring, long long degree, std::uint64_t seed) {
            auto rf = random_form(ring.ptr, degree, seed);
            return py::make_tuple(rf.poly, rf.empty_basis);
        },
        py::arg("ring"), py::arg("degree"), py::arg("seed"),
        "dense seeded homogeneous form; returns (polynomial, empty_basis_flag)");

    py::class_<Ideal>(m, "Ideal")
        .def(py::init([](const PyRing& ring, const std::vector<std::string>& gens) {
                 std::vector<Polynomial> v;
                 for (const auto& s : gens) v.push_back(parse_polynomial(s, ring.ptr));
                 return Ideal(ring.ptr, std::move(v));
             }),
             py::arg("ring"), py::arg("generators"))
        .def(py::init([](const PyRing& ring, const std::vector<Polynomial>& gens) {
                 return Ideal(ring.ptr, gens);
             }))
        .def_property_readonly("ring", [](const Ideal& I) { return PyRing{I.ring()}; })
        .def_property_readonly("generators", &Ideal::generators)
        .def("__repr__", &Ideal::str)
        .def(
            "groebner",
            [](const Ideal& I, long long budget) {
                return I.groebner(MonomialOrder::wdegrevlex(), GroebnerOptions{budget}).elements;
            },
            py::arg("budget") = 1'000'000)
        .def(
            "normal_form",
            [](const Ideal& I, const Polynomial& f, long long budget) {
                return normal_form(f, I, GroebnerOptions{budget});
            },
            py::arg("f"), py::arg("budget") = 1'000'000)
        .def(
            "contains_poly",
            [](const Ideal& I, const Polynomial& f) { return ideal_contains_poly(I, f); }, py::arg("f"))
        .def("contains",
             [](const Ideal& I, const Ideal& J) { return contains(I, J); })
        .def(
            "eliminate",
            [](const Ideal& I, const std::vector<int>& block, long long budget) {
                return eliminate(I, block, GroebnerOptions{budget});
            },
            py::arg("block"), py::arg("budget") = 1'000'000)
        .def("saturate",
             [](const Ideal& I, const Ideal& J) { return saturate(I, J); })
        .def("intersect", [](const Ideal& A, const Ideal& B) { return intersect(A, B); })
        .def("dimension_degree", [](const Ideal& I) {
            auto dd = projective_dimension_and_degree(I);
            return py::make_tuple(dd.dimension,
                                  dd.degree ? py::object(py::cast(*dd.degree)) : py::object(py::none()));
        });

    m.def(
        "ci_invariants",
        [](const std::vector<int>& weights, const std::vector<long long>& degrees) {
            return json_to_py(invariants_to_json(ci_invariants(weights, degrees)));
        },
        py::arg("weights"), py::arg("degrees"));
    m.def(
        "transition_invariants",
        [](py::dict inv, long long d, const std::string& direction) {
            Json j = Json::parse(py::str(py::module_::import("json").attr("dumps")(inv)).cast<std::string>());
            auto out = transition_invariants(
                invariants_from_json(j), d,
                direction == "project" ? TransitionDirection::project : TransitionDirection::unproject);
            return json_to_py(invariants_to_json(out));
        },
        py::arg("invariants"), py::arg("d"), py::arg("direction") = "unproject");

    m.def(
        "unproject_pair",
        [](const std::string& x_json, const std::string& d_json, std::uint64_t seed,
           const std::string& mechanism, const std::string& field) {
            Field f = field_of(field);
            VarietySpec X = spec_from_json(Json::parse(x_json), f);
            VarietySpec D = spec_from_json(Json::parse(d_json), f);
            X.ambient.field = f;
            D.ambient.field = f;
            return json_to_py(unprojection_to_json(unproject_pair(X, D, seed, mechanism)));
        },
        py::arg("x_spec"), py::arg("d_spec"), py::arg("seed"), py::arg("mechanism"),
        py::arg("field") = "F101", "run a constructor on a (X, D) pair given as spec JSON strings");

    m.def(
        "quasi_smooth",
        [](const std::string& spec_json, std::uint64_t seed, const std::string& field, long long budget) {
            Field f = field_of(field);
            VarietySpec v = spec_from_json(Json::parse(spec_json), f);
            v.ambient.field = f;
            return json_to_py(singularity_report_to_json(quasi_smooth(v, seed, GroebnerOptions{budget})));
        },
        py::arg("spec"), py::arg("seed"), py::arg("field") = "F101", py::arg("budget") = 5'000'000);

    m.def("node_count_bezout", &node_count_bezout, py::arg("degrees"), py::arg("weights"));

    py::class_<BettiTable>(m, "BettiTable")
        .def("layout", &BettiTable::layout)
        .def("render", &BettiTable::render)
        .def("at", &BettiTable::at, py::arg("i"), py::arg("j"))
        .def("gorenstein_symmetric", &BettiTable::gorenstein_symmetric)
        .def(py::self == py::self)
        .def("__repr__", [](const BettiTable& t) { return t.render(); });
    m.def("koszul_betti", &koszul_betti, py::arg("degrees"));
    m.def(
        "link_betti",
        [](const BettiTable& t, const std::vector<long long>& ci, int codim) {
            return link_betti(t, ci, codim ? codim : static_cast<int>(ci.size()));
        },
        py::arg("table"), py::arg("ci"), py::arg("codim") = 0);
    m.def("delpezzo6_betti", [](const std::string& model) {
        return delpezzo6_betti(model == "p1xp1xp1" ? DelPezzo6Model::p1xp1xp1 : DelPezzo6Model::p2xp2);
    }, py::arg("model") = "p2xp2");

    m.def(
        "load_catalog_report",
        [](const std::string& data_dir) {
            return json_to_py(reproduce_tables(Catalog::load(data_dir)).to_json());
        },
        py::arg("data_dir") = "", "per-row table reproduction report");
    m.def(
        "web_dot",
        [](const std::string& data_dir, bool candidates) {
            return export_dot(build_web(Catalog::load(data_dir), candidates));
        },
        py::arg("data_dir") = "", py::arg("candidates") = true);
    m.def(
        "run_paper_checks",
        [](const std::string& only, std::uint64_t seed, std::uint32_t prime, long long budget,
           const std::string& data_dir) {
            RunConfig cfg{prime, seed, budget, data_dir, only};
            py::list out;
            for (const auto& r : run_paper_checks(cfg)) {
                py::dict d;
                d["id"] = r.id;
                d["title"] = r.title;
                d["status"] = r.status_name();
                d["detail"] = r.detail;
                d["seconds"] = r.seconds;
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("only") = "", py::arg("seed") = 1, py::arg("prime") = 101,
        py::arg("budget") = 1'000'000, py::arg("data_dir") = "");
}
