// Python bindings for the main operations: group constructions,
// equivalence certificates, cover and coset-graph spectra, arithmetic
// forms, and the projective metric.

#include "specgeo/constructions.hpp"
#include "specgeo/json_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace specgeo;

namespace {

struct PyGroup {
    GroupPtr g;
};

struct PySubgroup {
    Subgroup h;
};

PyGroup symmetric(unsigned n) {
    std::vector<int> cycle(n), swap01(n);
    for (unsigned i = 0; i < n; ++i) {
        cycle[i] = static_cast<int>((i + 1) % n);
        swap01[i] = static_cast<int>(i);
    }
    std::swap(swap01[0], swap01[1]);
    return {permutation_group(n, {swap01, cycle})};
}

py::dict certificate_dict(const Certificate& c) {
    py::dict d;
    d["relation"] = relation_name(c.relation);
    d["verdict"] = c.verdict;
    d["rechecked"] = recheck_certificate(c) == c.verdict;
    d["json"] = certificate_to_json(c).dump();
    return d;
}

Space parse_space(const std::string& s) {
    if (s == "R") return Space::R;
    if (s == "C") return Space::C;
    if (s == "H") return Space::H;
    throw std::invalid_argument("space must be R, C, or H");
}

NumberFieldPtr field_from_coeffs(const std::vector<long>& minpoly) {
    std::vector<Integer> c(minpoly.begin(), minpoly.end());
    return make_number_field(IntegerPolynomial(std::move(c)));
}

NumberFieldElement element_from_coords(const NumberFieldPtr& k, const std::vector<long>& coords) {
    std::vector<Rational> c(coords.begin(), coords.end());
    return NumberFieldElement(k, std::move(c));
}

ProjectivePoint point_from_lists(Space space, const std::vector<std::vector<double>>& coords) {
    std::vector<Quaternion> q;
    for (auto v : coords) {
        v.resize(4, 0.0);
        q.push_back({v[0], v[1], v[2], v[3]});
    }
    return make_projective_point(space, std::move(q));
}

}  // namespace

PYBIND11_MODULE(_specgeo, m) {
    m.doc() = "finite-group spectral equivalence workbench";

    py::class_<PyGroup>(m, "Group")
        .def_property_readonly("order", [](const PyGroup& g) { return g.g->order(); })
        .def_property_readonly("name", [](const PyGroup& g) { return g.g->carrier()->name(); })
        .def_property_readonly("generators",
                               [](const PyGroup& g) { return g.g->generators(); })
        .def("element_order",
             [](const PyGroup& g, int i) { return g.g->element_order(i); })
        .def("mul", [](const PyGroup& g, int a, int b) { return g.g->mul(a, b); })
        .def("inv", [](const PyGroup& g, int a) { return g.g->inv(a); })
        .def("conjugacy_class_count",
             [](const PyGroup& g) { return conjugacy_classes(g.g).count(); })
        .def("find_generating_pair", [](const PyGroup& g) -> py::object {
            auto p = find_generating_pair(g.g);
            if (!p) return py::none();
            return py::make_tuple(p->first, p->second);
        });

    py::class_<PySubgroup>(m, "Subgroup")
        .def_property_readonly("order", [](const PySubgroup& h) { return h.h.order(); })
        .def_property_readonly("members", [](const PySubgroup& h) { return h.h.members; });

    m.def("heisenberg_group",
          [](uint64_t p, unsigned n) { return PyGroup{heisenberg_group(p, n)}; });
    m.def("affine_group", [](uint64_t p, unsigned n) { return PyGroup{affine_group(p, n)}; });
    m.def("cyclic_group", [](uint64_t mm) { return PyGroup{cyclic_group(mm)}; });
    m.def("symmetric_group", &symmetric);

    m.def("subgroup_from", [](const PyGroup& g, const std::vector<int>& seeds) {
        return PySubgroup{subgroup_from(g.g, seeds)};
    });
    m.def("subspace_subgroup",
          [](const PyGroup& g, const std::vector<std::vector<uint64_t>>& basis) {
              return PySubgroup{subspace_subgroup(g.g, basis)};
          });
    m.def("horizontal_subgroup",
          [](const PyGroup& g) { return PySubgroup{horizontal_subgroup(g.g)}; });
    m.def("twisted_horizontal",
          [](const PyGroup& g, const std::vector<std::vector<uint64_t>>& matrix) {
              return PySubgroup{twisted_horizontal(g.g, TwistMap{matrix})};
          });
    m.def("twist_representatives", [](uint64_t p, unsigned n) {
        std::vector<std::vector<std::vector<uint64_t>>> out;
        for (const auto& t : twist_representatives(p, n)) out.push_back(t.matrix);
        return out;
    });

    m.def("certify_almost_conjugate",
          [](const PyGroup& g, const PySubgroup& h, const PySubgroup& k) {
              return certificate_dict(certify_almost_conjugate(g.g, h.h, k.h));
          });
    m.def("certify_elementwise_conjugate",
          [](const PyGroup& g, const PySubgroup& h, const PySubgroup& k) {
              return certificate_dict(certify_elementwise_conjugate(g.g, h.h, k.h));
          });
    m.def("certify_fixed_point_equivalent",
          [](const PyGroup& g, const PySubgroup& h, const PySubgroup& k) {
              return certificate_dict(certify_fixed_point_equivalent(g.g, h.h, k.h));
          });
    m.def("certify_primitive", [](const PyGroup& g, const PySubgroup& h) {
        return certificate_dict(certify_primitive(g.g, h.h));
    });
    m.def("are_subgroups_conjugate",
          [](const PyGroup& g, const PySubgroup& h, const PySubgroup& k) {
              auto w = are_subgroups_conjugate(g.g, h.h, k.h);
              return py::make_tuple(w.conjugate, w.witness);
          });
    m.def("spade_profile", [](const PyGroup& g, const PySubgroup& h) {
        return spade_profile(g.g, h.h);
    });

    m.def(
        "cover_trace_spectrum",
        [](const PyGroup& g, const PySubgroup& h, int a, int b, unsigned L, bool primitive,
           bool require_generating) {
            auto phi = make_homomorphism(g.g, a, b, require_generating);
            auto s = cover_trace_spectrum(g.g, h.h, phi, L, primitive);
            py::dict entries;
            for (const auto& [tr, mult] : s.entries) entries[py::str(to_string(tr))] = mult;
            py::dict d;
            d["entries"] = entries;
            d["cutoff"] = s.cutoff;
            d["primitive_only"] = s.primitive_only;
            d["completeness_floor"] = to_string(s.completeness_floor);
            return d;
        },
        py::arg("group"), py::arg("subgroup"), py::arg("a"), py::arg("b"), py::arg("max_length"),
        py::arg("primitive_only") = false, py::arg("require_generating") = true);

    m.def(
        "schreier_compare",
        [](const PyGroup& g, const PySubgroup& h, const PySubgroup& k,
           const std::vector<int>& gens, const std::string& mode) {
            auto cmp = schreier_spectrum_compare(
                g.g, h.h, k.h, gens, mode == "set" ? SchreierMode::set : SchreierMode::multiset);
            py::dict d;
            d["equal"] = cmp.equal;
            d["degree_h"] = cmp.poly_h.degree();
            d["degree_k"] = cmp.poly_k.degree();
            return d;
        });

    m.def("search_admissible_diagonal",
          [](const std::vector<long>& minpoly, unsigned n, long height) -> py::object {
              auto b = search_admissible_diagonal(field_from_coeffs(minpoly), n, height);
              if (!b) return py::none();
              py::list entries;
              for (const auto& e : b->entries) {
                  py::list coords;
                  for (const auto& c : e.coords()) coords.append(to_string(c));
                  entries.append(coords);
              }
              py::dict d;
              d["entries"] = entries;
              d["distinguished"] = b->distinguished;
              return d;
          });
    m.def("classify_cocompactness",
          [](const std::string& space, const std::vector<long>& minpoly,
             const std::vector<std::vector<long>>& entries, int distinguished) {
              auto k = field_from_coeffs(minpoly);
              std::vector<NumberFieldElement> es;
              for (const auto& e : entries) es.push_back(element_from_coords(k, e));
              auto b = make_model_form(k, std::move(es), distinguished);
              return cocompactness_to_json(classify_cocompactness(parse_space(space), b))
                  .dump();
          },
          py::arg("space"), py::arg("minpoly"), py::arg("entries"),
          py::arg("distinguished") = 0);
    m.def("hyperbolic_distance",
          [](const std::string& space, const std::vector<std::vector<double>>& x,
             const std::vector<std::vector<double>>& y) {
              Space s = parse_space(space);
              return hyperbolic_distance(point_from_lists(s, x), point_from_lists(s, y), s);
          });
}
