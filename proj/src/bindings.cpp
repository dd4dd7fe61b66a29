#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>
#include <string>
#include <vector>

#include "schurq/dimensions.hpp"
#include "schurq/identities.hpp"
#include "schurq/linalg.hpp"
#include "schurq/pfaffian.hpp"
#include "schurq/series.hpp"
#include "schurq/tableaux.hpp"

namespace py = pybind11;
using namespace schurq;

namespace {

StrictPartition to_partition(const std::vector<int>& parts) {
    return StrictPartition(parts);
}

ParameterSequence make_params(const std::string& spec, int count, std::uint64_t seed) {
    if (spec == "random") {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
        std::vector<Rational> values{Rational(0)};
        while (static_cast<int>(values.size()) < count) {
            Rational r = make_rational(num(rng), den(rng));
            bool clash = false;
            for (const Rational& v : values)
                if (v == r || v == -r) clash = true;
            if (!clash) values.push_back(r);
        }
        return ParameterSequence::custom(std::move(values));
    }
    return ParameterSequence::parse(spec, count);
}

std::vector<Rational> to_point(const std::vector<std::string>& coords) {
    std::vector<Rational> point;
    point.reserve(coords.size());
    for (const auto& c : coords) point.push_back(parse_rational(c));
    return point;
}

std::vector<std::string> from_rationals(const std::vector<Rational>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

int param_count_for(const StrictPartition& lambda) { return std::max(2, lambda.max_part() + 2); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact multiparameter Schur P/Q polynomials";

    py::class_<MultiPoly>(m, "Poly")
        .def_property_readonly("n_vars", &MultiPoly::n_vars)
        .def_property_readonly("degree",
                               [](const MultiPoly& p) -> py::object {
                                   auto d = p.degree();
                                   if (!d) return py::none();
                                   return py::int_(*d);
                               })
        .def("is_zero", &MultiPoly::is_zero)
        .def("is_supersymmetric", &MultiPoly::is_supersymmetric)
        .def("restrict_last_var", &MultiPoly::restrict_last_var)
        .def("top_homogeneous", &MultiPoly::top_homogeneous)
        .def("terms",
             [](const MultiPoly& p) {
                 std::vector<std::pair<std::vector<std::uint32_t>, std::string>> out;
                 for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
                     out.emplace_back(it->first.exponents, to_string(it->second));
                 return out;
             })
        .def("evaluate",
             [](const MultiPoly& p, const std::vector<std::string>& point) {
                 return to_string(p.evaluate(to_point(point)));
             })
        .def("__add__", [](const MultiPoly& a, const MultiPoly& b) { return a + b; })
        .def("__sub__", [](const MultiPoly& a, const MultiPoly& b) { return a - b; })
        .def("__mul__", [](const MultiPoly& a, const MultiPoly& b) { return a * b; })
        .def("__eq__", [](const MultiPoly& a, const MultiPoly& b) { return a == b; })
        .def("__str__", &MultiPoly::to_string)
        .def("__repr__", [](const MultiPoly& p) { return "Poly(" + p.to_string() + ")"; });

    m.def("parse_poly", [](const std::string& text, std::size_t n_vars) {
        return MultiPoly::parse(text, n_vars);
    });

    m.def(
        "q_multiparam",
        [](const std::vector<int>& parts, const std::string& params, int n, std::uint64_t seed) {
            auto lam = to_partition(parts);
            return q_multiparam(lam, make_params(params, param_count_for(lam), seed), n);
        },
        py::arg("parts"), py::arg("params") = "classical", py::arg("n") = 2, py::arg("seed") = 1);
    m.def(
        "p_multiparam",
        [](const std::vector<int>& parts, const std::string& params, int n, std::uint64_t seed) {
            auto lam = to_partition(parts);
            return p_multiparam(lam, make_params(params, param_count_for(lam), seed), n);
        },
        py::arg("parts"), py::arg("params") = "classical", py::arg("n") = 2, py::arg("seed") = 1);
    m.def(
        "q_via_unmarked",
        [](const std::vector<int>& parts, const std::string& params, int n, std::uint64_t seed) {
            auto lam = to_partition(parts);
            return q_via_unmarked(lam, make_params(params, param_count_for(lam), seed), n);
        },
        py::arg("parts"), py::arg("params") = "classical", py::arg("n") = 2, py::arg("seed") = 1);
    m.def(
        "giambelli_q",
        [](const std::vector<int>& parts, const std::string& params, int n, std::uint64_t seed) {
            auto lam = to_partition(parts);
            return giambelli_q(lam, make_params(params, param_count_for(lam), seed), n);
        },
        py::arg("parts"), py::arg("params") = "classical", py::arg("n") = 2, py::arg("seed") = 1);

    m.def(
        "nimmo_eval",
        [](const std::vector<int>& parts, const std::string& params,
           const std::vector<std::string>& point, std::uint64_t seed) {
            auto lam = to_partition(parts);
            return to_string(
                nimmo_eval(lam, make_params(params, param_count_for(lam), seed), to_point(point)));
        },
        py::arg("parts"), py::arg("params"), py::arg("point"), py::arg("seed") = 1);
    m.def(
        "definition_oracle_eval",
        [](const std::vector<int>& parts, const std::string& params,
           const std::vector<std::string>& point, std::uint64_t seed) {
            auto lam = to_partition(parts);
            return to_string(definition_oracle_eval(
                lam, make_params(params, param_count_for(lam), seed), to_point(point)));
        },
        py::arg("parts"), py::arg("params"), py::arg("point"), py::arg("seed") = 1);

    m.def(
        "h_weight",
        [](const std::vector<int>& parts, const std::string& params, std::uint64_t seed) {
            auto mu = to_partition(parts);
            return to_string(h_weight(mu, make_params(params, param_count_for(mu), seed)));
        },
        py::arg("parts"), py::arg("params") = "factorial", py::arg("seed") = 1);
    m.def(
        "node_point",
        [](const std::vector<int>& parts, const std::string& params, int n, std::uint64_t seed) {
            auto lam = to_partition(parts);
            return from_rationals(
                node_point(lam, make_params(params, param_count_for(lam), seed), n));
        },
        py::arg("parts"), py::arg("params"), py::arg("n"), py::arg("seed") = 1);

    m.def("strict_partitions_of", [](int n) {
        std::vector<std::vector<int>> out;
        for (const auto& p : strict_partitions_of(n)) out.push_back(p.parts());
        return out;
    });

    m.def("g_paths", [](const std::vector<int>& inner, const std::vector<int>& outer) {
        return g_paths(to_partition(inner), to_partition(outer)).get_str();
    });
    m.def("g_formula", [](const std::vector<int>& inner, const std::vector<int>& outer) {
        return g_formula(to_partition(inner), to_partition(outer)).get_str();
    });
    m.def("g_pfaffian", [](const std::vector<int>& inner, const std::vector<int>& outer) {
        return g_pfaffian(to_partition(inner), to_partition(outer)).get_str();
    });
    m.def("g_unskew",
          [](const std::vector<int>& parts) { return g_unskew(to_partition(parts)).get_str(); });

    m.def(
        "pieri_check",
        [](const std::vector<int>& parts, const std::string& params, int n, std::uint64_t seed) {
            auto mu = to_partition(parts);
            return pieri_check(mu, make_params(params, param_count_for(mu), seed), n);
        },
        py::arg("parts"), py::arg("params"), py::arg("n"), py::arg("seed") = 1);
    m.def(
        "vanishing_check",
        [](const std::vector<int>& mu_parts, const std::vector<int>& lam_parts,
           const std::string& params, std::uint64_t seed) {
            auto mu = to_partition(mu_parts);
            auto lam = to_partition(lam_parts);
            int count = std::max(param_count_for(mu), param_count_for(lam));
            return vanishing_check(mu, lam, make_params(params, count, seed));
        },
        py::arg("mu"), py::arg("lam"), py::arg("params") = "factorial", py::arg("seed") = 1);
    m.def(
        "interpolate",
        [](const std::vector<int>& parts, const std::string& params, int n, std::uint64_t seed) {
            auto mu = to_partition(parts);
            return from_rationals(
                interpolate(mu, make_params(params, param_count_for(mu), seed), n));
        },
        py::arg("parts"), py::arg("params"), py::arg("n") = 3, py::arg("seed") = 1);
    m.def(
        "one_row_genfun_check",
        [](const std::string& params, int n, int order, std::uint64_t seed) {
            return one_row_genfun_check(make_params(params, order + 2, seed), n, order);
        },
        py::arg("params"), py::arg("n"), py::arg("order") = 8, py::arg("seed") = 1);
    m.def(
        "two_row_relations_check",
        [](int k, int l, const std::string& params, int n, std::uint64_t seed) {
            return two_row_relations_check(k, l, make_params(params, std::max(k, l) + 2, seed), n);
        },
        py::arg("k"), py::arg("l"), py::arg("params"), py::arg("n") = 2, py::arg("seed") = 1);

    m.def(
        "transition_matrix",
        [](const std::string& a_spec, const std::string& b_spec, int max_weight,
           std::uint64_t seed) {
            auto t = transition_matrix(make_params(a_spec, max_weight + 2, seed),
                                       make_params(b_spec, max_weight + 2, seed + 1), max_weight);
            std::vector<std::vector<int>> shapes;
            for (const auto& s : t.shapes) shapes.push_back(s.parts());
            std::vector<std::vector<std::string>> entries;
            for (const auto& row : t.entries) entries.push_back(from_rationals(row));
            return py::make_tuple(shapes, entries);
        },
        py::arg("a_params"), py::arg("b_params"), py::arg("max_weight") = 4, py::arg("seed") = 1);
}
