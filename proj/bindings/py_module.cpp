// Python bindings over the main operations: psi backends, the Gr(2,5)
// classifier, cones and f-vectors, trees, Verlinde and the zonotopal formula.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cnr/fiber.hpp"
#include "cnr/formulas.hpp"
#include "cnr/gr25.hpp"
#include "cnr/json_io.hpp"
#include "cnr/presets.hpp"
#include "cnr/sagbi.hpp"
#include "cnr/zonotopal.hpp"

namespace py = pybind11;
using namespace cnr;

namespace {

ConfigInput config_from_rows(int d, int n, const std::vector<std::vector<std::string>>& rows) {
    Json j;
    j["d"] = d;
    j["n"] = n;
    j["A"] = rows;
    return parse_config(j);
}

DegreeVector deg_of(const std::string& s) { return DegreeVector::parse(s); }

QMatrix qmatrix_from_rows(const std::vector<std::vector<std::string>>& rows) {
    QMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            m.at(i, j) = TScalar::parse(rows[i][j]).rational_value();
    return m;
}

}  // namespace

PYBIND11_MODULE(_coxnagata, m) {
    m.doc() = "exact evaluation of the counting function psi(r, u) and its degenerations";

    m.def("scalar_order", [](const std::string& s) { return TScalar::parse(s).order(); });
    m.def("scalar_initial_coefficient", [](const std::string& s) {
        return TScalar::parse(s).initial_coefficient().get_str();
    });
    m.def("scalar_str", [](const std::string& s) { return TScalar::parse(s).str(); });

    m.def(
        "psi",
        [](int d, int n, const std::vector<std::vector<std::string>>& rows,
           const std::string& degree) {
            ConfigInput cfg = config_from_rows(d, n, rows);
            DegreeVector deg = deg_of(degree);
            return cfg.over_t ? psi_direct(cfg.t, deg) : psi_direct(cfg.q, deg);
        },
        py::arg("d"), py::arg("n"), py::arg("rows"), py::arg("degree"),
        "psi from the definition, for a configuration given by scalar literals");

    m.def(
        "psi_generic",
        [](int d, int n, const std::string& degree, uint64_t seed) {
            QConfig cfg = presets::generic_points(d, n, seed);
            return psi_direct(cfg, deg_of(degree));
        },
        py::arg("d"), py::arg("n"), py::arg("degree"), py::arg("seed") = 1);

    m.def("psi_binary",
          [](const std::vector<int>& u, int r) { return psi_binary(u, r); });
    m.def("psi_five_points",
          [](int r, const std::vector<int>& u) { return psi_five_points(r, u); });
    m.def("psi_six_points",
          [](int r, const std::vector<int>& u) { return psi_six_points(r, u); });
    m.def("psi_cayley", [](int r, const std::vector<int>& u) { return psi_cayley(r, u); });
    m.def("gt_count", [](const std::string& degree) { return gt_count(deg_of(degree)); });

    m.def("cremona", [](const std::string& degree, int d) {
        return cremona(deg_of(degree), d).str();
    });
    m.def("weyl_orbit_size", [](const std::string& degree, int d, size_t cap) {
        return weyl_orbit(deg_of(degree), d, cap).elements.size();
    });

    m.def("dd_facets", [](const std::vector<std::vector<long>>& gens) {
        std::vector<std::vector<BigInt>> g;
        for (const auto& row : gens) g.emplace_back(row.begin(), row.end());
        PolyCone cone = dd_facets(g);
        std::vector<std::vector<long>> out;
        for (const auto& h : cone.facets) {
            std::vector<long> row;
            for (const auto& x : h) row.push_back(x.get_si());
            out.push_back(row);
        }
        return out;
    });
    m.def("f_vector", [](const std::vector<std::vector<long>>& gens) {
        std::vector<std::vector<BigInt>> g;
        for (const auto& row : gens) g.emplace_back(row.begin(), row.end());
        return f_vector(dd_facets(g));
    });

    m.def("classify_gr25", [](const std::vector<int>& metric) {
        Metric5 mt;
        if (metric.size() != 10) throw std::invalid_argument("metric needs 10 entries");
        std::copy(metric.begin(), metric.end(), mt.d.begin());
        py::dict out;
        out["tropical"] = tropical_plucker_check(mt);
        if (!tropical_plucker_check(mt)) return out;
        ClassifyResult res = classify_moneric(mt);
        out["moneric"] = res.moneric;
        if (res.moneric) {
            out["type"] = res.cls.type_id;
            out["sagbi"] = res.cls.sagbi;
            std::vector<std::string> monos;
            for (const auto& mm : res.cls.initial_monomials) monos.push_back(mm.str());
            out["in_F"] = monos;
        }
        return out;
    });
    m.def("sweep_gr25", [](int bound, int workers) {
        SweepResult res = enumerate_moneric_classes(bound, workers);
        py::dict out;
        out["classes"] = res.classes.size();
        out["type_tally"] = res.type_tally;
        return out;
    }, py::arg("bound") = 8, py::arg("workers") = 0);

    m.def("decoration_count", [](const std::string& tree, const std::string& degree) {
        return decoration_count(parse_tree(tree), deg_of(degree));
    });
    m.def("verlinde", [](int d, const std::string& l) {
        return verlinde(d, TScalar::parse(l).rational_value());
    });

    m.def("psi_zonotopal",
          [](const std::vector<std::vector<std::string>>& C, int r, const std::vector<int>& v) {
              ZonotopalConfig cfg = arrangement_from_C(qmatrix_from_rows(C));
              return psi_zonotopal(cfg, r, v);
          });
    m.def("arrangement_size", [](const std::vector<std::vector<std::string>>& C) {
        return arrangement_from_C(qmatrix_from_rows(C)).n;
    });

    m.def("cubic_sagbi_check", [] {
        TConfig cfg = presets::cubic_sagbi();
        GeneratorSet set = delpezzo_generators(cfg);
        BinomialReport report = quadratic_binomials(set.initial_monomials());
        py::dict out;
        out["binomials"] = report.total_binomials();
        out["degrees"] = report.degrees.size();
        return out;
    });
}
