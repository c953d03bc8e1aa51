#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <vector>

#include "qspace/fock.hpp"
#include "qspace/ladder.hpp"
#include "qspace/observables.hpp"
#include "qspace/oracle.hpp"
#include "qspace/products.hpp"
#include "qspace/state_json.hpp"

namespace py = pybind11;
using namespace qspace;

namespace {

OneBodyCoeffs coeffs_from_rows(const std::vector<std::vector<Amplitude>>& rows) {
    const std::size_t dim = rows.size();
    OneBodyCoeffs t(dim);
    for (std::size_t a = 0; a < dim; ++a) {
        if (rows[a].size() != dim) {
            throw std::domain_error("one-body coefficients must be a square matrix");
        }
        for (std::size_t b = 0; b < dim; ++b) {
            t.at(a, b) = rows[a][b];
        }
    }
    return t;
}

MatchMatrix matrix_from_rows(const std::vector<std::vector<int>>& rows) {
    const std::size_t n = rows.size();
    std::vector<int> entries;
    entries.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) {
            throw std::domain_error("match matrix must be square");
        }
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return MatchMatrix(n, std::move(entries));
}

StateVector state_from_terms(Statistics stats, Mode dim,
                             const std::vector<std::pair<std::vector<Mode>, Amplitude>>& terms) {
    StateBuilder b(stats, dim);
    for (const auto& [modes, amp] : terms) {
        b.add_term(modes, amp);
    }
    return b.build();
}

}  // namespace

PYBIND11_MODULE(_qspace, m) {
    m.doc() = "Occupation-number second-quantization toolkit";

    py::enum_<Statistics>(m, "Statistics")
        .value("BOSE", Statistics::Bose)
        .value("FERMI", Statistics::Fermi);

    py::class_<BasisKet>(m, "BasisKet")
        .def(py::init<Statistics, std::vector<Mode>>(), py::arg("stats"), py::arg("modes"))
        .def_property_readonly("stats", &BasisKet::stats)
        .def_property_readonly("modes", [](const BasisKet& k) { return k.modes(); })
        .def_property_readonly("particle_count", &BasisKet::particle_count)
        .def("__eq__", [](const BasisKet& a, const BasisKet& b) { return a == b; })
        .def("__repr__", [](const BasisKet& k) { return format_ket(k); });

    py::class_<StateVector>(m, "StateVector")
        .def(py::init<Statistics, Mode>(), py::arg("stats"), py::arg("dim"))
        .def_property_readonly("stats", &StateVector::stats)
        .def_property_readonly("dim", &StateVector::dim)
        .def("amplitude", &StateVector::amplitude)
        .def("is_zero", &StateVector::is_zero)
        .def("__len__", &StateVector::size)
        .def("terms",
             [](const StateVector& x) {
                 std::vector<std::pair<std::vector<Mode>, Amplitude>> out;
                 for (const auto& [ket, amp] : x.terms()) {
                     out.emplace_back(ket.modes(), amp);
                 }
                 return out;
             })
        .def("__eq__", [](const StateVector& a, const StateVector& b) { return a == b; });

    m.def("canonicalize",
          [](Statistics stats, const std::vector<Mode>& modes, Mode dim) {
              const Canonical c = canonicalize(stats, modes, dim);
              return std::make_pair(c.ket, c.phase);
          },
          py::arg("stats"), py::arg("modes"), py::arg("dim"));
    m.def("state", &state_from_terms, py::arg("stats"), py::arg("dim"), py::arg("terms"),
          "Build a state from (modes, amplitude) pairs; folds phases and prunes zeros.");
    m.def("vacuum", &vacuum, py::arg("stats"), py::arg("dim"));
    m.def("add", &add);
    m.def("scale", &scale);
    m.def("occupation", [](const BasisKet& k) {
        return std::map<Mode, std::size_t>(occupation(k));
    });

    m.def("permanent", [](const std::vector<std::vector<int>>& rows) {
        return permanent(matrix_from_rows(rows));
    });
    m.def("determinant", [](const std::vector<std::vector<int>>& rows) {
        return determinant(matrix_from_rows(rows));
    });
    m.def("ket_inner", &ket_inner);
    m.def("inner", &inner);
    m.def("norm", &norm);
    m.def("normalize", &normalize);
    m.def("is_similar", &is_similar, py::arg("x"), py::arg("y"), py::arg("tol") = kDefaultTol);

    py::class_<OperatorExpr>(m, "OperatorExpr")
        .def_property_readonly("stats", &OperatorExpr::stats)
        .def("__len__", [](const OperatorExpr& e) { return e.strings().size(); });

    m.def("apply_create", &apply_create, py::arg("mode"), py::arg("state"));
    m.def("apply_annihilate", &apply_annihilate, py::arg("mode"), py::arg("state"));
    m.def("apply_expr", &apply_expr, py::arg("expr"), py::arg("state"));

    py::class_<RelationReport>(m, "RelationReport")
        .def_readonly("checks", &RelationReport::checks)
        .def_readonly("max_residual", &RelationReport::max_residual)
        .def("ok", &RelationReport::ok)
        .def_property_readonly("violation_count",
                               [](const RelationReport& r) { return r.violations.size(); });

    m.def("check_ccr",
          [](Mode dim, std::size_t max_particles, double tol) {
              return check_ccr(dim, basis_states(Statistics::Bose, dim, max_particles), tol);
          },
          py::arg("dim"), py::arg("max_particles") = 4, py::arg("tol") = kDefaultTol);
    m.def("check_car",
          [](Mode dim, double tol) {
              return check_car(dim, basis_states(Statistics::Fermi, dim, dim), tol);
          },
          py::arg("dim"), py::arg("tol") = kDefaultTol);

    m.def("one_body", &coeffs_from_rows,
          "One-body coefficient matrix from nested lists (row-major).");
    py::class_<OneBodyCoeffs>(m, "OneBodyCoeffs")
        .def_property_readonly("dim", &OneBodyCoeffs::dim)
        .def("at", [](const OneBodyCoeffs& t, std::size_t a, std::size_t b) { return t.at(a, b); })
        .def("is_hermitian", &OneBodyCoeffs::is_hermitian, py::arg("tol") = kDefaultTol);
    py::class_<TwoBodyCoeffs>(m, "TwoBodyCoeffs")
        .def_property_readonly("dim", &TwoBodyCoeffs::dim)
        .def("at", [](const TwoBodyCoeffs& v, std::size_t a, std::size_t b, std::size_t c,
                      std::size_t d) { return v.at(a, b, c, d); });

    m.def("build_one_body", &build_one_body, py::arg("t"), py::arg("stats"));
    m.def("build_two_body", &build_two_body, py::arg("v"), py::arg("stats"));
    m.def("correlation_coeffs", &correlation_coeffs, py::arg("a"), py::arg("b"));
    m.def("one_body_from_spectral",
          [](const std::vector<double>& eigvals, const OneBodyCoeffs& eigvecs) {
              return one_body_from_spectral(eigvals, eigvecs);
          });
    m.def("sigma_n", [](double theta, double phi) { return sigma_n({theta, phi}); },
          py::arg("theta"), py::arg("phi"));
    m.def("sigma_z", &sigma_z);
    m.def("expectation", &expectation, py::arg("expr"), py::arg("state"));
    m.def("up_down_pair_state", &up_down_pair_state);
    m.def("spin_correlation_scan",
          [](const StateVector& pair_state, std::size_t theta_steps, std::size_t phi_steps) {
              std::vector<std::tuple<double, double, double>> out;
              for (const auto& s : spin_correlation_scan(pair_state, theta_steps, phi_steps)) {
                  out.emplace_back(s.theta, s.phi, s.value);
              }
              return out;
          },
          py::arg("pair_state"), py::arg("theta_steps") = 19, py::arg("phi_steps") = 12);

    py::class_<LabeledVector>(m, "LabeledVector")
        .def_property_readonly("particle_count", &LabeledVector::particle_count)
        .def_property_readonly("dim", &LabeledVector::dim)
        .def("amplitudes", [](const LabeledVector& u) { return u.amplitudes(); });
    py::class_<LabeledOperator>(m, "LabeledOperator")
        .def("apply", &LabeledOperator::apply)
        .def("expectation", &LabeledOperator::expectation);

    m.def("embed", &embed, py::arg("ket"), py::arg("dim"));
    m.def("embed_state", &embed_state);
    m.def("labeled_inner", &labeled_inner);
    m.def("first_quantized_one_body", &first_quantized_one_body, py::arg("t"), py::arg("particles"));
    m.def("first_quantized_two_body", &first_quantized_two_body, py::arg("a"), py::arg("b"),
          py::arg("particles"));

    py::class_<ComparisonReport>(m, "ComparisonReport")
        .def_readonly("trials", &ComparisonReport::trials)
        .def_readonly("checks", &ComparisonReport::checks)
        .def_readonly("max_error", &ComparisonReport::max_error)
        .def_readonly("failures", &ComparisonReport::failures)
        .def("ok", &ComparisonReport::ok);
    m.def("compare_formulations", &compare_formulations, py::arg("seed"), py::arg("trials"));

    m.def("state_to_json", [](const StateVector& x) { return state_to_json(x).dump(); });
    m.def("state_from_json", [](const std::string& text) {
        const LoadedState loaded = state_from_json(nlohmann::json::parse(text));
        return std::make_pair(loaded.state, loaded.notes);
    });

    py::register_exception<FormatError>(m, "FormatError");
}
