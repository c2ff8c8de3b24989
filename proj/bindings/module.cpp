#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "entbound/curves.hpp"
#include "entbound/fixtures.hpp"
#include "entbound/linalg.hpp"
#include "entbound/measures.hpp"
#include "entbound/oracle.hpp"
#include "entbound/relations.hpp"
#include "entbound/sampler.hpp"
#include "entbound/witness.hpp"

namespace py = pybind11;
using namespace entbound;

namespace {

MeasureKind measure_from_string(const std::string& name) {
  const auto kind = parse_measure(name);
  if (!kind) throw InvalidInput("unknown measure: " + name);
  return *kind;
}

CurveTag curve_from_string(const std::string& name) {
  const auto tag = parse_curve_tag(name);
  if (!tag) throw InvalidInput("unknown curve tag: " + name);
  return *tag;
}

SchmidtVector schmidt_from_list(std::vector<double> values) {
  return make_schmidt_vector(std::move(values));
}

Eigen::MatrixXd rows_to_matrix(const std::vector<ScatterRow>& rows) {
  Eigen::MatrixXd out(rows.size(), 2);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out(i, 0) = rows[i].lambda;
    out(i, 1) = rows[i].measure_value;
  }
  return out;
}

Eigen::MatrixXd samples_to_matrix(const std::vector<CurveSample>& rows) {
  Eigen::MatrixXd out(rows.size(), 2);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out(i, 0) = rows[i].lambda;
    out(i, 1) = rows[i].value;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Certified lower bounds on bipartite entanglement measures from a "
      "single witness expectation value";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NotEntangled>(m, "NotEntangled", PyExc_ValueError);
  py::register_exception<NumericalFailure>(m, "NumericalFailure",
                                           PyExc_ArithmeticError);

  py::class_<PureState>(m, "PureState")
      .def_readonly("dim_a", &PureState::dim_a)
      .def_readonly("dim_b", &PureState::dim_b)
      .def_readonly("amplitudes", &PureState::amplitudes);

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def_readonly("dim_a", &DensityMatrix::dim_a)
      .def_readonly("dim_b", &DensityMatrix::dim_b)
      .def_readonly("matrix", &DensityMatrix::matrix);

  py::class_<LambdaValue>(m, "LambdaValue")
      .def_readonly("value", &LambdaValue::lambda)
      .def_readonly("m", &LambdaValue::m)
      .def("__repr__", [](const LambdaValue& lv) {
        return "LambdaValue(value=" + std::to_string(lv.lambda) +
               ", m=" + std::to_string(lv.m) + ")";
      });

  py::class_<WitnessSpec>(m, "WitnessSpec")
      .def_readonly("phi", &WitnessSpec::phi)
      .def_readonly("s1", &WitnessSpec::s1)
      .def_readonly("m", &WitnessSpec::m)
      .def_property_readonly("schmidt_values", [](const WitnessSpec& w) {
        return w.schmidt.values;
      });

  py::class_<LOOTerm>(m, "LOOTerm")
      .def_readonly("coefficient", &LOOTerm::coefficient)
      .def_readonly("op_a", &LOOTerm::op_a)
      .def_readonly("op_b", &LOOTerm::op_b);

  py::class_<BoundReport>(m, "BoundReport")
      .def_property_readonly(
          "lambda_value",
          [](const BoundReport& r) { return r.lambda.lambda; })
      .def_property_readonly("m",
                             [](const BoundReport& r) { return r.lambda.m; })
      .def_readonly("eof", &BoundReport::eof_lb)
      .def_readonly("gme", &BoundReport::gme_lb)
      .def_readonly("concurrence", &BoundReport::concurrence_lb)
      .def_readonly("cren", &BoundReport::cren_lb)
      .def_readonly("gconcurrence", &BoundReport::gconcurrence_lb)
      .def("as_dict",
           [](const BoundReport& r) {
             py::dict d;
             for (MeasureKind kind : kAllMeasures) {
               d[py::str(std::string(measure_name(kind)))] =
                   r.bound_for(kind);
             }
             return d;
           })
      .def("branch_note", [](const BoundReport& r, const std::string& name) {
        return r.branch_note(measure_from_string(name));
      });

  // state constructors
  m.def(
      "pure_state",
      [](int dim_a, int dim_b, ComplexVector amplitudes) {
        return make_pure_state(dim_a, dim_b, std::move(amplitudes));
      },
      py::arg("dim_a"), py::arg("dim_b"), py::arg("amplitudes"));
  m.def(
      "density_matrix",
      [](int dim_a, int dim_b, ComplexMatrix matrix) {
        return make_density_matrix(dim_a, dim_b, std::move(matrix));
      },
      py::arg("dim_a"), py::arg("dim_b"), py::arg("matrix"));
  m.def("pure_to_density", &pure_to_density, py::arg("psi"));
  m.def("max_entangled_state",
        py::overload_cast<int, int>(&max_entangled_state), py::arg("dim_a"),
        py::arg("dim_b"));
  m.def("psi_s_state", &psi_s_state);
  m.def("dicke_4_2_state", &dicke_4_2_state);

  // Schmidt data and pure measures
  m.def("schmidt_values", [](const PureState& psi) {
    return schmidt_decompose(psi).values;
  });
  m.def("eof_pure", [](std::vector<double> mu) {
    return eof_pure(schmidt_from_list(std::move(mu)));
  });
  m.def("gme_pure", [](std::vector<double> mu) {
    return gme_pure(schmidt_from_list(std::move(mu)));
  });
  m.def("concurrence_pure", [](std::vector<double> mu) {
    return concurrence_pure(schmidt_from_list(std::move(mu)));
  });
  m.def("negativity_pure", [](std::vector<double> mu) {
    return negativity_pure(schmidt_from_list(std::move(mu)));
  });
  m.def("gconcurrence_pure", [](std::vector<double> mu) {
    return gconcurrence_pure(schmidt_from_list(std::move(mu)));
  });
  m.def("lambda_of_schmidt", [](std::vector<double> mu) {
    return lambda_of_schmidt(schmidt_from_list(std::move(mu)));
  });

  // boundary curves and hulls
  m.def("gamma_plus", &gamma_plus, py::arg("lam"), py::arg("m"));
  m.def("gamma_minus", &gamma_minus, py::arg("lam"), py::arg("m"));
  m.def("beta_curve", &beta_curve, py::arg("lam"), py::arg("m"));
  m.def("r_curve", &r_curve, py::arg("lam"), py::arg("m"));
  m.def("co_r", &co_r, py::arg("lam"), py::arg("m"));
  m.def("q_curve", &q_curve, py::arg("lam"), py::arg("m"));
  m.def("p_curve", &p_curve, py::arg("lam"), py::arg("m"));
  m.def("co_p", &co_p, py::arg("lam"), py::arg("m"));
  m.def("cren_bound", &cren_bound, py::arg("lam"), py::arg("m"));
  m.def("k_curve", &k_curve, py::arg("lam"), py::arg("m"));
  m.def("co_k", &co_k, py::arg("lam"), py::arg("m"));
  m.def("boundary_schmidt_vector", [](double t, int m_dim) {
    return boundary_schmidt_vector(t, m_dim).values;
  });

  // witness statistic and reports
  m.def("make_witness", &make_witness, py::arg("phi"));
  m.def("lambda_from_fidelity", &lambda_from_fidelity, py::arg("fidelity"),
        py::arg("s1"), py::arg("m"));
  m.def("compute_lambda", &compute_lambda, py::arg("rho"), py::arg("witness"));
  m.def("fidelity_with_pure", &fidelity_with_pure, py::arg("rho"),
        py::arg("phi"));
  m.def("witness_operator", &witness_operator, py::arg("witness"));
  m.def("loo_expansion", &loo_expansion, py::arg("witness"));
  m.def(
      "bound_report",
      [](const LambdaValue& lam) { return bound_report(lam); },
      py::arg("lam"));
  m.def(
      "bound_report_from_fidelity",
      [](double fidelity, double s1, int m_dim) {
        return bound_report(lambda_from_fidelity(fidelity, s1, m_dim));
      },
      py::arg("fidelity"), py::arg("s1"), py::arg("m"));

  // oracles
  m.def("wootters_concurrence", &wootters_concurrence, py::arg("rho"));
  m.def("wootters_eof", &wootters_eof, py::arg("rho"));
  m.def("negativity_mixed", &negativity_mixed, py::arg("rho"));
  m.def(
      "convex_roof_upper",
      [](const DensityMatrix& rho, const std::string& measure, int trials,
         int ensemble_size, std::uint64_t seed) {
        return convex_roof_upper(rho, measure_from_string(measure), trials,
                                 ensemble_size, seed)
            .value;
      },
      py::arg("rho"), py::arg("measure"), py::arg("trials") = 2000,
      py::arg("ensemble_size") = 0, py::arg("seed") = 12345);

  // relations
  m.def("cren_upper_from_gme", &cren_upper_from_gme, py::arg("e_g"),
        py::arg("m"));
  m.def("gme_lower_from_cren", &gme_lower_from_cren, py::arg("nv"),
        py::arg("m"));
  m.def("tradeoff_slack", [](std::vector<double> mu) {
    return tradeoff_slack(schmidt_from_list(std::move(mu)));
  });

  // random states and sampling
  m.def(
      "random_pure_state",
      [](int dim_a, int dim_b, std::uint64_t seed) {
        return random_pure_state(dim_a, dim_b, seed);
      },
      py::arg("dim_a"), py::arg("dim_b"), py::arg("seed"));
  m.def(
      "random_density_matrix",
      [](int dim_a, int dim_b, int rank, std::uint64_t seed) {
        return random_density_matrix(dim_a, dim_b, rank, seed);
      },
      py::arg("dim_a"), py::arg("dim_b"), py::arg("rank"), py::arg("seed"));
  m.def(
      "random_schmidt_vector",
      [](int m_dim, std::uint64_t seed) {
        return random_schmidt_vector(m_dim, seed).values;
      },
      py::arg("m"), py::arg("seed"));
  m.def(
      "scatter",
      [](int m_dim, int n_samples, const std::string& measure,
         std::uint64_t seed) {
        return rows_to_matrix(
            scatter(m_dim, n_samples, measure_from_string(measure), seed));
      },
      py::arg("m"), py::arg("n_samples"), py::arg("measure"), py::arg("seed"));
  m.def(
      "curve_table",
      [](int m_dim, const std::string& tag, int grid_points) {
        return samples_to_matrix(
            curve_table(m_dim, curve_from_string(tag), grid_points));
      },
      py::arg("m"), py::arg("curve"), py::arg("grid_points"));

  m.attr("MEASURES") = py::make_tuple("eof", "gme", "concurrence", "cren",
                                      "gconcurrence");
  m.attr("CURVES") =
      py::make_tuple("R", "coR", "Q", "P", "coP", "K", "coK", "CREN");
}
