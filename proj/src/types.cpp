#include "entbound/types.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "entbound/linalg.hpp"

namespace entbound {

namespace {

constexpr double kInvariantTol = 1e-10;

void check_dims(int dim_a, int dim_b) {
  if (dim_a < 1 || dim_b < 1) {
    throw InvalidInput("subsystem dimensions must be positive");
  }
  if (dim_a > dim_b) {
    throw InvalidInput(
        "dim_a must not exceed dim_b; reorder the bipartition so the "
        "smaller subsystem comes first");
  }
}

}  // namespace

SchmidtVector make_schmidt_vector(std::vector<double> values) {
  if (values.empty()) {
    throw InvalidInput("Schmidt vector must not be empty");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < -kInvariantTol) {
      throw InvalidInput("Schmidt values must be nonnegative");
    }
    if (values[i] < 0.0) values[i] = 0.0;
    if (i > 0 && values[i] > values[i - 1] + kInvariantTol) {
      throw InvalidInput("Schmidt values must be decreasing");
    }
    sum += values[i];
  }
  if (std::abs(sum - 1.0) > kInvariantTol) {
    throw InvalidInput("Schmidt values must sum to 1, got " +
                       std::to_string(sum));
  }
  return SchmidtVector{std::move(values)};
}

PureState make_pure_state(int dim_a, int dim_b, ComplexVector amplitudes) {
  check_dims(dim_a, dim_b);
  if (amplitudes.size() != static_cast<Eigen::Index>(dim_a) * dim_b) {
    throw InvalidInput("amplitude vector has wrong length");
  }
  const double norm2 = amplitudes.squaredNorm();
  if (std::abs(norm2 - 1.0) > kInvariantTol) {
    throw InvalidInput("pure state is not normalized: |psi|^2 = " +
                       std::to_string(norm2));
  }
  return PureState{dim_a, dim_b, std::move(amplitudes)};
}

DensityMatrix make_density_matrix(int dim_a, int dim_b, ComplexMatrix matrix) {
  check_dims(dim_a, dim_b);
  const Eigen::Index d = static_cast<Eigen::Index>(dim_a) * dim_b;
  if (matrix.rows() != d || matrix.cols() != d) {
    throw InvalidInput("density matrix has wrong shape");
  }
  const double herm_dev =
      (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > kInvariantTol) {
    throw InvalidInput("density matrix is not Hermitian, deviation " +
                       std::to_string(herm_dev));
  }
  const double tr_dev = std::abs(matrix.trace() - Complex{1.0, 0.0});
  if (tr_dev > kInvariantTol) {
    throw InvalidInput("density matrix trace differs from 1 by " +
                       std::to_string(tr_dev));
  }
  const auto eig = hermitian_eigendecomposition(matrix);
  if (eig.eigenvalues.minCoeff() < -kInvariantTol) {
    throw InvalidInput("density matrix has negative eigenvalue " +
                       std::to_string(eig.eigenvalues.minCoeff()));
  }
  return DensityMatrix{dim_a, dim_b, std::move(matrix)};
}

DensityMatrix pure_to_density(const PureState& psi) {
  ComplexMatrix projector = psi.amplitudes * psi.amplitudes.adjoint();
  return DensityMatrix{psi.dim_a, psi.dim_b, std::move(projector)};
}

}  // namespace entbound
