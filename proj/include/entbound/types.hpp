#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace entbound {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Malformed or inconsistent input: wrong sizes, broken invariants, bad tags.
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of a bound curve or statistic.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// A numerical routine failed to converge or produced unusable output.
struct NumericalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A Schmidt-rank-1 witness state certifies nothing.
struct NotEntangled : InvalidInput {
  using InvalidInput::InvalidInput;
};

/// File could not be read or written.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Squared Schmidt coefficients: nonnegative, decreasing, summing to one.
struct SchmidtVector {
  std::vector<double> values;

  int m() const { return static_cast<int>(values.size()); }
};

/// Pure state on C^m (x) C^n with m <= n. Amplitudes are indexed
/// a * dim_b + b over the product basis |a>|b>.
struct PureState {
  int dim_a = 0;
  int dim_b = 0;
  ComplexVector amplitudes;

  int dim() const { return dim_a * dim_b; }
};

/// Mixed state on C^m (x) C^n with m <= n: Hermitian, unit trace,
/// positive semidefinite up to numerical noise.
struct DensityMatrix {
  int dim_a = 0;
  int dim_b = 0;
  ComplexMatrix matrix;

  int dim() const { return dim_a * dim_b; }
};

/// Validating constructors. Each throws InvalidInput if the stated
/// invariants of the type do not hold.
SchmidtVector make_schmidt_vector(std::vector<double> values);
PureState make_pure_state(int dim_a, int dim_b, ComplexVector amplitudes);
DensityMatrix make_density_matrix(int dim_a, int dim_b, ComplexMatrix matrix);

DensityMatrix pure_to_density(const PureState& psi);

}  // namespace entbound
