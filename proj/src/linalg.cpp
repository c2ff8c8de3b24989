#include "entbound/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

namespace entbound {

HermitianEigensystem hermitian_eigendecomposition(const ComplexMatrix& matrix,
                                                  double hermiticity_tol) {
  if (matrix.rows() == 0 || matrix.rows() != matrix.cols()) {
    throw InvalidInput("eigendecomposition needs a nonempty square matrix");
  }
  const double dev = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
  if (dev > hermiticity_tol) {
    throw InvalidInput("matrix is not Hermitian within tolerance");
  }
  // Symmetrize so roundoff in the input cannot leak into the solver.
  const ComplexMatrix sym = 0.5 * (matrix + matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("Hermitian eigensolver did not converge");
  }
  const Eigen::Index n = matrix.rows();
  HermitianEigensystem out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    out.eigenvectors.col(j) = solver.eigenvectors().col(n - 1 - j);
  }
  return out;
}

RealVector singular_values(const ComplexMatrix& matrix) {
  if (matrix.rows() == 0 || matrix.cols() == 0) {
    throw InvalidInput("singular values of an empty matrix");
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(matrix);
  return svd.singularValues();
}

ComplexMatrix reshape_to_matrix(const PureState& psi) {
  ComplexMatrix out(psi.dim_a, psi.dim_b);
  for (int a = 0; a < psi.dim_a; ++a) {
    for (int b = 0; b < psi.dim_b; ++b) {
      out(a, b) = psi.amplitudes[static_cast<Eigen::Index>(a) * psi.dim_b + b];
    }
  }
  return out;
}

SchmidtVector schmidt_decompose(const PureState& psi) {
  if (psi.dim_a < 1 || psi.dim_b < psi.dim_a ||
      psi.amplitudes.size() != static_cast<Eigen::Index>(psi.dim())) {
    throw InvalidInput("malformed pure state");
  }
  const double norm2 = psi.amplitudes.squaredNorm();
  if (std::abs(norm2 - 1.0) > 1e-6) {
    throw InvalidInput("state norm deviates too far from 1");
  }
  const RealVector sigma = singular_values(reshape_to_matrix(psi));
  std::vector<double> values(psi.dim_a, 0.0);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    values[i] = sigma[i] * sigma[i];
    sum += values[i];
  }
  for (double& v : values) v /= sum;
  return SchmidtVector{std::move(values)};
}

ComplexMatrix partial_transpose(const DensityMatrix& rho) {
  const int m = rho.dim_a;
  const int n = rho.dim_b;
  ComplexMatrix out(rho.dim(), rho.dim());
  for (int a = 0; a < m; ++a) {
    for (int ap = 0; ap < m; ++ap) {
      for (int b = 0; b < n; ++b) {
        for (int bp = 0; bp < n; ++bp) {
          out(a * n + b, ap * n + bp) = rho.matrix(a * n + bp, ap * n + b);
        }
      }
    }
  }
  return out;
}

double trace_norm(const ComplexMatrix& matrix) {
  if (matrix.rows() != matrix.cols()) {
    throw InvalidInput("trace norm needs a square matrix");
  }
  return singular_values(matrix).sum();
}

double fidelity_with_pure(const DensityMatrix& rho, const PureState& phi) {
  if (rho.dim_a != phi.dim_a || rho.dim_b != phi.dim_b) {
    throw InvalidInput("state and reference dimensions do not match");
  }
  const Complex raw =
      (phi.amplitudes.adjoint() * rho.matrix * phi.amplitudes)(0, 0);
  const double f = raw.real();
  if (f < -1e-8 || f > 1.0 + 1e-8) {
    throw NumericalFailure("overlap outside [0, 1] beyond tolerance");
  }
  return std::clamp(f, 0.0, 1.0);
}

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix random_complex_gaussian(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    for (Eigen::Index j = 0; j < out.cols(); ++j) {
      out(i, j) = Complex{normal(rng), normal(rng)} * M_SQRT1_2;
    }
  }
  return out;
}

PureState random_pure_state(int dim_a, int dim_b, Rng& rng) {
  if (dim_a < 1 || dim_b < dim_a) {
    throw InvalidInput("need 1 <= dim_a <= dim_b");
  }
  ComplexVector amps = random_complex_gaussian(dim_a * dim_b, 1, rng);
  amps.normalize();
  return PureState{dim_a, dim_b, std::move(amps)};
}

PureState random_pure_state(int dim_a, int dim_b, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return random_pure_state(dim_a, dim_b, rng);
}

SchmidtVector random_schmidt_vector(int m, Rng& rng) {
  if (m < 1) throw InvalidInput("Schmidt vector length must be positive");
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<double> values(m);
  double sum = 0.0;
  for (double& v : values) {
    v = -std::log1p(-uniform(rng));  // Exp(1): uniform on the simplex
    sum += v;
  }
  for (double& v : values) v /= sum;
  std::sort(values.begin(), values.end(), std::greater<>());
  return SchmidtVector{std::move(values)};
}

SchmidtVector random_schmidt_vector(int m, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return random_schmidt_vector(m, rng);
}

DensityMatrix random_density_matrix(int dim_a, int dim_b, int rank, Rng& rng) {
  if (dim_a < 1 || dim_b < dim_a || rank < 1) {
    throw InvalidInput("need 1 <= dim_a <= dim_b and rank >= 1");
  }
  const ComplexMatrix g = random_complex_gaussian(dim_a * dim_b, rank, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return make_density_matrix(dim_a, dim_b, std::move(rho));
}

DensityMatrix random_density_matrix(int dim_a, int dim_b, int rank,
                                    std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return random_density_matrix(dim_a, dim_b, rank, rng);
}

ComplexMatrix random_isometry(int rows, int cols, Rng& rng) {
  if (cols < 1 || rows < cols) {
    throw InvalidInput("isometry needs rows >= cols >= 1");
  }
  const ComplexMatrix g = random_complex_gaussian(rows, cols, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q =
      qr.householderQ() * ComplexMatrix::Identity(rows, cols);
  // Fix column phases from the R diagonal so the distribution is Haar.
  const ComplexMatrix r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (int j = 0; j < cols; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

ComplexMatrix random_unitary(int dim, Rng& rng) {
  return random_isometry(dim, dim, rng);
}

PureState random_product_state(int dim_a, int dim_b, Rng& rng) {
  if (dim_a < 1 || dim_b < dim_a) {
    throw InvalidInput("need 1 <= dim_a <= dim_b");
  }
  ComplexVector a = random_complex_gaussian(dim_a, 1, rng);
  ComplexVector b = random_complex_gaussian(dim_b, 1, rng);
  a.normalize();
  b.normalize();
  ComplexVector amps(dim_a * dim_b);
  for (int i = 0; i < dim_a; ++i) {
    for (int k = 0; k < dim_b; ++k) {
      amps[static_cast<Eigen::Index>(i) * dim_b + k] = a[i] * b[k];
    }
  }
  return PureState{dim_a, dim_b, std::move(amps)};
}

}  // namespace entbound
