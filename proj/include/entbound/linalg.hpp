#pragma once

#include <cstdint>
#include <random>

#include "entbound/types.hpp"

namespace entbound {

struct HermitianEigensystem {
  RealVector eigenvalues;      // decreasing
  ComplexMatrix eigenvectors;  // orthonormal columns, matching order
};

/// Diagonalizes a Hermitian matrix. Eigenvalues come out decreasing.
/// Throws InvalidInput if max|M - M^dag| exceeds hermiticity_tol.
HermitianEigensystem hermitian_eigendecomposition(const ComplexMatrix& matrix,
                                                  double hermiticity_tol = 1e-8);

/// Singular values in decreasing order; length min(rows, cols).
RealVector singular_values(const ComplexMatrix& matrix);

/// Squared singular values of the dim_a x dim_b amplitude matrix,
/// renormalized to sum to one. Throws InvalidInput if the state norm
/// deviates from 1 by more than 1e-6.
SchmidtVector schmidt_decompose(const PureState& psi);

/// Transposes every dim_b x dim_b block (transpose on the B factor).
ComplexMatrix partial_transpose(const DensityMatrix& rho);

/// Sum of singular values. Square matrices only.
double trace_norm(const ComplexMatrix& matrix);

/// <phi| rho |phi>, clamped into [0, 1].
double fidelity_with_pure(const DensityMatrix& rho, const PureState& phi);

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b);

/// Amplitudes of psi reshaped into a dim_a x dim_b matrix.
ComplexMatrix reshape_to_matrix(const PureState& psi);

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng{seed}; }

/// Haar-random pure state: complex normal amplitudes, normalized.
PureState random_pure_state(int dim_a, int dim_b, Rng& rng);
PureState random_pure_state(int dim_a, int dim_b, std::uint64_t seed);

/// Uniform on the probability simplex, then sorted decreasing.
SchmidtVector random_schmidt_vector(int m, Rng& rng);
SchmidtVector random_schmidt_vector(int m, std::uint64_t seed);

/// Partial trace of a Haar-random purification with the given ancilla rank.
DensityMatrix random_density_matrix(int dim_a, int dim_b, int rank, Rng& rng);
DensityMatrix random_density_matrix(int dim_a, int dim_b, int rank,
                                    std::uint64_t seed);

/// Haar-distributed unitary (QR of a Gaussian matrix with phase fix).
ComplexMatrix random_unitary(int dim, Rng& rng);

/// First `cols` columns of a Haar unitary; requires rows >= cols.
ComplexMatrix random_isometry(int rows, int cols, Rng& rng);

/// Product state |a>|b> with Haar-random local factors.
PureState random_product_state(int dim_a, int dim_b, Rng& rng);

/// Matrix of iid standard complex Gaussians.
ComplexMatrix random_complex_gaussian(int rows, int cols, Rng& rng);

}  // namespace entbound
