#pragma once

#include <vector>

#include "entbound/curves.hpp"
#include "entbound/linalg.hpp"
#include "entbound/types.hpp"

namespace entbound {

/// A pure entangled reference state with cached Schmidt data. The witness
/// operator is s1 * I - |phi><phi|; the statistic needs only s1 and m.
struct WitnessSpec {
  PureState phi;
  SchmidtVector schmidt;
  double s1 = 0.0;
  int m = 0;
};

/// Caches the Schmidt decomposition of phi. Throws NotEntangled if phi has
/// Schmidt rank 1 (a product state cannot certify anything).
WitnessSpec make_witness(const PureState& phi);

/// Turns a measured overlap <phi|rho|phi> into the statistic
/// max{fid / (s1 m), 1/m}, then applies the clamping policy. Throws
/// DomainError when the fidelity is unphysically large.
LambdaValue lambda_from_fidelity(double fidelity, double s1, int m);

/// Same statistic with the fidelity computed from rho directly.
LambdaValue compute_lambda(const DensityMatrix& rho, const WitnessSpec& w);

/// s1 * I - |phi><phi| on the full bipartite space. Nonnegative in
/// expectation on every product state.
ComplexMatrix witness_operator(const WitnessSpec& w);

/// Complete set of d^2 local orthogonal observables: d diagonal projectors,
/// then the symmetric and antisymmetric pair combinations, orthonormal under
/// the Hilbert-Schmidt inner product.
std::vector<ComplexMatrix> loo_basis(int d);

/// One term of the local-measurement expansion of |phi><phi|.
struct LOOTerm {
  double coefficient = 0.0;
  ComplexMatrix op_a;  // dim_a x dim_a
  ComplexMatrix op_b;  // dim_b x dim_b
};

/// Expands |phi><phi| = sum_k c_k A_k (x) B_k over rotated LOOs, so the
/// witness expectation is obtainable from dim_b^2 local settings. For
/// dim_a < dim_b the A-side observables are the top-left blocks of the
/// rotated B-side set; coefficients are computed as actual expectation
/// values, which makes the reconstruction exact for any phase convention.
std::vector<LOOTerm> loo_expansion(const WitnessSpec& w);

/// sum_k c_k Tr[rho (A_k (x) B_k)] — the measured-expectation route to the
/// witness overlap.
double loo_expectation(const std::vector<LOOTerm>& terms,
                       const DensityMatrix& rho);

}  // namespace entbound
