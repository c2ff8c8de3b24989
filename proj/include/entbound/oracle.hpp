#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "entbound/linalg.hpp"
#include "entbound/measures.hpp"
#include "entbound/types.hpp"

namespace entbound {

/// Exact two-qubit concurrence: max{0, l1 - l2 - l3 - l4} with l_i the
/// decreasing square roots of the eigenvalues of rho (Y(x)Y) rho* (Y(x)Y).
double wootters_concurrence(const DensityMatrix& rho);

/// Exact two-qubit entanglement of formation, via the concurrence.
double wootters_eof(const DensityMatrix& rho);

/// H2((1 + sqrt(1 - c^2)) / 2) for c in [0, 1].
double eof_from_concurrence(double concurrence);

/// Trace-norm excess of the partial transpose, clipped to >= 0.
double negativity_mixed(const DensityMatrix& rho);

struct WeightedPureState {
  double probability = 0.0;
  PureState state;
};

/// A random pure-state decomposition of rho: the eigen-ensemble mixed by a
/// Haar-random ensemble_size x rank isometry. Always reconstructs rho.
std::vector<WeightedPureState> random_decomposition(const DensityMatrix& rho,
                                                    int ensemble_size,
                                                    Rng& rng);

/// min(rank^2, rank + 4): small ensembles suffice at these dimensions.
int default_ensemble_size(int rank);

struct RoofEstimate {
  MeasureKind measure = MeasureKind::Eof;
  double value = 0.0;  // certified upper estimate of the convex roof
  int trials = 0;
  int ensemble_size = 0;
  std::uint64_t seed = 0;
};

/// Upper-estimates the convex roof of a measure by taking the best ensemble
/// average over `trials` random decompositions (plus the eigen-ensemble).
/// Every sampled decomposition realizes rho exactly, so the minimum is a
/// true upper bound; it is nonincreasing in trials for a fixed seed.
/// ensemble_size = 0 selects the default; values below rank(rho) throw
/// InvalidInput.
RoofEstimate convex_roof_upper(const DensityMatrix& rho, MeasureKind measure,
                               int trials, int ensemble_size,
                               std::uint64_t seed);

/// Same search, all five measures evaluated on the shared ensemble stream.
/// Component k equals convex_roof_upper(rho, k, ...).value for the same
/// arguments.
std::array<double, 5> convex_roof_upper_all(const DensityMatrix& rho,
                                            int trials, int ensemble_size,
                                            std::uint64_t seed);

}  // namespace entbound
