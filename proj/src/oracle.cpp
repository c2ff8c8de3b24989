#include "entbound/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace entbound {

namespace {

constexpr double kEigenClipTol = 1e-10;
constexpr double kRankTol = 1e-12;

RealVector clipped_eigenvalues(const RealVector& raw) {
  RealVector out = raw;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (out[i] < 0.0) {
      if (out[i] < -kEigenClipTol) {
        throw InvalidInput("state has a significantly negative eigenvalue");
      }
      out[i] = 0.0;
    }
  }
  return out;
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& matrix) {
  const auto eig = hermitian_eigendecomposition(matrix);
  const RealVector values = clipped_eigenvalues(eig.eigenvalues);
  return eig.eigenvectors * values.cwiseSqrt().asDiagonal() *
         eig.eigenvectors.adjoint();
}

}  // namespace

double wootters_concurrence(const DensityMatrix& rho) {
  if (rho.dim_a != 2 || rho.dim_b != 2) {
    throw InvalidInput("the exact concurrence formula is for 2x2 states");
  }
  ComplexMatrix yy = ComplexMatrix::Zero(4, 4);
  // sigma_y (x) sigma_y in the product basis.
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const ComplexMatrix flipped = yy * rho.matrix.conjugate() * yy;
  const ComplexMatrix root = matrix_sqrt_psd(rho.matrix);
  const auto eig = hermitian_eigendecomposition(root * flipped * root, 1e-7);
  const RealVector values = clipped_eigenvalues(eig.eigenvalues);
  // values are decreasing; the l_i are their square roots.
  double c = std::sqrt(values[0]);
  for (Eigen::Index i = 1; i < values.size(); ++i) {
    c -= std::sqrt(values[i]);
  }
  return std::max(0.0, c);
}

double eof_from_concurrence(double concurrence) {
  if (concurrence < -1e-12 || concurrence > 1.0 + 1e-12) {
    throw InvalidInput("concurrence must lie in [0, 1]");
  }
  concurrence = std::clamp(concurrence, 0.0, 1.0);
  const double x = (1.0 + std::sqrt(1.0 - concurrence * concurrence)) / 2.0;
  return binary_entropy(x);
}

double wootters_eof(const DensityMatrix& rho) {
  return eof_from_concurrence(wootters_concurrence(rho));
}

double negativity_mixed(const DensityMatrix& rho) {
  const double excess = trace_norm(partial_transpose(rho)) - 1.0;
  return std::max(0.0, excess);
}

int default_ensemble_size(int rank) {
  return std::min(rank * rank, rank + 4);
}

std::vector<WeightedPureState> random_decomposition(const DensityMatrix& rho,
                                                    int ensemble_size,
                                                    Rng& rng) {
  const auto eig = hermitian_eigendecomposition(rho.matrix);
  const RealVector values = clipped_eigenvalues(eig.eigenvalues);
  int rank = 0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values[i] > kRankTol) ++rank;
  }
  if (rank == 0) throw InvalidInput("state has no support");
  if (ensemble_size < rank) {
    throw InvalidInput("ensemble size must be at least the state rank");
  }

  const ComplexMatrix mix = random_isometry(ensemble_size, rank, rng);
  std::vector<WeightedPureState> ensemble;
  ensemble.reserve(ensemble_size);
  for (int j = 0; j < ensemble_size; ++j) {
    ComplexVector unnormalized = ComplexVector::Zero(rho.dim());
    for (int i = 0; i < rank; ++i) {
      unnormalized +=
          mix(j, i) * std::sqrt(values[i]) * eig.eigenvectors.col(i);
    }
    const double p = unnormalized.squaredNorm();
    if (p < 1e-14) continue;
    ensemble.push_back(WeightedPureState{
        p, PureState{rho.dim_a, rho.dim_b, unnormalized / std::sqrt(p)}});
  }
  return ensemble;
}

namespace {

// Members are kept unnormalized: |phi_j~> with sum_j phi~ phi~^dag = rho.
using Frame = std::vector<ComplexVector>;

SchmidtVector schmidt_of_member(const ComplexVector& member, double norm2,
                                int dim_a, int dim_b) {
  ComplexMatrix amp(dim_a, dim_b);
  for (int a = 0; a < dim_a; ++a) {
    for (int b = 0; b < dim_b; ++b) {
      amp(a, b) = member[static_cast<Eigen::Index>(a) * dim_b + b];
    }
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(amp);
  const RealVector sigma = svd.singularValues();
  std::vector<double> mu(dim_a, 0.0);
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    mu[i] = sigma[i] * sigma[i] / norm2;
  }
  return SchmidtVector{std::move(mu)};
}

double weighted_measure(const ComplexVector& member, MeasureKind kind,
                        int dim_a, int dim_b) {
  const double p = member.squaredNorm();
  if (p < 1e-14) return 0.0;
  return p * pure_measure(kind, schmidt_of_member(member, p, dim_a, dim_b));
}

std::array<double, 5> frame_average(const Frame& frame, int dim_a,
                                    int dim_b) {
  std::array<double, 5> avg{};
  for (const ComplexVector& member : frame) {
    const double p = member.squaredNorm();
    if (p < 1e-14) continue;
    const SchmidtVector mu = schmidt_of_member(member, p, dim_a, dim_b);
    for (MeasureKind kind : kAllMeasures) {
      avg[measure_index(kind)] += p * pure_measure(kind, mu);
    }
  }
  return avg;
}

// Coordinate descent over two-member rotations. Every step keeps
// sum_j phi~ phi~^dag fixed, so the frame stays a decomposition of rho.
double polish_frame(Frame frame, MeasureKind kind, int dim_a, int dim_b) {
  constexpr int kThetaSteps = 5;
  constexpr int kPhiSteps = 8;
  constexpr int kMaxSweeps = 4;

  std::vector<double> current(frame.size());
  double total = 0.0;
  for (std::size_t j = 0; j < frame.size(); ++j) {
    current[j] = weighted_measure(frame[j], kind, dim_a, dim_b);
    total += current[j];
  }

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool improved = false;
    for (std::size_t j = 0; j + 1 < frame.size(); ++j) {
      for (std::size_t k = j + 1; k < frame.size(); ++k) {
        double best_val = current[j] + current[k];
        ComplexVector best_a, best_b;
        double best_a_val = 0.0, best_b_val = 0.0;
        for (int ti = 1; ti <= kThetaSteps; ++ti) {
          const double theta = M_PI_2 * ti / (kThetaSteps + 1);
          const double c = std::cos(theta);
          const double s = std::sin(theta);
          for (int pi = 0; pi < kPhiSteps; ++pi) {
            const double phase = 2.0 * M_PI * pi / kPhiSteps;
            const Complex e{std::cos(phase), std::sin(phase)};
            ComplexVector a = c * frame[j] + s * e * frame[k];
            ComplexVector b =
                -s * std::conj(e) * frame[j] + c * frame[k];
            const double va = weighted_measure(a, kind, dim_a, dim_b);
            const double vb = weighted_measure(b, kind, dim_a, dim_b);
            if (va + vb < best_val - 1e-12) {
              best_val = va + vb;
              best_a = std::move(a);
              best_b = std::move(b);
              best_a_val = va;
              best_b_val = vb;
            }
          }
        }
        if (best_a.size() > 0) {
          total += best_val - current[j] - current[k];
          frame[j] = std::move(best_a);
          frame[k] = std::move(best_b);
          current[j] = best_a_val;
          current[k] = best_b_val;
          improved = true;
        }
      }
    }
    if (!improved) break;
  }
  return total;
}

}  // namespace

std::array<double, 5> convex_roof_upper_all(const DensityMatrix& rho,
                                            int trials, int ensemble_size,
                                            std::uint64_t seed) {
  if (trials < 1) throw InvalidInput("need at least one trial");

  const auto eig = hermitian_eigendecomposition(rho.matrix);
  const RealVector values = clipped_eigenvalues(eig.eigenvalues);
  int rank = 0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values[i] > kRankTol) ++rank;
  }
  if (rank == 0) throw InvalidInput("state has no support");
  if (ensemble_size == 0) ensemble_size = default_ensemble_size(rank);
  if (ensemble_size < rank) {
    throw InvalidInput("ensemble size must be at least the state rank");
  }

  // Plain random sampling concentrates far above the roof, so the first few
  // trials (and the eigen-ensemble) also run a pairwise descent. Descent
  // preserves the decomposition property, so the minimum stays a certified
  // upper bound, deterministic per seed and nonincreasing in trials.
  constexpr int kPolishTrials = 8;

  Frame eigen_frame;
  for (int i = 0; i < rank; ++i) {
    eigen_frame.push_back(std::sqrt(values[i]) * eig.eigenvectors.col(i));
  }
  std::array<double, 5> best = frame_average(eigen_frame, rho.dim_a, rho.dim_b);
  if (rank == 1) return best;  // pure: the roof is the pure value

  for (MeasureKind kind : kAllMeasures) {
    best[measure_index(kind)] =
        std::min(best[measure_index(kind)],
                 polish_frame(eigen_frame, kind, rho.dim_a, rho.dim_b));
  }

  Rng master = make_rng(seed);
  for (int t = 0; t < trials; ++t) {
    Rng trial_rng = make_rng(master());
    const ComplexMatrix mix = random_isometry(ensemble_size, rank, trial_rng);
    Frame frame(ensemble_size, ComplexVector::Zero(rho.dim()));
    for (int j = 0; j < ensemble_size; ++j) {
      for (int i = 0; i < rank; ++i) {
        frame[j] += mix(j, i) * eigen_frame[i];
      }
    }
    const auto avg = frame_average(frame, rho.dim_a, rho.dim_b);
    for (std::size_t k = 0; k < best.size(); ++k) {
      best[k] = std::min(best[k], avg[k]);
    }
    if (t < kPolishTrials) {
      for (MeasureKind kind : kAllMeasures) {
        best[measure_index(kind)] =
            std::min(best[measure_index(kind)],
                     polish_frame(frame, kind, rho.dim_a, rho.dim_b));
      }
    }
  }
  return best;
}

RoofEstimate convex_roof_upper(const DensityMatrix& rho, MeasureKind measure,
                               int trials, int ensemble_size,
                               std::uint64_t seed) {
  const auto all = convex_roof_upper_all(rho, trials, ensemble_size, seed);
  if (ensemble_size == 0) {
    const auto eig = hermitian_eigendecomposition(rho.matrix);
    const RealVector values = clipped_eigenvalues(eig.eigenvalues);
    int rank = 0;
    for (Eigen::Index i = 0; i < values.size(); ++i) {
      if (values[i] > kRankTol) ++rank;
    }
    ensemble_size = default_ensemble_size(rank);
  }
  RoofEstimate estimate;
  estimate.measure = measure;
  estimate.value = all[measure_index(measure)];
  estimate.trials = trials;
  estimate.ensemble_size = ensemble_size;
  estimate.seed = seed;
  return estimate;
}

}  // namespace entbound
