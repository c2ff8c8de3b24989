#include "entbound/curves.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace entbound {

namespace {

double breakpoint_r(int m) {
  return 4.0 * (m - 1) / (static_cast<double>(m) * m);
}

}  // namespace

double clamp_lambda(double lam, int m) {
  if (m < 2) throw InvalidInput("lambda statistic needs m >= 2");
  const double lo = 1.0 / m;
  if (lam < lo) {
    if (lam >= lo - 1e-9) return lo;
    throw DomainError("lambda below 1/m: " + std::to_string(lam));
  }
  if (lam > 1.0) {
    if (lam <= 1.0 + 1e-6) return 1.0;
    throw DomainError("lambda above 1: " + std::to_string(lam));
  }
  return lam;
}

LambdaValue make_lambda(double lam, int m) {
  return LambdaValue{clamp_lambda(lam, m), m};
}

double gamma_plus(double lam, int m) {
  lam = clamp_lambda(lam, m);
  const double s = std::sqrt(lam) + std::sqrt((m - 1) * (1.0 - lam));
  return std::clamp(s * s / m, 0.0, 1.0);
}

double gamma_minus(double lam, int m) {
  lam = clamp_lambda(lam, m);
  const double s = std::sqrt(lam) - std::sqrt((m - 1) * (1.0 - lam));
  return s * s / m;
}

double beta_curve(double lam, int m) {
  lam = clamp_lambda(lam, m);
  const double s = std::sqrt(lam) + std::sqrt((1.0 - lam) / (m - 1));
  return s * s / m;
}

double r_curve(double lam, int m) {
  const double g = gamma_plus(lam, m);
  return binary_entropy(g) + (1.0 - g) * std::log2(m - 1.0);
}

double co_r(double lam, int m) {
  lam = clamp_lambda(lam, m);
  if (m == 2) return r_curve(lam, 2);  // breakpoint degenerates to 1
  if (lam <= breakpoint_r(m)) return r_curve(lam, m);
  return m * std::log2(m - 1.0) / (m - 2) * (lam - 1.0) + std::log2(m);
}

double q_curve(double lam, int m) { return 1.0 - gamma_plus(lam, m); }

double p_curve(double lam, int m) {
  const double g = gamma_plus(lam, m);
  const double radicand = 2.0 * (1.0 - g) * (m * g + m - 2) / (m - 1);
  return std::sqrt(std::max(0.0, radicand));
}

double co_p(double lam, int m) {
  lam = clamp_lambda(lam, m);
  return std::sqrt(2.0 * m / (m - 1.0)) * std::max(0.0, lam - 1.0 / m);
}

double cren_bound(double lam, int m) {
  lam = clamp_lambda(lam, m);
  return std::max(0.0, m * lam - 1.0);
}

double k_curve(double lam, int m) {
  lam = clamp_lambda(lam, m);
  if (lam <= (m - 1.0) / m) return 0.0;
  const double g = gamma_minus(lam, m);
  const double b = beta_curve(lam, m);
  if (g <= 0.0 || b <= 0.0) return 0.0;
  return m * std::exp((std::log(g) + (m - 1) * std::log(b)) / m);
}

double co_k(double lam, int m) {
  lam = clamp_lambda(lam, m);
  return std::max(0.0, 1.0 - m * (1.0 - lam));
}

SchmidtVector boundary_schmidt_vector(double t, int m) {
  if (m < 2) throw InvalidInput("boundary Schmidt vector needs m >= 2");
  if (t < -1e-12 || t > 1.0 + 1e-12) {
    throw DomainError("boundary parameter t must lie in [0, 1]");
  }
  t = std::clamp(t, 0.0, 1.0);
  const double rest = (1.0 - t) / (m - 1);
  std::vector<double> values(m, rest);
  values[0] = t;
  std::sort(values.begin(), values.end(), std::greater<>());
  return SchmidtVector{std::move(values)};
}

double generic_co_bound(std::span<const CurveSample> samples, double lam) {
  if (samples.size() < 3) {
    throw InvalidInput("curve grid needs at least 3 points");
  }
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (!(samples[i].lambda > samples[i - 1].lambda)) {
      throw InvalidInput("curve grid must be strictly increasing in lambda");
    }
  }
  const double lo = samples.front().lambda;
  const double hi = samples.back().lambda;
  if (lam < lo - 1e-9 || lam > hi + 1e-6) {
    throw DomainError("evaluation point outside the sampled range");
  }
  lam = std::clamp(lam, lo, hi);

  // Lower convex envelope by monotone chain; the grid is already sorted.
  std::vector<CurveSample> hull;
  hull.reserve(samples.size());
  for (const CurveSample& p : samples) {
    while (hull.size() >= 2) {
      const CurveSample& a = hull[hull.size() - 2];
      const CurveSample& b = hull.back();
      const double cross = (b.lambda - a.lambda) * (p.value - a.value) -
                           (b.value - a.value) * (p.lambda - a.lambda);
      if (cross <= 0.0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }

  const auto it = std::upper_bound(
      hull.begin(), hull.end(), lam,
      [](double x, const CurveSample& s) { return x < s.lambda; });
  if (it == hull.begin()) return hull.front().value;
  if (it == hull.end()) return hull.back().value;
  const CurveSample& right = *it;
  const CurveSample& left = *(it - 1);
  const double w = (lam - left.lambda) / (right.lambda - left.lambda);
  return left.value + w * (right.value - left.value);
}

double measure_bound(MeasureKind kind, const LambdaValue& lam) {
  switch (kind) {
    case MeasureKind::Eof:
      return co_r(lam.lambda, lam.m);
    case MeasureKind::Gme:
      return q_curve(lam.lambda, lam.m);
    case MeasureKind::Concurrence:
      return co_p(lam.lambda, lam.m);
    case MeasureKind::Cren:
      return cren_bound(lam.lambda, lam.m);
    case MeasureKind::GConcurrence:
      return co_k(lam.lambda, lam.m);
  }
  throw InvalidInput("unknown measure");
}

double BoundReport::bound_for(MeasureKind kind) const {
  switch (kind) {
    case MeasureKind::Eof:
      return eof_lb;
    case MeasureKind::Gme:
      return gme_lb;
    case MeasureKind::Concurrence:
      return concurrence_lb;
    case MeasureKind::Cren:
      return cren_lb;
    case MeasureKind::GConcurrence:
      return gconcurrence_lb;
  }
  throw InvalidInput("unknown measure");
}

BoundReport bound_report(const LambdaValue& lam) {
  const int m = lam.m;
  const double lv = clamp_lambda(lam.lambda, m);
  BoundReport report;
  report.lambda = LambdaValue{lv, m};
  report.eof_lb = co_r(lv, m);
  report.gme_lb = q_curve(lv, m);
  report.concurrence_lb = co_p(lv, m);
  report.cren_lb = cren_bound(lv, m);
  report.gconcurrence_lb = co_k(lv, m);
  report.branch_notes[measure_index(MeasureKind::Eof)] =
      (m == 2 || lv <= breakpoint_r(m)) ? "entropy-curve" : "linear-tail";
  report.branch_notes[measure_index(MeasureKind::Gme)] = "exact";
  report.branch_notes[measure_index(MeasureKind::Concurrence)] = "chord";
  report.branch_notes[measure_index(MeasureKind::Cren)] = "linear";
  report.branch_notes[measure_index(MeasureKind::GConcurrence)] =
      report.gconcurrence_lb > 0.0 ? "linear" : "zero";
  return report;
}

}  // namespace entbound
