#include "entbound/measures.hpp"

#include <cmath>

namespace entbound {

std::string_view measure_name(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::Eof:
      return "eof";
    case MeasureKind::Gme:
      return "gme";
    case MeasureKind::Concurrence:
      return "concurrence";
    case MeasureKind::Cren:
      return "cren";
    case MeasureKind::GConcurrence:
      return "gconcurrence";
  }
  return "unknown";
}

std::optional<MeasureKind> parse_measure(std::string_view name) {
  for (MeasureKind kind : kAllMeasures) {
    if (name == measure_name(kind)) return kind;
  }
  return std::nullopt;
}

double binary_entropy(double x) {
  double h = 0.0;
  if (x > 0.0) h -= x * std::log2(x);
  if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
  return h;
}

double eof_pure(const SchmidtVector& mu) {
  double h = 0.0;
  for (double v : mu.values) {
    if (v > 0.0) h -= v * std::log2(v);
  }
  return h;
}

double gme_pure(const SchmidtVector& mu) { return 1.0 - mu.values.front(); }

double concurrence_pure(const SchmidtVector& mu) {
  double purity = 0.0;
  for (double v : mu.values) purity += v * v;
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

double negativity_pure(const SchmidtVector& mu) {
  double root_sum = 0.0;
  for (double v : mu.values) root_sum += std::sqrt(v);
  return std::max(0.0, root_sum * root_sum - 1.0);
}

double gconcurrence_pure(const SchmidtVector& mu) {
  // Log-sum evaluation avoids underflow of the raw product for larger m.
  double log_sum = 0.0;
  for (double v : mu.values) {
    if (v <= 0.0) return 0.0;
    log_sum += std::log(v);
  }
  const int m = mu.m();
  return m * std::exp(log_sum / m);
}

double pure_measure(MeasureKind kind, const SchmidtVector& mu) {
  switch (kind) {
    case MeasureKind::Eof:
      return eof_pure(mu);
    case MeasureKind::Gme:
      return gme_pure(mu);
    case MeasureKind::Concurrence:
      return concurrence_pure(mu);
    case MeasureKind::Cren:
      return negativity_pure(mu);
    case MeasureKind::GConcurrence:
      return gconcurrence_pure(mu);
  }
  throw InvalidInput("unknown measure");
}

double lambda_of_schmidt(const SchmidtVector& mu) {
  double root_sum = 0.0;
  for (double v : mu.values) root_sum += std::sqrt(v);
  return root_sum * root_sum / mu.m();
}

}  // namespace entbound
