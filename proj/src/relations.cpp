#include "entbound/relations.hpp"

#include <cmath>

#include "entbound/curves.hpp"
#include "entbound/measures.hpp"

namespace entbound {

double cren_upper_from_gme(double e_g, int m) {
  if (m < 2) throw InvalidInput("relation needs m >= 2");
  // e_g in [0, 1 - 1/m] maps to 1 - e_g in [1/m, 1]; the shared clamping
  // policy handles measurement noise at both edges.
  const double x = clamp_lambda(1.0 - e_g, m);
  return m * gamma_plus(x, m) - 1.0;
}

double gme_lower_from_cren(double nv, int m) {
  if (m < 2) throw InvalidInput("relation needs m >= 2");
  if (nv < -1e-9 || nv > m - 1.0 + 1e-6) {
    throw DomainError("negativity must lie in [0, m-1]");
  }
  const double x = clamp_lambda((nv + 1.0) / m, m);
  return 1.0 - gamma_plus(x, m);
}

double tradeoff_slack(const SchmidtVector& mu) {
  const int m = mu.m();
  if (m < 2) throw InvalidInput("trade-off needs m >= 2");
  const double c =
      std::sqrt(m / (2.0 * (m - 1))) * concurrence_pure(mu);
  const double e_g = m * gme_pure(mu) / (m - 1.0);
  return 1.0 - c * c - (1.0 - e_g) * (1.0 - e_g);
}

RelationReport relation_report(const SchmidtVector& mu) {
  const int m = mu.m();
  RelationReport report;
  report.cren_upper_from_gme = cren_upper_from_gme(gme_pure(mu), m);
  report.gme_lower_from_cren = gme_lower_from_cren(negativity_pure(mu), m);
  report.tradeoff_slack = tradeoff_slack(mu);
  return report;
}

}  // namespace entbound
