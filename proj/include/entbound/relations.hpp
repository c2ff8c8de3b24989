#pragma once

#include "entbound/types.hpp"

namespace entbound {

/// Inter-measure inequalities evaluated on one pure state.
struct RelationReport {
  double cren_upper_from_gme = 0.0;
  double gme_lower_from_cren = 0.0;
  double tradeoff_slack = 0.0;
};

/// Upper bound on the negativity from the GME: m gamma(1 - e_g) - 1.
/// e_g must lie in [0, 1 - 1/m].
double cren_upper_from_gme(double e_g, int m);

/// Lower bound on the GME from the negativity: 1 - gamma((nv + 1) / m).
/// nv must lie in [0, m - 1].
double gme_lower_from_cren(double nv, int m);

/// 1 - c^2 - (1 - e_G)^2 with the normalized concurrence
/// c = sqrt(m / (2(m-1))) C and GME e_G = m E_G / (m-1). Nonnegative for
/// every valid Schmidt vector.
double tradeoff_slack(const SchmidtVector& mu);

RelationReport relation_report(const SchmidtVector& mu);

}  // namespace entbound
