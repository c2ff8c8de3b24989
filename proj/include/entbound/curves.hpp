#pragma once

#include <array>
#include <span>
#include <string>

#include "entbound/measures.hpp"
#include "entbound/types.hpp"

namespace entbound {

/// The witness statistic together with the Schmidt dimension it refers to.
/// Constructed through make_lambda, which applies the clamping policy.
struct LambdaValue {
  double lambda = 0.0;
  int m = 2;
};

/// Clamping policy for measured statistics: values within 1e-9 below 1/m
/// snap to 1/m, values within 1e-6 above 1 snap to 1, anything further out
/// throws DomainError. Measured fidelities carry noise; silently accepting
/// values beyond these windows would fabricate entanglement.
double clamp_lambda(double lam, int m);

LambdaValue make_lambda(double lam, int m);

/// gamma(x) = [sqrt(x) + sqrt((m-1)(1-x))]^2 / m. Decreasing involution
/// of [1/m, 1] onto itself.
double gamma_plus(double lam, int m);

/// [sqrt(x) - sqrt((m-1)(1-x))]^2 / m; meaningful on [(m-1)/m, 1].
double gamma_minus(double lam, int m);

/// [sqrt(x) + sqrt((1-x)/(m-1))]^2 / m. Satisfies
/// gamma_minus + (m-1) * beta_curve = 1.
double beta_curve(double lam, int m);

/// Minimal entropy boundary: H2(gamma) + (1-gamma) log2(m-1).
double r_curve(double lam, int m);

/// Convex hull of r_curve: the curve up to 4(m-1)/m^2, then the straight
/// line to (1, log2 m). For m = 2 the breakpoint is 1, so the hull is the
/// curve itself.
double co_r(double lam, int m);

/// Minimal GME boundary 1 - gamma; already convex, equal to its hull.
double q_curve(double lam, int m);

/// Minimal concurrence boundary sqrt(2 (1-gamma)(m gamma + m - 2)/(m-1)).
double p_curve(double lam, int m);

/// Chord from (1/m, 0) to (1, sqrt(2(m-1)/m)): sqrt(2m/(m-1)) (lam - 1/m).
double co_p(double lam, int m);

/// Linear negativity bound m * lam - 1.
double cren_bound(double lam, int m);

/// Minimal G-concurrence boundary m [gamma_minus beta^(m-1)]^(1/m) on
/// [(m-1)/m, 1]; zero below.
double k_curve(double lam, int m);

/// Hinge max{1 - m(1-lam), 0}.
double co_k(double lam, int m);

/// The extremal Schmidt vector {t, (1-t)/(m-1), ..., (1-t)/(m-1)} on which
/// the boundary curves are attained, sorted decreasing. t in [0, 1].
SchmidtVector boundary_schmidt_vector(double t, int m);

struct CurveSample {
  double lambda;
  double value;
};

/// Lower convex envelope of a sampled curve, evaluated at lam. The grid
/// must be strictly increasing in lambda with at least 3 points. Intended
/// for measures without a closed-form hull.
double generic_co_bound(std::span<const CurveSample> samples, double lam);

/// All five lower bounds computed from one statistic, with a note per
/// measure recording which formula branch produced it.
struct BoundReport {
  LambdaValue lambda;
  double eof_lb = 0.0;
  double gme_lb = 0.0;
  double concurrence_lb = 0.0;
  double cren_lb = 0.0;
  double gconcurrence_lb = 0.0;
  std::array<std::string, 5> branch_notes;  // indexed by measure_index

  double bound_for(MeasureKind kind) const;
  const std::string& branch_note(MeasureKind kind) const {
    return branch_notes[measure_index(kind)];
  }
};

BoundReport bound_report(const LambdaValue& lam);

/// Single-measure dispatch over the five closed-form hulls.
double measure_bound(MeasureKind kind, const LambdaValue& lam);

}  // namespace entbound
