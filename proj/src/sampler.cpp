#include "entbound/sampler.hpp"

#include <cstdio>
#include <ostream>

#include "entbound/linalg.hpp"

namespace entbound {

std::vector<ScatterRow> scatter(int m, int n_samples, MeasureKind measure,
                                std::uint64_t seed) {
  if (m < 2) throw InvalidInput("scatter needs m >= 2");
  if (n_samples < 1) throw InvalidInput("scatter needs at least one sample");
  Rng rng = make_rng(seed);
  std::vector<ScatterRow> rows;
  rows.reserve(n_samples);
  for (int i = 0; i < n_samples; ++i) {
    const SchmidtVector mu = random_schmidt_vector(m, rng);
    rows.push_back(
        ScatterRow{lambda_of_schmidt(mu), pure_measure(measure, mu)});
  }
  return rows;
}

std::optional<CurveTag> parse_curve_tag(std::string_view tag) {
  if (tag == "R") return CurveTag::R;
  if (tag == "coR") return CurveTag::CoR;
  if (tag == "Q") return CurveTag::Q;
  if (tag == "P") return CurveTag::P;
  if (tag == "coP") return CurveTag::CoP;
  if (tag == "K") return CurveTag::K;
  if (tag == "coK") return CurveTag::CoK;
  if (tag == "CREN") return CurveTag::Cren;
  return std::nullopt;
}

std::string_view curve_tag_name(CurveTag tag) {
  switch (tag) {
    case CurveTag::R:
      return "R";
    case CurveTag::CoR:
      return "coR";
    case CurveTag::Q:
      return "Q";
    case CurveTag::P:
      return "P";
    case CurveTag::CoP:
      return "coP";
    case CurveTag::K:
      return "K";
    case CurveTag::CoK:
      return "coK";
    case CurveTag::Cren:
      return "CREN";
  }
  return "unknown";
}

double curve_value(CurveTag tag, double lam, int m) {
  switch (tag) {
    case CurveTag::R:
      return r_curve(lam, m);
    case CurveTag::CoR:
      return co_r(lam, m);
    case CurveTag::Q:
      return q_curve(lam, m);
    case CurveTag::P:
      return p_curve(lam, m);
    case CurveTag::CoP:
      return co_p(lam, m);
    case CurveTag::K:
      return k_curve(lam, m);
    case CurveTag::CoK:
      return co_k(lam, m);
    case CurveTag::Cren:
      return cren_bound(lam, m);
  }
  throw InvalidInput("unknown curve tag");
}

CurveTag boundary_curve_for(MeasureKind measure) {
  switch (measure) {
    case MeasureKind::Eof:
      return CurveTag::R;
    case MeasureKind::Gme:
      return CurveTag::Q;
    case MeasureKind::Concurrence:
      return CurveTag::P;
    case MeasureKind::Cren:
      return CurveTag::Cren;  // pure negativity sits exactly on the line
    case MeasureKind::GConcurrence:
      return CurveTag::K;
  }
  throw InvalidInput("unknown measure");
}

std::vector<CurveSample> curve_table(int m, CurveTag tag, int grid_points) {
  if (m < 2) throw InvalidInput("curve table needs m >= 2");
  if (grid_points < 2) throw InvalidInput("curve table needs >= 2 points");
  const double lo = 1.0 / m;
  std::vector<CurveSample> rows;
  rows.reserve(grid_points);
  for (int i = 0; i < grid_points; ++i) {
    const double lam =
        (i == grid_points - 1)
            ? 1.0
            : lo + (1.0 - lo) * static_cast<double>(i) / (grid_points - 1);
    rows.push_back(CurveSample{lam, curve_value(tag, lam, m)});
  }
  return rows;
}

namespace {

void write_csv_pair(std::ostream& out, double x, double y) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g,%.17g\n", x, y);
  out << buffer;
}

}  // namespace

void write_csv(std::ostream& out, std::span<const ScatterRow> rows) {
  out << "lambda,value\n";
  for (const ScatterRow& row : rows) {
    write_csv_pair(out, row.lambda, row.measure_value);
  }
}

void write_csv(std::ostream& out, std::span<const CurveSample> rows) {
  out << "lambda,value\n";
  for (const CurveSample& row : rows) {
    write_csv_pair(out, row.lambda, row.value);
  }
}

}  // namespace entbound
