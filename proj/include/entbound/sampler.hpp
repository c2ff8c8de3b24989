#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "entbound/curves.hpp"
#include "entbound/measures.hpp"

namespace entbound {

struct ScatterRow {
  double lambda = 0.0;
  double measure_value = 0.0;
};

/// One row per random Schmidt vector: its statistic and the exact pure
/// measure. Deterministic for a fixed seed.
std::vector<ScatterRow> scatter(int m, int n_samples, MeasureKind measure,
                                std::uint64_t seed);

enum class CurveTag { R, CoR, Q, P, CoP, K, CoK, Cren };

std::optional<CurveTag> parse_curve_tag(std::string_view tag);
std::string_view curve_tag_name(CurveTag tag);

double curve_value(CurveTag tag, double lam, int m);

/// The boundary curve that the scatter cloud of a measure must dominate.
CurveTag boundary_curve_for(MeasureKind measure);

/// Uniform lambda grid over [1/m, 1] with the curve evaluated on it.
std::vector<CurveSample> curve_table(int m, CurveTag tag, int grid_points);

/// CSV with header "lambda,value", LF line endings, 17 significant digits.
void write_csv(std::ostream& out, std::span<const ScatterRow> rows);
void write_csv(std::ostream& out, std::span<const CurveSample> rows);

}  // namespace entbound
