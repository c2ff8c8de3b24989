#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "entbound/types.hpp"

namespace entbound {

/// The five convex-roof entanglement measures handled by this library.
enum class MeasureKind { Eof, Gme, Concurrence, Cren, GConcurrence };

inline constexpr std::array<MeasureKind, 5> kAllMeasures = {
    MeasureKind::Eof, MeasureKind::Gme, MeasureKind::Concurrence,
    MeasureKind::Cren, MeasureKind::GConcurrence};

inline constexpr std::size_t measure_index(MeasureKind kind) {
  return static_cast<std::size_t>(kind);
}

std::string_view measure_name(MeasureKind kind);
std::optional<MeasureKind> parse_measure(std::string_view name);

/// -x log2 x - (1-x) log2 (1-x), with 0 log 0 = 0.
double binary_entropy(double x);

/// Exact pure-state measures as functions of the Schmidt vector.
double eof_pure(const SchmidtVector& mu);           // Shannon entropy, base 2
double gme_pure(const SchmidtVector& mu);           // 1 - max value
double concurrence_pure(const SchmidtVector& mu);   // sqrt(2 (1 - sum mu^2))
double negativity_pure(const SchmidtVector& mu);    // (sum sqrt(mu))^2 - 1
double gconcurrence_pure(const SchmidtVector& mu);  // m (prod mu)^(1/m)

double pure_measure(MeasureKind kind, const SchmidtVector& mu);

/// The scalar statistic (sum sqrt(mu))^2 / m in [1/m, 1].
double lambda_of_schmidt(const SchmidtVector& mu);

}  // namespace entbound
