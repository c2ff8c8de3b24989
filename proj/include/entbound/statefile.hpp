#pragma once

#include <filesystem>
#include <optional>

#include "entbound/types.hpp"

namespace entbound {

/// A state loaded from disk: either pure or mixed, never both.
struct LoadedState {
  std::optional<PureState> pure;
  std::optional<DensityMatrix> mixed;

  bool is_pure() const { return pure.has_value(); }
  int dim_a() const { return is_pure() ? pure->dim_a : mixed->dim_a; }
  int dim_b() const { return is_pure() ? pure->dim_b : mixed->dim_b; }

  /// Pure states are promoted to their projector.
  DensityMatrix as_density() const;
};

/// Reads the JSON state format:
///   { "dims": [m, n], "kind": "pure" | "mixed", "data": [[re, im], ...] }
/// Pure data is the amplitude vector (length m*n); mixed data is the
/// row-major density matrix (length (m*n)^2). Norm, trace, Hermiticity and
/// positivity checks run on load. Throws InvalidInput on any parse or
/// validation failure, IoError if the file cannot be read.
LoadedState load_state_file(const std::filesystem::path& path);

void save_state_file(const std::filesystem::path& path, const PureState& psi);
void save_state_file(const std::filesystem::path& path,
                     const DensityMatrix& rho);

}  // namespace entbound
