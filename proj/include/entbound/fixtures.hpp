#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "entbound/curves.hpp"
#include "entbound/types.hpp"

namespace entbound {

/// |00...> + |11...> + ... / sqrt(d) on d (x) d.
PureState max_entangled_state(int d);

/// sum_i |ii> / sqrt(dim_a) embedded in dim_a (x) dim_b, dim_a <= dim_b.
PureState max_entangled_state(int dim_a, int dim_b);

/// sqrt(3)/2 |000> + sqrt(3)/4 |110> + 1/4 |111>, split A|BC as 2 (x) 4.
PureState psi_s_state();

/// Four-qubit Dicke state with two excitations, split AB|CD as 4 (x) 4.
PureState dicke_4_2_state();

/// Resolves "max-entangled:d", "psi-s" or "dicke-4-2".
PureState builtin_witness_state(std::string_view tag);

/// Published measurement data: everything the bounds need is the triple
/// (fidelity, s1, m), plus the values the experiments are expected to
/// certify. Expected entries are absent where no value was reported.
struct ExampleFixture {
  std::string name;
  int m = 0;
  double s1 = 0.0;
  double fidelity = 0.0;
  std::array<std::optional<double>, 5> expected;  // indexed by measure_index
  double tolerance = 0.01;
};

const std::vector<ExampleFixture>& example_fixtures();
std::optional<ExampleFixture> find_fixture(std::string_view name);

struct FixtureCheck {
  MeasureKind measure = MeasureKind::Eof;
  double expected = 0.0;
  double computed = 0.0;
  bool pass = false;
};

/// Recomputes the bounds from (fidelity, s1, m) alone and compares each
/// reported value at the fixture tolerance.
std::vector<FixtureCheck> check_fixture(const ExampleFixture& fixture);

}  // namespace entbound
