#include "entbound/fixtures.hpp"

#include <cmath>
#include <charconv>

#include "entbound/witness.hpp"

namespace entbound {

PureState max_entangled_state(int dim_a, int dim_b) {
  if (dim_a < 2 || dim_b < dim_a) {
    throw InvalidInput("maximally entangled state needs 2 <= dim_a <= dim_b");
  }
  ComplexVector amps = ComplexVector::Zero(dim_a * dim_b);
  const double coeff = 1.0 / std::sqrt(static_cast<double>(dim_a));
  for (int i = 0; i < dim_a; ++i) {
    amps[static_cast<Eigen::Index>(i) * dim_b + i] = coeff;
  }
  return PureState{dim_a, dim_b, std::move(amps)};
}

PureState max_entangled_state(int d) { return max_entangled_state(d, d); }

PureState psi_s_state() {
  // Three qubits split A|BC; column index runs over BC in {00,01,10,11}.
  ComplexVector amps = ComplexVector::Zero(8);
  amps[0] = std::sqrt(3.0) / 2.0;  // |0>|00>
  amps[6] = std::sqrt(3.0) / 4.0;  // |1>|10>
  amps[7] = 0.25;                  // |1>|11>
  return PureState{2, 4, std::move(amps)};
}

PureState dicke_4_2_state() {
  // Four qubits split AB|CD; the six two-excitation basis states.
  ComplexVector amps = ComplexVector::Zero(16);
  const double coeff = 1.0 / std::sqrt(6.0);
  amps[0 * 4 + 3] = coeff;  // |00>|11>
  amps[1 * 4 + 1] = coeff;  // |01>|01>
  amps[1 * 4 + 2] = coeff;  // |01>|10>
  amps[2 * 4 + 1] = coeff;  // |10>|01>
  amps[2 * 4 + 2] = coeff;  // |10>|10>
  amps[3 * 4 + 0] = coeff;  // |11>|00>
  return PureState{4, 4, std::move(amps)};
}

PureState builtin_witness_state(std::string_view tag) {
  if (tag == "psi-s") return psi_s_state();
  if (tag == "dicke-4-2") return dicke_4_2_state();
  constexpr std::string_view prefix = "max-entangled:";
  if (tag.substr(0, prefix.size()) == prefix) {
    const std::string_view arg = tag.substr(prefix.size());
    int d = 0;
    const auto [ptr, ec] =
        std::from_chars(arg.data(), arg.data() + arg.size(), d);
    if (ec != std::errc{} || ptr != arg.data() + arg.size() || d < 2) {
      throw InvalidInput("max-entangled tag needs an integer dimension >= 2");
    }
    return max_entangled_state(d);
  }
  throw InvalidInput("unknown witness tag: " + std::string(tag));
}

const std::vector<ExampleFixture>& example_fixtures() {
  static const std::vector<ExampleFixture> fixtures = [] {
    std::vector<ExampleFixture> out;

    // d = 17 two-photon state; the reported root-fidelity with the
    // maximally entangled state is 0.831, so the overlap is its square.
    ExampleFixture exp1;
    exp1.name = "exp1";
    exp1.m = 17;
    exp1.s1 = 1.0 / 17.0;
    exp1.fidelity = 0.831 * 0.831;
    exp1.expected[measure_index(MeasureKind::Eof)] = 2.68;
    exp1.expected[measure_index(MeasureKind::Gme)] = 0.45;
    exp1.expected[measure_index(MeasureKind::Concurrence)] = 0.92;
    exp1.expected[measure_index(MeasureKind::Cren)] = 10.73;
    exp1.tolerance = 0.02;
    out.push_back(std::move(exp1));

    // Three-photon state under the A|BC split: m = 2, s1 = 3/4.
    ExampleFixture exp2;
    exp2.name = "exp2";
    exp2.m = 2;
    exp2.s1 = 0.75;
    exp2.fidelity = 0.9821;
    exp2.expected[measure_index(MeasureKind::Eof)] = 0.1661;
    exp2.expected[measure_index(MeasureKind::Gme)] = 0.0245;
    exp2.expected[measure_index(MeasureKind::Concurrence)] = 0.3094;
    exp2.expected[measure_index(MeasureKind::Cren)] = 0.3094;
    exp2.expected[measure_index(MeasureKind::GConcurrence)] = 0.3094;
    exp2.tolerance = 0.01;
    out.push_back(std::move(exp2));

    // Four-photon Dicke state under the AB|CD split: m = 4, s1 = 2/3.
    // The G-concurrence bound hinges to exactly zero here.
    ExampleFixture exp3;
    exp3.name = "exp3";
    exp3.m = 4;
    exp3.s1 = 2.0 / 3.0;
    exp3.fidelity = 0.9780;
    exp3.expected[measure_index(MeasureKind::Eof)] = 0.1437;
    exp3.expected[measure_index(MeasureKind::Gme)] = 0.0160;
    exp3.expected[measure_index(MeasureKind::Concurrence)] = 0.1905;
    exp3.expected[measure_index(MeasureKind::Cren)] = 0.4668;
    exp3.expected[measure_index(MeasureKind::GConcurrence)] = 0.0;
    exp3.tolerance = 0.01;
    out.push_back(std::move(exp3));

    return out;
  }();
  return fixtures;
}

std::optional<ExampleFixture> find_fixture(std::string_view name) {
  for (const ExampleFixture& fixture : example_fixtures()) {
    if (fixture.name == name) return fixture;
  }
  return std::nullopt;
}

std::vector<FixtureCheck> check_fixture(const ExampleFixture& fixture) {
  const LambdaValue lam =
      lambda_from_fidelity(fixture.fidelity, fixture.s1, fixture.m);
  const BoundReport report = bound_report(lam);
  std::vector<FixtureCheck> checks;
  for (MeasureKind kind : kAllMeasures) {
    const auto& expected = fixture.expected[measure_index(kind)];
    if (!expected.has_value()) continue;
    FixtureCheck check;
    check.measure = kind;
    check.expected = *expected;
    check.computed = report.bound_for(kind);
    check.pass = std::abs(check.computed - check.expected) <= fixture.tolerance;
    checks.push_back(check);
  }
  return checks;
}

}  // namespace entbound
