#include <doctest.h>

#include <cmath>

#include "entbound/linalg.hpp"
#include "entbound/measures.hpp"

using namespace entbound;

namespace {

SchmidtVector uniform_schmidt(int m) {
  return SchmidtVector{std::vector<double>(m, 1.0 / m)};
}

SchmidtVector product_schmidt(int m) {
  std::vector<double> values(m, 0.0);
  values[0] = 1.0;
  return SchmidtVector{std::move(values)};
}

}  // namespace

TEST_CASE("entropy measure on fixed vectors") {
  CHECK(eof_pure(product_schmidt(2)) == 0.0);
  CHECK(eof_pure(uniform_schmidt(8)) == doctest::Approx(3.0).epsilon(1e-14));
  // binary entropy at 3/4, evaluated independently
  CHECK(eof_pure(make_schmidt_vector({0.75, 0.25})) ==
        doctest::Approx(0.81127812445913286).epsilon(1e-14));
}

TEST_CASE("largest-coefficient measure on fixed vectors") {
  CHECK(gme_pure(product_schmidt(3)) == 0.0);
  CHECK(gme_pure(uniform_schmidt(4)) == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(gme_pure(make_schmidt_vector({2.0 / 3, 1.0 / 6, 1.0 / 6, 0.0})) ==
        doctest::Approx(1.0 / 3).epsilon(1e-14));
}

TEST_CASE("concurrence on fixed vectors") {
  CHECK(concurrence_pure(product_schmidt(2)) == 0.0);
  CHECK(concurrence_pure(uniform_schmidt(2)) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(concurrence_pure(make_schmidt_vector({0.75, 0.25})) ==
        doctest::Approx(0.86602540378443865).epsilon(1e-14));
}

TEST_CASE("negativity on fixed vectors") {
  CHECK(negativity_pure(product_schmidt(4)) == 0.0);
  CHECK(negativity_pure(uniform_schmidt(5)) ==
        doctest::Approx(4.0).epsilon(1e-13));
  CHECK(negativity_pure(make_schmidt_vector({2.0 / 3, 1.0 / 6, 1.0 / 6, 0.0})) ==
        doctest::Approx(5.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("geometric-mean measure on fixed vectors") {
  CHECK(gconcurrence_pure(product_schmidt(3)) == 0.0);
  CHECK(gconcurrence_pure(make_schmidt_vector({0.5, 0.3, 0.2, 0.0})) == 0.0);
  CHECK(gconcurrence_pure(uniform_schmidt(6)) ==
        doctest::Approx(1.0).epsilon(1e-13));
  CHECK(gconcurrence_pure(make_schmidt_vector({0.75, 0.25})) ==
        doctest::Approx(0.86602540378443865).epsilon(1e-14));
}

TEST_CASE("statistic of a schmidt vector") {
  CHECK(lambda_of_schmidt(product_schmidt(4)) ==
        doctest::Approx(0.25).epsilon(1e-14));
  CHECK(lambda_of_schmidt(uniform_schmidt(7)) ==
        doctest::Approx(1.0).epsilon(1e-13));
  CHECK(lambda_of_schmidt(make_schmidt_vector({0.75, 0.25})) ==
        doctest::Approx(0.93301270189221932).epsilon(1e-14));
  CHECK(lambda_of_schmidt(
            make_schmidt_vector({2.0 / 3, 1.0 / 6, 1.0 / 6, 0.0})) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("all measures vanish on product states and peak at uniform") {
  for (int m = 2; m <= 6; ++m) {
    const SchmidtVector product = product_schmidt(m);
    const SchmidtVector uniform = uniform_schmidt(m);
    for (MeasureKind kind : kAllMeasures) {
      CHECK(pure_measure(kind, product) == doctest::Approx(0.0).epsilon(1e-12));
    }
    CHECK(pure_measure(MeasureKind::Eof, uniform) ==
          doctest::Approx(std::log2(m)).epsilon(1e-12));
    CHECK(pure_measure(MeasureKind::Gme, uniform) ==
          doctest::Approx(1.0 - 1.0 / m).epsilon(1e-12));
    CHECK(pure_measure(MeasureKind::Concurrence, uniform) ==
          doctest::Approx(std::sqrt(2.0 * (m - 1) / m)).epsilon(1e-12));
    CHECK(pure_measure(MeasureKind::Cren, uniform) ==
          doctest::Approx(m - 1.0).epsilon(1e-12));
    CHECK(pure_measure(MeasureKind::GConcurrence, uniform) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("negativity dominates concurrence on random vectors") {
  Rng rng = make_rng(707);
  for (int trial = 0; trial < 10000; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 5);
    const SchmidtVector mu = random_schmidt_vector(m, rng);
    const double nv = negativity_pure(mu);
    const double c = concurrence_pure(mu);
    REQUIRE(nv >= c - 1e-9);
    REQUIRE(c >= std::sqrt(2.0 / (m * (m - 1.0))) * nv - 1e-9);
  }
}

TEST_CASE("measure names round-trip") {
  for (MeasureKind kind : kAllMeasures) {
    const auto parsed = parse_measure(measure_name(kind));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == kind);
  }
  CHECK(!parse_measure("entropy").has_value());
}
