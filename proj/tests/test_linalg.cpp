#include <doctest.h>

#include <cmath>

#include "entbound/fixtures.hpp"
#include "entbound/linalg.hpp"
#include "entbound/measures.hpp"

using namespace entbound;

namespace {

ComplexMatrix random_hermitian(int d, Rng& rng) {
  const ComplexMatrix g = random_complex_gaussian(d, d, rng);
  return 0.5 * (g + g.adjoint());
}

}  // namespace

TEST_CASE("eigendecomposition of diagonal matrices") {
  CHECK(hermitian_eigendecomposition(ComplexMatrix::Identity(2, 2))
            .eigenvalues.isApprox(RealVector::Constant(2, 1.0), 1e-14));

  ComplexMatrix diag = ComplexMatrix::Zero(2, 2);
  diag(0, 0) = 0.25;
  diag(1, 1) = 0.75;
  const auto eig = hermitian_eigendecomposition(diag);
  CHECK(eig.eigenvalues[0] == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(eig.eigenvalues[1] == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("eigendecomposition reconstructs random Hermitian matrices") {
  Rng rng = make_rng(101);
  for (int trial = 0; trial < 1000; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 7);
    const ComplexMatrix h = random_hermitian(d, rng);
    const auto eig = hermitian_eigendecomposition(h);
    const ComplexMatrix rebuilt = eig.eigenvectors *
                                  eig.eigenvalues.asDiagonal() *
                                  eig.eigenvectors.adjoint();
    REQUIRE((rebuilt - h).cwiseAbs().maxCoeff() < 1e-8);
    for (Eigen::Index i = 1; i < eig.eigenvalues.size(); ++i) {
      REQUIRE(eig.eigenvalues[i] <= eig.eigenvalues[i - 1] + 1e-12);
    }
    const ComplexMatrix gram =
        eig.eigenvectors.adjoint() * eig.eigenvectors;
    REQUIRE((gram - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff() <
            1e-10);
  }
}

TEST_CASE("eigendecomposition rejects non-Hermitian input") {
  ComplexMatrix bad = ComplexMatrix::Zero(2, 2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eigendecomposition(bad), InvalidInput);
  CHECK_THROWS_AS(hermitian_eigendecomposition(ComplexMatrix()), InvalidInput);
}

TEST_CASE("singular values of simple matrices") {
  const RealVector id3 = singular_values(ComplexMatrix::Identity(3, 3));
  CHECK(id3.isApprox(RealVector::Constant(3, 1.0), 1e-14));

  ComplexMatrix rect = ComplexMatrix::Zero(2, 3);
  rect(0, 0) = 3.0;
  rect(1, 1) = 4.0;
  const RealVector sv = singular_values(rect);
  REQUIRE(sv.size() == 2);
  CHECK(sv[0] == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(sv[1] == doctest::Approx(3.0).epsilon(1e-14));

  CHECK_THROWS_AS(singular_values(ComplexMatrix()), InvalidInput);
}

TEST_CASE("singular values satisfy the Frobenius identity") {
  Rng rng = make_rng(202);
  for (int trial = 0; trial < 1000; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 6);
    const int cols = 1 + static_cast<int>(rng() % 6);
    const ComplexMatrix a = random_complex_gaussian(rows, cols, rng);
    const RealVector sv = singular_values(a);
    const double frob = (a.adjoint() * a).trace().real();
    REQUIRE(std::abs(sv.squaredNorm() - frob) < 1e-8);
  }
}

TEST_CASE("singular values match the eigenvalues of A^dag A") {
  // Independent route: Hermitian eigensolve of the Gram matrix.
  Rng rng = make_rng(203);
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexMatrix a = random_complex_gaussian(4, 5, rng);
    const RealVector sv = singular_values(a);
    const auto gram = hermitian_eigendecomposition(a.adjoint() * a);
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
      REQUIRE(std::abs(sv[i] - std::sqrt(std::max(0.0, gram.eigenvalues[i]))) <
              1e-8);
    }
  }
}

TEST_CASE("Horn singular value inequalities") {
  Rng rng = make_rng(301);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int p = 1 + static_cast<int>(rng() % 6);
    const int mm = 1 + static_cast<int>(rng() % 6);
    const ComplexMatrix a = random_complex_gaussian(n, p, rng);
    const ComplexMatrix b = random_complex_gaussian(p, mm, rng);
    const RealVector sab = singular_values(a * b);
    const RealVector sa = singular_values(a);
    const RealVector sb = singular_values(b);
    const int q = std::min({n, p, mm});
    double lhs = 0.0;
    for (int i = 0; i < q && i < sab.size(); ++i) lhs += sab[i];
    double rhs = 0.0;
    for (int i = 0; i < q; ++i) rhs += sa[i] * sb[i];
    REQUIRE(lhs <= rhs + 1e-9);
  }
}

TEST_CASE("trace magnitude is at most the trace norm") {
  Rng rng = make_rng(302);
  for (int trial = 0; trial < 1000; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 6);
    const ComplexMatrix a = random_complex_gaussian(d, d, rng);
    REQUIRE(std::abs(a.trace()) <= trace_norm(a) + 1e-9);
  }
}

TEST_CASE("schmidt decomposition of product and fixture states") {
  ComplexVector bell00 = ComplexVector::Zero(4);
  bell00[0] = 1.0;
  const auto product = schmidt_decompose(make_pure_state(2, 2, bell00));
  CHECK(product.values[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(product.values[1] == doctest::Approx(0.0).epsilon(1e-14));

  const auto s = schmidt_decompose(psi_s_state());
  CHECK(s.values[0] == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(s.values[1] == doctest::Approx(0.25).epsilon(1e-12));

  const auto dicke = schmidt_decompose(dicke_4_2_state());
  CHECK(dicke.values[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(dicke.values[1] == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(dicke.values[2] == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(std::abs(dicke.values[3]) < 1e-12);
}

TEST_CASE("schmidt decomposition rejects unnormalized states") {
  PureState bad = psi_s_state();
  bad.amplitudes *= 1.01;
  CHECK_THROWS_AS(schmidt_decompose(bad), InvalidInput);
}

TEST_CASE("schmidt values are invariant under local unitaries") {
  Rng rng = make_rng(404);
  for (int trial = 0; trial < 50; ++trial) {
    const PureState psi = random_pure_state(3, 4, rng);
    const SchmidtVector mu = schmidt_decompose(psi);

    const ComplexMatrix ua = random_unitary(3, rng);
    const ComplexMatrix ub = random_unitary(4, rng);
    const ComplexVector rotated = kronecker(ua, ub) * psi.amplitudes;
    const SchmidtVector nu =
        schmidt_decompose(PureState{3, 4, rotated});
    for (int i = 0; i < mu.m(); ++i) {
      REQUIRE(std::abs(mu.values[i] - nu.values[i]) < 1e-8);
    }
  }
}

TEST_CASE("partial transpose acts blockwise and is an involution") {
  Rng rng = make_rng(505);
  const DensityMatrix rho_a = random_density_matrix(1, 2, 2, rng);
  const DensityMatrix rho_b = random_density_matrix(1, 3, 3, rng);
  const ComplexMatrix product = kronecker(rho_a.matrix, rho_b.matrix);
  const DensityMatrix rho = make_density_matrix(2, 3, product);
  const ComplexMatrix expected =
      kronecker(rho_a.matrix, rho_b.matrix.transpose());
  CHECK((partial_transpose(rho) - expected).cwiseAbs().maxCoeff() < 1e-14);

  const DensityMatrix mixed = random_density_matrix(2, 3, 4, rng);
  const ComplexMatrix pt = partial_transpose(mixed);
  const DensityMatrix back = DensityMatrix{2, 3, pt};
  CHECK((partial_transpose(back) - mixed.matrix).cwiseAbs().maxCoeff() == 0.0);

  // trace and Hermiticity survive
  CHECK(std::abs(pt.trace() - mixed.matrix.trace()) < 1e-14);
  CHECK((pt - pt.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("partially transposed Bell projector") {
  const DensityMatrix bell = pure_to_density(max_entangled_state(2, 2));
  const ComplexMatrix pt = partial_transpose(bell);
  const auto eig = hermitian_eigendecomposition(pt);
  CHECK(eig.eigenvalues.minCoeff() == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(trace_norm(pt) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("trace norm basics") {
  CHECK(trace_norm(ComplexMatrix::Identity(5, 5)) ==
        doctest::Approx(5.0).epsilon(1e-14));
  ComplexMatrix diag = ComplexMatrix::Zero(2, 2);
  diag(0, 0) = 0.5;
  diag(1, 1) = -0.5;
  CHECK(trace_norm(diag) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(trace_norm(ComplexMatrix::Zero(2, 3)), InvalidInput);
}

TEST_CASE("fidelity with a pure reference") {
  const PureState phi = max_entangled_state(2, 2);
  const DensityMatrix self = pure_to_density(phi);
  CHECK(fidelity_with_pure(self, phi) == doctest::Approx(1.0).epsilon(1e-12));

  const DensityMatrix mixed =
      make_density_matrix(2, 2, ComplexMatrix::Identity(4, 4) / 4.0);
  CHECK(fidelity_with_pure(mixed, phi) ==
        doctest::Approx(0.25).epsilon(1e-12));

  const DensityMatrix other = pure_to_density(max_entangled_state(2, 3));
  CHECK_THROWS_AS(fidelity_with_pure(other, phi), InvalidInput);

  // the example-1 overlap is the square of the reported root fidelity
  CHECK(0.831 * 0.831 == doctest::Approx(0.690561).epsilon(1e-15));
}

TEST_CASE("random pure states are normalized and reproducible") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const PureState psi = random_pure_state(2, 3, seed);
    REQUIRE(std::abs(psi.amplitudes.squaredNorm() - 1.0) < 1e-12);
    const PureState again = random_pure_state(2, 3, seed);
    REQUIRE((psi.amplitudes - again.amplitudes).cwiseAbs().maxCoeff() == 0.0);
  }
  CHECK_THROWS_AS(random_pure_state(3, 2, 1), InvalidInput);
}

TEST_CASE("random schmidt vectors are sorted simplex points") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const SchmidtVector mu = random_schmidt_vector(4, seed);
    double sum = 0.0;
    for (int i = 0; i < mu.m(); ++i) {
      REQUIRE(mu.values[i] >= 0.0);
      if (i > 0) REQUIRE(mu.values[i] <= mu.values[i - 1]);
      sum += mu.values[i];
    }
    REQUIRE(std::abs(sum - 1.0) < 1e-12);
  }
}

TEST_CASE("random density matrices are valid states") {
  Rng rng = make_rng(606);
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 2);
    const int n = m + static_cast<int>(rng() % 2);
    const int rank = 1 + static_cast<int>(rng() % 4);
    const DensityMatrix rho = random_density_matrix(m, n, rank, rng);
    const auto eig = hermitian_eigendecomposition(rho.matrix);
    REQUIRE(eig.eigenvalues.minCoeff() >= -1e-12);
    REQUIRE(std::abs(rho.matrix.trace().real() - 1.0) < 1e-12);
  }
  CHECK_THROWS_AS(random_density_matrix(2, 2, 0, 9), InvalidInput);
}

TEST_CASE("validating constructors reject broken invariants") {
  CHECK_THROWS_AS(make_schmidt_vector({0.2, 0.8}), InvalidInput);  // not sorted
  CHECK_THROWS_AS(make_schmidt_vector({0.9, 0.2}), InvalidInput);  // sum != 1
  CHECK_THROWS_AS(make_pure_state(2, 2, ComplexVector::Zero(4)), InvalidInput);
  CHECK_THROWS_AS(
      make_density_matrix(2, 2, ComplexMatrix::Identity(4, 4)),  // trace 4
      InvalidInput);

  ComplexMatrix negative = ComplexMatrix::Zero(4, 4);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  CHECK_THROWS_AS(make_density_matrix(2, 2, negative), InvalidInput);
}

