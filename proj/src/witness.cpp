#include "entbound/witness.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace entbound {

WitnessSpec make_witness(const PureState& phi) {
  SchmidtVector schmidt = schmidt_decompose(phi);
  int nonzero = 0;
  for (double v : schmidt.values) {
    if (v > 1e-10) ++nonzero;
  }
  if (nonzero < 2) {
    throw NotEntangled("witness state has Schmidt rank 1");
  }
  const double s1 = schmidt.values.front();
  const int m = phi.dim_a;
  return WitnessSpec{phi, std::move(schmidt), s1, m};
}

LambdaValue lambda_from_fidelity(double fidelity, double s1, int m) {
  if (m < 2) throw InvalidInput("witness statistic needs m >= 2");
  if (s1 < 1.0 / m - 1e-9 || s1 > 1.0 + 1e-9) {
    throw InvalidInput("s1 must lie in [1/m, 1]");
  }
  if (fidelity < -1e-12) {
    throw InvalidInput("fidelity must be nonnegative");
  }
  if (fidelity > 1.0 + 1e-6) {
    throw DomainError("fidelity above 1 is unphysical");
  }
  if (fidelity > s1 * m + 1e-6) {
    throw DomainError("fidelity exceeds s1*m; the statistic would pass 1");
  }
  const double lam = std::max(fidelity / (s1 * m), 1.0 / m);
  return make_lambda(lam, m);
}

LambdaValue compute_lambda(const DensityMatrix& rho, const WitnessSpec& w) {
  if (rho.dim_a != w.phi.dim_a || rho.dim_b != w.phi.dim_b) {
    throw InvalidInput("state and witness dimensions do not match");
  }
  const double fid = fidelity_with_pure(rho, w.phi);
  return lambda_from_fidelity(fid, w.s1, w.m);
}

ComplexMatrix witness_operator(const WitnessSpec& w) {
  const Eigen::Index d = w.phi.dim();
  return w.s1 * ComplexMatrix::Identity(d, d) -
         w.phi.amplitudes * w.phi.amplitudes.adjoint();
}

std::vector<ComplexMatrix> loo_basis(int d) {
  if (d < 2) throw InvalidInput("LOO basis needs dimension >= 2");
  std::vector<ComplexMatrix> basis;
  basis.reserve(static_cast<std::size_t>(d) * d);
  for (int l = 0; l < d; ++l) {
    ComplexMatrix proj = ComplexMatrix::Zero(d, d);
    proj(l, l) = 1.0;
    basis.push_back(std::move(proj));
  }
  const double inv_sqrt2 = M_SQRT1_2;
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      ComplexMatrix sym = ComplexMatrix::Zero(d, d);
      sym(a, b) = inv_sqrt2;
      sym(b, a) = inv_sqrt2;
      basis.push_back(std::move(sym));
      ComplexMatrix antisym = ComplexMatrix::Zero(d, d);
      antisym(a, b) = Complex{0.0, -inv_sqrt2};
      antisym(b, a) = Complex{0.0, inv_sqrt2};
      basis.push_back(std::move(antisym));
    }
  }
  return basis;
}

std::vector<LOOTerm> loo_expansion(const WitnessSpec& w) {
  const int m = w.phi.dim_a;
  const int n = w.phi.dim_b;
  const ComplexMatrix amp = reshape_to_matrix(w.phi);
  Eigen::JacobiSVD<ComplexMatrix> svd(
      amp, Eigen::ComputeFullU | Eigen::ComputeFullV);
  // amp = U S V^dag; in the Schmidt form amp = V_A S V_B^T, so V_B is the
  // conjugate of V.
  const ComplexMatrix rot_a = svd.matrixU();
  const ComplexMatrix rot_b = svd.matrixV().conjugate();

  const std::vector<ComplexMatrix> basis = loo_basis(n);
  std::vector<LOOTerm> terms;
  terms.reserve(basis.size());
  for (const ComplexMatrix& g : basis) {
    LOOTerm term;
    term.op_a = rot_a * g.topLeftCorner(m, m) * rot_a.adjoint();
    term.op_b = rot_b * g.transpose() * rot_b.adjoint();
    // <phi| A (x) B |phi> = Tr(A Phi B^T Phi^dag) with Phi the amplitude
    // matrix; real because A and B are Hermitian.
    const Complex c =
        (term.op_a * amp * term.op_b.transpose() * amp.adjoint()).trace();
    term.coefficient = c.real();
    terms.push_back(std::move(term));
  }
  return terms;
}

double loo_expectation(const std::vector<LOOTerm>& terms,
                       const DensityMatrix& rho) {
  double total = 0.0;
  for (const LOOTerm& term : terms) {
    if (term.op_a.rows() != rho.dim_a || term.op_b.rows() != rho.dim_b) {
      throw InvalidInput("LOO term dimensions do not match the state");
    }
    const Complex tr =
        (kronecker(term.op_a, term.op_b) * rho.matrix).trace();
    total += term.coefficient * tr.real();
  }
  return total;
}

}  // namespace entbound
