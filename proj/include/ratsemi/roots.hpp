#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace ratsemi {

using cplx = std::complex<double>;

class RootSolverError : public std::runtime_error {
 public:
  RootSolverError(const std::string& what, double residual) : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// All roots (with multiplicity) of sum coeffs[k] z^k. The leading
/// coefficient must be nonzero. Degrees one and two use closed forms; higher
/// degrees use Aberth–Ehrlich simultaneous iteration capped at 500 sweeps.
/// Every root must satisfy |p(z)| ≤ 1e-10·max|c|·max(1,|z|)^deg or
/// RootSolverError is thrown carrying the worst residual.
std::vector<cplx> polynomial_roots(std::span<const cplx> coeffs);

/// Horner evaluation of p and p′ at z.
void horner_with_derivative(std::span<const cplx> coeffs, cplx z, cplx& p, cplx& dp);

}  // namespace ratsemi
