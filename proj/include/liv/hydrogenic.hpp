#pragma once

#include <complex>
#include <optional>

#include "liv/errors.hpp"
#include "liv/kf_tensor.hpp"

namespace liv {

/// Principal, orbital, magnetic quantum numbers; j only when spin matters.
struct QuantumNumbers {
  int n = 1;
  int l = 0;
  int m = 0;
  std::optional<double> j; // l - 1/2 or l + 1/2

  void validate() const;
};

struct HydrogenicState {
  double Z = 1.0;
  QuantumNumbers qn;

  void validate() const;
};

/// Normalized radial function R_nl(r; Z) in bohr^{-3/2};
/// int_0^inf R^2 r^2 dr = 1.
double radial_wavefunction(const HydrogenicState& state, double r);

/// Closed-form <r^{-k}> in atomic units, k in {1,2,3}:
///   k=1: Z/n^2,  k=2: Z^2/(n^3 (l+1/2)),  k=3: Z^3/(n^3 l (l+1/2)(l+1)).
/// k=3 requires l >= 1 (diverges for s states).
double expect_inv_power(const HydrogenicState& state, int k);

/// Exact angular matrix element
///   <Y_{l'm'} | kappa_{jk} xhat^j xhat^k | Y_{lm}>
/// between complex spherical harmonics, via the expansion of the quadratic
/// form into Y_00 and Y_2mu pieces and Gaunt coefficients. Vanishes unless
/// |l - l'| in {0, 2} and |m - m'| <= 2. Hermitian in (lm) <-> (l'm').
std::complex<double> angular_quadratic_element(int l, int m, int lp, int mp,
                                               const KappaMatrix& kappa);

/// Gaunt integral int conj(Y_{l'm'}) Y_{l2 mu} Y_{lm} dOmega.
double gaunt_coefficient(int lp, int mp, int l2, int mu, int l, int m);

/// <R_nl | r^{-k} | R_nl'> by Gauss-Laguerre with an order-doubling
/// convergence check; agrees with expect_inv_power for l == l'.
double radial_matrix_element(double Z, int n, int l, int lp, int k);

} // namespace liv
