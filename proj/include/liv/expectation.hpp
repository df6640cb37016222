#pragma once

#include <functional>

#include <Eigen/Core>

#include "liv/hydrogenic.hpp"
#include "liv/quadrature.hpp"

namespace liv {

/// Local multiplicative operator op(r, nhat) evaluated pointwise.
using LocalOperator = std::function<double(double, const Eigen::Vector3d&)>;

struct ExpectationOptions {
  int radial_order = 64;
  int n_theta = 16;
  int n_phi = 32;
  // The convergence partner scales every rule size by 2 (radial) and 3/2
  // (angular); the two results must agree to rel_tol.
  double rel_tol = 1e-9;
};

/// <psi_nlm| op |psi_nlm> by radial Gauss-Laguerre (substitution
/// x = 2Zr/n) times the angular product rule, with a two-rule-size
/// convergence check. Throws QuadratureNotConverged when the two sizes
/// disagree, e.g. for operators more singular than the state admits.
///
/// The default path splits the radial loop over OpenMP threads; partial
/// sums are combined in fixed order, so the result does not depend on the
/// number of workers.
double expectation_numeric(const HydrogenicState& state,
                           const LocalOperator& op,
                           const ExpectationOptions& opts = {});

/// Plain double-loop reference used to validate the parallel kernel.
double expectation_numeric_serial(const HydrogenicState& state,
                                  const LocalOperator& op,
                                  const ExpectationOptions& opts = {});

/// Single evaluation on given rule sizes, no convergence check. Exposed
/// for the benchmark and the kernel-equivalence tests.
double expectation_single(const HydrogenicState& state,
                          const LocalOperator& op, int radial_order,
                          int n_theta, int n_phi, bool parallel);

/// Angular-only oracle: quadrature of
///   conj(Y_{l'm'}) kappa_{jk} nhat^j nhat^k Y_{lm}
/// over the sphere, for cross-checking the analytic Gaunt path.
std::complex<double> angular_element_numeric(int l, int m, int lp, int mp,
                                             const KappaMatrix& kappa,
                                             int n_theta = 24, int n_phi = 48);

} // namespace liv
