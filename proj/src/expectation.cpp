#include "liv/expectation.hpp"

#include <cmath>
#include <vector>

namespace liv {

namespace {

// One radial node's contribution: w_x R^2(r) r^2 * sum_a w_a |Y|^2 op(r, n_a)
// with the e^{-x} weight cancelled against the wavefunction exponential.
double radial_node_term(const HydrogenicState& state, const LocalOperator& op,
                        double x, double w_x, double scale,
                        const AngularRule& angular,
                        const std::vector<double>& ylm_sq) {
  const double r = scale * x;
  const double radial = radial_wavefunction(state, r);
  // R^2 contains e^{-x}; divide it out against the rule's weight function.
  const double density = radial * radial * std::exp(x) * r * r * scale;
  double angular_sum = 0.0;
  for (std::size_t a = 0; a < angular.directions.size(); ++a) {
    angular_sum += angular.weights[a] * ylm_sq[a] *
                   op(r, angular.directions[a]);
  }
  return w_x * density * angular_sum;
}

double evaluate(const HydrogenicState& state, const LocalOperator& op,
                int radial_order, int n_theta, int n_phi, bool parallel) {
  const double scale = state.qn.n / (2.0 * state.Z);
  const QuadratureRule& radial = cached_gauss_laguerre(radial_order);
  const AngularRule angular = angular_quadrature(n_theta, n_phi);

  std::vector<double> ylm_sq(angular.directions.size());
  for (std::size_t a = 0; a < angular.directions.size(); ++a) {
    ylm_sq[a] =
        std::norm(spherical_harmonic(state.qn.l, state.qn.m,
                                     angular.directions[a]));
  }

  // e^{x} * R^2 overflows past x ~ 700 where the weight is flushed to
  // zero anyway; skip those nodes.
  std::vector<double> partial(radial.nodes.size(), 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
    if (radial.weights[i] > 0.0 && radial.nodes[i] < 700.0) {
      partial[i] = radial_node_term(state, op, radial.nodes[i],
                                    radial.weights[i], scale, angular,
                                    ylm_sq);
    }
  }
  double sum = 0.0;
  for (double p : partial) {
    sum += p;
  }
  return sum;
}

double with_convergence_check(const HydrogenicState& state,
                              const LocalOperator& op,
                              const ExpectationOptions& opts, bool parallel) {
  state.validate();
  const double coarse = evaluate(state, op, opts.radial_order, opts.n_theta,
                                 opts.n_phi, parallel);
  const double fine =
      evaluate(state, op, 2 * opts.radial_order, (3 * opts.n_theta) / 2,
               (3 * opts.n_phi) / 2, parallel);
  const double denom = std::max({std::abs(fine), std::abs(coarse), 1e-300});
  if (std::abs(fine - coarse) / denom > opts.rel_tol) {
    throw QuadratureNotConverged(
        "numerics: expectation value did not converge (coarse " +
        std::to_string(coarse) + ", fine " + std::to_string(fine) + ")");
  }
  return fine;
}

} // namespace

double expectation_numeric(const HydrogenicState& state,
                           const LocalOperator& op,
                           const ExpectationOptions& opts) {
  return with_convergence_check(state, op, opts, true);
}

double expectation_numeric_serial(const HydrogenicState& state,
                                  const LocalOperator& op,
                                  const ExpectationOptions& opts) {
  return with_convergence_check(state, op, opts, false);
}

double expectation_single(const HydrogenicState& state,
                          const LocalOperator& op, int radial_order,
                          int n_theta, int n_phi, bool parallel) {
  state.validate();
  return evaluate(state, op, radial_order, n_theta, n_phi, parallel);
}

std::complex<double> angular_element_numeric(int l, int m, int lp, int mp,
                                             const KappaMatrix& kappa,
                                             int n_theta, int n_phi) {
  const AngularRule rule = angular_quadrature(n_theta, n_phi);
  std::complex<double> sum = 0.0;
  for (std::size_t a = 0; a < rule.directions.size(); ++a) {
    const Eigen::Vector3d& n = rule.directions[a];
    const double form = n.dot(kappa.matrix() * n);
    sum += rule.weights[a] * std::conj(spherical_harmonic(lp, mp, n)) * form *
           spherical_harmonic(l, m, n);
  }
  return sum;
}

} // namespace liv
