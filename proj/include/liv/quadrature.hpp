#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>

#include "liv/errors.hpp"

namespace liv {

enum class RuleKind { gauss_laguerre, gauss_legendre, angular_product };

/// One-dimensional rule: integral ~ sum_i w_i f(x_i) against the kind's
/// weight function (e^{-x} on [0,inf) for Laguerre, 1 on [-1,1] for
/// Legendre).
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  RuleKind kind = RuleKind::gauss_laguerre;
  int order = 0;
};

/// Exact for polynomials of degree <= 2*order - 1. Nodes ascending,
/// weights positive (weights in the far tail may underflow to zero).
QuadratureRule gauss_laguerre(int order);

QuadratureRule gauss_legendre(int order);

/// Shared, mutex-guarded rule caches keyed by order.
const QuadratureRule& cached_gauss_laguerre(int order);
const QuadratureRule& cached_gauss_legendre(int order);

/// Product rule over the unit sphere: Gauss-Legendre in cos(theta) times a
/// uniform periodic rule in phi. Weights sum to 4*pi. Integrates any
/// product of spherical harmonics with combined theta-degree below
/// 2*n_theta and azimuthal order below n_phi exactly.
struct AngularRule {
  std::vector<Eigen::Vector3d> directions;
  std::vector<double> weights;
  int n_theta = 0;
  int n_phi = 0;
};

AngularRule angular_quadrature(int n_theta, int n_phi);

/// Complex spherical harmonic Y_lm with the Condon-Shortley phase,
/// evaluated at a unit direction.
std::complex<double> spherical_harmonic(int l, int m,
                                        const Eigen::Vector3d& dir);

} // namespace liv
