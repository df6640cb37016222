#include "liv/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace liv {

namespace {

// Orthonormal Laguerre recurrence at x, rescaled on the fly so large
// arguments neither overflow nor flush the whole vector to zero. Returns
// the values needed for one Newton step on the top polynomial and for the
// weight identity w = q_0^2 / sum_{k<n} q_k^2.
struct LaguerreStation {
  double top;        // q_n, common scale
  double top_deriv;  // q_n', same scale
  double sum_sq;     // sum_{k<n} q_k^2, same scale squared
  double log_scale;  // the common scale is e^{log_scale}
};

LaguerreStation laguerre_station(int n, double x) {
  double prev = 0.0, cur = 1.0;       // q_{k-1}, q_k
  double dprev = 0.0, dcur = 0.0;     // derivatives
  double sum_sq = 1.0;
  double log_scale = 0.0;
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * k + 1.0;
    const double b = static_cast<double>(k);
    const double bn = static_cast<double>(k + 1);
    const double next = ((x - a) * cur - b * prev) / bn;
    const double dnext = ((x - a) * dcur + cur - b * dprev) / bn;
    prev = cur;
    cur = next;
    dprev = dcur;
    dcur = dnext;
    if (k + 1 < n) {
      sum_sq += cur * cur;
    }
    const double mag = std::abs(cur);
    if (mag > 1e120) {
      const double inv = 1.0 / mag;
      prev *= inv;
      cur *= inv;
      dprev *= inv;
      dcur *= inv;
      sum_sq *= inv * inv;
      log_scale += std::log(mag);
    }
  }
  return {cur, dcur, sum_sq, log_scale};
}

// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix of the
// orthogonal-polynomial recurrence, weights mu0 * (first eigenvector
// component)^2. Laguerre nodes are then Newton-polished (the eigensolve
// alone drifts to ~1e-11 on high monomials at large orders) and the
// weights recomputed from the polished nodes.
QuadratureRule golub_welsch(int order, RuleKind kind) {
  if (order < 1) {
    throw QuadratureNotConverged("numerics: quadrature order must be >= 1");
  }
  const int n = order;
  Eigen::VectorXd diag(n), subdiag(n > 1 ? n - 1 : 1);
  double mu0 = 0.0;
  if (kind == RuleKind::gauss_laguerre) {
    mu0 = 1.0; // integral of e^{-x} over [0, inf)
    for (int i = 0; i < n; ++i) {
      diag[i] = 2.0 * i + 1.0;
    }
    for (int i = 1; i < n; ++i) {
      subdiag[i - 1] = static_cast<double>(i);
    }
  } else {
    mu0 = 2.0; // length of [-1, 1]
    diag.setZero();
    for (int i = 1; i < n; ++i) {
      subdiag[i - 1] = i / std::sqrt(4.0 * i * i - 1.0);
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, subdiag.head(std::max(n - 1, 0)),
                                Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw DiagonalizationFailure(
        "numerics: Jacobi-matrix eigensolve failed for quadrature order " +
        std::to_string(order));
  }

  QuadratureRule rule;
  rule.kind = kind;
  rule.order = order;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = solver.eigenvalues()[i];
    const double v0 = solver.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }

  if (kind == RuleKind::gauss_laguerre) {
    for (int i = 0; i < n; ++i) {
      double x = rule.nodes[i];
      for (int iter = 0; iter < 3; ++iter) {
        const LaguerreStation st = laguerre_station(n, x);
        if (st.top_deriv == 0.0) {
          break;
        }
        const double step = st.top / st.top_deriv;
        x -= step;
        if (std::abs(step) < 1e-18 * std::max(x, 1.0)) {
          break;
        }
      }
      const LaguerreStation st = laguerre_station(n, x);
      rule.nodes[i] = x;
      // w = q_0^2 / sum q_k^2 with q_0 = 1; undo the running rescale.
      rule.weights[i] = std::exp(-2.0 * st.log_scale) / st.sum_sq;
    }
  }
  return rule;
}

const QuadratureRule& cached_rule(int order, RuleKind kind) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, QuadratureRule> cache;
  std::lock_guard lock(mutex);
  const auto key = std::pair{static_cast<int>(kind), order};
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, golub_welsch(order, kind)).first;
  }
  return it->second;
}

} // namespace

QuadratureRule gauss_laguerre(int order) {
  return golub_welsch(order, RuleKind::gauss_laguerre);
}

QuadratureRule gauss_legendre(int order) {
  return golub_welsch(order, RuleKind::gauss_legendre);
}

const QuadratureRule& cached_gauss_laguerre(int order) {
  return cached_rule(order, RuleKind::gauss_laguerre);
}

const QuadratureRule& cached_gauss_legendre(int order) {
  return cached_rule(order, RuleKind::gauss_legendre);
}

AngularRule angular_quadrature(int n_theta, int n_phi) {
  if (n_theta < 2 || n_phi < 2) {
    throw QuadratureNotConverged(
        "numerics: angular rule needs n_theta, n_phi >= 2");
  }
  const QuadratureRule& leg = cached_gauss_legendre(n_theta);
  AngularRule rule;
  rule.n_theta = n_theta;
  rule.n_phi = n_phi;
  rule.directions.reserve(static_cast<std::size_t>(n_theta) * n_phi);
  rule.weights.reserve(static_cast<std::size_t>(n_theta) * n_phi);
  const double phi_weight = 2.0 * std::numbers::pi / n_phi;
  for (int i = 0; i < n_theta; ++i) {
    const double ct = leg.nodes[i];
    const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    for (int k = 0; k < n_phi; ++k) {
      const double phi = 2.0 * std::numbers::pi * k / n_phi;
      rule.directions.emplace_back(st * std::cos(phi), st * std::sin(phi),
                                   ct);
      rule.weights.push_back(leg.weights[i] * phi_weight);
    }
  }
  return rule;
}

std::complex<double> spherical_harmonic(int l, int m,
                                        const Eigen::Vector3d& dir) {
  if (l < 0 || std::abs(m) > l) {
    throw InvalidQuantumNumbers("numerics: spherical_harmonic needs l >= 0, "
                                "|m| <= l");
  }
  const double theta = std::acos(std::clamp(dir.z() / dir.norm(), -1.0, 1.0));
  const double phi = std::atan2(dir.y(), dir.x());
  const int am = std::abs(m);
  // std::sph_legendre carries the Condon-Shortley phase and normalization.
  const double plm = std::sph_legendre(l, am, theta);
  const std::complex<double> azimuth =
      std::polar(1.0, static_cast<double>(m) * phi);
  if (m >= 0) {
    return plm * azimuth;
  }
  // Y_{l,-|m|} = (-1)^{|m|} conj(Y_{l,|m|})
  const double sign = (am % 2 == 0) ? 1.0 : -1.0;
  return sign * plm * azimuth;
}

} // namespace liv
