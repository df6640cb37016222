#include "liv/hydrogenic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <gsl/gsl_sf_coupling.h>

#include "liv/quadrature.hpp"

namespace liv {

namespace {

constexpr double kPi = std::numbers::pi;

std::string qn_str(int n, int l, int m) {
  return "(n=" + std::to_string(n) + ", l=" + std::to_string(l) +
         ", m=" + std::to_string(m) + ")";
}

void validate_lm(int l, int m) {
  if (l < 0 || std::abs(m) > l) {
    throw InvalidQuantumNumbers("hydrogenic: invalid (l=" + std::to_string(l) +
                                ", m=" + std::to_string(m) + ")");
  }
}

} // namespace

void QuantumNumbers::validate() const {
  if (n < 1 || l < 0 || l >= n || std::abs(m) > l) {
    throw InvalidQuantumNumbers("hydrogenic: invalid quantum numbers " +
                                qn_str(n, l, m));
  }
  if (j) {
    const double up = l + 0.5;
    const double down = l - 0.5;
    if (*j <= 0.0 || (*j != up && *j != down)) {
      throw InvalidQuantumNumbers("hydrogenic: j=" + std::to_string(*j) +
                                  " must be l +/- 1/2 and positive for " +
                                  qn_str(n, l, m));
    }
  }
}

void HydrogenicState::validate() const {
  if (!(Z > 0.0) || !std::isfinite(Z)) {
    throw InvalidQuantumNumbers("hydrogenic: nuclear charge Z must be > 0");
  }
  qn.validate();
}

double radial_wavefunction(const HydrogenicState& state, double r) {
  state.validate();
  if (r < 0.0) {
    throw InvalidQuantumNumbers("hydrogenic: radius must be >= 0");
  }
  const int n = state.qn.n;
  const int l = state.qn.l;
  const double Z = state.Z;
  const double rho = 2.0 * Z * r / n;
  // sqrt((2Z/n)^3 (n-l-1)! / (2n (n+l)!)), factorials via lgamma.
  const double log_norm = 1.5 * std::log(2.0 * Z / n) +
                          0.5 * (std::lgamma(n - l) - std::log(2.0 * n) -
                                 std::lgamma(n + l + 1));
  const double laguerre = std::assoc_laguerre(n - l - 1, 2 * l + 1, rho);
  return std::exp(log_norm - 0.5 * rho) * std::pow(rho, l) * laguerre;
}

double expect_inv_power(const HydrogenicState& state, int k) {
  state.validate();
  const int n = state.qn.n;
  const int l = state.qn.l;
  const double Z = state.Z;
  switch (k) {
  case 1:
    return Z / (static_cast<double>(n) * n);
  case 2:
    return Z * Z / (std::pow(n, 3) * (l + 0.5));
  case 3:
    if (l < 1) {
      throw DivergentExpectation(
          "hydrogenic: <r^-3> diverges for l = 0 states");
    }
    return std::pow(Z, 3) / (std::pow(n, 3) * l * (l + 0.5) * (l + 1.0));
  default:
    throw InvalidQuantumNumbers("hydrogenic: expect_inv_power needs k in "
                                "{1,2,3}, got " +
                                std::to_string(k));
  }
}

double gaunt_coefficient(int lp, int mp, int l2, int mu, int l, int m) {
  validate_lm(lp, mp);
  validate_lm(l2, mu);
  validate_lm(l, m);
  if (mp != m + mu) {
    return 0.0;
  }
  const double three_j0 = gsl_sf_coupling_3j(2 * l, 2 * l2, 2 * lp, 0, 0, 0);
  if (three_j0 == 0.0) {
    return 0.0;
  }
  const double three_jm =
      gsl_sf_coupling_3j(2 * l, 2 * l2, 2 * lp, 2 * m, 2 * mu, -2 * mp);
  const double prefactor =
      std::sqrt((2.0 * l + 1) * (2.0 * l2 + 1) * (2.0 * lp + 1) / (4.0 * kPi));
  const double phase = (mp % 2 == 0) ? 1.0 : -1.0;
  return phase * prefactor * three_j0 * three_jm;
}

std::complex<double> angular_quadratic_element(int l, int m, int lp, int mp,
                                               const KappaMatrix& kappa) {
  validate_lm(l, m);
  validate_lm(lp, mp);

  using namespace std::complex_literals;
  std::complex<double> result = 0.0;

  // Trace part: kappa_{jk} xhat^j xhat^k = tr(kappa)/3 + rank-2 remainder.
  if (l == lp && m == mp) {
    result += kappa.trace() / 3.0;
  }

  // Expansion coefficients c_mu of the traceless remainder over Y_2mu.
  const double s = std::sqrt(2.0 * kPi / 15.0);
  const std::complex<double> c0 =
      (2.0 / 3.0) * std::sqrt(kPi / 5.0) *
      (2.0 * kappa(2, 2) - kappa(0, 0) - kappa(1, 1));
  const std::complex<double> c_p1 =
      s * (-2.0 * kappa(0, 2) + 2.0i * kappa(1, 2));
  const std::complex<double> c_m1 =
      s * (2.0 * kappa(0, 2) + 2.0i * kappa(1, 2));
  const std::complex<double> c_p2 =
      s * ((kappa(0, 0) - kappa(1, 1)) - 2.0i * kappa(0, 1));
  const std::complex<double> c_m2 =
      s * ((kappa(0, 0) - kappa(1, 1)) + 2.0i * kappa(0, 1));
  const std::complex<double> coeff[5] = {c_m2, c_m1, c0, c_p1, c_p2};

  for (int mu = -2; mu <= 2; ++mu) {
    if (mp != m + mu) {
      continue;
    }
    const std::complex<double> c = coeff[mu + 2];
    if (c == 0.0) {
      continue;
    }
    result += c * gaunt_coefficient(lp, mp, 2, mu, l, m);
  }
  return result;
}

double radial_matrix_element(double Z, int n, int l, int lp, int k) {
  HydrogenicState a{Z, {n, l, 0, {}}};
  HydrogenicState b{Z, {n, lp, 0, {}}};
  a.validate();
  b.validate();
  if (k < 1 || k > 3) {
    throw InvalidQuantumNumbers(
        "hydrogenic: radial_matrix_element needs k in {1,2,3}");
  }
  if (l + lp + 2 - k < 0) {
    throw DivergentExpectation(
        "hydrogenic: <R_nl| r^-" + std::to_string(k) + " |R_nl'> diverges "
        "for l = l' = 0");
  }

  // Substitution x = 2Zr/n turns R_nl R_nl' r^{2-k} dr into a polynomial
  // against the e^{-x} weight, so Gauss-Laguerre is exact at low order.
  // Work with the polynomial part of R (exponential stripped) so large
  // nodes never hit 0 * inf.
  const double scale = n / (2.0 * Z);
  const auto radial_poly = [](const HydrogenicState& s, double x) {
    const int nn = s.qn.n;
    const int ll = s.qn.l;
    const double log_norm = 1.5 * std::log(2.0 * s.Z / nn) +
                            0.5 * (std::lgamma(nn - ll) - std::log(2.0 * nn) -
                                   std::lgamma(nn + ll + 1));
    return std::exp(log_norm) * std::pow(x, ll) *
           std::assoc_laguerre(nn - ll - 1, 2 * ll + 1, x);
  };
  const auto integrate = [&](const QuadratureRule& rule) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double x = rule.nodes[i];
      const double r = scale * x;
      sum += rule.weights[i] * radial_poly(a, x) * radial_poly(b, x) *
             std::pow(r, 2 - k) * scale;
    }
    return sum;
  };

  constexpr int kBaseOrder = 200;
  const double coarse = integrate(cached_gauss_laguerre(kBaseOrder));
  const double fine = integrate(cached_gauss_laguerre(2 * kBaseOrder));
  const double denom = std::max(std::abs(fine), 1e-300);
  if (std::abs(fine - coarse) / denom > 1e-10) {
    throw QuadratureNotConverged(
        "hydrogenic: radial matrix element did not converge to 1e-10");
  }
  return fine;
}

} // namespace liv
