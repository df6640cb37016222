#include <doctest.h>

#include <cmath>
#include <random>

#include "liv/expectation.hpp"
#include "liv/hydrogenic.hpp"
#include "liv/quadrature.hpp"
#include "test_util.hpp"

using livtest::rel_err;

namespace {

// Independent radial overlap <R_nl r^p R_n'l'> via Gauss-Laguerre under the
// mixed-exponent substitution x = Z(1/n + 1/n') r.
double radial_overlap(double Z, int n, int l, int np, int lp, int p) {
  const liv::QuadratureRule rule = liv::gauss_laguerre(64);
  const double scale = 1.0 / (Z * (1.0 / n + 1.0 / np));
  const liv::HydrogenicState a{Z, {n, l, 0, {}}};
  const liv::HydrogenicState b{Z, {np, lp, 0, {}}};
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    const double r = scale * x;
    sum += rule.weights[i] * std::exp(x) * liv::radial_wavefunction(a, r) *
           liv::radial_wavefunction(b, r) * std::pow(r, p) * scale;
  }
  return sum;
}

// Composite-Simpson radial integral on [0, rmax]; the second, unrelated
// scheme of the dual-quadrature oracle.
double radial_overlap_simpson(double Z, int n, int l, int np, int lp, int p,
                              int intervals = 20000, double rmax = 60.0) {
  const liv::HydrogenicState a{Z, {n, l, 0, {}}};
  const liv::HydrogenicState b{Z, {np, lp, 0, {}}};
  const auto f = [&](double r) {
    return r == 0.0 ? 0.0
                    : liv::radial_wavefunction(a, r) *
                          liv::radial_wavefunction(b, r) * std::pow(r, p);
  };
  const double h = rmax / intervals;
  double sum = f(0.0) + f(rmax);
  for (int i = 1; i < intervals; ++i) {
    sum += f(i * h) * (i % 2 == 0 ? 2.0 : 4.0);
  }
  return sum * h / 3.0;
}

} // namespace

TEST_CASE("radial wavefunction closed-form values") {
  const liv::HydrogenicState ground{1.0, {1, 0, 0, {}}};
  CHECK(liv::radial_wavefunction(ground, 0.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(rel_err(liv::radial_wavefunction(ground, 1.0), 2.0 * std::exp(-1.0)) <
        1e-14);

  const liv::HydrogenicState z2{2.0, {1, 0, 0, {}}};
  CHECK(rel_err(liv::radial_wavefunction(z2, 0.0), 2.0 * std::pow(2.0, 1.5)) <
        1e-14);
}

TEST_CASE("radial wavefunctions are normalized (quadrature oracle)") {
  for (const auto& [n, l] : {std::pair{3, 1}, {1, 0}, {5, 4}, {4, 0}}) {
    CHECK(rel_err(radial_overlap(1.0, n, l, n, l, 2), 1.0) < 1e-12);
  }
}

TEST_CASE("radial orthonormality for fixed l up to n = 5") {
  for (int l = 0; l <= 2; ++l) {
    for (int n = l + 1; n <= 5; ++n) {
      for (int np = l + 1; np <= 5; ++np) {
        const double want = (n == np) ? 1.0 : 0.0;
        CHECK(std::abs(radial_overlap(1.0, n, l, np, l, 2) - want) < 1e-10);
      }
    }
  }
}

TEST_CASE("expect_inv_power closed forms") {
  CHECK(liv::expect_inv_power({1.0, {1, 0, 0, {}}}, 1) == 1.0);
  CHECK(rel_err(liv::expect_inv_power({1.0, {2, 1, 0, {}}}, 3), 1.0 / 24.0) <
        1e-15);
  CHECK_THROWS_AS(liv::expect_inv_power({1.0, {2, 0, 0, {}}}, 3),
                  liv::DivergentExpectation);

  // Quadrature oracle across states and powers.
  for (int n = 1; n <= 5; ++n) {
    for (int l = 0; l < n; ++l) {
      for (int k = 1; k <= 3; ++k) {
        if (k == 3 && l == 0) {
          continue;
        }
        CHECK(rel_err(radial_overlap(1.4, n, l, n, l, 2 - k),
                      liv::expect_inv_power({1.4, {n, l, 0, {}}}, k)) < 1e-11);
      }
    }
  }
}

TEST_CASE("invalid quantum numbers are rejected") {
  CHECK_THROWS_AS(liv::expect_inv_power({1.0, {0, 0, 0, {}}}, 1),
                  liv::InvalidQuantumNumbers);
  CHECK_THROWS_AS(liv::expect_inv_power({1.0, {2, 2, 0, {}}}, 1),
                  liv::InvalidQuantumNumbers);
  CHECK_THROWS_AS(liv::expect_inv_power({1.0, {2, 1, 2, {}}}, 1),
                  liv::InvalidQuantumNumbers);
  CHECK_THROWS_AS(liv::expect_inv_power({-1.0, {2, 1, 0, {}}}, 1),
                  liv::InvalidQuantumNumbers);
  CHECK_THROWS_AS(liv::radial_wavefunction({1.0, {2, 1, 0, 2.0}}, 1.0),
                  liv::InvalidQuantumNumbers);
}

TEST_CASE("angular element: s state sees the isotropic average") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10; ++i) {
    const liv::KappaMatrix kappa = livtest::random_kappa(rng, 1e-2);
    const auto element = liv::angular_quadratic_element(0, 0, 0, 0, kappa);
    CHECK(rel_err(element.real(), kappa.trace() / 3.0) < 1e-14);
    CHECK(std::abs(element.imag()) < 1e-18);
  }
}

TEST_CASE("angular element: p_z state against kappa_zz (golden 3/5)") {
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  m(2, 2) = 1e-2;
  const auto element =
      liv::angular_quadratic_element(1, 0, 1, 0, liv::KappaMatrix(m));
  CHECK(rel_err(element.real(), 0.6 * 1e-2) < 1e-13);
}

TEST_CASE("angular element selection rules") {
  std::mt19937_64 rng(12);
  const liv::KappaMatrix kappa = livtest::random_kappa(rng, 1e-2);
  for (int l = 0; l <= 4; ++l) {
    for (int m = -l; m <= l; ++m) {
      for (int lp = 0; lp <= 4; ++lp) {
        for (int mp = -lp; mp <= lp; ++mp) {
          const auto element =
              liv::angular_quadratic_element(l, m, lp, mp, kappa);
          const bool allowed =
              (std::abs(l - lp) == 0 || std::abs(l - lp) == 2) &&
              std::abs(m - mp) <= 2;
          if (!allowed) {
            CHECK(std::abs(element) < 1e-14);
          }
        }
      }
    }
  }
  // Parity-forbidden example pinned explicitly.
  CHECK(std::abs(liv::angular_quadratic_element(0, 0, 1, 0, kappa)) == 0.0);
}

TEST_CASE("angular element isotropy: identity kappa gives c for any (l,m)") {
  const liv::KappaMatrix kappa = liv::KappaMatrix::isotropic(3e-3);
  for (int l = 0; l <= 4; ++l) {
    for (int m = -l; m <= l; ++m) {
      const auto element = liv::angular_quadratic_element(l, m, l, m, kappa);
      CHECK(rel_err(element.real(), 3e-3) < 1e-13);
      CHECK(std::abs(element.imag()) < 1e-18);
    }
  }
}

TEST_CASE("angular element linearity in kappa") {
  std::mt19937_64 rng(13);
  const liv::KappaMatrix k1 = livtest::random_kappa(rng, 1e-2);
  const liv::KappaMatrix k2 = livtest::random_kappa(rng, 1e-2);
  const double alpha = 0.375, beta = -1.25;
  const liv::KappaMatrix mix(
      Eigen::Matrix3d(alpha * k1.matrix() + beta * k2.matrix()));
  for (const auto& [l, m, lp, mp] :
       {std::tuple{2, 1, 2, -1}, {1, 0, 3, 2}, {3, -2, 3, -2}, {0, 0, 2, 2}}) {
    const auto got = liv::angular_quadratic_element(l, m, lp, mp, mix);
    const auto want =
        alpha * liv::angular_quadratic_element(l, m, lp, mp, k1) +
        beta * liv::angular_quadratic_element(l, m, lp, mp, k2);
    CHECK(std::abs(got - want) <= 1e-16 + 1e-12 * std::abs(want));
  }
}

TEST_CASE("angular element hermiticity") {
  std::mt19937_64 rng(14);
  for (int rep = 0; rep < 20; ++rep) {
    const liv::KappaMatrix kappa = livtest::random_kappa(rng, 1e-2);
    std::uniform_int_distribution<int> lpick(0, 4);
    const int l = lpick(rng);
    const int lp = lpick(rng);
    std::uniform_int_distribution<int> mpick_l(-l, l);
    std::uniform_int_distribution<int> mpick_lp(-lp, lp);
    const int m = mpick_l(rng);
    const int mp = mpick_lp(rng);
    const auto a = liv::angular_quadratic_element(l, m, lp, mp, kappa);
    const auto b = liv::angular_quadratic_element(lp, mp, l, m, kappa);
    CHECK(std::abs(a - std::conj(b)) < 1e-14);
  }
}

TEST_CASE("analytic angular elements match the quadrature oracle") {
  std::mt19937_64 rng(15);
  std::uniform_int_distribution<int> lpick(0, 4);
  for (int rep = 0; rep < 100; ++rep) {
    const liv::KappaMatrix kappa = livtest::random_kappa(rng, 1e-2);
    const int l = lpick(rng);
    const int lp = lpick(rng);
    std::uniform_int_distribution<int> mpick_l(-l, l);
    std::uniform_int_distribution<int> mpick_lp(-lp, lp);
    const int m = mpick_l(rng);
    const int mp = mpick_lp(rng);
    const auto analytic = liv::angular_quadratic_element(l, m, lp, mp, kappa);
    const auto numeric = liv::angular_element_numeric(l, m, lp, mp, kappa);
    CHECK(std::abs(analytic - numeric) < 1e-8);
  }
}

TEST_CASE("radial matrix element: diagonal equals the closed form") {
  CHECK(rel_err(liv::radial_matrix_element(1.0, 2, 0, 0, 1), 0.25) < 1e-12);
  for (int n = 1; n <= 5; ++n) {
    for (int l = 0; l < n; ++l) {
      for (int k = 1; k <= 3; ++k) {
        if (k == 3 && l == 0) {
          continue;
        }
        CHECK(rel_err(liv::radial_matrix_element(1.2, n, l, l, k),
                      liv::expect_inv_power({1.2, {n, l, 0, {}}}, k)) < 1e-10);
      }
    }
  }
}

TEST_CASE("radial matrix element domain rules") {
  CHECK_THROWS_AS(liv::radial_matrix_element(1.0, 2, 0, 2, 1),
                  liv::InvalidQuantumNumbers);
  CHECK_THROWS_AS(liv::radial_matrix_element(1.0, 3, 0, 0, 3),
                  liv::DivergentExpectation);
}

TEST_CASE("radial matrix element off-diagonal golden (dual quadrature)") {
  // <R_30 | 1/r | R_32> = 1/(9 sqrt(10)), frozen from two independent
  // quadrature schemes agreeing to 1e-10.
  const double golden = 0.035136418446315326;
  CHECK(rel_err(radial_overlap(1.0, 3, 0, 3, 2, 1), golden) < 1e-10);
  CHECK(rel_err(radial_overlap_simpson(1.0, 3, 0, 3, 2, 1), golden) < 1e-10);
  CHECK(rel_err(liv::radial_matrix_element(1.0, 3, 0, 2, 1), golden) < 1e-10);
}
