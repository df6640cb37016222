#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "liv/fields.hpp"
#include "test_util.hpp"

using livtest::rel_err;

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

// Brute-force Green function: pattern-match every one of the 256 index
// tuples against the two contraction patterns instead of looping the
// spatial sums directly.
Eigen::Matrix4d green_oracle(const Eigen::Vector3d& x,
                             const Eigen::Vector3d& src,
                             const liv::KFTensor& t) {
  const Eigen::Vector3d d = x - src;
  const double dist = d.norm();
  const Eigen::Vector3d u = d / dist;
  Eigen::Matrix4d contracted = Eigen::Matrix4d::Zero();
  Eigen::Matrix4d directed = Eigen::Matrix4d::Zero();
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (int c = 0; c < 4; ++c) {
        for (int e = 0; e < 4; ++e) {
          const double value = t(a, b, c, e);
          if (value == 0.0) {
            continue;
          }
          if (b >= 1 && e >= 1) {
            if (b == e) {
              contracted(a, c) += value;
            }
            directed(a, c) += value * u[b - 1] * u[e - 1];
          }
        }
      }
    }
  }
  Eigen::Matrix4d g;
  for (int mu = 0; mu < 4; ++mu) {
    for (int lam = 0; lam < 4; ++lam) {
      g(mu, lam) = (liv::metric(mu, lam) + contracted(mu, lam) -
                    directed(mu, lam)) /
                   (kFourPi * dist);
    }
  }
  return g;
}

// Eq.-5-style brute force for the vector potential, same tuple sweep.
Eigen::Vector3d vector_potential_oracle(const Eigen::Vector3d& x,
                                        const liv::PointCharge& c,
                                        const liv::KFTensor& t) {
  const Eigen::Vector3d d = x - c.position;
  const double dist = d.norm();
  const Eigen::Vector3d u = d / dist;
  Eigen::Vector3d a = Eigen::Vector3d::Zero();
  for (int j = 1; j <= 3; ++j) {
    double first = 0.0;
    double second = 0.0;
    for (int p = 0; p < 4; ++p) {
      for (int q = 0; q < 4; ++q) {
        for (int r = 0; r < 4; ++r) {
          for (int s = 0; s < 4; ++s) {
            const double value = t(p, q, r, s);
            if (value == 0.0) {
              continue;
            }
            if (p == 0 && q >= 1 && r == j && s == q) {
              first += value;
            }
            if (p == j && q >= 1 && r == 0 && s >= 1) {
              second += value * u[q - 1] * u[s - 1];
            }
          }
        }
      }
    }
    a[j - 1] = c.q / (kFourPi * dist) * (first - second);
  }
  return a;
}

liv::KFTensor random_full_tensor(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1e-3, 1e-3);
  return liv::KFTensor::from_components(
      {{{{0, 1, 0, 1}}, dist(rng)}, {{{0, 1, 0, 2}}, dist(rng)},
       {{{0, 2, 0, 3}}, dist(rng)}, {{{0, 1, 1, 2}}, dist(rng)},
       {{{0, 3, 1, 2}}, dist(rng)}, {{{1, 2, 2, 3}}, dist(rng)},
       {{{1, 2, 1, 2}}, dist(rng)}, {{{0, 2, 1, 3}}, dist(rng)}});
}

} // namespace

TEST_CASE("green function: Lorentz-symmetric limit is eta/(4 pi d)") {
  const liv::KFTensor zero;
  const Eigen::Matrix4d g =
      liv::green_point({0.0, 0.0, 1.0}, Eigen::Vector3d::Zero(), zero);
  for (int mu = 0; mu < 4; ++mu) {
    for (int lam = 0; lam < 4; ++lam) {
      CHECK(g(mu, lam) == liv::metric(mu, lam) / kFourPi);
    }
  }
  CHECK(g(0, 0) == doctest::Approx(0.0795775).epsilon(1e-6));
  CHECK(g(1, 1) == doctest::Approx(-0.0795775).epsilon(1e-6));
}

TEST_CASE("green function: uniform K along z") {
  const liv::KFTensor t = liv::KFTensor::uniform(0.01);
  const Eigen::Matrix4d g =
      liv::green_point({0.0, 0.0, 1.0}, Eigen::Vector3d::Zero(), t);
  // G_00 = (1 + 3K - K)/(4 pi)
  CHECK(rel_err(g(0, 0), 1.02 / kFourPi) < 1e-14);
}

TEST_CASE("green function matches the 256-tuple brute-force oracle") {
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 20; ++rep) {
    const liv::KFTensor t = random_full_tensor(rng);
    const Eigen::Vector3d x = 2.0 * livtest::random_direction(rng);
    const Eigen::Vector3d src = 0.3 * livtest::random_direction(rng);
    const Eigen::Matrix4d got = liv::green_point(x, src, t);
    const Eigen::Matrix4d want = green_oracle(x, src, t);
    CHECK((got - want).cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("green function rejects coincident points") {
  const Eigen::Vector3d x{0.5, -0.25, 1.0};
  CHECK_THROWS_AS(liv::green_point(x, x, liv::KFTensor{}),
                  liv::CoincidentPoints);
}

TEST_CASE("scalar potential closed-form examples") {
  const liv::PointCharge q1{1.0, Eigen::Vector3d::Zero()};
  SUBCASE("Coulomb limit") {
    CHECK(rel_err(liv::scalar_potential({0.0, 0.0, 2.0}, q1, liv::KFTensor{}),
                  1.0 / (8.0 * std::numbers::pi)) < 1e-15);
  }
  SUBCASE("uniform K = 0.1 along z") {
    const liv::KFTensor t = liv::KFTensor::uniform(0.1);
    CHECK(rel_err(liv::scalar_potential({0.0, 0.0, 1.0}, q1, t),
                  0.9 / kFourPi) < 1e-14);
    CHECK(liv::scalar_potential({0.0, 0.0, 1.0}, q1, t) ==
          doctest::Approx(0.0716197).epsilon(1e-6));
  }
  SUBCASE("uniform K = 0.01 along the diagonal direction") {
    const liv::KFTensor t = liv::KFTensor::uniform(0.01);
    const Eigen::Vector3d x = Eigen::Vector3d::Ones() / std::sqrt(3.0);
    CHECK(rel_err(liv::scalar_potential(x, q1, t), 0.97 / kFourPi) < 1e-14);
    CHECK(liv::scalar_potential(x, q1, t) ==
          doctest::Approx(0.0771895).epsilon(1e-6));
  }
}

TEST_CASE("scalar potential scales as 1/|X| for any kappa") {
  std::mt19937_64 rng(22);
  const liv::PointCharge q{1.25, Eigen::Vector3d::Zero()};
  for (int rep = 0; rep < 20; ++rep) {
    const liv::KFTensor t =
        liv::KFTensor::from_kappa(livtest::random_kappa(rng, 1e-2));
    const Eigen::Vector3d x = livtest::random_direction(rng) * 1.7;
    const double v1 = liv::scalar_potential(x, q, t);
    const double v2 = liv::scalar_potential(2.0 * x, q, t);
    CHECK(rel_err(v2, 0.5 * v1) < 1e-14);
  }
}

TEST_CASE("vector potential") {
  SUBCASE("vanishes for K_F = 0") {
    CHECK(liv::vector_potential({1.0, 0.0, 0.0},
                                {1.0, Eigen::Vector3d::Zero()},
                                liv::KFTensor{})
              .isZero(0.0));
  }
  SUBCASE("vanishes identically for uniform and kappa-only tensors") {
    std::mt19937_64 rng(23);
    const liv::KFTensor uniform = liv::KFTensor::uniform(5e-3);
    const liv::KFTensor from_kappa =
        liv::KFTensor::from_kappa(livtest::random_kappa(rng, 1e-2));
    for (int rep = 0; rep < 20; ++rep) {
      const Eigen::Vector3d x = livtest::random_direction(rng) * 2.0;
      CHECK(liv::vector_potential(x, {1.0, Eigen::Vector3d::Zero()}, uniform)
                .isZero(0.0));
      CHECK(liv::vector_potential(x, {1.0, Eigen::Vector3d::Zero()},
                                  from_kappa)
                .isZero(0.0));
    }
  }
  SUBCASE("golden values for the seed component (0,1,1,2)") {
    const liv::KFTensor t =
        liv::KFTensor::from_components({{{{0, 1, 1, 2}}, 1e-3}});
    const liv::PointCharge q{1.0, Eigen::Vector3d::Zero()};
    // Frozen from the tuple-sweep oracle.
    CHECK(liv::vector_potential({1.0, 0.0, 0.0}, q, t).isZero(1e-18));
    const Eigen::Vector3d at_z = liv::vector_potential({0.0, 0.0, 1.0}, q, t);
    CHECK(rel_err(at_z[1], -7.957747154594768e-05) < 1e-12);
    CHECK(at_z[0] == 0.0);
    CHECK(at_z[2] == 0.0);
    const Eigen::Vector3d generic =
        liv::vector_potential({0.3, -0.2, 0.9}, q, t);
    CHECK(rel_err(generic[0], 5.239014566556064e-06) < 1e-12);
    CHECK(rel_err(generic[1], -7.421937302621092e-05) < 1e-12);
    CHECK(std::abs(generic[2]) < 1e-20);
  }
  SUBCASE("matches the tuple-sweep oracle on random tensors") {
    std::mt19937_64 rng(24);
    for (int rep = 0; rep < 20; ++rep) {
      const liv::KFTensor t = random_full_tensor(rng);
      const Eigen::Vector3d x = livtest::random_direction(rng) * 1.1;
      const liv::PointCharge q{0.75, Eigen::Vector3d::Zero()};
      const Eigen::Vector3d got = liv::vector_potential(x, q, t);
      const Eigen::Vector3d want = vector_potential_oracle(x, q, t);
      CHECK((got - want).cwiseAbs().maxCoeff() < 1e-18);
    }
  }
}

TEST_CASE("electric field closed-form examples") {
  const liv::PointCharge q1{1.0, Eigen::Vector3d::Zero()};
  SUBCASE("Coulomb field") {
    const Eigen::Vector3d e =
        liv::electric_field({0.0, 0.0, 1.0}, q1, liv::KFTensor{});
    CHECK(e[0] == 0.0);
    CHECK(e[1] == 0.0);
    CHECK(rel_err(e[2], 1.0 / kFourPi) < 1e-15);
  }
  SUBCASE("uniform K = 0.01 along z") {
    const liv::KFTensor t = liv::KFTensor::uniform(0.01);
    const Eigen::Vector3d e = liv::electric_field({0.0, 0.0, 1.0}, q1, t);
    CHECK(rel_err(e[0], 0.02 / kFourPi) < 1e-13);
    CHECK(rel_err(e[1], 0.02 / kFourPi) < 1e-13);
    CHECK(rel_err(e[2], 0.99 / kFourPi) < 1e-13);
  }
}

TEST_CASE("electric field equals -grad(scalar potential), 100 draws") {
  std::mt19937_64 rng(25);
  const double h = 1e-5;
  for (int rep = 0; rep < 100; ++rep) {
    const liv::KFTensor t =
        liv::KFTensor::from_kappa(livtest::random_kappa(rng, 1e-2));
    const liv::PointCharge q{1.0, Eigen::Vector3d::Zero()};
    const Eigen::Vector3d x =
        livtest::random_direction(rng) * (0.5 + 2.0 * rep / 100.0);
    const Eigen::Vector3d e = liv::electric_field(x, q, t);
    for (int axis = 0; axis < 3; ++axis) {
      Eigen::Vector3d dx = Eigen::Vector3d::Zero();
      dx[axis] = h;
      const double grad = (liv::scalar_potential(x + dx, q, t) -
                           liv::scalar_potential(x - dx, q, t)) /
                          (2.0 * h);
      CHECK(std::abs(-grad - e[axis]) <= 1e-6 * e.norm());
    }
  }
}

TEST_CASE("convolution route") {
  SUBCASE("single sample with K_F = 0 reduces to the closed form exactly") {
    liv::DiscretizedSource source;
    source.samples.push_back(
        {Eigen::Vector3d::Zero(), {2.0, 0.0, 0.0, 0.0}, 0.5});
    const Eigen::Vector3d x{0.4, -1.0, 0.2};
    const Eigen::Vector4d a =
        liv::potential_from_source(x, source, liv::KFTensor{});
    const double closed =
        liv::scalar_potential(x, {1.0, Eigen::Vector3d::Zero()},
                              liv::KFTensor{});
    CHECK(a[0] == closed);
    CHECK(a[1] == 0.0);
    CHECK(a[2] == 0.0);
    CHECK(a[3] == 0.0);
  }
  SUBCASE("single sample with a traceless kappa: identical arithmetic") {
    Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
    m(0, 0) = 2e-3;
    m(1, 1) = -2e-3;
    const liv::KFTensor t = liv::KFTensor::from_kappa(liv::KappaMatrix(m));
    liv::DiscretizedSource source;
    source.samples.push_back(
        {Eigen::Vector3d::Zero(), {1.0, 0.0, 0.0, 0.0}, 1.0});
    const Eigen::Vector3d x{0.7, 0.3, -0.6};
    const Eigen::Vector4d a = liv::potential_from_source(x, source, t);
    const double closed =
        liv::scalar_potential(x, {1.0, Eigen::Vector3d::Zero()}, t);
    CHECK(a[0] == closed);
  }
  SUBCASE("uniform K: convolution exceeds the closed form by the trace term") {
    const double k = 2e-3;
    const liv::KFTensor t = liv::KFTensor::uniform(k);
    liv::DiscretizedSource source;
    source.samples.push_back(
        {Eigen::Vector3d::Zero(), {1.0, 0.0, 0.0, 0.0}, 1.0});
    std::mt19937_64 rng(26);
    for (int rep = 0; rep < 10; ++rep) {
      const Eigen::Vector3d x = livtest::random_direction(rng) * 1.5;
      const Eigen::Vector4d a = liv::potential_from_source(x, source, t);
      const double closed =
          liv::scalar_potential(x, {1.0, Eigen::Vector3d::Zero()}, t);
      const double want = 3.0 * k / (kFourPi * x.norm());
      CHECK(rel_err(a[0] - closed, want) < 1e-10);
    }
  }
  SUBCASE("two opposite charges reproduce the dipole far field") {
    const double sep = 0.02;
    liv::DiscretizedSource source;
    source.samples.push_back(
        {{0.0, 0.0, sep / 2.0}, {1.0, 0.0, 0.0, 0.0}, 1.0});
    source.samples.push_back(
        {{0.0, 0.0, -sep / 2.0}, {-1.0, 0.0, 0.0, 0.0}, 1.0});
    const double p = sep; // q * separation
    std::mt19937_64 rng(27);
    for (int rep = 0; rep < 10; ++rep) {
      const Eigen::Vector3d dir = livtest::random_direction(rng);
      const Eigen::Vector3d x = dir * (50.0 * sep);
      const Eigen::Vector4d a =
          liv::potential_from_source(x, source, liv::KFTensor{});
      const double dipole =
          p * dir.z() / (kFourPi * x.squaredNorm());
      if (std::abs(dir.z()) > 0.2) { // skip near-node directions
        CHECK(rel_err(a[0], dipole) < 0.01);
      }
    }
  }
}

TEST_CASE("consistency report") {
  CHECK(liv::eq_consistency_report(liv::KFTensor{}).consistent);
  CHECK(liv::eq_consistency_report(liv::KFTensor{}).trace_0j0j == 0.0);

  const liv::ConsistencyReport uniform =
      liv::eq_consistency_report(liv::KFTensor::uniform(1e-6));
  CHECK(!uniform.consistent);
  CHECK(rel_err(uniform.trace_0j0j, 3e-6) < 1e-15);

  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  m(0, 0) = 1e-4;
  m(1, 1) = -1e-4;
  const liv::ConsistencyReport traceless =
      liv::eq_consistency_report(liv::KFTensor::from_kappa(liv::KappaMatrix(m)));
  CHECK(traceless.consistent);
  CHECK(traceless.trace_0j0j == 0.0);
}
