#include "liv/fields.hpp"

#include <cmath>
#include <numbers>

namespace liv {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

Eigen::Vector3d separation_or_throw(const Eigen::Vector3d& x,
                                    const Eigen::Vector3d& src,
                                    const char* who) {
  const Eigen::Vector3d d = x - src;
  if (d.norm() == 0.0) {
    throw CoincidentPoints(std::string("fields: ") + who +
                           " evaluated at the source point");
  }
  return d;
}

} // namespace

Eigen::Matrix4d green_point(const Eigen::Vector3d& x,
                            const Eigen::Vector3d& x_src, const KFTensor& t) {
  const Eigen::Vector3d d = separation_or_throw(x, x_src, "green_point");
  const double dist = d.norm();
  const Eigen::Vector3d u = d / dist;

  Eigen::Matrix4d g;
  for (int mu = 0; mu < 4; ++mu) {
    for (int lam = 0; lam < 4; ++lam) {
      double contracted = 0.0; // (K_F)_{mu j lam j}
      double directed = 0.0;   // (K_F)_{mu j lam k} uhat^j uhat^k
      for (int j = 1; j <= 3; ++j) {
        contracted += t(mu, j, lam, j);
        for (int k = 1; k <= 3; ++k) {
          directed += t(mu, j, lam, k) * u[j - 1] * u[k - 1];
        }
      }
      g(mu, lam) = (metric(mu, lam) + contracted - directed) / (kFourPi * dist);
    }
  }
  return g;
}

double scalar_potential(const Eigen::Vector3d& x, const PointCharge& c,
                        const KFTensor& t) {
  const Eigen::Vector3d d = separation_or_throw(x, c.position,
                                                "scalar_potential");
  const double dist = d.norm();
  const Eigen::Vector3d u = d / dist;
  // Same loop order as green_point's directed term, so the single-sample
  // convolution reduces to this arithmetic exactly when the trace vanishes.
  double quad = 0.0;
  for (int j = 1; j <= 3; ++j) {
    for (int k = 1; k <= 3; ++k) {
      quad += t(0, j, 0, k) * u[j - 1] * u[k - 1];
    }
  }
  return c.q * ((1.0 - quad) / (kFourPi * dist));
}

Eigen::Vector3d vector_potential(const Eigen::Vector3d& x,
                                 const PointCharge& c, const KFTensor& t) {
  const Eigen::Vector3d d = separation_or_throw(x, c.position,
                                                "vector_potential");
  const double dist = d.norm();
  const Eigen::Vector3d u = d / dist;

  Eigen::Vector3d a = Eigen::Vector3d::Zero();
  for (int j = 1; j <= 3; ++j) {
    double contracted = 0.0; // (K_F)_{0kjk}
    double directed = 0.0;   // (K_F)_{jk0l} uhat^k uhat^l
    for (int k = 1; k <= 3; ++k) {
      contracted += t(0, k, j, k);
      for (int l = 1; l <= 3; ++l) {
        directed += t(j, k, 0, l) * u[k - 1] * u[l - 1];
      }
    }
    a[j - 1] = c.q / (kFourPi * dist) * (contracted - directed);
  }
  return a;
}

Eigen::Vector3d electric_field(const Eigen::Vector3d& x, const PointCharge& c,
                               const KFTensor& t) {
  const Eigen::Vector3d d = separation_or_throw(x, c.position,
                                                "electric_field");
  const double dist = d.norm();
  const Eigen::Vector3d u = d / dist;
  const Eigen::Matrix3d kappa = t.kappa_matrix().matrix();
  const Eigen::Vector3d ku = kappa * u;
  const double quad = u.dot(ku);
  const Eigen::Vector3d e = u + 2.0 * ku - 3.0 * quad * u;
  return c.q / (kFourPi * dist * dist) * e;
}

FieldSample field_sample(const Eigen::Vector3d& x, const PointCharge& c,
                         const KFTensor& t) {
  FieldSample s;
  s.A0 = scalar_potential(x, c, t);
  s.A = vector_potential(x, c, t);
  s.E = electric_field(x, c, t);
  return s;
}

Eigen::Vector4d potential_from_source(const Eigen::Vector3d& x,
                                      const DiscretizedSource& s,
                                      const KFTensor& t) {
  Eigen::Vector4d a = Eigen::Vector4d::Zero();
  for (const SourceSample& sample : s.samples) {
    const Eigen::Matrix4d g = green_point(x, sample.pos, t);
    for (int lam = 0; lam < 4; ++lam) {
      double acc = 0.0;
      for (int mu = 0; mu < 4; ++mu) {
        acc += g(mu, lam) * sample.j[mu];
      }
      a[lam] += sample.w * acc;
    }
  }
  return a;
}

ConsistencyReport eq_consistency_report(const KFTensor& t) {
  ConsistencyReport report;
  report.trace_0j0j = t.trace_0j0j();
  report.consistent = (report.trace_0j0j == 0.0);
  return report;
}

} // namespace liv
