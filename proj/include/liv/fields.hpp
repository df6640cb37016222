#pragma once

#include <vector>

#include <Eigen/Core>

#include "liv/errors.hpp"
#include "liv/kf_tensor.hpp"

namespace liv {

struct PointCharge {
  double q = 1.0; // units of elementary charge
  Eigen::Vector3d position = Eigen::Vector3d::Zero(); // bohr
};

struct SourceSample {
  Eigen::Vector3d pos = Eigen::Vector3d::Zero(); // bohr
  Eigen::Vector4d j = Eigen::Vector4d::Zero();   // four-current
  double w = 0.0;                                // volume element, bohr^3
};

struct DiscretizedSource {
  std::vector<SourceSample> samples;
};

/// Potentials and field at one point, Gaussian-style units with the 1/4pi
/// carried exactly as in the closed forms.
struct FieldSample {
  double A0 = 0.0;
  Eigen::Vector3d A = Eigen::Vector3d::Zero();
  Eigen::Vector3d E = Eigen::Vector3d::Zero();
};

/// Point-charge Green function
///   G_{mu lambda} = [eta_{mu lambda} + (K_F)_{mu j lambda j}] / (4 pi |D|)
///                 - (K_F)_{mu j lambda k} Dhat^j Dhat^k / (4 pi |D|),
/// spatial sums over j,k. Throws CoincidentPoints for |D| = 0.
Eigen::Matrix4d green_point(const Eigen::Vector3d& x,
                            const Eigen::Vector3d& x_src, const KFTensor& t);

/// Modified Coulomb potential q/(4 pi |X|) (1 - kappa_{jk} Xhat^j Xhat^k).
double scalar_potential(const Eigen::Vector3d& x, const PointCharge& c,
                        const KFTensor& t);

/// A_j = q/(4 pi |X|) ((K_F)_{0kjk} - (K_F)_{jk0l} Xhat^k Xhat^l).
/// Identically zero for tensors holding only (0j0k)-type components.
Eigen::Vector3d vector_potential(const Eigen::Vector3d& x,
                                 const PointCharge& c, const KFTensor& t);

/// E^j = q/(4 pi |X|^2) (Xhat^j + 2 kappa_{jk} Xhat^k
///                       - 3 kappa_{kl} Xhat^l Xhat^k Xhat^j);
/// equals -grad(scalar_potential).
Eigen::Vector3d electric_field(const Eigen::Vector3d& x, const PointCharge& c,
                               const KFTensor& t);

FieldSample field_sample(const Eigen::Vector3d& x, const PointCharge& c,
                         const KFTensor& t);

/// Discretized Green-function convolution
///   A_lambda(x) = sum_i w_i G_{mu lambda}(x, pos_i) j_i^mu.
/// For a point-charge-like source this reproduces the Green-route A_0,
/// which exceeds the closed-form scalar_potential by
/// q * sum_j (K_F)_{0j0j} / (4 pi |X|) whenever the kappa slice has trace.
Eigen::Vector4d potential_from_source(const Eigen::Vector3d& x,
                                      const DiscretizedSource& s,
                                      const KFTensor& t);

struct ConsistencyReport {
  double trace_0j0j = 0.0;
  bool consistent = true;
};

/// Diagnoses the trace tension between the Green-function route and the
/// closed-form potential; flagged whenever sum_j (K_F)_{0j0j} != 0.
ConsistencyReport eq_consistency_report(const KFTensor& t);

} // namespace liv
