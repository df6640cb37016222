#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "liv/errors.hpp"

namespace liv {

/// Flat-space metric, signature (+,-,-,-). The sign convention is fixed
/// here once; the Green function and all potentials inherit it.
inline constexpr std::array<double, 4> kMetricDiag{1.0, -1.0, -1.0, -1.0};

inline double metric(int mu, int nu) {
  return (mu == nu) ? kMetricDiag[static_cast<std::size_t>(mu)] : 0.0;
}

/// Largest admissible component magnitude. First-order perturbation theory
/// stops being meaningful well before this; the bound is inclusive so that
/// round test values like 0.1 are usable.
inline constexpr double kMaxComponentMagnitude = 0.1;

using Index4 = std::array<int, 4>;

/// A canonical index plus the sign relating the original index to it.
/// sign == 0 marks a slot forced to zero (repeated index within a pair).
struct CanonicalIndex {
  Index4 index{};
  int sign = 0;
};

/// Canonical form: each antisymmetric pair stored ascending, the
/// lexicographically smaller pair first. Throws IndexOutOfRange for
/// indices outside {0..3}.
CanonicalIndex canonicalize(const Index4& idx);

/// The 3x3 symmetric slice kappa_{jk} = (K_F)_{0j0k} that drives every
/// potential correction. Indices are 0-based spatial (j,k in {0,1,2}).
class KappaMatrix {
public:
  KappaMatrix() : entries_(Eigen::Matrix3d::Zero()) {}

  /// Requires exact symmetry and all magnitudes <= 0.1.
  explicit KappaMatrix(const Eigen::Matrix3d& entries);

  static KappaMatrix uniform(double k);
  static KappaMatrix isotropic(double c);

  double operator()(int j, int k) const { return entries_(j, k); }
  const Eigen::Matrix3d& matrix() const { return entries_; }
  double trace() const { return entries_.trace(); }

private:
  Eigen::Matrix3d entries_;
};

/// Symmetry-aware storage of the dimensionless rank-4 coefficient
/// (K_F)_{mu nu rho sigma}: antisymmetric within each index pair,
/// symmetric under pair exchange. Only canonical slots are stored; the
/// accessor reconstructs every image with the tracked sign. Immutable
/// after construction.
class KFTensor {
public:
  KFTensor() = default;

  static KFTensor from_components(
      const std::vector<std::pair<Index4, double>>& entries);

  /// (K_F)_{0j0k} = k for all spatial j,k, every image set consistently,
  /// everything not forced by those assignments zero.
  static KFTensor uniform(double k);

  /// Tensor whose only seeds are (0,j,0,k) = kappa(j-1,k-1).
  static KFTensor from_kappa(const KappaMatrix& kappa);

  /// Accessor for an arbitrary index tuple; applies the sign rules and
  /// returns 0 for anything not reachable from a stored canonical entry.
  double operator()(int mu, int nu, int rho, int sigma) const;
  double at(const Index4& idx) const;

  KappaMatrix kappa_matrix() const;

  /// Sum_j (K_F)_{0j0j}; nonzero values mark the documented tension
  /// between the point-charge Green function and the closed-form
  /// modified Coulomb potential.
  double trace_0j0j() const;

  /// K if this tensor is exactly construct_uniform(K), otherwise empty.
  std::optional<double> uniform_value() const;

  bool is_zero() const { return components_.empty(); }

  const std::map<Index4, double>& canonical_components() const {
    return components_;
  }

private:
  std::map<Index4, double> components_;
};

} // namespace liv
