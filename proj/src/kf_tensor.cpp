#include "liv/kf_tensor.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace liv {

namespace {

std::string index_str(const Index4& idx) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "(%d,%d,%d,%d)", idx[0], idx[1], idx[2],
                idx[3]);
  return buf;
}

void check_magnitude(const Index4& idx, double value) {
  if (!std::isfinite(value)) {
    throw MagnitudeTooLarge("kf_tensor: component " + index_str(idx) +
                            " is not finite");
  }
  if (std::abs(value) > kMaxComponentMagnitude) {
    throw MagnitudeTooLarge("kf_tensor: component " + index_str(idx) +
                            " magnitude " + std::to_string(std::abs(value)) +
                            " exceeds " +
                            std::to_string(kMaxComponentMagnitude));
  }
}

} // namespace

CanonicalIndex canonicalize(const Index4& idx) {
  for (int v : idx) {
    if (v < 0 || v > 3) {
      throw IndexOutOfRange("kf_tensor: index " + index_str(idx) +
                            " outside {0..3}^4");
    }
  }
  if (idx[0] == idx[1] || idx[2] == idx[3]) {
    return {idx, 0};
  }
  CanonicalIndex c{idx, 1};
  if (c.index[0] > c.index[1]) {
    std::swap(c.index[0], c.index[1]);
    c.sign = -c.sign;
  }
  if (c.index[2] > c.index[3]) {
    std::swap(c.index[2], c.index[3]);
    c.sign = -c.sign;
  }
  // Pair exchange carries no sign.
  if (std::pair{c.index[2], c.index[3]} < std::pair{c.index[0], c.index[1]}) {
    std::swap(c.index[0], c.index[2]);
    std::swap(c.index[1], c.index[3]);
  }
  return c;
}

KappaMatrix::KappaMatrix(const Eigen::Matrix3d& entries) : entries_(entries) {
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      if (entries_(j, k) != entries_(k, j)) {
        throw SymmetryConflict("kf_tensor: kappa matrix not symmetric at (" +
                               std::to_string(j) + "," + std::to_string(k) +
                               ")");
      }
      check_magnitude({0, j + 1, 0, k + 1}, entries_(j, k));
    }
  }
}

KappaMatrix KappaMatrix::uniform(double k) {
  return KappaMatrix(Eigen::Matrix3d::Constant(k));
}

KappaMatrix KappaMatrix::isotropic(double c) {
  return KappaMatrix(Eigen::Matrix3d(Eigen::Matrix3d::Identity() * c));
}

KFTensor KFTensor::from_components(
    const std::vector<std::pair<Index4, double>>& entries) {
  KFTensor t;
  for (const auto& [idx, value] : entries) {
    if (!std::isfinite(value)) {
      throw MagnitudeTooLarge("kf_tensor: component " + index_str(idx) +
                              " is not finite");
    }
    const CanonicalIndex c = canonicalize(idx);
    if (c.sign == 0) {
      if (value != 0.0) {
        throw SymmetryConflict("kf_tensor: component " + index_str(idx) +
                               " repeats an index within a pair and must "
                               "vanish, got " +
                               std::to_string(value));
      }
      continue;
    }
    const double canonical_value = c.sign * value;
    auto [it, inserted] = t.components_.emplace(c.index, canonical_value);
    if (!inserted && it->second != canonical_value) {
      throw SymmetryConflict("kf_tensor: entries imply both " +
                             std::to_string(it->second) + " and " +
                             std::to_string(canonical_value) +
                             " for canonical slot " + index_str(c.index));
    }
  }
  // Drop exact zeros so the canonical map stays minimal.
  for (auto it = t.components_.begin(); it != t.components_.end();) {
    check_magnitude(it->first, it->second);
    it = (it->second == 0.0) ? t.components_.erase(it) : std::next(it);
  }
  return t;
}

KFTensor KFTensor::uniform(double k) {
  std::vector<std::pair<Index4, double>> entries;
  for (int j = 1; j <= 3; ++j) {
    for (int kk = 1; kk <= 3; ++kk) {
      entries.push_back({{0, j, 0, kk}, k});
    }
  }
  return from_components(entries);
}

KFTensor KFTensor::from_kappa(const KappaMatrix& kappa) {
  std::vector<std::pair<Index4, double>> entries;
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      entries.push_back({{0, j + 1, 0, k + 1}, kappa(j, k)});
    }
  }
  return from_components(entries);
}

double KFTensor::at(const Index4& idx) const {
  const CanonicalIndex c = canonicalize(idx);
  if (c.sign == 0) {
    return 0.0;
  }
  const auto it = components_.find(c.index);
  return (it == components_.end()) ? 0.0 : c.sign * it->second;
}

double KFTensor::operator()(int mu, int nu, int rho, int sigma) const {
  return at({mu, nu, rho, sigma});
}

KappaMatrix KFTensor::kappa_matrix() const {
  Eigen::Matrix3d m;
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      m(j, k) = at({0, j + 1, 0, k + 1});
    }
  }
  return KappaMatrix(m);
}

double KFTensor::trace_0j0j() const {
  double tr = 0.0;
  for (int j = 1; j <= 3; ++j) {
    tr += at({0, j, 0, j});
  }
  return tr;
}

std::optional<double> KFTensor::uniform_value() const {
  if (components_.empty()) {
    return 0.0;
  }
  // uniform(K) stores exactly the six slots (0,j,0,k) with j <= k, all K.
  const double k = components_.begin()->second;
  std::size_t expected = 0;
  for (int j = 1; j <= 3; ++j) {
    for (int kk = j; kk <= 3; ++kk) {
      ++expected;
      const auto it = components_.find(Index4{0, j, 0, kk});
      if (it == components_.end() || it->second != k) {
        return std::nullopt;
      }
    }
  }
  if (components_.size() != expected) {
    return std::nullopt;
  }
  return k;
}

} // namespace liv
