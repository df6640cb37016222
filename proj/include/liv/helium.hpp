#pragma once

#include <cstdint>

#include "liv/kf_tensor.hpp"
#include "liv/montecarlo.hpp"
#include "liv/shift_result.hpp"

namespace liv {

struct HeliumConfig {
  double Z = 2.0;
  std::uint64_t mc_samples = 1'000'000;
  std::uint64_t seed = 12345;
  /// Average the integrand over both electron labelings per draw; makes
  /// every estimate exactly exchange symmetric.
  bool antithetic = true;
  /// Run the chunk loop on OpenMP threads (chunking keeps the estimate
  /// identical either way).
  bool parallel = true;

  void validate() const;
};

/// <1/r12> over the product 1s^2 density; analytic value 5Z/8.
MCEstimate ee_coulomb_integral(const HeliumConfig& cfg);

/// First-order ground-state shift:
///   dE = sum_i <(Z/r_i) kappa xhat_i xhat_i> - <(1/r12) kappa uhat uhat>,
/// uhat = (r1 - r2)/|r1 - r2|. Nuclear terms analytic (2 Z^2 tr(kappa)/3),
/// the electron-electron term by Monte Carlo. The quoted closed form
/// (3/4) K for uniform K is attached and flagged.
ShiftResult helium_ground_shift(const HeliumConfig& cfg, const KFTensor& t,
                                double hartree_ev = kDefaultHartreeEV);

namespace helium_detail {

/// Inverse-CDF table for the 1s radial density p(u) = 4 u^2 e^{-2u},
/// u = Z r. Shared, built once.
double sample_1s_radius_unitless(double uniform01);

struct TwoElectronSample {
  Eigen::Vector3d r1;
  Eigen::Vector3d r2;
};

TwoElectronSample draw_two_electron(ChunkRng& rng, double Z);

} // namespace helium_detail

} // namespace liv
