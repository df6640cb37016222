#pragma once

#include <cstdint>
#include <string>

#include "liv/shift_result.hpp"

namespace liv {

/// Run-wide constants and knobs. The physical constants live here rather
/// than in code so reports always show the convention they were computed
/// under.
struct RunConfig {
  double hartree_ev = kDefaultHartreeEV;
  double bohr_m = kDefaultBohrMeter;
  double default_accuracy_ev = 1e-12;
  std::uint64_t mc_samples = 1'000'000;
  std::uint64_t seed = 12345;
  std::string output_format = "json"; // json | csv | text

  void validate() const;
};

} // namespace liv
