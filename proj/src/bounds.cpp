#include "liv/bounds.hpp"

#include <cmath>

namespace liv {

namespace {

// Probe well inside the component-magnitude guard; the measured slope is
// shift(K)/K, exact for these first-order (linear-in-K) shifts.
constexpr double kProbeK = 1e-3;

double paper_formula_slope(BoundSystem system, const BoundStateParams& p) {
  const double n2 = static_cast<double>(p.n) * p.n;
  switch (system) {
  case BoundSystem::hydrogen:
    return p.Z * p.Z / n2;
  case BoundSystem::permanent_stark:
    return 7.0 * p.Z * p.Z / n2;
  case BoundSystem::spin_orbit: {
    if (p.l == 0) {
      throw ZeroSlope("bounds: spin-orbit slope vanishes for l = 0");
    }
    const double sl = (p.j > p.l) ? 0.5 * p.l : -0.5 * (p.l + 1.0);
    const double denom = std::pow(p.n, 3) * p.l * (p.l + 1.0) * (p.l + 0.5);
    return std::abs(0.5 * (-7.0) * sl / denom);
  }
  case BoundSystem::helium:
    return 0.75;
  }
  throw UsageError("bounds: unknown system");
}

double computed_slope(BoundSystem system, const BoundStateParams& p,
                      double hartree_ev) {
  const KFTensor probe = KFTensor::uniform(kProbeK);
  double shift_hartree = 0.0;
  switch (system) {
  case BoundSystem::hydrogen: {
    const HydrogenicState state{p.Z, {p.n, p.l, p.m, {}}};
    shift_hartree = hydrogen_shift_diagonal(state, probe, hartree_ev)
                        .value_hartree;
    break;
  }
  case BoundSystem::permanent_stark: {
    const HydrogenicState state{p.Z, {p.n, p.l, p.m, {}}};
    shift_hartree =
        permanent_stark_shift(state, probe, hartree_ev).value_hartree;
    break;
  }
  case BoundSystem::spin_orbit: {
    const HydrogenicState state{p.Z, {p.n, p.l, p.m, p.j}};
    shift_hartree = spin_orbit_shift(state, probe, hartree_ev).value_hartree;
    break;
  }
  case BoundSystem::helium: {
    const HeliumConfig cfg{p.helium_Z, p.mc_samples, p.seed};
    shift_hartree = helium_ground_shift(cfg, probe, hartree_ev).value_hartree;
    break;
  }
  }
  return std::abs(shift_hartree) / kProbeK;
}

} // namespace

std::string to_string(BoundSystem system) {
  switch (system) {
  case BoundSystem::hydrogen:
    return "hydrogen";
  case BoundSystem::permanent_stark:
    return "permanent_stark";
  case BoundSystem::spin_orbit:
    return "spin_orbit";
  case BoundSystem::helium:
    return "helium";
  }
  return "unknown";
}

double quoted_bound(BoundSystem system) {
  switch (system) {
  case BoundSystem::hydrogen:
    return 2.8e-17;
  case BoundSystem::permanent_stark:
    return 4.1e-18;
  case BoundSystem::spin_orbit:
    return 8.7e-13;
  case BoundSystem::helium:
    return 3.8e-17;
  }
  throw UsageError("bounds: unknown system");
}

BoundStateParams BoundStateParams::defaults_for(BoundSystem system) {
  BoundStateParams p;
  if (system == BoundSystem::spin_orbit) {
    p.n = 2;
    p.l = 1;
    p.m = 0;
    p.j = 1.5;
  }
  return p;
}

BoundResult bound_from_accuracy(BoundSystem system,
                                const BoundStateParams& params,
                                const AccuracyRecord& acc, SlopeModel model,
                                double hartree_ev) {
  if (!(acc.value_ev > 0.0)) {
    throw UsageError("bounds: accuracy must be positive");
  }
  const double slope_hartree =
      (model == SlopeModel::computed)
          ? computed_slope(system, params, hartree_ev)
          : paper_formula_slope(system, params);
  const double slope_ev = slope_hartree * hartree_ev;
  if (slope_ev == 0.0) {
    throw ZeroSlope("bounds: shift vanishes identically for system " +
                    to_string(system) + " at the requested state");
  }

  BoundResult r;
  r.system = system;
  r.slope_ev_per_k = slope_ev;
  r.accuracy_ev = acc.value_ev;
  r.bound = acc.value_ev / slope_ev;
  r.paper_bound = quoted_bound(system);
  r.ratio = r.bound / r.paper_bound;
  return r;
}

std::vector<BoundResult> bound_table(const AccuracyRecord& acc,
                                     std::uint64_t mc_samples,
                                     std::uint64_t seed, double hartree_ev) {
  std::vector<BoundResult> rows;
  for (BoundSystem system :
       {BoundSystem::hydrogen, BoundSystem::permanent_stark,
        BoundSystem::spin_orbit, BoundSystem::helium}) {
    BoundStateParams params = BoundStateParams::defaults_for(system);
    params.mc_samples = mc_samples;
    params.seed = seed;
    rows.push_back(bound_from_accuracy(system, params, acc,
                                       SlopeModel::computed, hartree_ev));
  }
  return rows;
}

} // namespace liv
