#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "liv/hydrogenic.hpp"
#include "liv/kf_tensor.hpp"
#include "liv/shift_result.hpp"

namespace liv {

/// Basis row of the degenerate-manifold matrix: (l, m), plus spin when the
/// manifold is doubled. two_s is +1 or -1 (in halves), 0 when spinless.
struct ManifoldBasisLabel {
  int l = 0;
  int m = 0;
  int two_s = 0;
};

struct ManifoldSpectrum {
  int n = 1;
  std::vector<double> eigenvalues_hartree; // sorted ascending
  std::vector<ManifoldBasisLabel> basis_labels;
};

/// Diagonal first-order shift of |n l m> under the modified-Coulomb
/// perturbation (Z/r) kappa_{jk} xhat^j xhat^k:
///   dE = Z <1/r> <Y_lm| kappa xx |Y_lm>.
/// For uniform tensors the quoted closed form K Z^2 / n^2 is attached.
ShiftResult hydrogen_shift_diagonal(const HydrogenicState& state,
                                    const KFTensor& t,
                                    double hartree_ev = kDefaultHartreeEV);

/// The perturbation matrix over the full n-manifold,
///   V_{(l'm'),(lm)} = Z <R_nl'|1/r|R_nl> <Y_l'm'| kappa xx |Y_lm>,
/// rows and columns ordered l = 0..n-1, m = -l..l. Hermitian.
Eigen::MatrixXcd manifold_matrix(int n, double Z, const KFTensor& t);

/// Eigenvalues of the manifold matrix (degenerate perturbation theory).
/// With include_spin each spatial eigenvalue appears twice.
ManifoldSpectrum degenerate_manifold_shifts(int n, double Z, const KFTensor& t,
                                            bool include_spin);

/// Shift from the coefficient-dependent part of the internal electric
/// field, contracted against r ("permanent Stark"): the operator is
/// -(Z/r) kappa_{jk} xhat^j xhat^k, so the computed value is the negative
/// of the diagonal shift. The quoted closed form -7 K Z^2/n^2 differs from
/// this operator by a factor 7 and is flagged.
ShiftResult permanent_stark_shift(const HydrogenicState& state,
                                  const KFTensor& t,
                                  double hartree_ev = kDefaultHartreeEV);

/// Coefficient-dependent spin-orbit correction at first order:
///   dE = 1/2 <2 kappa xx - 9 kappa xx>_lm <r^-3> <S.L>,
/// <S.L> = l/2 for j = l+1/2 and -(l+1)/2 for j = l-1/2. States with
/// l = 0 carry no fine structure and return a zero shift with a note.
ShiftResult spin_orbit_shift(const HydrogenicState& state, const KFTensor& t,
                             double hartree_ev = kDefaultHartreeEV);

} // namespace liv
