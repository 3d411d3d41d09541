// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include <vector>

#include "rif/kinematics.hpp"
#include "rif/medium.hpp"

namespace rif {

using FieldVector = Eigen::Matrix<Complex, 8, 1>;
using MatchingMatrix = Eigen::Matrix<Complex, 8, 8>;

/// The eight quantities matched across the step at x = 0, for a plane-wave
/// mode ~ e^{ikx}:
///
///   [ A, dA/dx, P_1, m_1, P_2, m_2, P_3, m_3 ]
///
/// A is the electromagnetic potential amplitude, P_i the polarization
/// amplitudes fixed by the oscillator response
///
///   P_i = -i sqrt(4 pi) kappa_i Omega_i^2 Omega A / (c (Omega_i^2 - Omega^2)),
///
/// and m_i = -i Omega P_i / (kappa_i Omega_i^2) the conjugate polarization
/// momentum per unit elastic constant. Matching P_i together with m_i (rather
/// than dP_i/dx) is what keeps the conserved norm current exactly continuous
/// across a step in kappa_i, which is the content of Bogoliubov
/// pseudo-unitarity of the scattering matrix.
///
/// Propagating modes are normalized to unit conserved-norm current
/// (|A| = sqrt(2 c^2 / |F_k|), phase chosen real positive); evanescent modes
/// carry A = 1.
FieldVector field_vector(const DispersionSide& side, const ModeSolution& mode);

/// Independent evaluation of the conserved norm current from the matched
/// components; +-1 for correctly normalized propagating modes with sign
/// norm_sign * sign(group velocity), 0 for a single evanescent mode.
double norm_current(const DispersionSide& side, const ModeSolution& mode,
                    const FieldVector& v);

/// The 8x8 continuity system at x = 0: one column per unknown outgoing or
/// kept-evanescent mode (left-side columns +, right-side -).
struct MatchingSystem {
  double omega = 0.0;
  MatchingMatrix columns;
  std::vector<BasisRef> unknowns;       // column order: out modes then kept evanescent
  static const char* component_meaning(int row);
};

MatchingSystem build_matching_system(const Medium& medium, const FrequencySolution& fs);

/// Scattering matrix over propagating modes: rows = out basis, columns = in
/// basis, pseudo-unitary with respect to the norm signature.
struct ScatteringMatrix {
  double omega = 0.0;
  Scenario scenario = Scenario::A_horizonless_low;
  Eigen::MatrixXcd entries;
  std::vector<ModeLabel> in_labels;
  std::vector<ModeLabel> out_labels;
  std::vector<int> eta_in;   // +1 / -1 per in mode
  std::vector<int> eta_out;  // +1 / -1 per out mode
  double unitarity_residual = 0.0;  // max-norm of S eta_in S^dag - eta_out
  double condition_number = 0.0;    // of the matching system

  int dim_in() const { return static_cast<int>(in_labels.size()); }
  int dim_out() const { return static_cast<int>(out_labels.size()); }
  int find_out(ModeLabel l) const;
  int find_in(ModeLabel l) const;
};

/// Solves the continuity system for every in mode injected with unit
/// amplitude. Throws IllConditionedError above kMaxCondition and
/// ConsistencyError when the pseudo-unitarity residual exceeds
/// kMaxUnitarityResidual.
ScatteringMatrix build_scattering_matrix(const Medium& medium, const FrequencySolution& fs);

/// Max-norm residual of S eta_in S^dag = eta_out.
double pseudo_unitarity_residual(const Eigen::MatrixXcd& S, const std::vector<int>& eta_in,
                                 const std::vector<int>& eta_out);

}  // namespace rif
