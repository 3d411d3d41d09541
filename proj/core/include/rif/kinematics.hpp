// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "rif/medium.hpp"
#include "rif/types.hpp"

namespace rif {

enum class Nature { Propagating, Evanescent };

/// One root k of the dispersion relation at a co-moving frequency.
struct ModeSolution {
  Complex wavenumber{};       // rad/um
  double omega = 0.0;         // rad/um (co-moving)
  Complex lab_frequency{};    // G (w + u k)
  int norm_sign = 0;          // sign of Re(lab_frequency); 0 for evanescent
  double group_velocity = 0;  // dw/dk via implicit differentiation; NaN if evanescent
  Nature nature = Nature::Evanescent;
  ModeLabel label{};

  bool propagating() const { return nature == Nature::Propagating; }
};

/// All eight roots at one frequency on one side, polished and labeled,
/// in canonical order (propagating by tag, then evanescent by Im k).
std::array<ModeSolution, 8> solve_modes(const DispersionSide& side, double omega);

/// Number of real roots at this frequency (cheap census used by scans).
int count_real_roots(const DispersionSide& side, double omega);

/// A side's subluminal interval: the frequency range with three positive-norm
/// optical roots.
struct SubluminalInterval {
  double omega_min = 0.0;
  double omega_max = 0.0;

  bool contains(double w) const { return w > omega_min && w < omega_max; }
  double width() const { return omega_max - omega_min; }
};

struct CriticalScanOptions {
  int scan_points = 3000;
  double refine_rel = 1e-10;
};

/// Locates the subluminal interval by scanning the real-root count and
/// bisecting each 6<->8 transition. Returns nullopt when no such interval
/// exists for these parameters.
std::optional<SubluminalInterval> find_critical_frequencies(
    const DispersionSide& side, const CriticalScanOptions& opt = {});

/// The four critical frequencies of a front (both sides).
struct CriticalFrequencies {
  SubluminalInterval left;   // [omega_minL, omega_maxL]
  SubluminalInterval right;  // [omega_minR, omega_maxR]

  SubluminalInterval white_hole_interval() const {
    return {left.omega_min, right.omega_min};
  }
  SubluminalInterval black_hole_interval() const {
    return {left.omega_max, right.omega_max};
  }
};

/// Finds both sides' intervals; throws Error when either side lacks one.
CriticalFrequencies find_all_criticals(const Medium& medium,
                                       const CriticalScanOptions& opt = {});

/// Interval lookup per the front's kinematic configuration. Throws
/// BoundaryError within kScenarioEdgeTol (relative) of an interval edge.
Scenario classify_scenario(double omega, const CriticalFrequencies& crit);

/// Reference to one mode in a FrequencySolution.
struct BasisRef {
  Side side = Side::Left;
  int index = 0;  // into the side's 8-mode array
};

/// IN/OUT partition of the propagating modes plus the evanescent modes kept
/// (those decaying away from the interface).
struct BasisAssignment {
  std::vector<BasisRef> in;
  std::vector<BasisRef> out;
  std::vector<BasisRef> kept_evanescent;
};

/// Propagating modes moving toward the interface are IN, away are OUT;
/// evanescent modes are kept when they decay away from x = 0 (Im k < 0 on the
/// left, > 0 on the right with the e^{ikx} convention). Throws BoundaryError
/// on a group velocity within kTolGroupVelocity of zero.
BasisAssignment assign_in_out(const std::array<ModeSolution, 8>& left_modes,
                              const std::array<ModeSolution, 8>& right_modes);

/// Everything known about one co-moving frequency.
struct FrequencySolution {
  double omega = 0.0;
  std::array<ModeSolution, 8> left_modes;
  std::array<ModeSolution, 8> right_modes;
  Scenario scenario = Scenario::A_horizonless_low;
  BasisAssignment basis;

  const ModeSolution& mode(const BasisRef& r) const {
    return (r.side == Side::Left ? left_modes : right_modes)[r.index];
  }
};

FrequencySolution solve_frequency(const Medium& medium, double omega,
                                  const CriticalFrequencies& crit);

}  // namespace rif
