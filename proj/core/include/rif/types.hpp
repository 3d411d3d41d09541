// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace rif {

using Complex = std::complex<double>;

/// Side of the moving index front. Left (x<0) is the high-index region the
/// front leaves behind, Right (x>0) the unperturbed low-index region.
enum class Side { Left, Right };

inline char side_char(Side s) { return s == Side::Left ? 'L' : 'R'; }
inline Side other_side(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

/// Branch tags for the eight wavenumber solutions at one co-moving frequency.
///
/// Optical branch (lab frequency between the IR and first UV resonance):
///   no  negative-norm optical
///   lo  low optical (smallest Re k of the positive-norm optical set)
///   mo  mid optical (the unique solution with positive group velocity)
///   uo  upper optical (largest Re k)
/// Non-optical branches, named by lab-frequency window:
///   ll / nl    positive / negative norm below the IR resonance
///   ul / nul   positive / negative norm above the optical window
///   c          complex (evanescent) solution
enum class ModeTag { no, lo, mo, uo, ll, nl, ul, nul, c };

inline const char* tag_name(ModeTag t) {
  switch (t) {
    case ModeTag::no: return "no";
    case ModeTag::lo: return "lo";
    case ModeTag::mo: return "mo";
    case ModeTag::uo: return "uo";
    case ModeTag::ll: return "ll";
    case ModeTag::nl: return "nl";
    case ModeTag::ul: return "ul";
    case ModeTag::nul: return "nul";
    case ModeTag::c: return "c";
  }
  return "?";
}

struct ModeLabel {
  ModeTag tag = ModeTag::c;
  Side side = Side::Left;

  std::string str() const { return std::string(tag_name(tag)) + side_char(side); }
  friend bool operator==(const ModeLabel&, const ModeLabel&) = default;
};

/// Kinematic scenario of the front at one co-moving frequency, ordered along
/// increasing frequency for parameter sets admitting both subluminal intervals.
enum class Scenario {
  A_horizonless_low,
  B_white_hole,
  C_horizonless_mid,
  D_black_hole,
  E_high,
};

inline char scenario_char(Scenario s) {
  switch (s) {
    case Scenario::A_horizonless_low: return 'A';
    case Scenario::B_white_hole: return 'B';
    case Scenario::C_horizonless_mid: return 'C';
    case Scenario::D_black_hole: return 'D';
    case Scenario::E_high: return 'E';
  }
  return '?';
}

// ---------------------------------------------------------------------------
// Error hierarchy
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input sits on a measure-zero boundary (critical frequency, zero group
/// velocity). The caller is expected to nudge the frequency and retry.
struct BoundaryError : Error {
  using Error::Error;
};

/// Root polishing exhausted its budget.
struct ConvergenceError : Error {
  using Error::Error;
};

/// An internal invariant failed (normalization, pseudo-unitarity, uncertainty
/// relation). Signals a bug or a numerically hopeless input, not user error.
struct ConsistencyError : Error {
  using Error::Error;
};

/// The interface-matching system is numerically singular.
struct IllConditionedError : Error {
  using Error::Error;
};

/// Configuration file / CLI input problem.
struct ConfigError : Error {
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Shared tolerances
// ---------------------------------------------------------------------------

/// |Im k| below this (rad/um) counts as a propagating root.
inline constexpr double kTolImag = 1e-8;

/// |group velocity| below this is treated as a turning point.
inline constexpr double kTolGroupVelocity = 1e-10;

/// Relative half-width of the near-critical exclusion zone of sweeps.
inline constexpr double kCriticalExclusion = 1e-6;

/// Relative distance to a scenario-interval edge that raises BoundaryError.
inline constexpr double kScenarioEdgeTol = 1e-10;

/// Matching systems with condition number above this are rejected.
inline constexpr double kMaxCondition = 1e12;

/// Pseudo-unitarity residual above this raises ConsistencyError.
inline constexpr double kMaxUnitarityResidual = 1e-6;

}  // namespace rif
