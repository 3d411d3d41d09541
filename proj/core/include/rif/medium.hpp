// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <complex>

#include "rif/types.hpp"

namespace rif {

/// Dispersive medium on both sides of the moving index front.
///
/// Each side obeys the three-resonance dispersion relation
///
///   c^2 k^2 = w^2 + sum_i 4 pi kappa_i G^2 (w + u k)^2
///                         / (1 - G^2 (w + u k)^2 / Omega_i^2)
///
/// in the frame co-moving with the front at speed u, G = (1-u^2/c^2)^(-1/2).
/// The front raises the refractive index behind it (x<0) by delta_n.
///
/// Unit system: c = 1 by default, lengths in micrometres, so frequencies and
/// wavenumbers are both rad/um (w = 2 pi / lambda_vac for vacuum light). All
/// formulas carry c explicitly, so physical units (c in um/fs, w in rad/fs)
/// work unchanged.
struct MediumParams {
  std::array<double, 3> resonant_frequencies{};  // Omega_i > 0
  std::array<double, 3> elastic_constants{};     // kappa_i > 0
  double front_speed_fraction = 0.0;             // u/c in (0,1)
  double delta_n = 0.0;                          // index step height >= 0
  double light_speed = 1.0;                      // unit constant c > 0

  /// Standard three-term fused-silica Sellmeier data converted to
  /// (Omega_i, kappa_i): Omega_i = 2 pi c / lambda_i, kappa_i = B_i / 4 pi.
  static MediumParams fused_silica(double u_over_c, double delta_n, double light_speed = 1.0);

  /// Throws ConfigError if any invariant fails.
  void validate() const;

  double gamma() const;
  double front_speed() const { return front_speed_fraction * light_speed; }

  /// Zero-frequency index of the unperturbed (right) side.
  double base_index() const;

  /// Common factor applied to the left-side elastic constants so that the
  /// zero-frequency index rises by exactly delta_n.
  double left_elastic_scale() const;
};

/// One side of the front, with its effective resonance data frozen in.
/// Immutable after construction; safe to share across sweep workers.
class DispersionSide {
 public:
  DispersionSide(const MediumParams& params, Side side);

  Side side() const { return side_; }
  const std::array<double, 3>& resonances() const { return resonances_; }
  const std::array<double, 3>& elastic_constants() const { return elastic_; }
  double front_speed() const { return u_; }
  double light_speed() const { return c_; }
  double gamma() const { return gamma_; }

  /// Lab-frame frequency of a co-moving plane wave, Omega = G (w + u k).
  Complex lab_frequency(double omega, Complex k) const {
    return gamma_ * (omega + u_ * k);
  }

  /// Phase refractive index n(Omega) at rest (u = 0 form of the dispersion
  /// relation). Throws std::domain_error within 1e-6 rad/um of a resonance
  /// pole, or where no real index exists (reststrahlen band).
  double refractive_index(double lab_frequency) const;

  /// Ascending coefficients c0..c8 of the degree-8 polynomial in k whose
  /// roots are exactly the dispersion-relation solutions at this frequency.
  /// All coefficients are real for real omega; the leading one is nonzero.
  std::array<double, 9> polynomial_coefficients(double omega) const;

  /// Dispersion function F(k, w) whose zeros are the modes, and its partial
  /// derivatives. Group velocity of a real root is -F_k/F_w.
  Complex dispersion(double omega, Complex k) const;
  Complex dispersion_dk(double omega, Complex k) const;
  Complex dispersion_domega(double omega, Complex k) const;

  /// Magnitude scale of the dispersion terms at (omega, k); residuals are
  /// judged relative to this.
  double dispersion_scale(double omega, Complex k) const;

  /// Lab frequency at which n^2 crosses zero above the IR resonance; the
  /// optical branch carries propagating waves above this value. Used to bound
  /// critical-frequency scans.
  double optical_branch_onset() const;

 private:
  Side side_;
  std::array<double, 3> resonances_;
  std::array<double, 3> elastic_;
  double u_, c_, gamma_;
};

/// Both sides of the front plus the defining parameters.
struct Medium {
  MediumParams params;
  DispersionSide left;
  DispersionSide right;

  explicit Medium(const MediumParams& p)
      : params(p), left(p, Side::Left), right(p, Side::Right) {
    p.validate();
  }

  const DispersionSide& side(Side s) const { return s == Side::Left ? left : right; }
};

}  // namespace rif
