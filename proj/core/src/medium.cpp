// SPDX-License-Identifier: Apache-2.0
#include "rif/medium.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace rif {

namespace {
constexpr double kFourPi = 4.0 * std::numbers::pi;

// Multiply polynomial a (ascending) by quadratic b[0..2], in place semantics.
template <std::size_t N>
std::array<double, N + 2> mul_quadratic(const std::array<double, N>& a,
                                        const std::array<double, 3>& b) {
  std::array<double, N + 2> out{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < 3; ++j) out[i + j] += a[i] * b[j];
  return out;
}
}  // namespace

MediumParams MediumParams::fused_silica(double u_over_c, double delta_n, double light_speed) {
  // Malitson's fused-silica Sellmeier coefficients (wavelengths in um).
  constexpr std::array<double, 3> B = {0.6961663, 0.4079426, 0.8974794};
  constexpr std::array<double, 3> lambda = {0.0684043, 0.1162414, 9.896161};
  MediumParams p;
  for (int i = 0; i < 3; ++i) {
    p.resonant_frequencies[i] = 2.0 * std::numbers::pi * light_speed / lambda[i];
    p.elastic_constants[i] = B[i] / kFourPi;
  }
  p.front_speed_fraction = u_over_c;
  p.delta_n = delta_n;
  p.light_speed = light_speed;
  p.validate();
  return p;
}

void MediumParams::validate() const {
  std::ostringstream bad;
  for (int i = 0; i < 3; ++i) {
    if (!(resonant_frequencies[i] > 0)) bad << "resonant_frequencies[" << i << "] must be > 0; ";
    if (!(elastic_constants[i] > 0)) bad << "elastic_constants[" << i << "] must be > 0; ";
  }
  if (!(front_speed_fraction > 0 && front_speed_fraction < 1))
    bad << "front_speed_fraction must lie in (0,1); ";
  if (!(delta_n >= 0)) bad << "delta_n must be >= 0; ";
  if (!(light_speed > 0)) bad << "light_speed must be > 0; ";
  if (!bad.str().empty()) throw ConfigError("invalid medium parameters: " + bad.str());
  if (!std::isfinite(gamma())) throw ConfigError("Lorentz factor not finite");
}

double MediumParams::gamma() const {
  return 1.0 / std::sqrt(1.0 - front_speed_fraction * front_speed_fraction);
}

double MediumParams::base_index() const {
  double s = 0.0;
  for (double k : elastic_constants) s += k;
  return std::sqrt(1.0 + kFourPi * s);
}

double MediumParams::left_elastic_scale() const {
  const double n0 = base_index();
  return ((n0 + delta_n) * (n0 + delta_n) - 1.0) / (n0 * n0 - 1.0);
}

DispersionSide::DispersionSide(const MediumParams& params, Side side)
    : side_(side),
      resonances_(params.resonant_frequencies),
      elastic_(params.elastic_constants),
      u_(params.front_speed()),
      c_(params.light_speed),
      gamma_(params.gamma()) {
  params.validate();
  if (side == Side::Left) {
    const double s = params.left_elastic_scale();
    for (double& k : elastic_) k *= s;
  }
}

double DispersionSide::refractive_index(double lab_frequency) const {
  if (!(lab_frequency >= 0)) throw std::domain_error("refractive_index: negative frequency");
  double n2 = 1.0;
  for (int i = 0; i < 3; ++i) {
    const double om = resonances_[i];
    if (std::abs(lab_frequency - om) < 1e-6) {
      std::ostringstream msg;
      msg << "refractive_index: frequency " << lab_frequency
          << " within 1e-6 of resonance pole Omega_" << i + 1 << " = " << om;
      throw std::domain_error(msg.str());
    }
    n2 += kFourPi * elastic_[i] / (1.0 - lab_frequency * lab_frequency / (om * om));
  }
  if (n2 < 0) {
    std::ostringstream msg;
    msg << "refractive_index: no real index at " << lab_frequency << " (n^2 = " << n2 << ")";
    throw std::domain_error(msg.str());
  }
  return std::sqrt(n2);
}

std::array<double, 9> DispersionSide::polynomial_coefficients(double omega) const {
  const double g2 = gamma_ * gamma_;
  // q(k) = G^2 (w + u k)^2, ascending coefficients
  const std::array<double, 3> q = {g2 * omega * omega, 2.0 * g2 * u_ * omega, g2 * u_ * u_};
  std::array<std::array<double, 3>, 3> p;  // p_i(k) = Omega_i^2 - q(k)
  for (int i = 0; i < 3; ++i)
    p[i] = {resonances_[i] * resonances_[i] - q[0], -q[1], -q[2]};

  const std::array<double, 3> lhs = {-omega * omega, 0.0, c_ * c_};
  auto poly = mul_quadratic(mul_quadratic(mul_quadratic(lhs, p[0]), p[1]), p[2]);

  for (int i = 0; i < 3; ++i) {
    const double pref = kFourPi * elastic_[i] * resonances_[i] * resonances_[i];
    std::array<double, 3> term = {pref * q[0], pref * q[1], pref * q[2]};
    auto expanded = mul_quadratic(mul_quadratic(term, p[(i + 1) % 3]), p[(i + 2) % 3]);
    for (std::size_t j = 0; j < expanded.size(); ++j) poly[j] -= expanded[j];
  }
  return poly;
}

Complex DispersionSide::dispersion(double omega, Complex k) const {
  const Complex Om = lab_frequency(omega, k);
  const Complex q = Om * Om;
  Complex F = c_ * c_ * k * k - omega * omega;
  for (int i = 0; i < 3; ++i) {
    const double om2 = resonances_[i] * resonances_[i];
    F -= kFourPi * elastic_[i] * om2 * q / (om2 - q);
  }
  return F;
}

Complex DispersionSide::dispersion_dk(double omega, Complex k) const {
  const Complex Om = lab_frequency(omega, k);
  const Complex q = Om * Om;
  const Complex dq = 2.0 * gamma_ * gamma_ * u_ * (omega + u_ * k);
  Complex Fk = 2.0 * c_ * c_ * k;
  for (int i = 0; i < 3; ++i) {
    const double om2 = resonances_[i] * resonances_[i];
    Fk -= kFourPi * elastic_[i] * om2 * om2 / ((om2 - q) * (om2 - q)) * dq;
  }
  return Fk;
}

Complex DispersionSide::dispersion_domega(double omega, Complex k) const {
  const Complex Om = lab_frequency(omega, k);
  const Complex q = Om * Om;
  const Complex dq = 2.0 * gamma_ * gamma_ * (omega + u_ * k);
  Complex Fw = -2.0 * omega;
  for (int i = 0; i < 3; ++i) {
    const double om2 = resonances_[i] * resonances_[i];
    Fw -= kFourPi * elastic_[i] * om2 * om2 / ((om2 - q) * (om2 - q)) * dq;
  }
  return Fw;
}

double DispersionSide::dispersion_scale(double omega, Complex k) const {
  const Complex Om = lab_frequency(omega, k);
  const Complex q = Om * Om;
  double scale = std::abs(c_ * c_ * k * k) + omega * omega;
  for (int i = 0; i < 3; ++i) {
    const double om2 = resonances_[i] * resonances_[i];
    scale += std::abs(kFourPi * elastic_[i] * om2 * q / (om2 - q));
  }
  return std::max(scale, 1e-300);
}

double DispersionSide::optical_branch_onset() const {
  // n^2 runs from -inf just above the IR resonance to +inf below the first
  // UV one; bisect its sign change.
  double lo = resonances_[2] * (1.0 + 1e-12);
  double hi = resonances_[1] * (1.0 - 1e-12);
  auto n2 = [&](double om) {
    double v = 1.0;
    for (int i = 0; i < 3; ++i)
      v += kFourPi * elastic_[i] / (1.0 - om * om / (resonances_[i] * resonances_[i]));
    return v;
  };
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (n2(mid) < 0 ? lo : hi) = mid;
    if (hi - lo < 1e-14 * hi) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace rif
