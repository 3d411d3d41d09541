// SPDX-License-Identifier: Apache-2.0
#include "rif/kinematics.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace rif {

namespace {

/// Roots of the degree-8 dispersion polynomial: balanced companion-matrix
/// eigenvalues, then Newton polish on the rational dispersion relation
/// directly (restores the precision lost to balancing and to coefficient
/// cancellation).
std::array<Complex, 8> solve_roots(const DispersionSide& side, double omega) {
  const auto coeff = side.polynomial_coefficients(omega);
  Eigen::Matrix<double, 8, 8> comp = Eigen::Matrix<double, 8, 8>::Zero();
  for (int i = 0; i < 7; ++i) comp(i + 1, i) = 1.0;
  for (int i = 0; i < 8; ++i) comp(i, 7) = -coeff[i] / coeff[8];

  // Parlett-Reinsch style balancing by powers of two.
  for (int sweep = 0; sweep < 12; ++sweep) {
    bool changed = false;
    for (int i = 0; i < 8; ++i) {
      const double r = comp.row(i).template lpNorm<1>();
      const double c = comp.col(i).template lpNorm<1>();
      if (r == 0.0 || c == 0.0) continue;
      int expo = 0;
      std::frexp(r / c, &expo);
      expo /= 2;
      if (expo != 0) {
        const double sc = std::ldexp(1.0, expo);
        if (std::ldexp(c, expo) + std::ldexp(r, -expo) < 0.9 * (c + r)) {
          comp.row(i) /= sc;
          comp.col(i) *= sc;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }

  Eigen::EigenSolver<Eigen::Matrix<double, 8, 8>> es(comp, false);
  std::array<Complex, 8> roots;
  for (int i = 0; i < 8; ++i) roots[i] = es.eigenvalues()[i];

  for (auto& k : roots) {
    Complex best = k;
    double best_res = std::abs(side.dispersion(omega, k)) / side.dispersion_scale(omega, k);
    bool converged = best_res < 1e-12;
    for (int it = 0; it < 50 && !converged; ++it) {
      const Complex F = side.dispersion(omega, k);
      const Complex Fk = side.dispersion_dk(omega, k);
      if (Fk == Complex(0.0)) break;
      const Complex dk = F / Fk;
      k -= dk;
      const double res = std::abs(side.dispersion(omega, k)) / side.dispersion_scale(omega, k);
      if (res < best_res) {
        best = k;
        best_res = res;
      }
      if (std::abs(dk) < 1e-15 * std::max(1.0, std::abs(k)) || res < 1e-14) converged = true;
    }
    if (best_res > 1e-9) {
      std::ostringstream msg;
      msg << "root polish did not converge at omega=" << omega << " side="
          << side_char(side.side()) << " (relative residual " << best_res << ")";
      throw ConvergenceError(msg.str());
    }
    k = best;
  }

  // Snap near-real roots onto the axis and re-polish there; the dispersion
  // relation has real coefficients, so real roots are exactly real.
  for (auto& k : roots) {
    if (std::abs(k.imag()) < kTolImag) {
      double kr = k.real();
      for (int it = 0; it < 30; ++it) {
        const double F = side.dispersion(omega, kr).real();
        const double Fk = side.dispersion_dk(omega, kr).real();
        if (Fk == 0.0) break;
        const double dk = F / Fk;
        kr -= dk;
        if (std::abs(dk) < 1e-16 * std::max(1.0, std::abs(kr))) break;
      }
      k = Complex(kr, 0.0);
    }
  }

  // Enforce exact conjugation closure on the evanescent set.
  std::vector<int> evan;
  for (int i = 0; i < 8; ++i)
    if (roots[i].imag() != 0.0) evan.push_back(i);
  std::vector<bool> used(evan.size(), false);
  for (std::size_t a = 0; a < evan.size(); ++a) {
    if (used[a] || roots[evan[a]].imag() < 0) continue;
    int best = -1;
    double best_d = std::numeric_limits<double>::max();
    for (std::size_t b = 0; b < evan.size(); ++b) {
      if (b == a || used[b] || roots[evan[b]].imag() > 0) continue;
      const double d = std::abs(roots[evan[b]] - std::conj(roots[evan[a]]));
      if (d < best_d) {
        best_d = d;
        best = static_cast<int>(b);
      }
    }
    if (best >= 0) {
      roots[evan[best]] = std::conj(roots[evan[a]]);
      used[a] = used[best] = true;
    }
  }
  return roots;
}

int tag_rank(ModeTag t) {
  switch (t) {
    case ModeTag::no: return 0;
    case ModeTag::lo: return 1;
    case ModeTag::mo: return 2;
    case ModeTag::uo: return 3;
    case ModeTag::ll: return 4;
    case ModeTag::nl: return 5;
    case ModeTag::ul: return 6;
    case ModeTag::nul: return 7;
    case ModeTag::c: return 8;
  }
  return 9;
}

}  // namespace

int count_real_roots(const DispersionSide& side, double omega) {
  const auto roots = solve_roots(side, omega);
  int n = 0;
  for (const auto& k : roots)
    if (k.imag() == 0.0) ++n;
  return n;
}

std::array<ModeSolution, 8> solve_modes(const DispersionSide& side, double omega) {
  const auto roots = solve_roots(side, omega);
  std::array<ModeSolution, 8> modes;

  const double om_ir = side.resonances()[2];  // IR resonance bounds the optical window below
  const double om_uv = side.resonances()[1];  // first UV resonance bounds it above

  for (int i = 0; i < 8; ++i) {
    ModeSolution& m = modes[i];
    m.wavenumber = roots[i];
    m.omega = omega;
    m.lab_frequency = side.lab_frequency(omega, roots[i]);
    m.label = {ModeTag::c, side.side()};
    if (roots[i].imag() == 0.0) {
      m.nature = Nature::Propagating;
      m.norm_sign = m.lab_frequency.real() > 0 ? +1 : -1;
      const double Fk = side.dispersion_dk(omega, roots[i]).real();
      const double Fw = side.dispersion_domega(omega, roots[i]).real();
      m.group_velocity = -Fk / Fw;
    } else {
      m.nature = Nature::Evanescent;
      m.norm_sign = 0;
      m.group_velocity = std::numeric_limits<double>::quiet_NaN();
    }
  }

  // Window classification by lab frequency magnitude: below the IR resonance
  // = lower branch, inside (IR, first UV) = optical, above = upper.
  std::vector<int> opt_pos, opt_neg, low_pos, low_neg, up_pos, up_neg, evan;
  for (int i = 0; i < 8; ++i) {
    if (!modes[i].propagating()) {
      evan.push_back(i);
      continue;
    }
    const double a = std::abs(modes[i].lab_frequency.real());
    auto& bucket = (a < om_ir)   ? (modes[i].norm_sign > 0 ? low_pos : low_neg)
                   : (a < om_uv) ? (modes[i].norm_sign > 0 ? opt_pos : opt_neg)
                                 : (modes[i].norm_sign > 0 ? up_pos : up_neg);
    bucket.push_back(i);
  }

  auto by_k = [&](int a, int b) {
    return modes[a].wavenumber.real() < modes[b].wavenumber.real();
  };
  std::sort(opt_pos.begin(), opt_pos.end(), by_k);
  std::sort(opt_neg.begin(), opt_neg.end(), by_k);
  std::sort(low_pos.begin(), low_pos.end(), by_k);
  std::sort(low_neg.begin(), low_neg.end(), by_k);
  std::sort(up_pos.begin(), up_pos.end(), by_k);
  std::sort(up_neg.begin(), up_neg.end(), by_k);

  const Side s = side.side();
  auto set_tag = [&](int idx, ModeTag t) { modes[idx].label = {t, s}; };

  if (opt_neg.size() == 1) set_tag(opt_neg[0], ModeTag::no);

  if (opt_pos.size() == 3) {
    set_tag(opt_pos[0], ModeTag::lo);
    set_tag(opt_pos[1], ModeTag::mo);
    set_tag(opt_pos[2], ModeTag::uo);
    if (!(modes[opt_pos[1]].group_velocity > 0)) {
      std::ostringstream msg;
      msg << "mid-optical root lacks positive group velocity at omega=" << omega
          << " side=" << side_char(s) << " (turning-point proximity)";
      throw BoundaryError(msg.str());
    }
  } else if (opt_pos.size() == 1) {
    // Survivor rule: past a turning point the merged pair is evanescent and
    // its Re k tells which end of the branch vanished. Larger surviving Re k
    // than the evanescent pair means the UV-side (upper) root survived.
    double k_ev = 0.0;
    int n_ev = 0;
    for (int e : evan) {
      const double a = std::abs(modes[e].lab_frequency.real());
      if (a > om_ir && a < om_uv) {
        k_ev += modes[e].wavenumber.real();
        ++n_ev;
      }
    }
    if (n_ev > 0) k_ev /= n_ev;
    const bool upper = n_ev > 0 && modes[opt_pos[0]].wavenumber.real() > k_ev;
    set_tag(opt_pos[0], upper ? ModeTag::uo : ModeTag::lo);
  } else if (opt_pos.size() == 2) {
    std::ostringstream msg;
    msg << "two positive-norm optical roots at omega=" << omega << " side=" << side_char(s)
        << " (exactly at a critical frequency)";
    throw BoundaryError(msg.str());
  }

  // Non-optical tags by window and norm sign; if a front speed below c/n(0)
  // puts both lower-branch roots at one norm sign, fall back to Re k order so
  // tags stay unique.
  auto assign_pair = [&](std::vector<int>& pos, std::vector<int>& neg, ModeTag tp, ModeTag tn) {
    if (pos.size() == 1) set_tag(pos[0], tp);
    if (neg.size() == 1) set_tag(neg[0], tn);
    if (pos.size() == 2 && neg.empty()) {
      set_tag(pos[0], tp);
      set_tag(pos[1], tn);
    }
    if (neg.size() == 2 && pos.empty()) {
      set_tag(neg[0], tp);
      set_tag(neg[1], tn);
    }
  };
  assign_pair(low_pos, low_neg, ModeTag::ll, ModeTag::nl);
  assign_pair(up_pos, up_neg, ModeTag::ul, ModeTag::nul);

  std::sort(modes.begin(), modes.end(), [&](const ModeSolution& a, const ModeSolution& b) {
    const int ra = tag_rank(a.label.tag), rb = tag_rank(b.label.tag);
    if (ra != rb) return ra < rb;
    if (a.wavenumber.imag() != b.wavenumber.imag())
      return a.wavenumber.imag() < b.wavenumber.imag();
    return a.wavenumber.real() < b.wavenumber.real();
  });
  return modes;
}

std::optional<SubluminalInterval> find_critical_frequencies(const DispersionSide& side,
                                                            const CriticalScanOptions& opt) {
  // The subluminal interval lies below the frequency where the surviving
  // optical root passes k = 0, i.e. G * (onset of the optical branch).
  const double hi = 0.999 * side.gamma() * side.optical_branch_onset();
  const double lo = hi * 1e-3;
  const int n = std::max(opt.scan_points, 16);

  std::vector<double> ws(n);
  const double ratio = std::log(hi / lo);
  for (int i = 0; i < n; ++i) ws[i] = lo * std::exp(ratio * i / (n - 1));

  std::vector<int> cnt(n);
  for (int i = 0; i < n; ++i) cnt[i] = count_real_roots(side, ws[i]);

  std::vector<double> edges;
  std::vector<int> before;
  for (int i = 0; i + 1 < n; ++i) {
    if (cnt[i] == cnt[i + 1]) continue;
    double a = ws[i], b = ws[i + 1];
    while (b - a > opt.refine_rel * b) {
      const double mid = 0.5 * (a + b);
      (count_real_roots(side, mid) == cnt[i] ? a : b) = mid;
    }
    edges.push_back(0.5 * (a + b));
    before.push_back(cnt[i]);
  }

  if (edges.size() != 2 || !(before[0] == 6 && before[1] == 8)) return std::nullopt;
  return SubluminalInterval{edges[0], edges[1]};
}

CriticalFrequencies find_all_criticals(const Medium& medium, const CriticalScanOptions& opt) {
  const auto l = find_critical_frequencies(medium.left, opt);
  const auto r = find_critical_frequencies(medium.right, opt);
  if (!l || !r)
    throw Error(std::string("no subluminal interval on ") +
                (!l ? "left" : "right") + " side for these parameters");
  return CriticalFrequencies{*l, *r};
}

Scenario classify_scenario(double omega, const CriticalFrequencies& crit) {
  const double edges[4] = {crit.left.omega_min, crit.right.omega_min, crit.left.omega_max,
                           crit.right.omega_max};
  for (double e : edges) {
    if (std::abs(omega - e) < kScenarioEdgeTol * e) {
      std::ostringstream msg;
      msg << "omega=" << omega << " within " << kScenarioEdgeTol
          << " (relative) of critical frequency " << e;
      throw BoundaryError(msg.str());
    }
  }
  if (!(edges[0] < edges[1] && edges[1] < edges[2] && edges[2] < edges[3]))
    throw ConsistencyError("critical frequencies not interleaved as minL<minR<maxL<maxR");
  if (omega < edges[0]) return Scenario::A_horizonless_low;
  if (omega < edges[1]) return Scenario::B_white_hole;
  if (omega < edges[2]) return Scenario::C_horizonless_mid;
  if (omega < edges[3]) return Scenario::D_black_hole;
  return Scenario::E_high;
}

BasisAssignment assign_in_out(const std::array<ModeSolution, 8>& left_modes,
                              const std::array<ModeSolution, 8>& right_modes) {
  BasisAssignment basis;
  auto handle = [&](const std::array<ModeSolution, 8>& modes, Side s) {
    for (int i = 0; i < 8; ++i) {
      const ModeSolution& m = modes[i];
      if (m.propagating()) {
        if (std::abs(m.group_velocity) < kTolGroupVelocity) {
          std::ostringstream msg;
          msg << "mode " << m.label.str() << " at omega=" << m.omega
              << " has group velocity " << m.group_velocity << " (turning point)";
          throw BoundaryError(msg.str());
        }
        const bool incoming = (s == Side::Left) ? m.group_velocity > 0 : m.group_velocity < 0;
        (incoming ? basis.in : basis.out).push_back({s, i});
      } else {
        const bool keep =
            (s == Side::Left) ? m.wavenumber.imag() < 0 : m.wavenumber.imag() > 0;
        if (keep) basis.kept_evanescent.push_back({s, i});
      }
    }
  };
  handle(left_modes, Side::Left);
  handle(right_modes, Side::Right);

  if (basis.in.size() != basis.out.size())
    throw ConsistencyError("in/out bases differ in size at omega=" +
                           std::to_string(left_modes[0].omega));
  return basis;
}

FrequencySolution solve_frequency(const Medium& medium, double omega,
                                  const CriticalFrequencies& crit) {
  FrequencySolution fs;
  fs.omega = omega;
  fs.left_modes = solve_modes(medium.left, omega);
  fs.right_modes = solve_modes(medium.right, omega);
  fs.scenario = classify_scenario(omega, crit);
  fs.basis = assign_in_out(fs.left_modes, fs.right_modes);
  return fs;
}

}  // namespace rif
