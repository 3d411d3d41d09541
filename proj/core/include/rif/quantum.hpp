// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "rif/scattering.hpp"

namespace rif {

/// Spontaneous photon flux per outgoing mode in the moving frame,
/// phi^a = (1/2pi) sum over opposite-norm in modes b of |S_ab|^2.
/// The per-mode occupation number is n_a = 2 pi phi^a.
std::vector<double> photon_flux(const ScatteringMatrix& S);

/// Flux row as written to the spectra CSV.
struct FluxSpectrumRow {
  double omega = 0.0;
  Scenario scenario = Scenario::A_horizonless_low;
  std::vector<ModeLabel> labels;  // out basis order
  std::vector<double> flux;       // 1/(2 pi) units

  double total() const;
};

FluxSpectrumRow flux_row(const ScatteringMatrix& S);

/// Photon-number Pearson correlation matrix over outgoing-mode pairs,
///
///   C(a,a') = r |sum_{b opp a} S*_ab S_a'b|^2 / sqrt(v_a v_a'),
///   v_a = n_a (n_a + 1),  n_a = 2 pi phi_a,
///
/// with r the detector bandwidth ratio Delta^2/(Delta_1 Delta_2). Entries
/// with zero flux on either mode are defined as exact 0.
Eigen::MatrixXd correlation_matrix(const ScatteringMatrix& S, double bandwidth_ratio = 1.0);

/// Second moments of the out state reduced to modes (a, b), quadrature order
/// (x_a, p_a, x_b, p_b), vacuum = I/2. Throws ConsistencyError when the
/// uncertainty relation is violated beyond -1e-9.
Eigen::Matrix4d reduced_covariance(const ScatteringMatrix& S, int a, int b);

/// Covariance of all outgoing modes (used for the global-purity check).
Eigen::MatrixXd full_covariance(const ScatteringMatrix& S);

/// Symplectic eigenvalues of a 2n x 2n covariance matrix (vacuum value 1/2).
std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& cov);

/// Logarithmic negativity of a two-mode covariance, natural-log convention:
/// E_N = max(0, -ln(2 nu-)) with nu- the smaller symplectic eigenvalue of the
/// partial transpose. A two-mode squeezed vacuum of per-mode occupation n
/// gives 2 arsinh(sqrt(n)).
double log_negativity(const Eigen::Matrix4d& cov);

/// Degree of entanglement: E_N relative to the logarithmic negativity of the
/// maximally entangled two-mode state of the same energy (the symmetric
/// two-mode squeezed vacuum), J = E_N / (2 arsinh(sqrt((n1+n2)/2))).
/// n1, n2 are photon numbers (2 pi phi). Returns nullopt when n1+n2 = 0.
/// Values within 1e-9 above 1 are clipped; larger overshoots throw
/// ConsistencyError.
std::optional<double> degree_of_entanglement(double log_neg, double n1, double n2);

/// Everything reported about one outgoing-mode pair.
struct TwoModeReport {
  ModeLabel mode_a, mode_b;
  double correlation = 0.0;   // C in [0,1]
  double log_neg = 0.0;       // E_N >= 0
  std::optional<double> degree;  // J in [0,1]
  bool pure = false;          // reduced two-mode state pure within 1e-6
};

TwoModeReport two_mode_report(const ScatteringMatrix& S, int a, int b,
                              const std::vector<double>& flux, double bandwidth_ratio = 1.0);

/// Fock-space oracle for the logarithmic negativity of a two-mode squeezed
/// thermal state: squeezing r on a product of thermal states with mean
/// occupations n_th1, n_th2, in a number basis truncated at `dim` photons per
/// mode. Partial transpose, trace norm, natural log. Throws
/// ConsistencyError when the truncation tail mass exceeds 1e-10.
double fock_log_negativity(double squeezing, double n_th1, double n_th2, int dim = 40);
inline double fock_log_negativity(double squeezing, double n_th) {
  return fock_log_negativity(squeezing, n_th, n_th);
}

/// Covariance of the same two-mode squeezed thermal state (for oracle
/// cross-checks), quadrature order (x_a, p_a, x_b, p_b).
Eigen::Matrix4d squeezed_thermal_covariance(double squeezing, double n_th1, double n_th2);

/// One point of the degree-of-entanglement vs correlation scatter.
struct JCPoint {
  Scenario scenario;
  ModeLabel mode_a, mode_b;
  double correlation = 0.0;
  double degree = 0.0;
};

/// All defined (C, J) pairs of a scattering matrix, tagged by scenario.
std::vector<JCPoint> jc_points(const ScatteringMatrix& S, double bandwidth_ratio = 1.0);

}  // namespace rif
