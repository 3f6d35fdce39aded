// Copyright 2026 The rpbeam Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef RPBEAM_BOUNDS_HPP_
#define RPBEAM_BOUNDS_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "rpbeam/types.hpp"

namespace rpbeam {

// Output-power excess of the compressed beamformer over the sensorspace
// optimum computed from the same statistics.
double regret(double p_cmvdr, double p_mvdr);

// Sensorspace output power lies in [l_min, l_max] / |g|^2.
std::pair<double, double> mvdr_power_bounds(double lambda_min, double lambda_max,
                                            double g_norm_sq);

// Eigenvalue interval for the inverse of the projected covariance;
// requires delta < 1, else the interval is vacuous and this throws.
std::pair<double, double> projected_inverse_eig_bounds(double lambda_min,
                                                       double lambda_max,
                                                       double delta);

// Compressed output power interval.
std::pair<double, double> cmvdr_power_bounds(double lambda_min, double lambda_max,
                                             double delta, double g_norm_sq);

// Regret interval combining the two power intervals.
std::pair<double, double> regret_bounds(double lambda_min, double lambda_max,
                                        double delta, double g_norm_sq);

struct LmwResult {
  bool holds = false;
  double lower = 0.0;   // product of the k smallest eigenvalues of S^H S
  double middle = 0.0;  // product of eigenvalue ratios at the chosen indices
  double upper = 0.0;   // product of the k largest eigenvalues of S^H S
};

// Checks the multiplicative eigenvalue-perturbation inequality for
// compressions A -> S^H A S. indices are 1-based into the descending
// spectrum and must hit nonzero eigenvalues of A. Rectangular S (n x m,
// m < n) is zero-embedded into the square case and requires PSD A.
LmwResult lmw_verify(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& s,
                     const std::vector<int>& indices, double rel_tol = 1e-8);

// One verified row of the regret report.
struct RegretRecord {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  double delta = 0.0;
  double g_norm_sq = 0.0;
  double p_mvdr = 0.0;
  double p_cmvdr = 0.0;
  double regret = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool vacuous = false;  // delta >= 1: no interval exists
  bool contained = false;
};

RegretRecord make_regret_record(double lambda_min, double lambda_max,
                                double delta, double g_norm_sq, double p_mvdr,
                                double p_cmvdr);

// Monte-Carlo verification over random PSD covariances and Gaussian
// projections. Every trial with delta < 1 checks the full chain
// (power intervals, projected-inverse eigenvalues, regret interval,
// regret nonnegativity); delta >= 1 trials must raise the vacuous error.
struct BoundTrialStats {
  int trials = 0;
  int checked_full = 0;  // delta < 1, whole chain verified
  int vacuous = 0;       // delta >= 1, error path verified
  int violations = 0;
};

BoundTrialStats run_bound_trials(int trials, uint64_t seed, double rel_tol = 1e-9);

struct LmwTrialStats {
  int trials = 0;
  int violations = 0;
};

LmwTrialStats run_lmw_trials(int trials, uint64_t seed, double rel_tol = 1e-8);

}  // namespace rpbeam

#endif  // RPBEAM_BOUNDS_HPP_
