// Copyright 2026 The rpbeam Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef RPBEAM_METRICS_HPP_
#define RPBEAM_METRICS_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "rpbeam/stft.hpp"
#include "rpbeam/types.hpp"

namespace rpbeam {

// Sensorspace target / interferer / noise spectra over the evaluation
// segment; they must sum to the observed mixture.
struct ComponentSpectra {
  SpectrogramTensor target;
  SpectrogramTensor interferer;
  SpectrogramTensor noise;
};

struct ShadowOutputs {
  Eigen::MatrixXcd target;      // frames x bins
  Eigen::MatrixXcd interferer;
  Eigen::MatrixXcd noise;
};

// Applies the mixture's per-cell selection identically to each isolated
// component. effective_weights[k] is num_mics x num_candidates: column p
// holds Psi_p^H w_p folded back to sensorspace, so candidate outputs on
// any component are plain inner products. gamma is frames x bins.
ShadowOutputs shadow_filter(
    const std::vector<Eigen::MatrixXcd>& effective_weights,
    const Eigen::MatrixXi& gamma, const ComponentSpectra& components);

struct GainReport {
  std::string method;
  int talker = 0;
  int nd = 0;
  int np = 0;
  uint64_t seed = 0;
  double input_snr_db = 0.0;
  double input_sir_db = 0.0;
  double input_sinr_db = 0.0;
  double output_snr_db = 0.0;
  double output_sir_db = 0.0;
  double output_sinr_db = 0.0;
  double snr_gain_db = 0.0;
  double sir_gain_db = 0.0;
  double sinr_gain_db = 0.0;
  bool flagged_infinite = false;  // some ratio had a zero denominator
};

// Energy ratios before (at the reference mic) and after processing.
GainReport gains(const ComponentSpectra& components, const ShadowOutputs& outputs,
                 int reference_mic);

}  // namespace rpbeam

#endif  // RPBEAM_METRICS_HPP_
