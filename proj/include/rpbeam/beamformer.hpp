// Copyright 2026 The rpbeam Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef RPBEAM_BEAMFORMER_HPP_
#define RPBEAM_BEAMFORMER_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "rpbeam/covariance.hpp"
#include "rpbeam/room.hpp"
#include "rpbeam/stft.hpp"
#include "rpbeam/types.hpp"

namespace rpbeam {

enum class SteeringMode { kOracleAtf, kEstimatedRtf };

// Per-bin steering flags.
constexpr uint8_t kSteeringDegenerate = 1;     // fell back to e_ref
constexpr uint8_t kSteeringLowConfidence = 2;  // no dominant direction

struct SteeringSet {
  // g[source][bin], each length num_mics; entry reference_mic is exactly 1
  // in estimated-RTF mode.
  std::vector<std::vector<Eigen::VectorXcd>> g;
  SteeringMode mode = SteeringMode::kEstimatedRtf;
  int reference_mic = 0;
  std::vector<std::vector<uint8_t>> flags;  // [source][bin]

  int num_sources() const { return static_cast<int>(g.size()); }
  int bins() const { return g.empty() ? 0 : static_cast<int>(g[0].size()); }
};

// Relative transfer functions from per-source clean covariances:
// dominant eigenvector scaled so the reference entry is 1. Silent bins
// fall back to e_ref and are flagged.
SteeringSet estimate_steering(const std::vector<NarrowbandCovariance>& clean,
                              int reference_mic);

// Reference-normalized true transfer functions from the simulator.
SteeringSet oracle_steering(const AcousticChannel& channel, int reference_mic);

struct MvdrSolution {
  Eigen::VectorXcd weights;
  double output_power;  // w^H phi w at the optimum, 1/(g^H phi^-1 g)
};

// Minimum-power weights with unit response along g; Hermitian
// factorization, no explicit inverse.
MvdrSolution mvdr_solve(const Eigen::MatrixXcd& phi, const Eigen::VectorXcd& g);
Eigen::VectorXcd mvdr_weights(const Eigen::MatrixXcd& phi,
                              const Eigen::VectorXcd& g);
double output_power(const Eigen::MatrixXcd& phi, const Eigen::VectorXcd& g);

// Same optimization in the projected space: weights for psi*y with unit
// response along psi*g, statistics taken from the sensorspace phi.
MvdrSolution compressed_mvdr_solve(const Eigen::MatrixXcd& psi,
                                   const Eigen::MatrixXcd& phi_sensor,
                                   const Eigen::VectorXcd& g);
Eigen::VectorXcd compressed_mvdr_weights(const Eigen::MatrixXcd& psi,
                                         const Eigen::MatrixXcd& phi_sensor,
                                         const Eigen::VectorXcd& g);

// z[i,k] = w[k]^H y[i,k]; one weight vector per bin.
Eigen::MatrixXcd apply_weights(const std::vector<Eigen::VectorXcd>& weights,
                               const SpectrogramTensor& spec);

}  // namespace rpbeam

#endif  // RPBEAM_BEAMFORMER_HPP_
