// Copyright 2026 The rpbeam Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef RPBEAM_COVARIANCE_HPP_
#define RPBEAM_COVARIANCE_HPP_

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "rpbeam/stft.hpp"
#include "rpbeam/types.hpp"

namespace rpbeam {

// Per-bin Hermitian second-moment matrices.
struct NarrowbandCovariance {
  std::vector<Eigen::MatrixXcd> phi;  // one n x n matrix per bin
  int frame_count = 0;
  double loading_factor = 0.0;

  int bins() const { return static_cast<int>(phi.size()); }
  int dim() const { return phi.empty() ? 0 : static_cast<int>(phi[0].rows()); }
};

// Sample covariance over frames [frame_begin, frame_end), zero mean
// assumed, plus diagonal loading of loading_factor * (trace/n) per bin.
NarrowbandCovariance estimate(const SpectrogramTensor& spec, int frame_begin,
                              int frame_end, double loading_factor);

// Psi * phi * Psi^H, re-Hermitized.
Eigen::MatrixXcd project_cov(const Eigen::MatrixXcd& psi,
                             const Eigen::MatrixXcd& phi);
NarrowbandCovariance project_cov(const Eigen::MatrixXcd& psi,
                                 const NarrowbandCovariance& cov);

// (lambda_min, lambda_max) by full Hermitian eigendecomposition.
std::pair<double, double> extreme_eigs(const Eigen::MatrixXcd& phi);

}  // namespace rpbeam

#endif  // RPBEAM_COVARIANCE_HPP_
