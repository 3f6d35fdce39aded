// Copyright 2026 The rpbeam Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef RPBEAM_PROJECTION_HPP_
#define RPBEAM_PROJECTION_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "rpbeam/stft.hpp"
#include "rpbeam/types.hpp"

namespace rpbeam {

enum class ProjectionKind { kGaussianReal, kGaussianComplex, kIdentity };
enum class ProjectionScale {
  kNone,            // raw i.i.d. entries, variance 1/out_dim
  kSpectralCenter,  // scalar rescale so squared singular values straddle 1
};

ProjectionKind projection_kind_from_string(const std::string& name);
ProjectionScale projection_scale_from_string(const std::string& name);

// Worst-case norm distortion: max(l_max - 1, 1 - l_min) over the
// eigenvalues of Psi*Psi^H. Every vector s then obeys
// (1-delta)|s|^2 <= |Psi s|^2 <= (1+delta)|s|^2.
double distortion(const Eigen::MatrixXcd& psi);

struct ProjectionBank {
  std::vector<Eigen::MatrixXcd> matrices;  // out_dim x in_dim each
  std::vector<double> deltas;
  uint64_t seed = 0;
  ProjectionKind kind = ProjectionKind::kGaussianReal;
  ProjectionScale scale = ProjectionScale::kNone;

  int count() const { return static_cast<int>(matrices.size()); }
  int out_dim() const { return matrices.empty() ? 0 : static_cast<int>(matrices[0].rows()); }
  int in_dim() const { return matrices.empty() ? 0 : static_cast<int>(matrices[0].cols()); }
};

// Deterministic bank; matrix p draws from its own (seed, p) stream so
// banks are order-independent. Identity kind requires out_dim == in_dim.
ProjectionBank generate(ProjectionKind kind, int num_projections, int out_dim,
                        int in_dim, uint64_t seed,
                        ProjectionScale scale = ProjectionScale::kNone);

// Applies psi to every (frame, bin) cell; channels: in_dim -> out_dim.
SpectrogramTensor project(const Eigen::MatrixXcd& psi,
                          const SpectrogramTensor& spec);

}  // namespace rpbeam

#endif  // RPBEAM_PROJECTION_HPP_
