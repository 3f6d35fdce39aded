// Copyright 2026 The rpbeam Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "rpbeam/projection.hpp"

#include <cmath>

#include "rpbeam/rng.hpp"

namespace rpbeam {

ProjectionKind projection_kind_from_string(const std::string& name) {
  if (name == "gaussian_real") return ProjectionKind::kGaussianReal;
  if (name == "gaussian_complex") return ProjectionKind::kGaussianComplex;
  if (name == "identity") return ProjectionKind::kIdentity;
  throw InvalidArgument("unknown projection kind: " + name);
}

ProjectionScale projection_scale_from_string(const std::string& name) {
  if (name == "none") return ProjectionScale::kNone;
  if (name == "spectral") return ProjectionScale::kSpectralCenter;
  throw InvalidArgument("unknown projection scale: " + name);
}

namespace {

std::pair<double, double> gram_eig_range(const Eigen::MatrixXcd& psi) {
  Eigen::MatrixXcd gram = psi * psi.adjoint();
  gram = (gram + gram.adjoint().eval()) * 0.5;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram,
                                                     Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw NumericalError("distortion: eigensolver failed");
  const auto& ev = es.eigenvalues();
  return {ev(0), ev(ev.size() - 1)};
}

}  // namespace

double distortion(const Eigen::MatrixXcd& psi) {
  const auto [lmin, lmax] = gram_eig_range(psi);
  return std::max(0.0, std::max(lmax - 1.0, 1.0 - lmin));
}

ProjectionBank generate(ProjectionKind kind, int num_projections, int out_dim,
                        int in_dim, uint64_t seed, ProjectionScale scale) {
  if (num_projections < 1)
    throw InvalidArgument("generate: need at least one projection");
  if (out_dim < 1 || in_dim < 1)
    throw InvalidArgument("generate: dimensions must be positive");
  if (out_dim > in_dim)
    throw InvalidArgument("generate: out_dim must not exceed in_dim");
  if (kind == ProjectionKind::kIdentity && out_dim != in_dim)
    throw InvalidArgument("generate: identity projections need out_dim == in_dim");

  ProjectionBank bank;
  bank.seed = seed;
  bank.kind = kind;
  bank.scale = scale;
  bank.matrices.reserve(num_projections);
  bank.deltas.reserve(num_projections);

  const double sigma = 1.0 / std::sqrt(static_cast<double>(out_dim));
  for (int p = 0; p < num_projections; ++p) {
    Eigen::MatrixXcd psi(out_dim, in_dim);
    if (kind == ProjectionKind::kIdentity) {
      psi = Eigen::MatrixXcd::Identity(out_dim, in_dim);
    } else {
      RandomStream rng = RandomStream::substream(seed, static_cast<uint64_t>(p));
      for (int r = 0; r < out_dim; ++r) {
        for (int c = 0; c < in_dim; ++c) {
          if (kind == ProjectionKind::kGaussianReal)
            psi(r, c) = cdouble(sigma * rng.normal(), 0.0);
          else
            psi(r, c) = sigma * rng.complex_normal();
        }
      }
      if (scale == ProjectionScale::kSpectralCenter) {
        const auto [lmin, lmax] = gram_eig_range(psi);
        const double center = 0.5 * (lmin + lmax);
        if (center <= 0.0)
          throw NumericalError("generate: rank-deficient projection");
        psi /= std::sqrt(center);
      }
    }
    bank.deltas.push_back(kind == ProjectionKind::kIdentity ? 0.0
                                                            : distortion(psi));
    bank.matrices.push_back(std::move(psi));
  }
  return bank;
}

SpectrogramTensor project(const Eigen::MatrixXcd& psi,
                          const SpectrogramTensor& spec) {
  if (psi.cols() != spec.channels)
    throw ShapeMismatch("project: channel count does not match projection");
  SpectrogramTensor out(static_cast<int>(psi.rows()), spec.frames, spec.bins,
                        spec.config);
  Eigen::VectorXcd y(spec.channels), z(psi.rows());
  for (int i = 0; i < spec.frames; ++i) {
    for (int k = 0; k < spec.bins; ++k) {
      for (int c = 0; c < spec.channels; ++c) y(c) = spec.at(c, i, k);
      z.noalias() = psi * y;
      for (int r = 0; r < out.channels; ++r) out.at(r, i, k) = z(r);
    }
  }
  return out;
}

}  // namespace rpbeam
