// Copyright 2026 The rpbeam Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "rpbeam/covariance.hpp"

#include <cmath>

namespace rpbeam {

namespace {

// Exact Hermitian storage: conjugate-mirror the lower triangle and keep
// real diagonals, so identical matrices stay bitwise identical across
// the sensorspace and projected code paths.
void hermitize(Eigen::MatrixXcd& a) {
  const int n = static_cast<int>(a.rows());
  for (int r = 0; r < n; ++r) {
    a(r, r) = cdouble(a(r, r).real(), 0.0);
    for (int c = r + 1; c < n; ++c) {
      const cdouble avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
      a(r, c) = avg;
      a(c, r) = std::conj(avg);
    }
  }
}

}  // namespace

NarrowbandCovariance estimate(const SpectrogramTensor& spec, int frame_begin,
                              int frame_end, double loading_factor) {
  if (frame_begin < 0 || frame_end > spec.frames || frame_begin >= frame_end)
    throw InvalidArgument("estimate: empty or out-of-range frame range");
  if (loading_factor < 0.0)
    throw InvalidArgument("estimate: negative loading factor");

  const int n = spec.channels;
  const int frames = frame_end - frame_begin;
  NarrowbandCovariance cov;
  cov.frame_count = frames;
  cov.loading_factor = loading_factor;
  cov.phi.assign(spec.bins, Eigen::MatrixXcd::Zero(n, n));

  Eigen::VectorXcd y(n);
  for (int k = 0; k < spec.bins; ++k) {
    Eigen::MatrixXcd& phi = cov.phi[k];
    for (int i = frame_begin; i < frame_end; ++i) {
      for (int c = 0; c < n; ++c) y(c) = spec.at(c, i, k);
      phi.noalias() += y * y.adjoint();
    }
    phi /= static_cast<double>(frames);
    hermitize(phi);
    if (loading_factor > 0.0) {
      const double trace = phi.real().trace();
      if (trace <= 0.0)
        throw DegenerateInput("estimate: zero-power bin, loading undefined");
      phi += loading_factor * (trace / n) *
             Eigen::MatrixXcd::Identity(n, n);
    }
  }
  return cov;
}

Eigen::MatrixXcd project_cov(const Eigen::MatrixXcd& psi,
                             const Eigen::MatrixXcd& phi) {
  if (psi.cols() != phi.rows() || phi.rows() != phi.cols())
    throw ShapeMismatch("project_cov: incompatible shapes");
  Eigen::MatrixXcd out = psi * phi * psi.adjoint();
  const int n = static_cast<int>(out.rows());
  for (int r = 0; r < n; ++r) {
    out(r, r) = cdouble(out(r, r).real(), 0.0);
    for (int c = r + 1; c < n; ++c) {
      const cdouble avg = 0.5 * (out(r, c) + std::conj(out(c, r)));
      out(r, c) = avg;
      out(c, r) = std::conj(avg);
    }
  }
  return out;
}

NarrowbandCovariance project_cov(const Eigen::MatrixXcd& psi,
                                 const NarrowbandCovariance& cov) {
  NarrowbandCovariance out;
  out.frame_count = cov.frame_count;
  out.loading_factor = cov.loading_factor;
  out.phi.reserve(cov.phi.size());
  for (const auto& phi : cov.phi) out.phi.push_back(project_cov(psi, phi));
  return out;
}

std::pair<double, double> extreme_eigs(const Eigen::MatrixXcd& phi) {
  if (phi.rows() != phi.cols()) throw ShapeMismatch("extreme_eigs: not square");
  const double scale = std::max(1.0, phi.cwiseAbs().maxCoeff());
  const double asym = (phi - phi.adjoint().eval()).cwiseAbs().maxCoeff();
  if (asym > 1e-8 * scale)
    throw InvalidArgument("extreme_eigs: matrix is not Hermitian");
  Eigen::MatrixXcd h = (phi + phi.adjoint().eval()) * 0.5;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw NumericalError("extreme_eigs: eigensolver failed");
  const auto& ev = es.eigenvalues();
  return {ev(0), ev(ev.size() - 1)};
}

}  // namespace rpbeam
