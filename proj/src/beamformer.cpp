// Copyright 2026 The rpbeam Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "rpbeam/beamformer.hpp"

#include <cmath>

namespace rpbeam {

SteeringSet estimate_steering(const std::vector<NarrowbandCovariance>& clean,
                              int reference_mic) {
  if (clean.empty()) throw InvalidArgument("estimate_steering: no sources");
  const int n = clean[0].dim();
  const int bins = clean[0].bins();
  if (reference_mic < 0 || reference_mic >= n)
    throw InvalidArgument("estimate_steering: reference mic out of range");

  SteeringSet set;
  set.mode = SteeringMode::kEstimatedRtf;
  set.reference_mic = reference_mic;
  set.g.resize(clean.size());
  set.flags.resize(clean.size());

  for (size_t j = 0; j < clean.size(); ++j) {
    if (clean[j].dim() != n || clean[j].bins() != bins)
      throw ShapeMismatch("estimate_steering: covariance shape mismatch");
    set.g[j].assign(bins, Eigen::VectorXcd::Unit(n, reference_mic));
    set.flags[j].assign(bins, 0);
    for (int k = 0; k < bins; ++k) {
      const Eigen::MatrixXcd& phi = clean[j].phi[k];
      const double trace = phi.real().trace();
      if (!(trace > 0.0)) {
        set.flags[j][k] |= kSteeringDegenerate;
        continue;
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(phi);
      if (es.info() != Eigen::Success)
        throw NumericalError("estimate_steering: eigensolver failed");
      const auto& ev = es.eigenvalues();
      const double top = ev(n - 1);
      const double second = n > 1 ? ev(n - 2) : 0.0;
      if (n > 1 && top - second <= 1e-6 * top)
        set.flags[j][k] |= kSteeringLowConfidence;
      Eigen::VectorXcd v = es.eigenvectors().col(n - 1);
      const cdouble ref = v(reference_mic);
      if (std::abs(ref) <= 1e-12 * v.norm()) {
        set.flags[j][k] |= kSteeringDegenerate;
        continue;
      }
      v /= ref;
      v(reference_mic) = cdouble(1.0, 0.0);
      set.g[j][k] = v;
    }
  }
  return set;
}

SteeringSet oracle_steering(const AcousticChannel& channel, int reference_mic) {
  if (reference_mic < 0 || reference_mic >= channel.num_mics)
    throw InvalidArgument("oracle_steering: reference mic out of range");
  SteeringSet set;
  set.mode = SteeringMode::kOracleAtf;
  set.reference_mic = reference_mic;
  const int bins = channel.bins();
  set.g.resize(channel.num_sources);
  set.flags.resize(channel.num_sources);
  for (int j = 0; j < channel.num_sources; ++j) {
    set.g[j].assign(bins, Eigen::VectorXcd::Unit(channel.num_mics, reference_mic));
    set.flags[j].assign(bins, 0);
    for (int k = 0; k < bins; ++k) {
      Eigen::VectorXcd a = channel.atf[k].col(j);
      const cdouble ref = a(reference_mic);
      if (std::abs(ref) <= 1e-12 * a.norm()) {
        set.flags[j][k] |= kSteeringDegenerate;
        continue;
      }
      a /= ref;
      a(reference_mic) = cdouble(1.0, 0.0);
      set.g[j][k] = a;
    }
  }
  return set;
}

MvdrSolution mvdr_solve(const Eigen::MatrixXcd& phi, const Eigen::VectorXcd& g) {
  if (phi.rows() != phi.cols() || phi.rows() != g.size())
    throw ShapeMismatch("mvdr: covariance/steering shape mismatch");
  if (!(g.squaredNorm() > 0.0))
    throw InvalidArgument("mvdr: zero steering vector");

  Eigen::LDLT<Eigen::MatrixXcd> ldlt(phi);
  if (ldlt.info() != Eigen::Success)
    throw NumericalError("mvdr: covariance factorization failed (singular?)");
  const Eigen::VectorXcd u = ldlt.solve(g);
  const double denom = g.dot(u).real();
  if (!std::isfinite(denom) || denom <= 0.0)
    throw NumericalError("mvdr: non-positive quadratic form (covariance not PD)");

  MvdrSolution sol;
  sol.weights = u / denom;
  sol.output_power = 1.0 / denom;
  return sol;
}

Eigen::VectorXcd mvdr_weights(const Eigen::MatrixXcd& phi,
                              const Eigen::VectorXcd& g) {
  return mvdr_solve(phi, g).weights;
}

double output_power(const Eigen::MatrixXcd& phi, const Eigen::VectorXcd& g) {
  return mvdr_solve(phi, g).output_power;
}

MvdrSolution compressed_mvdr_solve(const Eigen::MatrixXcd& psi,
                                   const Eigen::MatrixXcd& phi_sensor,
                                   const Eigen::VectorXcd& g) {
  if (psi.cols() != g.size())
    throw ShapeMismatch("compressed_mvdr: projection/steering shape mismatch");
  const Eigen::VectorXcd g_proj = psi * g;
  if (!(g_proj.squaredNorm() > 0.0))
    throw DegenerateInput("compressed_mvdr: projection annihilates steering vector");
  return mvdr_solve(project_cov(psi, phi_sensor), g_proj);
}

Eigen::VectorXcd compressed_mvdr_weights(const Eigen::MatrixXcd& psi,
                                         const Eigen::MatrixXcd& phi_sensor,
                                         const Eigen::VectorXcd& g) {
  return compressed_mvdr_solve(psi, phi_sensor, g).weights;
}

Eigen::MatrixXcd apply_weights(const std::vector<Eigen::VectorXcd>& weights,
                               const SpectrogramTensor& spec) {
  if (static_cast<int>(weights.size()) != spec.bins)
    throw ShapeMismatch("apply_weights: need one weight vector per bin");
  for (const auto& w : weights)
    if (w.size() != spec.channels)
      throw ShapeMismatch("apply_weights: weight/channel mismatch");

  Eigen::MatrixXcd z(spec.frames, spec.bins);
  Eigen::VectorXcd y(spec.channels);
  for (int i = 0; i < spec.frames; ++i) {
    for (int k = 0; k < spec.bins; ++k) {
      for (int c = 0; c < spec.channels; ++c) y(c) = spec.at(c, i, k);
      z(i, k) = weights[k].dot(y);  // conjugates the weights
    }
  }
  return z;
}

}  // namespace rpbeam
