// Copyright 2026 The rpbeam Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "rpbeam/metrics.hpp"

#include <cmath>
#include <limits>

namespace rpbeam {

namespace {

void check_component_shapes(const ComponentSpectra& c) {
  const auto same = [](const SpectrogramTensor& a, const SpectrogramTensor& b) {
    return a.channels == b.channels && a.frames == b.frames && a.bins == b.bins;
  };
  if (!same(c.target, c.interferer) || !same(c.target, c.noise))
    throw ShapeMismatch("metrics: component tensors differ in shape");
}

Eigen::MatrixXcd filter_component(
    const std::vector<Eigen::MatrixXcd>& effective_weights,
    const Eigen::MatrixXi& gamma, const SpectrogramTensor& spec) {
  Eigen::MatrixXcd z(spec.frames, spec.bins);
  Eigen::VectorXcd y(spec.channels);
  for (int k = 0; k < spec.bins; ++k) {
    const Eigen::MatrixXcd& u = effective_weights[k];
    for (int i = 0; i < spec.frames; ++i) {
      for (int c = 0; c < spec.channels; ++c) y(c) = spec.at(c, i, k);
      const int p = gamma(i, k);
      if (p < 0 || p >= u.cols())
        throw InvalidArgument("shadow_filter: selection index out of range");
      z(i, k) = u.col(p).dot(y);
    }
  }
  return z;
}

double energy_at_mic(const SpectrogramTensor& spec, int mic) {
  double e = 0.0;
  for (int i = 0; i < spec.frames; ++i)
    for (int k = 0; k < spec.bins; ++k) e += std::norm(spec.at(mic, i, k));
  return e;
}

double energy(const Eigen::MatrixXcd& z) { return z.squaredNorm(); }

// 10*log10(num/den); zero denominator maps to +inf and sets the flag.
double ratio_db(double num, double den, bool* flagged) {
  if (den <= 0.0) {
    *flagged = true;
    return std::numeric_limits<double>::infinity();
  }
  if (num <= 0.0) {
    *flagged = true;
    return -std::numeric_limits<double>::infinity();
  }
  return 10.0 * std::log10(num / den);
}

// A degenerate ratio on either side leaves the gain undefined; report
// the +inf sentinel instead of NaN.
double gain_db(double out_db, double in_db, bool* flagged) {
  const double g = out_db - in_db;
  if (std::isnan(g)) {
    *flagged = true;
    return std::numeric_limits<double>::infinity();
  }
  return g;
}

}  // namespace

ShadowOutputs shadow_filter(
    const std::vector<Eigen::MatrixXcd>& effective_weights,
    const Eigen::MatrixXi& gamma, const ComponentSpectra& components) {
  check_component_shapes(components);
  const SpectrogramTensor& t = components.target;
  if (static_cast<int>(effective_weights.size()) != t.bins)
    throw ShapeMismatch("shadow_filter: need one weight block per bin");
  if (gamma.rows() != t.frames || gamma.cols() != t.bins)
    throw ShapeMismatch("shadow_filter: selection map shape mismatch");
  for (const auto& u : effective_weights)
    if (u.rows() != t.channels)
      throw ShapeMismatch("shadow_filter: weight rows must equal channels");

  ShadowOutputs out;
  out.target = filter_component(effective_weights, gamma, components.target);
  out.interferer = filter_component(effective_weights, gamma, components.interferer);
  out.noise = filter_component(effective_weights, gamma, components.noise);
  return out;
}

GainReport gains(const ComponentSpectra& components, const ShadowOutputs& outputs,
                 int reference_mic) {
  check_component_shapes(components);
  if (reference_mic < 0 || reference_mic >= components.target.channels)
    throw InvalidArgument("gains: reference mic out of range");

  const double in_t = energy_at_mic(components.target, reference_mic);
  const double in_i = energy_at_mic(components.interferer, reference_mic);
  const double in_n = energy_at_mic(components.noise, reference_mic);
  if (!(in_t > 0.0)) throw DegenerateInput("gains: target has no energy");

  const double out_t = energy(outputs.target);
  const double out_i = energy(outputs.interferer);
  const double out_n = energy(outputs.noise);

  GainReport rep;
  bool flagged = false;
  rep.input_snr_db = ratio_db(in_t, in_n, &flagged);
  rep.input_sir_db = ratio_db(in_t, in_i, &flagged);
  rep.input_sinr_db = ratio_db(in_t, in_i + in_n, &flagged);
  rep.output_snr_db = ratio_db(out_t, out_n, &flagged);
  rep.output_sir_db = ratio_db(out_t, out_i, &flagged);
  rep.output_sinr_db = ratio_db(out_t, out_i + out_n, &flagged);
  rep.snr_gain_db = gain_db(rep.output_snr_db, rep.input_snr_db, &flagged);
  rep.sir_gain_db = gain_db(rep.output_sir_db, rep.input_sir_db, &flagged);
  rep.sinr_gain_db = gain_db(rep.output_sinr_db, rep.input_sinr_db, &flagged);
  rep.flagged_infinite = flagged;
  return rep;
}

}  // namespace rpbeam
