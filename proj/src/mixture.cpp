// Copyright 2026 The rpbeam Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "rpbeam/mixture.hpp"

#include <cmath>
#include <limits>

namespace rpbeam {

MixtureRule mixture_rule_from_string(const std::string& name) {
  if (name == "min_power") return MixtureRule::kMinPower;
  if (name == "softmax_accumulated") return MixtureRule::kSoftmaxAccumulated;
  throw InvalidArgument("unknown mixture rule: " + name);
}

void select_min_power_column(const Eigen::MatrixXcd& candidates,
                             Eigen::VectorXi* gamma, Eigen::VectorXcd* z_mix) {
  const int num_p = static_cast<int>(candidates.rows());
  const int frames = static_cast<int>(candidates.cols());
  if (num_p < 1) throw InvalidArgument("select_min_power: no candidates");
  gamma->resize(frames);
  z_mix->resize(frames);
  for (int i = 0; i < frames; ++i) {
    int best = -1;
    double best_power = std::numeric_limits<double>::infinity();
    for (int p = 0; p < num_p; ++p) {
      const double power = std::norm(candidates(p, i));
      if (std::isnan(power)) continue;
      if (power < best_power) {
        best_power = power;
        best = p;
      }
    }
    if (best < 0)
      throw NumericalError("select_min_power: all candidates NaN at a cell");
    (*gamma)(i) = best;
    (*z_mix)(i) = candidates(best, i);
  }
}

namespace {

void check_stack(const std::vector<Eigen::MatrixXcd>& z_all) {
  if (z_all.empty()) throw InvalidArgument("mixture: no candidate outputs");
  for (const auto& z : z_all)
    if (z.rows() != z_all[0].rows() || z.cols() != z_all[0].cols())
      throw ShapeMismatch("mixture: candidate output shapes differ");
}

}  // namespace

MixtureDecision select_min_power(const std::vector<Eigen::MatrixXcd>& z_all) {
  check_stack(z_all);
  const int num_p = static_cast<int>(z_all.size());
  const int frames = static_cast<int>(z_all[0].rows());
  const int bins = static_cast<int>(z_all[0].cols());

  MixtureDecision out;
  out.rule = MixtureRule::kMinPower;
  out.gamma.resize(frames, bins);
  out.z_mix.resize(frames, bins);

  Eigen::MatrixXcd column(num_p, frames);
  Eigen::VectorXi gamma;
  Eigen::VectorXcd z;
  for (int k = 0; k < bins; ++k) {
    for (int p = 0; p < num_p; ++p) column.row(p) = z_all[p].col(k).transpose();
    select_min_power_column(column, &gamma, &z);
    out.gamma.col(k) = gamma;
    out.z_mix.col(k) = z;
  }
  return out;
}

MixtureDecision softmax_blend(const std::vector<Eigen::MatrixXcd>& z_all,
                              int accumulation_window, double temperature) {
  check_stack(z_all);
  if (accumulation_window < 1)
    throw InvalidArgument("softmax_blend: window must be >= 1");
  if (!(temperature > 0.0))
    throw InvalidArgument("softmax_blend: temperature must be positive");

  const int num_p = static_cast<int>(z_all.size());
  const int frames = static_cast<int>(z_all[0].rows());
  const int bins = static_cast<int>(z_all[0].cols());

  MixtureDecision out;
  out.rule = MixtureRule::kSoftmaxAccumulated;
  out.gamma.resize(frames, bins);
  out.z_mix.resize(frames, bins);

  std::vector<double> acc(num_p), weight(num_p);
  for (int k = 0; k < bins; ++k) {
    std::fill(acc.begin(), acc.end(), 0.0);
    for (int i = 0; i < frames; ++i) {
      for (int p = 0; p < num_p; ++p) {
        acc[p] += std::norm(z_all[p](i, k));
        const int expired = i - accumulation_window;
        if (expired >= 0) acc[p] -= std::norm(z_all[p](expired, k));
      }
      double min_acc = acc[0];
      for (int p = 1; p < num_p; ++p) min_acc = std::min(min_acc, acc[p]);
      double total = 0.0;
      for (int p = 0; p < num_p; ++p) {
        weight[p] = std::exp(-(acc[p] - min_acc) / temperature);
        total += weight[p];
      }
      cdouble blend(0.0, 0.0);
      int best = 0;
      for (int p = 0; p < num_p; ++p) {
        weight[p] /= total;
        blend += weight[p] * z_all[p](i, k);
        if (weight[p] > weight[best]) best = p;
      }
      out.gamma(i, k) = best;
      out.z_mix(i, k) = blend;
    }
  }
  return out;
}

}  // namespace rpbeam
