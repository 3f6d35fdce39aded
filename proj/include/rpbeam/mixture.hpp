// Copyright 2026 The rpbeam Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef RPBEAM_MIXTURE_HPP_
#define RPBEAM_MIXTURE_HPP_

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "rpbeam/types.hpp"

namespace rpbeam {

enum class MixtureRule { kMinPower, kSoftmaxAccumulated };

MixtureRule mixture_rule_from_string(const std::string& name);

struct MixtureDecision {
  Eigen::MatrixXi gamma;    // selected projection per (frame, bin)
  Eigen::MatrixXcd z_mix;   // combined output per (frame, bin)
  MixtureRule rule = MixtureRule::kMinPower;
};

// Per-bin kernel: candidates is num_candidates x frames; picks the
// cell-wise minimum instantaneous power, ties to the smallest index.
// NaN cells are disqualified; an all-NaN column throws.
void select_min_power_column(const Eigen::MatrixXcd& candidates,
                             Eigen::VectorXi* gamma, Eigen::VectorXcd* z_mix);

// z_all[p] is frames x bins for candidate p.
MixtureDecision select_min_power(const std::vector<Eigen::MatrixXcd>& z_all);

// Performance-weighted blend: per bin, candidate weights follow
// softmax(-P_p / temperature) of the trailing-window accumulated power;
// gamma records the argmax weight for diagnostics.
MixtureDecision softmax_blend(const std::vector<Eigen::MatrixXcd>& z_all,
                              int accumulation_window, double temperature);

}  // namespace rpbeam

#endif  // RPBEAM_MIXTURE_HPP_
