// Copyright 2026 The rpbeam Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "rpbeam/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rpbeam/beamformer.hpp"
#include "rpbeam/covariance.hpp"
#include "rpbeam/projection.hpp"
#include "rpbeam/rng.hpp"

namespace rpbeam {

namespace {

void check_spectrum(double lambda_min, double lambda_max) {
  if (!(lambda_min > 0.0) || !(lambda_max >= lambda_min))
    throw InvalidArgument("bounds: need 0 < lambda_min <= lambda_max");
}

void check_delta(double delta) {
  if (delta < 0.0) throw InvalidArgument("bounds: negative distortion");
  if (delta >= 1.0)
    throw BoundVacuous("bounds: distortion >= 1 makes the interval vacuous");
}

Eigen::VectorXd descending_eigs(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      ((h + h.adjoint().eval()) * 0.5).eval(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw NumericalError("bounds: eigensolver failed");
  return es.eigenvalues().reverse();
}

}  // namespace

double regret(double p_cmvdr, double p_mvdr) {
  if (!(p_cmvdr > 0.0) || !(p_mvdr > 0.0))
    throw InvalidArgument("regret: powers must be positive");
  return p_cmvdr - p_mvdr;
}

std::pair<double, double> mvdr_power_bounds(double lambda_min, double lambda_max,
                                            double g_norm_sq) {
  check_spectrum(lambda_min, lambda_max);
  if (!(g_norm_sq > 0.0)) throw InvalidArgument("bounds: |g|^2 must be positive");
  return {lambda_min / g_norm_sq, lambda_max / g_norm_sq};
}

std::pair<double, double> projected_inverse_eig_bounds(double lambda_min,
                                                       double lambda_max,
                                                       double delta) {
  check_spectrum(lambda_min, lambda_max);
  check_delta(delta);
  return {1.0 / ((1.0 + delta) * lambda_max), 1.0 / ((1.0 - delta) * lambda_min)};
}

std::pair<double, double> cmvdr_power_bounds(double lambda_min, double lambda_max,
                                             double delta, double g_norm_sq) {
  check_spectrum(lambda_min, lambda_max);
  if (!(g_norm_sq > 0.0)) throw InvalidArgument("bounds: |g|^2 must be positive");
  check_delta(delta);
  return {(1.0 - delta) * lambda_min / ((1.0 + delta) * g_norm_sq),
          (1.0 + delta) * lambda_max / ((1.0 - delta) * g_norm_sq)};
}

std::pair<double, double> regret_bounds(double lambda_min, double lambda_max,
                                        double delta, double g_norm_sq) {
  const auto cm = cmvdr_power_bounds(lambda_min, lambda_max, delta, g_norm_sq);
  const auto sv = mvdr_power_bounds(lambda_min, lambda_max, g_norm_sq);
  return {cm.first - sv.second, cm.second - sv.first};
}

LmwResult lmw_verify(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& s,
                     const std::vector<int>& indices, double rel_tol) {
  const int n = static_cast<int>(a.rows());
  if (a.cols() != n) throw ShapeMismatch("lmw_verify: A must be square");
  if (s.rows() != n) throw ShapeMismatch("lmw_verify: S must have n rows");
  const int m = static_cast<int>(s.cols());
  if (m > n) throw InvalidArgument("lmw_verify: S must have at most n columns");
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.adjoint().eval()).cwiseAbs().maxCoeff() > 1e-8 * scale)
    throw InvalidArgument("lmw_verify: A is not Hermitian");
  if (indices.empty()) throw InvalidArgument("lmw_verify: no indices");
  for (size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] < 1 || indices[j] > n)
      throw InvalidArgument("lmw_verify: index out of range");
    if (j > 0 && indices[j] <= indices[j - 1])
      throw InvalidArgument("lmw_verify: indices must be strictly increasing");
  }

  // Embed a thin S as a square singular map. The appended zero
  // directions add zeros at the bottom of the compressed spectrum, which
  // is only order-preserving when A is PSD.
  Eigen::MatrixXcd s_sq = s;
  const Eigen::VectorXd eigs_a = descending_eigs(a);
  if (m < n) {
    if (eigs_a(n - 1) < -1e-10 * scale)
      throw InvalidArgument("lmw_verify: rectangular S requires PSD A");
    s_sq = Eigen::MatrixXcd::Zero(n, n);
    s_sq.leftCols(m) = s;
  }

  const Eigen::VectorXd eigs_compressed = descending_eigs(s_sq.adjoint() * a * s_sq);
  const Eigen::VectorXd eigs_gram = descending_eigs(s_sq.adjoint() * s_sq);

  LmwResult res;
  res.lower = 1.0;
  res.middle = 1.0;
  res.upper = 1.0;
  const int k = static_cast<int>(indices.size());
  for (int j = 0; j < k; ++j) {
    const int idx = indices[j] - 1;
    const double denom = eigs_a(idx);
    if (denom == 0.0)
      throw InvalidArgument("lmw_verify: chosen index hits a zero eigenvalue");
    res.middle *= eigs_compressed(idx) / denom;
    res.lower *= eigs_gram(n - 1 - j);
    res.upper *= eigs_gram(j);
  }
  const double tol =
      rel_tol * std::max({1.0, std::abs(res.lower), std::abs(res.middle),
                          std::abs(res.upper)});
  res.holds = (res.middle >= res.lower - tol) && (res.middle <= res.upper + tol);
  return res;
}

RegretRecord make_regret_record(double lambda_min, double lambda_max,
                                double delta, double g_norm_sq, double p_mvdr,
                                double p_cmvdr) {
  RegretRecord rec;
  rec.lambda_min = lambda_min;
  rec.lambda_max = lambda_max;
  rec.delta = delta;
  rec.g_norm_sq = g_norm_sq;
  rec.p_mvdr = p_mvdr;
  rec.p_cmvdr = p_cmvdr;
  rec.regret = regret(p_cmvdr, p_mvdr);
  if (delta >= 1.0) {
    rec.vacuous = true;
    rec.lower = std::numeric_limits<double>::quiet_NaN();
    rec.upper = std::numeric_limits<double>::quiet_NaN();
    return rec;
  }
  const auto [lo, hi] = regret_bounds(lambda_min, lambda_max, delta, g_norm_sq);
  rec.lower = lo;
  rec.upper = hi;
  const double tol = 1e-9 * (1.0 + std::abs(rec.regret));
  rec.contained = (rec.regret >= lo - tol) && (rec.regret <= hi + tol);
  return rec;
}

namespace {

Eigen::MatrixXcd random_psd(int n, RandomStream& rng) {
  Eigen::MatrixXcd g(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) g(r, c) = rng.complex_normal();
  Eigen::MatrixXcd phi = (g * g.adjoint()) / static_cast<double>(n);
  // Small ridge keeps lambda_min strictly positive.
  phi += 1e-6 * Eigen::MatrixXcd::Identity(n, n);
  return ((phi + phi.adjoint().eval()) * 0.5).eval();
}

Eigen::MatrixXcd random_gaussian_projection(int rows, int cols, bool complex_entries,
                                            RandomStream& rng) {
  Eigen::MatrixXcd psi(rows, cols);
  const double sigma = 1.0 / std::sqrt(static_cast<double>(rows));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      psi(r, c) = complex_entries ? sigma * rng.complex_normal()
                                  : cdouble(sigma * rng.normal(), 0.0);
  return psi;
}

bool within(double x, double lo, double hi, double tol) {
  return x >= lo - tol && x <= hi + tol;
}

// Full chain for one (phi, psi, g) instance; returns the number of
// violated inequalities.
int check_chain(const Eigen::MatrixXcd& phi, const Eigen::MatrixXcd& psi,
                const Eigen::VectorXcd& g, double rel_tol, bool* vacuous) {
  int violations = 0;
  const auto [lmin, lmax] = extreme_eigs(phi);
  const double g2 = g.squaredNorm();
  const double delta = distortion(psi);
  const double p_sensor = output_power(phi, g);

  const auto sensor_bounds = mvdr_power_bounds(lmin, lmax, g2);
  if (!within(p_sensor, sensor_bounds.first, sensor_bounds.second,
              rel_tol * std::max(1.0, std::abs(sensor_bounds.second))))
    ++violations;

  *vacuous = delta >= 1.0;
  if (*vacuous) {
    bool threw = false;
    try {
      (void)cmvdr_power_bounds(lmin, lmax, delta, g2);
    } catch (const BoundVacuous&) {
      threw = true;
    }
    if (!threw) ++violations;
    return violations;
  }

  const Eigen::MatrixXcd projected = project_cov(psi, phi);
  const auto inv_bounds = projected_inverse_eig_bounds(lmin, lmax, delta);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(projected,
                                                     Eigen::EigenvaluesOnly);
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const double inv_eig = 1.0 / es.eigenvalues()(i);
    if (!within(inv_eig, inv_bounds.first, inv_bounds.second,
                rel_tol * std::max(1.0, std::abs(inv_bounds.second))))
      ++violations;
  }

  double p_compressed;
  try {
    p_compressed = compressed_mvdr_solve(psi, phi, g).output_power;
  } catch (const DegenerateInput&) {
    return violations;  // projection annihilated g; nothing further to check
  }

  const auto cm = cmvdr_power_bounds(lmin, lmax, delta, g2);
  if (!within(p_compressed, cm.first, cm.second,
              rel_tol * std::max(1.0, std::abs(cm.second))))
    ++violations;

  const double r = regret(p_compressed, p_sensor);
  const auto rb = regret_bounds(lmin, lmax, delta, g2);
  if (!within(r, rb.first, rb.second,
              rel_tol * std::max({1.0, std::abs(rb.first), std::abs(rb.second)})))
    ++violations;

  // Compression restricts the feasible weights, so it cannot beat the
  // sensorspace optimum on identical statistics.
  if (r < -rel_tol * std::max(1.0, p_sensor)) ++violations;

  return violations;
}

}  // namespace

BoundTrialStats run_bound_trials(int trials, uint64_t seed, double rel_tol) {
  if (trials < 1) throw InvalidArgument("run_bound_trials: need trials >= 1");
  BoundTrialStats stats;
  stats.trials = trials;
  for (int t = 0; t < trials; ++t) {
    RandomStream rng = RandomStream::substream(seed, 0xb0b0ULL + t);
    const int n = 2 + static_cast<int>(rng.next_u64() % 15);       // [2, 16]
    const int nd = 1 + static_cast<int>(rng.next_u64() % n);       // [1, n]
    const bool complex_entries = (t % 2) == 1;

    const Eigen::MatrixXcd phi = random_psd(n, rng);
    Eigen::VectorXcd g(n);
    for (int i = 0; i < n; ++i) g(i) = rng.complex_normal();

    // Raw draw: exercises both the valid and the vacuous route.
    const Eigen::MatrixXcd psi = random_gaussian_projection(nd, n, complex_entries, rng);
    bool vacuous = false;
    stats.violations += check_chain(phi, psi, g, rel_tol, &vacuous);
    if (vacuous)
      ++stats.vacuous;
    else
      ++stats.checked_full;

    // Spectrally centered rescale of the same draw: always delta < 1,
    // densely exercising the full chain.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        project_cov(psi, Eigen::MatrixXcd::Identity(n, n)), Eigen::EigenvaluesOnly);
    const double lmin = es.eigenvalues()(0);
    const double lmax = es.eigenvalues()(nd - 1);
    const double center = 0.5 * (lmin + lmax);
    if (center > 0.0 && lmin > 0.0) {
      bool vac2 = false;
      stats.violations +=
          check_chain(phi, psi / std::sqrt(center), g, rel_tol, &vac2);
      ++stats.trials;
      if (vac2)
        ++stats.vacuous;
      else
        ++stats.checked_full;
    }
  }
  return stats;
}

LmwTrialStats run_lmw_trials(int trials, uint64_t seed, double rel_tol) {
  if (trials < 1) throw InvalidArgument("run_lmw_trials: need trials >= 1");
  LmwTrialStats stats;
  stats.trials = trials;
  for (int t = 0; t < trials; ++t) {
    RandomStream rng = RandomStream::substream(seed, 0x17373ULL + t);
    const int n = 2 + static_cast<int>(rng.next_u64() % 7);  // [2, 8]
    const Eigen::MatrixXcd a = random_psd(n, rng);
    const int m = 1 + static_cast<int>(rng.next_u64() % n);  // [1, n]
    const Eigen::MatrixXcd s =
        random_gaussian_projection(n, m, (t % 2) == 0, rng);

    // Random nonempty strictly increasing index subset of [1, n].
    std::vector<int> indices;
    for (int i = 1; i <= n; ++i)
      if (rng.uniform() < 0.5) indices.push_back(i);
    if (indices.empty()) indices.push_back(1 + static_cast<int>(rng.next_u64() % n));

    const LmwResult res = lmw_verify(a, s, indices, rel_tol);
    if (!res.holds) ++stats.violations;
  }
  return stats;
}

}  // namespace rpbeam
