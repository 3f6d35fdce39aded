// Copyright 2026 The rpbeam Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "rpbeam/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cstring>

namespace rpbeam {

RealFft::RealFft(int size) : n_(size) {
  if (size < 2) throw InvalidArgument("RealFft: size must be >= 2");
  real_buf_ = static_cast<double*>(fftw_malloc(sizeof(double) * n_));
  cplx_buf_ = static_cast<cdouble*>(fftw_malloc(sizeof(cdouble) * bins()));
  fwd_ = fftw_plan_dft_r2c_1d(n_, real_buf_,
                              reinterpret_cast<fftw_complex*>(cplx_buf_),
                              FFTW_ESTIMATE);
  inv_ = fftw_plan_dft_c2r_1d(n_, reinterpret_cast<fftw_complex*>(cplx_buf_),
                              real_buf_, FFTW_ESTIMATE);
  if (fwd_ == nullptr || inv_ == nullptr)
    throw NumericalError("RealFft: planning failed");
}

RealFft::~RealFft() {
  fftw_destroy_plan(fwd_);
  fftw_destroy_plan(inv_);
  fftw_free(real_buf_);
  fftw_free(cplx_buf_);
}

void RealFft::forward(const double* in, cdouble* out) {
  std::memcpy(real_buf_, in, sizeof(double) * n_);
  fftw_execute(fwd_);
  std::memcpy(out, cplx_buf_, sizeof(cdouble) * bins());
}

void RealFft::inverse(const cdouble* in, double* out) {
  std::memcpy(cplx_buf_, in, sizeof(cdouble) * bins());
  fftw_execute(inv_);
  const double scale = 1.0 / n_;
  for (int i = 0; i < n_; ++i) out[i] = real_buf_[i] * scale;
}

int next_pow2(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::vector<double> fft_convolve(const std::vector<double>& x,
                                 const std::vector<double>& h) {
  if (x.empty() || h.empty()) throw InvalidArgument("fft_convolve: empty input");
  const size_t out_len = x.size() + h.size() - 1;
  const int n = next_pow2(static_cast<int>(out_len));
  RealFft fft(n);

  std::vector<double> xa(n, 0.0), ha(n, 0.0);
  std::copy(x.begin(), x.end(), xa.begin());
  std::copy(h.begin(), h.end(), ha.begin());

  std::vector<cdouble> xf(fft.bins()), hf(fft.bins());
  fft.forward(xa.data(), xf.data());
  fft.forward(ha.data(), hf.data());
  for (int k = 0; k < fft.bins(); ++k) xf[k] *= hf[k];

  std::vector<double> full(n);
  fft.inverse(xf.data(), full.data());
  full.resize(out_len);
  return full;
}

}  // namespace rpbeam
