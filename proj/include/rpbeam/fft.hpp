// Copyright 2026 The rpbeam Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef RPBEAM_FFT_HPP_
#define RPBEAM_FFT_HPP_

#include <cstddef>
#include <vector>

#include "rpbeam/types.hpp"

struct fftw_plan_s;

namespace rpbeam {

// Real<->half-complex transform pair of a fixed size, backed by FFTW.
// Buffers are fftw-aligned so plan selection (and hence round-off) is
// identical from run to run. One instance per thread; execution copies
// through internal buffers.
class RealFft {
 public:
  explicit RealFft(int size);
  ~RealFft();
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  int size() const { return n_; }
  int bins() const { return n_ / 2 + 1; }

  // in: size() samples -> out: bins() one-sided coefficients.
  void forward(const double* in, cdouble* out);
  // in: bins() coefficients -> out: size() samples, scaled by 1/size().
  void inverse(const cdouble* in, double* out);

 private:
  int n_;
  double* real_buf_;
  cdouble* cplx_buf_;
  fftw_plan_s* fwd_;
  fftw_plan_s* inv_;
};

int next_pow2(int n);

// Full linear convolution, |x| + |h| - 1 samples, via zero-padded FFTs.
std::vector<double> fft_convolve(const std::vector<double>& x,
                                 const std::vector<double>& h);

}  // namespace rpbeam

#endif  // RPBEAM_FFT_HPP_
