#pragma once

// Internal FFTW helpers. Plan creation is serialized (FFTW planning is not
// thread safe); execution on distinct plans is.

#include <fftw3.h>

#include <complex>
#include <cstddef>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace dislodyn::detail {

inline std::mutex& fftw_plan_mutex() {
  static std::mutex m;
  return m;
}

/// Real-to-complex FFT of fixed size with cached plans.
class RealFFT {
 public:
  explicit RealFFT(std::size_t n) : n_(n) {
    if (n < 2) throw std::invalid_argument("RealFFT: size must be >= 2");
    real_ = fftw_alloc_real(n_);
    spec_ = fftw_alloc_complex(n_ / 2 + 1);
    std::lock_guard<std::mutex> lock(fftw_plan_mutex());
    fwd_ = fftw_plan_dft_r2c_1d(int(n_), real_, spec_, FFTW_ESTIMATE);
    inv_ = fftw_plan_dft_c2r_1d(int(n_), spec_, real_, FFTW_ESTIMATE);
  }
  ~RealFFT() {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex());
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(inv_);
    fftw_free(real_);
    fftw_free(spec_);
  }
  RealFFT(const RealFFT&) = delete;
  RealFFT& operator=(const RealFFT&) = delete;

  std::size_t size() const { return n_; }
  std::size_t spectrum_size() const { return n_ / 2 + 1; }

  /// Forward transform, unnormalized (FFTW convention).
  std::vector<std::complex<double>> forward(const std::vector<double>& in) {
    if (in.size() != n_) throw std::invalid_argument("RealFFT: size mismatch");
    for (std::size_t i = 0; i < n_; ++i) real_[i] = in[i];
    fftw_execute(fwd_);
    std::vector<std::complex<double>> out(spectrum_size());
    for (std::size_t k = 0; k < out.size(); ++k)
      out[k] = {spec_[k][0], spec_[k][1]};
    return out;
  }

  /// Inverse transform including the 1/n normalization.
  std::vector<double> inverse(const std::vector<std::complex<double>>& in) {
    if (in.size() != spectrum_size())
      throw std::invalid_argument("RealFFT: spectrum size mismatch");
    for (std::size_t k = 0; k < in.size(); ++k) {
      spec_[k][0] = in[k].real();
      spec_[k][1] = in[k].imag();
    }
    fftw_execute(inv_);
    std::vector<double> out(n_);
    const double scale = 1.0 / double(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = real_[i] * scale;
    return out;
  }

 private:
  std::size_t n_;
  double* real_;
  fftw_complex* spec_;
  fftw_plan fwd_;
  fftw_plan inv_;
};

inline std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

inline bool is_pow2(std::size_t n) { return n >= 1 && (n & (n - 1)) == 0; }

}  // namespace dislodyn::detail
