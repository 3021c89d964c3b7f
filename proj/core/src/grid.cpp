#include "dislodyn/grid.hpp"

#include <cmath>

#include "fft_util.hpp"

namespace dislodyn {

double TailModel::eval(double x) const {
  if (exponent == 0.0) return x >= 0.0 ? right_limit : left_limit;
  const double decay = coeff * std::pow(std::abs(x), -exponent);
  return x >= 0.0 ? right_limit - decay : left_limit + decay;
}

double TailModel::eval_deriv(double x) const {
  if (exponent == 0.0) return 0.0;
  // d/dx of -sign(x)*coeff*|x|^{-p} is p*coeff*|x|^{-p-1} on both sides.
  return exponent * coeff * std::pow(std::abs(x), -exponent - 1.0);
}

GridFunction::GridFunction(double origin, double spacing,
                           std::vector<double> samples, TailModel tail,
                           bool periodic)
    : origin_(origin),
      spacing_(spacing),
      samples_(std::move(samples)),
      tail_(tail),
      periodic_(periodic) {
  if (!(spacing_ > 0.0)) throw std::invalid_argument("GridFunction: spacing must be positive");
  if (samples_.size() < 4) throw std::invalid_argument("GridFunction: need at least 4 samples");
  if (tail_.exponent < 0.0) throw std::invalid_argument("GridFunction: tail exponent must be >= 0");
}

double GridFunction::lattice_value(long m) const {
  if (periodic_) {
    const long n = long(samples_.size());
    long r = m % n;
    if (r < 0) r += n;
    return samples_[std::size_t(r)];
  }
  if (m >= 0 && m < long(samples_.size())) return samples_[std::size_t(m)];
  return tail_.eval(origin_ + spacing_ * double(m));
}

namespace {

// Fritsch-Carlson slope at a node given adjacent secants.
double fc_interior(double dl, double dr) {
  if (dl * dr <= 0.0) return 0.0;
  return 2.0 * dl * dr / (dl + dr);
}

double fc_endpoint(double d_near, double d_far) {
  double d = (3.0 * d_near - d_far) / 2.0;
  if (d * d_near <= 0.0) return 0.0;
  if (std::abs(d) > 3.0 * std::abs(d_near)) return 3.0 * d_near;
  return d;
}

}  // namespace

std::vector<double> pchip_slopes(std::span<const double> y, double h) {
  const std::size_t n = y.size();
  std::vector<double> d(n, 0.0);
  if (n < 2) return d;
  std::vector<double> sec(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) sec[i] = (y[i + 1] - y[i]) / h;
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = fc_interior(sec[i - 1], sec[i]);
  d[0] = n > 2 ? fc_endpoint(sec[0], sec[1]) : sec[0];
  d[n - 1] = n > 2 ? fc_endpoint(sec[n - 2], sec[n - 3]) : sec[n - 2];
  return d;
}

double pchip_eval(double t, double h, double y0, double y1, double d0, double d1) {
  const double delta = (y1 - y0) / h;
  const double c2 = (3.0 * delta - 2.0 * d0 - d1) / h;
  const double c3 = (d0 + d1 - 2.0 * delta) / (h * h);
  return y0 + t * (d0 + t * (c2 + t * c3));
}

double pchip_eval_deriv(double t, double h, double y0, double y1, double d0,
                        double d1) {
  const double delta = (y1 - y0) / h;
  const double c2 = (3.0 * delta - 2.0 * d0 - d1) / h;
  const double c3 = (d0 + d1 - 2.0 * delta) / (h * h);
  return d0 + t * (2.0 * c2 + t * 3.0 * c3);
}

namespace {

// Local pchip slope at node j of f (O(1); uses only neighboring secants).
double local_slope(const GridFunction& f, long j) {
  const double h = f.spacing();
  auto sec = [&](long i) { return (f.lattice_value(i + 1) - f.lattice_value(i)) / h; };
  const long n = long(f.size());
  if (f.periodic()) return fc_interior(sec(j - 1), sec(j));
  if (j <= 0) return fc_endpoint(sec(0), sec(1));
  if (j >= n - 1) return fc_endpoint(sec(n - 2), sec(n - 3));
  return fc_interior(sec(j - 1), sec(j));
}

}  // namespace

double GridFunction::value(double x) const {
  if (!periodic_) {
    if (x <= xmin()) return x == xmin() ? samples_.front() : tail_.eval(x);
    if (x >= xmax()) return x == xmax() ? samples_.back() : tail_.eval(x);
  }
  double rel = (x - origin_) / spacing_;
  if (periodic_) {
    const double n = double(samples_.size());
    rel -= std::floor(rel / n) * n;
  }
  long j = long(std::floor(rel));
  if (j < 0) j = 0;
  if (!periodic_ && j >= long(samples_.size()) - 1) j = long(samples_.size()) - 2;
  const double t = (rel - double(j)) * spacing_;
  return pchip_eval(t, spacing_, lattice_value(j), lattice_value(j + 1),
                    local_slope(*this, j), local_slope(*this, j + 1));
}

double GridFunction::deriv(double x) const {
  if (!periodic_) {
    if (x < xmin() || x > xmax()) return tail_.eval_deriv(x);
  }
  double rel = (x - origin_) / spacing_;
  if (periodic_) {
    const double n = double(samples_.size());
    rel -= std::floor(rel / n) * n;
  }
  long j = long(std::floor(rel));
  if (j < 0) j = 0;
  if (!periodic_ && j >= long(samples_.size()) - 1) j = long(samples_.size()) - 2;
  const double t = (rel - double(j)) * spacing_;
  return pchip_eval_deriv(t, spacing_, lattice_value(j), lattice_value(j + 1),
                          local_slope(*this, j), local_slope(*this, j + 1));
}

GridFunction resample_pow2(const GridFunction& f, std::size_t target_size) {
  if (!f.periodic())
    throw std::invalid_argument("resample_pow2: field must be periodic");
  if (!detail::is_pow2(target_size) || target_size < 4)
    throw std::invalid_argument("resample_pow2: target size must be a power of two >= 4");
  const std::size_t n = f.size();
  detail::RealFFT fft_in(n);
  auto spec = fft_in.forward(f.samples());
  std::vector<std::complex<double>> out_spec(target_size / 2 + 1, {0.0, 0.0});
  const std::size_t keep = std::min(spec.size(), out_spec.size());
  const double scale = double(target_size) / double(n);
  for (std::size_t k = 0; k < keep; ++k) out_spec[k] = spec[k] * scale;
  detail::RealFFT fft_out(target_size);
  auto samples = fft_out.inverse(out_spec);
  const double new_h = f.period() / double(target_size);
  return GridFunction(f.origin(), new_h, std::move(samples), f.tail(), true);
}

}  // namespace dislodyn
