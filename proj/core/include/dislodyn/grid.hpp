#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace dislodyn {

/// Algebraic far-field model for a function sampled on a finite grid:
///   f(x) ~ left_limit  + coeff * |x|^{-exponent}   for x below the grid,
///   f(x) ~ right_limit - coeff * |x|^{-exponent}   for x above the grid.
/// exponent == 0 means the function is exactly constant beyond the grid
/// at the stated limits.
struct TailModel {
  double left_limit = 0.0;
  double right_limit = 0.0;
  double exponent = 0.0;  // >= 0
  double coeff = 0.0;

  double eval(double x) const;
  /// d/dx of the model (0 when exponent == 0).
  double eval_deriv(double x) const;
};

/// Uniform-grid 1-D field with an explicit far-field descriptor.
class GridFunction {
 public:
  GridFunction() = default;
  GridFunction(double origin, double spacing, std::vector<double> samples,
               TailModel tail = {}, bool periodic = false);

  double origin() const { return origin_; }
  double spacing() const { return spacing_; }
  std::size_t size() const { return samples_.size(); }
  double node(std::size_t j) const { return origin_ + spacing_ * double(j); }
  double xmin() const { return origin_; }
  double xmax() const { return node(samples_.size() - 1); }
  bool periodic() const { return periodic_; }
  double period() const { return spacing_ * double(samples_.size()); }

  const std::vector<double>& samples() const { return samples_; }
  std::vector<double>& samples() { return samples_; }
  double operator[](std::size_t j) const { return samples_[j]; }
  double& operator[](std::size_t j) { return samples_[j]; }

  const TailModel& tail() const { return tail_; }
  TailModel& tail() { return tail_; }

  /// Sample or tail-model value at an arbitrary point. In-grid points use
  /// monotone cubic (PCHIP) interpolation, which never overshoots the data.
  double value(double x) const;
  /// Derivative of the interpolant / tail model at x.
  double deriv(double x) const;

  /// Exact lattice evaluation: value at origin + m*spacing for any integer m,
  /// off-grid indices fall back to the tail model.
  double lattice_value(long m) const;

 private:
  double origin_ = 0.0;
  double spacing_ = 1.0;
  std::vector<double> samples_;
  TailModel tail_;
  bool periodic_ = false;
};

/// Monotone cubic Hermite (Fritsch-Carlson) slopes for data on a uniform grid.
std::vector<double> pchip_slopes(std::span<const double> y, double h);

/// Interpolate with precomputed pchip slopes; j is the left node index.
double pchip_eval(double t, double h, double y0, double y1, double d0, double d1);
double pchip_eval_deriv(double t, double h, double y0, double y1, double d0,
                        double d1);

/// Band-limited resampling of a periodic field to a power-of-two size.
GridFunction resample_pow2(const GridFunction& f, std::size_t target_size);

}  // namespace dislodyn
