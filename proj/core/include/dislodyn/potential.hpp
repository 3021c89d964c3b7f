#pragma once

#include <functional>
#include <string>
#include <vector>

namespace dislodyn {

/// 1-periodic multi-well potential with analytic derivative evaluators.
/// Admissible potentials vanish exactly on the integers, are positive
/// elsewhere and have a nondegenerate well: W''(0) > 0.
struct PotentialSpec {
  enum class Kind { builtin_cosine, tabulated_periodic_spline };

  Kind kind = Kind::builtin_cosine;
  std::function<double(double)> W;
  std::function<double(double)> dW;
  std::function<double(double)> d2W;
  std::function<double(double)> d3W;
  /// Parameter record: knot count for splines, empty for builtins.
  std::string params;
};

struct ValidationCheck {
  std::string name;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool pass = false;
  /// Max jump of W''' across spline knots; the spline construction is C^2
  /// only, so this records its smoothness defect. 0 for analytic kinds.
  double holder_defect = 0.0;
};

/// W(v) = (1 - cos 2 pi v) / (4 pi). With this normalization the half-integer
/// barrier is 1/(2 pi), W''(0) = pi, and the s = 1/2 layer profile is
/// 1/2 + arctan(x)/pi in closed form.
PotentialSpec make_cosine_potential();

/// Periodic cubic spline through (v_j, W_j) with v_j in [0,1); derivatives
/// are the analytic derivatives of the interpolant.
PotentialSpec make_spline_potential(const std::vector<double>& knots,
                                    const std::vector<double>& values);

/// Load a two-column CSV "v,W(v)" and build a spline potential.
PotentialSpec load_spline_potential(const std::string& csv_path);

/// Checks every structural hypothesis on a deterministic sample set
/// (equispaced points plus the integers). Fails iff any residual exceeds
/// tol. Throws std::domain_error on non-finite evaluator output.
ValidationReport validate_potential(const PotentialSpec& p, double tol,
                                    int sample_count);

}  // namespace dislodyn
