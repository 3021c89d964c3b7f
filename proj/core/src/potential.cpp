#include "dislodyn/potential.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace dislodyn {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Periodic cubic spline on [0,1): cyclic tridiagonal system for the second
// derivatives, solved with the Sherman-Morrison correction.
struct PeriodicSpline {
  std::vector<double> x;   // knots, strictly increasing in [0,1)
  std::vector<double> y;   // values
  std::vector<double> m;   // second derivatives at knots

  double eval(double v, int deriv) const {
    const std::size_t n = x.size();
    double u = v - std::floor(v);  // wrap into [0,1): exact periodicity
    // locate interval (knots may be non-uniform)
    std::size_t lo = 0, hi = n;  // interval [x_i, x_{i+1}) with x_n := x_0+1
    while (hi - lo > 1) {
      std::size_t mid = (lo + hi) / 2;
      if (u >= x[mid]) lo = mid; else hi = mid;
    }
    const std::size_t i = lo, j = (lo + 1) % n;
    const double xi = x[i];
    const double hseg = (j == 0 ? x[0] + 1.0 : x[j]) - xi;
    const double yj = y[j];
    const double t = u - xi;
    const double a = y[i], b = (yj - y[i]) / hseg - hseg * (2.0 * m[i] + m[j]) / 6.0;
    const double c = m[i] / 2.0, d = (m[j] - m[i]) / (6.0 * hseg);
    switch (deriv) {
      case 0: return a + t * (b + t * (c + t * d));
      case 1: return b + t * (2.0 * c + 3.0 * t * d);
      case 2: return 2.0 * c + 6.0 * t * d;
      default: return 6.0 * d;
    }
  }
};

std::shared_ptr<PeriodicSpline> build_periodic_spline(
    const std::vector<double>& knots, const std::vector<double>& values) {
  const std::size_t n = knots.size();
  if (n < 8) throw std::invalid_argument("spline potential: need at least 8 knots");
  if (values.size() != n) throw std::invalid_argument("spline potential: knot/value size mismatch");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!(knots[i] < knots[i + 1]))
      throw std::invalid_argument("spline potential: knots must be strictly increasing");
  if (knots.front() < 0.0 || knots.back() >= 1.0)
    throw std::invalid_argument("spline potential: knots must lie in [0,1)");

  auto sp = std::make_shared<PeriodicSpline>();
  sp->x = knots;
  sp->y = values;

  std::vector<double> h(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double next = (i + 1 < n) ? knots[i + 1] : knots[0] + 1.0;
    h[i] = next - knots[i];
  }
  // Rows: h_{i-1} m_{i-1} + 2(h_{i-1}+h_i) m_i + h_i m_{i+1} = 6(d_i - d_{i-1})
  std::vector<double> a(n), b(n), c(n), rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t prev = (i + n - 1) % n;
    const std::size_t next = (i + 1) % n;
    const double d_prev = (sp->y[i] - sp->y[prev]) / h[prev];
    const double d_cur = (sp->y[next] - sp->y[i]) / h[i];
    a[i] = h[prev];
    b[i] = 2.0 * (h[prev] + h[i]);
    c[i] = h[i];
    rhs[i] = 6.0 * (d_cur - d_prev);
  }
  // Sherman-Morrison: solve (T + u v^T) m = rhs with T strictly tridiagonal.
  const double alpha = a[0], beta = c[n - 1];
  const double gamma_sm = -b[0];
  std::vector<double> bb = b;
  bb[0] -= gamma_sm;
  bb[n - 1] -= alpha * beta / gamma_sm;
  auto solve_tri = [&](const std::vector<double>& r) {
    std::vector<double> cprime(n), dprime(n), out(n);
    cprime[0] = c[0] / bb[0];
    dprime[0] = r[0] / bb[0];
    for (std::size_t i = 1; i < n; ++i) {
      const double mden = bb[i] - a[i] * cprime[i - 1];
      cprime[i] = (i + 1 < n) ? c[i] / mden : 0.0;
      dprime[i] = (r[i] - a[i] * dprime[i - 1]) / mden;
    }
    out[n - 1] = dprime[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) out[i] = dprime[i] - cprime[i] * out[i + 1];
    return out;
  };
  std::vector<double> u(n, 0.0);
  u[0] = gamma_sm;
  u[n - 1] = beta;
  const auto y1 = solve_tri(rhs);
  const auto y2 = solve_tri(u);
  const double fact = (y1[0] + alpha * y1[n - 1] / gamma_sm) /
                      (1.0 + y2[0] + alpha * y2[n - 1] / gamma_sm);
  sp->m.resize(n);
  for (std::size_t i = 0; i < n; ++i) sp->m[i] = y1[i] - fact * y2[i];
  return sp;
}

}  // namespace

PotentialSpec make_cosine_potential() {
  PotentialSpec p;
  p.kind = PotentialSpec::Kind::builtin_cosine;
  p.params = "W(v)=(1-cos(2*pi*v))/(4*pi)";
  p.W = [](double v) { return (1.0 - std::cos(two_pi * v)) / (2.0 * two_pi); };
  p.dW = [](double v) { return 0.5 * std::sin(two_pi * v); };
  p.d2W = [](double v) { return std::numbers::pi * std::cos(two_pi * v); };
  p.d3W = [](double v) { return -std::numbers::pi * two_pi * std::sin(two_pi * v); };
  return p;
}

PotentialSpec make_spline_potential(const std::vector<double>& knots,
                                    const std::vector<double>& values) {
  auto sp = build_periodic_spline(knots, values);
  PotentialSpec p;
  p.kind = PotentialSpec::Kind::tabulated_periodic_spline;
  p.params = "knots=" + std::to_string(knots.size());
  p.W = [sp](double v) { return sp->eval(v, 0); };
  p.dW = [sp](double v) { return sp->eval(v, 1); };
  p.d2W = [sp](double v) { return sp->eval(v, 2); };
  p.d3W = [sp](double v) { return sp->eval(v, 3); };
  return p;
}

PotentialSpec load_spline_potential(const std::string& csv_path) {
  std::ifstream in(csv_path);
  if (!in) throw std::runtime_error("cannot open spline table: " + csv_path);
  std::vector<double> knots, values;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    double v, w;
    if (ss >> v >> w) {
      knots.push_back(v);
      values.push_back(w);
    }
  }
  return make_spline_potential(knots, values);
}

ValidationReport validate_potential(const PotentialSpec& p, double tol,
                                    int sample_count) {
  if (!(tol > 0.0)) throw std::invalid_argument("validate_potential: tol must be positive");
  if (sample_count < 64) throw std::invalid_argument("validate_potential: sample_count must be >= 64");

  // Deterministic sample set: equispaced on [-2, 2) plus the integers.
  std::vector<double> samples;
  samples.reserve(std::size_t(sample_count) + 5);
  for (int j = 0; j < sample_count; ++j)
    samples.push_back(-2.0 + 4.0 * double(j) / double(sample_count));
  for (int k = -2; k <= 2; ++k) samples.push_back(double(k));

  auto finite_or_throw = [](double v, const char* what) {
    if (!std::isfinite(v))
      throw std::domain_error(std::string("validate_potential: non-finite ") + what);
    return v;
  };

  ValidationReport rep;
  auto add = [&](const std::string& name, double residual, double threshold) {
    rep.checks.push_back({name, residual, threshold, residual <= threshold});
  };

  double res_periodic = 0.0, res_dperiodic = 0.0, res_zero = 0.0;
  double min_offint = std::numeric_limits<double>::infinity();
  double res_dw = 0.0, res_d2w = 0.0;
  const double fd = 1e-4;  // 5-point stencils: truncation O(fd^4)
  for (double v : samples) {
    const double w = finite_or_throw(p.W(v), "W");
    res_periodic = std::max(res_periodic, std::abs(finite_or_throw(p.W(v + 1.0), "W") - w));
    res_dperiodic = std::max(res_dperiodic, std::abs(p.dW(v + 1.0) - p.dW(v)));
    const double frac = v - std::round(v);
    if (std::abs(frac) < 1e-12) {
      res_zero = std::max(res_zero, std::abs(w));
    } else if (std::abs(frac) > 0.05) {
      min_offint = std::min(min_offint, w);
    }
    const double fd1 = (-p.W(v + 2 * fd) + 8 * p.W(v + fd) - 8 * p.W(v - fd) + p.W(v - 2 * fd)) / (12 * fd);
    res_dw = std::max(res_dw, std::abs(finite_or_throw(p.dW(v), "W'") - fd1));
    const double fd2 = (-p.dW(v + 2 * fd) + 8 * p.dW(v + fd) - 8 * p.dW(v - fd) + p.dW(v - 2 * fd)) / (12 * fd);
    res_d2w = std::max(res_d2w, std::abs(finite_or_throw(p.d2W(v), "W''") - fd2));
  }
  finite_or_throw(p.d3W(0.25), "W'''");

  add("periodicity W(v+1)=W(v)", res_periodic, tol);
  add("periodicity W'(v+1)=W'(v)", res_dperiodic, tol);
  add("W=0 on integers", res_zero, tol);
  // strict positivity off the integers: residual is the violation depth
  add("W>0 off integers", min_offint > 0.0 ? 0.0 : std::abs(min_offint) + tol, tol);
  const double wpp0 = finite_or_throw(p.d2W(0.0), "W''(0)");
  add("W''(0)>0", wpp0 > 0.0 ? 0.0 : std::abs(wpp0) + tol, tol);
  add("W' consistent with dW/dv", res_dw, tol);
  add("W'' consistent with dW'/dv", res_d2w, tol);

  if (p.kind == PotentialSpec::Kind::tabulated_periodic_spline) {
    // C^{2} construction: record the W''' knot jumps as the smoothness defect.
    double defect = 0.0;
    const int nprobe = 4096;
    for (int j = 0; j < nprobe; ++j) {
      const double v = double(j) / double(nprobe);
      defect = std::max(defect, std::abs(p.d3W(v + 1e-9) - p.d3W(v - 1e-9)));
    }
    rep.holder_defect = defect;
  }

  rep.pass = true;
  for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
  return rep;
}

}  // namespace dislodyn
