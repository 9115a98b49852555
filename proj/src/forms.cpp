#include "spinal/forms.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <sstream>

#include "spinal/error.hpp"

namespace spinal::forms {

std::vector<double> Axis::samples() const {
  if (resolution < 2) throw PreconditionError("axis " + name + " needs at least 2 samples");
  std::vector<double> out(resolution);
  const int steps = periodic ? resolution : resolution - 1;
  for (int i = 0; i < resolution; ++i) out[i] = lo + (hi - lo) * i / steps;
  if (!periodic) out.back() = hi;
  return out;
}

std::size_t Chart::node_count() const {
  std::size_t n = 1;
  for (const auto& a : axes) n *= static_cast<std::size_t>(a.resolution);
  return n;
}

void Chart::for_each_node(const std::function<void(const Point&)>& visit) const {
  std::vector<std::vector<double>> grids;
  for (const auto& a : axes) grids.push_back(a.samples());
  const std::size_t dim = axes.size();
  std::vector<std::size_t> index(dim, 0);
  Point p(dim);
  while (true) {
    for (std::size_t i = 0; i < dim; ++i) p[i] = grids[i][index[i]];
    visit(p);
    std::size_t k = dim;
    while (k > 0) {
      --k;
      if (++index[k] < grids[k].size()) break;
      index[k] = 0;
      if (k == 0) return;
    }
    if (dim == 0) return;
  }
}

int Chart::axis_index(const std::string& name) const {
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (axes[i].name == name) return static_cast<int>(i);
  }
  throw PreconditionError("chart has no axis named " + name);
}

Profile::Profile(std::vector<double> x, std::vector<double> y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_.size() != y_.size() || x_.size() < 3) {
    throw PreconditionError("profile needs at least 3 (x, y) pairs");
  }
  for (std::size_t i = 1; i < x_.size(); ++i) {
    if (!(x_[i] > x_[i - 1])) throw PreconditionError("profile grid must be strictly increasing");
  }
  const std::size_t n = x_.size();
  dy_.resize(n);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double hl = x_[i] - x_[i - 1];
    const double hr = x_[i + 1] - x_[i];
    dy_[i] = (y_[i + 1] - y_[i]) / hr * hl / (hl + hr) + (y_[i] - y_[i - 1]) / hl * hr / (hl + hr);
  }
  auto one_sided = [](double y0, double y1, double y2, double h1, double h2) {
    return -(2 * h1 + h2) / (h1 * (h1 + h2)) * y0 + (h1 + h2) / (h1 * h2) * y1 -
           h1 / (h2 * (h1 + h2)) * y2;
  };
  dy_[0] = one_sided(y_[0], y_[1], y_[2], x_[1] - x_[0], x_[2] - x_[1]);
  dy_[n - 1] = -one_sided(y_[n - 1], y_[n - 2], y_[n - 3], x_[n - 1] - x_[n - 2],
                          x_[n - 2] - x_[n - 3]);
}

Profile Profile::sample(const std::function<double(double)>& f, double lo, double hi, int n) {
  if (n < 3) throw PreconditionError("profile needs at least 3 samples");
  std::vector<double> x(n);
  std::vector<double> y(n);
  for (int i = 0; i < n; ++i) {
    x[i] = i == n - 1 ? hi : lo + (hi - lo) * i / (n - 1);
    y[i] = f(x[i]);
  }
  return Profile(std::move(x), std::move(y));
}

std::size_t Profile::segment(double t) const {
  const double slack = 1e-12 * std::max(1.0, hi() - lo());
  if (t < lo() - slack || t > hi() + slack) {
    throw PreconditionError("profile evaluated outside its range at " + std::to_string(t));
  }
  auto it = std::upper_bound(x_.begin(), x_.end(), t);
  std::size_t i = it == x_.begin() ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
  return std::min(i, x_.size() - 2);
}

double Profile::value(double t) const {
  const std::size_t i = segment(t);
  const double w = (t - x_[i]) / (x_[i + 1] - x_[i]);
  return (1 - w) * y_[i] + w * y_[i + 1];
}

double Profile::derivative(double t) const {
  const std::size_t i = segment(t);
  const double w = (t - x_[i]) / (x_[i + 1] - x_[i]);
  return (1 - w) * dy_[i] + w * dy_[i + 1];
}

ScalarField::ScalarField(int dimension, Value value, Gradient gradient, bool finite_difference)
    : dimension_(dimension),
      value_(std::move(value)),
      gradient_(std::move(gradient)),
      finite_difference_(finite_difference) {}

ScalarField ScalarField::constant(int dimension, double c) {
  return ScalarField(
      dimension, [c](const Point&) { return c; },
      [dimension](const Point&) { return std::vector<double>(dimension, 0.0); });
}

ScalarField ScalarField::of_coordinate(int dimension, int axis, std::function<double(double)> f,
                                       std::function<double(double)> fprime) {
  return ScalarField(
      dimension, [axis, f](const Point& p) { return f(p[axis]); },
      [dimension, axis, fprime](const Point& p) {
        std::vector<double> g(dimension, 0.0);
        g[axis] = fprime(p[axis]);
        return g;
      });
}

ScalarField ScalarField::exp_of(int dimension, int axis, double rate) {
  return of_coordinate(
      dimension, axis, [rate](double x) { return std::exp(rate * x); },
      [rate](double x) { return rate * std::exp(rate * x); });
}

ScalarField ScalarField::linear(int dimension, int axis, double slope, double offset) {
  return of_coordinate(
      dimension, axis, [slope, offset](double x) { return slope * x + offset; },
      [slope](double) { return slope; });
}

ScalarField ScalarField::tabulated(int dimension, int axis, Profile profile) {
  auto shared = std::make_shared<Profile>(std::move(profile));
  return ScalarField(
      dimension, [axis, shared](const Point& p) { return shared->value(p[axis]); },
      [dimension, axis, shared](const Point& p) {
        std::vector<double> g(dimension, 0.0);
        g[axis] = shared->derivative(p[axis]);
        return g;
      },
      true);
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  return ScalarField(
      a.dimension_, [a, b](const Point& p) { return a.value(p) + b.value(p); },
      [a, b](const Point& p) {
        auto g = a.gradient(p);
        const auto h = b.gradient(p);
        for (std::size_t i = 0; i < g.size(); ++i) g[i] += h[i];
        return g;
      },
      a.finite_difference_ || b.finite_difference_);
}

ScalarField operator*(const ScalarField& a, const ScalarField& b) {
  return ScalarField(
      a.dimension_, [a, b](const Point& p) { return a.value(p) * b.value(p); },
      [a, b](const Point& p) {
        auto g = a.gradient(p);
        const auto h = b.gradient(p);
        const double va = a.value(p);
        const double vb = b.value(p);
        for (std::size_t i = 0; i < g.size(); ++i) g[i] = g[i] * vb + va * h[i];
        return g;
      },
      a.finite_difference_ || b.finite_difference_);
}

ScalarField operator*(double c, const ScalarField& a) {
  return ScalarField::constant(a.dimension_, c) * a;
}

OneForm::OneForm(std::vector<ScalarField> coefficients) : coefficients_(std::move(coefficients)) {}

OneForm OneForm::zero(int dimension) {
  return OneForm(std::vector<ScalarField>(dimension, ScalarField::constant(dimension, 0.0)));
}

OneForm OneForm::basis(int dimension, int axis, ScalarField f) {
  OneForm out = zero(dimension);
  out.coefficients_[axis] = std::move(f);
  return out;
}

std::vector<double> OneForm::at(const Point& p) const {
  std::vector<double> out;
  for (const auto& c : coefficients_) out.push_back(c.value(p));
  return out;
}

bool OneForm::finite_difference() const {
  return std::any_of(coefficients_.begin(), coefficients_.end(),
                     [](const ScalarField& c) { return c.finite_difference(); });
}

OneForm operator+(const OneForm& a, const OneForm& b) {
  if (a.dimension() != b.dimension()) throw PreconditionError("dimension mismatch");
  std::vector<ScalarField> c;
  for (int i = 0; i < a.dimension(); ++i) c.push_back(a[i] + b[i]);
  return OneForm(std::move(c));
}

OneForm operator*(double c, const OneForm& a) {
  std::vector<ScalarField> out;
  for (int i = 0; i < a.dimension(); ++i) out.push_back(c * a[i]);
  return OneForm(std::move(out));
}

TwoForm::TwoForm(int dimension, std::function<Matrix(const Point&)> components,
                 bool finite_difference)
    : dimension_(dimension),
      components_(std::move(components)),
      finite_difference_(finite_difference) {}

TwoForm TwoForm::zero(int dimension) {
  return TwoForm(dimension, [dimension](const Point&) {
    return Matrix(static_cast<std::size_t>(dimension * dimension), 0.0);
  });
}

TwoForm TwoForm::basis(int dimension, int i, int j, ScalarField f) {
  const bool fd = f.finite_difference();
  return TwoForm(
      dimension,
      [dimension, i, j, f](const Point& p) {
        Matrix m(static_cast<std::size_t>(dimension * dimension), 0.0);
        const double v = f.value(p);
        m[i * dimension + j] += v;
        m[j * dimension + i] -= v;
        return m;
      },
      fd);
}

TwoForm TwoForm::d(const OneForm& alpha) {
  const int n = alpha.dimension();
  return TwoForm(
      n,
      [alpha, n](const Point& p) {
        std::vector<std::vector<double>> grad;
        for (int j = 0; j < n; ++j) grad.push_back(alpha[j].gradient(p));
        Matrix m(static_cast<std::size_t>(n * n), 0.0);
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) m[i * n + j] = grad[j][i] - grad[i][j];
        }
        return m;
      },
      alpha.finite_difference());
}

TwoForm operator+(const TwoForm& a, const TwoForm& b) {
  if (a.dimension_ != b.dimension_) throw PreconditionError("dimension mismatch");
  return TwoForm(
      a.dimension_,
      [a, b](const Point& p) {
        auto m = a.at(p);
        const auto n = b.at(p);
        for (std::size_t i = 0; i < m.size(); ++i) m[i] += n[i];
        return m;
      },
      a.finite_difference_ || b.finite_difference_);
}

TwoForm operator*(double c, const TwoForm& a) {
  return TwoForm(
      a.dimension_,
      [c, a](const Point& p) {
        auto m = a.at(p);
        for (double& x : m) x *= c;
        return m;
      },
      a.finite_difference_);
}

double contact_coefficient(const OneForm& alpha, const Point& p) {
  const auto a = alpha.at(p);
  const auto w = TwoForm::d(alpha).at(p);
  return a[0] * w[1 * 3 + 2] - a[1] * w[0 * 3 + 2] + a[2] * w[0 * 3 + 1];
}

double symplectic_coefficient(const TwoForm& omega, const Point& p) {
  const auto w = omega.at(p);
  auto c = [&](int i, int j) { return w[i * 4 + j]; };
  return 2 * (c(0, 1) * c(2, 3) - c(0, 2) * c(1, 3) + c(0, 3) * c(1, 2));
}

std::string CheckReport::summary() const {
  std::ostringstream out;
  out.precision(12);
  out << condition << ": " << (pass ? "PASS" : "FAIL") << ", min " << min_value << " at (";
  for (std::size_t i = 0; i < worst.size(); ++i) out << (i ? ", " : "") << worst[i];
  out << ")";
  if (pass) out << ", verified at " << samples << " sample points";
  return out.str();
}

namespace {

CheckReport minimum_over_chart(const std::string& condition, const Chart& chart,
                               const std::function<double(const Point&)>& coefficient,
                               double tolerance) {
  CheckReport r;
  r.condition = condition;
  r.tolerance = tolerance;
  r.min_value = std::numeric_limits<double>::infinity();
  chart.for_each_node([&](const Point& p) {
    const double v = coefficient(p);
    ++r.samples;
    if (v < r.min_value) {
      r.min_value = v;
      r.worst = p;
    }
  });
  r.pass = r.min_value > tolerance;
  return r;
}

}  // namespace

CheckReport contact_check(const Chart& chart, const OneForm& alpha, const Tolerances& tol) {
  if (chart.dimension() != 3 || alpha.dimension() != 3) {
    throw PreconditionError("contact_check: dimension mismatch (needs a 3-dimensional chart)");
  }
  const TwoForm dalpha = TwoForm::d(alpha);
  return minimum_over_chart(
      "alpha ^ d alpha > 0", chart,
      [&](const Point& p) {
        const auto a = alpha.at(p);
        const auto w = dalpha.at(p);
        return a[0] * w[1 * 3 + 2] - a[1] * w[0 * 3 + 2] + a[2] * w[0 * 3 + 1];
      },
      tol.pick(alpha.finite_difference()));
}

CheckReport symplectic_check(const Chart& chart, const TwoForm& omega, const Tolerances& tol) {
  if (chart.dimension() != 4 || omega.dimension() != 4) {
    throw PreconditionError("symplectic_check: dimension mismatch (needs a 4-dimensional chart)");
  }
  return minimum_over_chart(
      "omega ^ omega > 0", chart, [&](const Point& p) { return symplectic_coefficient(omega, p); },
      tol.pick(omega.finite_difference()));
}

ThresholdResult thurston_threshold(const Family& family, double k_max) {
  if (!(k_max > 0)) throw PreconditionError("thurston_threshold needs k_max > 0");
  ThresholdResult out;
  auto check = [&](double k) {
    ++out.evaluations;
    return family(k).pass;
  };
  auto passes_from = [&](double k) {
    if (!check(k)) return false;
    for (int i = 1; i < 20; ++i) {
      const double rung = k > 0 ? std::min(k * std::pow(1.1, i), k_max) : k_max * std::pow(1.1, -i);
      if (!check(rung)) return false;
    }
    return true;
  };
  if (!passes_from(k_max)) return out;
  out.bounded = true;
  if (passes_from(0.0)) {
    out.k0 = 0.0;
    return out;
  }
  double lo = 0.0;
  double hi = k_max;
  while (hi - lo >= 1e-3) {
    const double mid = 0.5 * (lo + hi);
    (passes_from(mid) ? hi : lo) = mid;
  }
  out.k0 = hi;
  return out;
}

Family contact_family(const Chart& chart, const OneForm& lambda, const OneForm& sigma,
                      const Tolerances& tol) {
  return [=](double k) { return contact_check(chart, lambda + k * sigma, tol); };
}

Family liouville_family(const Chart& chart, const OneForm& lambda, const OneForm& sigma,
                        const Tolerances& tol) {
  return [=](double k) { return symplectic_check(chart, TwoForm::d(lambda + k * sigma), tol); };
}

Family symplectic_family(const Chart& chart, const TwoForm& base, const TwoForm& added,
                         const Tolerances& tol) {
  return [=](double k) { return symplectic_check(chart, base + k * added, tol); };
}

CheckReport giroux_interface_check(const ScalarField& f, const ScalarField& g, const Chart& chart,
                                   const Tolerances& tol) {
  if (chart.dimension() != 3) {
    throw PreconditionError("giroux_interface_check: dimension mismatch");
  }
  const OneForm alpha({ScalarField::constant(3, 0.0), g, f});
  const double t = tol.pick(f.finite_difference() || g.finite_difference());
  const Axis& rho = chart.axes[0];

  CheckReport r;
  r.condition = "alpha ^ d beta + beta ^ d alpha > 0";
  r.tolerance = t;
  r.min_value = std::numeric_limits<double>::infinity();
  Clause interior{"interior strict positivity", std::numeric_limits<double>::infinity(), true, ""};
  Clause ends{"non-negativity at the ends", std::numeric_limits<double>::infinity(), true, ""};
  chart.for_each_node([&](const Point& p) {
    if (!(f.value(p) > 0)) {
      throw PreconditionError("giroux_interface_check: f must be positive (rho = " +
                              std::to_string(p[0]) + ")");
    }
    const double v = contact_coefficient(alpha, p);
    ++r.samples;
    if (v < r.min_value) {
      r.min_value = v;
      r.worst = p;
    }
    const bool at_end = !rho.periodic && (p[0] == rho.lo || p[0] == rho.hi);
    Clause& c = at_end ? ends : interior;
    c.value = std::min(c.value, v);
  });
  interior.pass = interior.value > t;
  ends.pass = ends.value >= -t;
  r.pass = interior.pass && ends.pass;
  r.clauses = {interior, ends};
  return r;
}

CheckReport boundary_profile_check(const Profile& f, const Profile& g, double delta,
                                   double match_width, const Tolerances& tol) {
  const double t = tol.finite_difference;
  if (std::abs(f.lo() + delta) > 1e-9 || std::abs(f.hi()) > 1e-9 || f.x() != g.x()) {
    throw PreconditionError("boundary profiles must share a grid on [-delta, 0]");
  }
  const auto& x = f.x();
  const std::size_t n = x.size();

  CheckReport r;
  r.condition = "boundary profile (f, g)";
  r.tolerance = t;
  r.samples = n;

  Clause twist{"f'g - fg' > 0", std::numeric_limits<double>::infinity(), true, ""};
  std::size_t worst = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = f.node_derivative(i) * g.y()[i] - f.y()[i] * g.node_derivative(i);
    if (v < twist.value) {
      twist.value = v;
      worst = i;
    }
  }
  twist.pass = twist.value > t;

  const double end_error = std::max(std::abs(f.y()[n - 1] - 1.0), std::abs(g.y()[n - 1]));
  Clause endpoint{"f(0) = 1 and g(0) = 0", end_error, end_error <= t, ""};

  const double slope = std::abs(f.node_derivative(n - 1));
  Clause flat{"f'(0) = 0", slope, slope <= t * std::max(1.0, std::abs(f.y()[n - 1])), ""};

  double match = 0.0;
  for (std::size_t i = 0; i < n && x[i] <= -delta + match_width + 1e-12; ++i) {
    match = std::max(match, std::abs(f.y()[i] - std::exp(x[i])) + std::abs(g.y()[i] - 1.0));
  }
  Clause matching{"(f, g) = (e^t, 1) near -delta", match, match <= t, ""};

  r.clauses = {twist, endpoint, flat, matching};
  r.min_value = twist.value;
  r.worst = {x[worst]};
  r.pass = std::all_of(r.clauses.begin(), r.clauses.end(), [](const Clause& c) { return c.pass; });
  return r;
}

CheckReport collar_model_check(double K, int m, const Chart& chart,
                               const SmoothingProfiles& profiles, int rho_samples,
                               const Tolerances& tol) {
  if (!(K > 0) || m < 1) throw PreconditionError("collar model needs K > 0 and m >= 1");
  if (chart.dimension() != 4) throw PreconditionError("collar_model_check: dimension mismatch");

  const OneForm lambda = models::collar_lambda(K, m);
  const TwoForm omega = TwoForm::d(lambda);
  CheckReport r = symplectic_check(chart, omega, tol);
  r.condition = "collar model";
  Clause a{"(a) d lambda_K symplectic", r.min_value, r.pass, ""};

  double field_error = 0.0;
  chart.for_each_node([&](const Point& p) {
    const auto w = omega.at(p);
    const auto l = lambda.at(p);
    Eigen::Matrix4d W;
    Eigen::Vector4d rhs;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) W(i, j) = w[i * 4 + j];
      rhs(i) = l[i];
    }
    // (i_V omega)_j = sum_i V_i omega_ij
    const Eigen::Vector4d V = W.transpose().fullPivLu().solve(rhs);
    const Eigen::Vector4d expected(1.0, 0.0, 1.0, 0.0);
    field_error = std::max(field_error, (V - expected).cwiseAbs().maxCoeff());
  });
  Clause b{"(b) Liouville field = d/ds + d/dt", field_error, field_error < 1e-9,
           "max V_K component error"};

  const double t = tol.pick(profiles.F.finite_difference() || profiles.G.finite_difference());
  const double inf = std::numeric_limits<double>::infinity();
  Clause transverse{"(c) V_K transverse to the smoothing", inf, true, "F' V_t - G' V_s"};
  Clause f_increasing{"(c) F' > 0 for rho < 1/4", inf, true, ""};
  Clause g_decreasing{"(c) G' < 0 for rho > -1/4", inf, true, "reported as -G'"};
  Clause ends{"(c) (F, G) = (rho, 0) and (0, -rho) past 1/4", 0.0, true, "max deviation"};
  Clause range{"(c) F, G take values in (-1, 0]", 0.0, true, "max excursion"};
  const double margin = 1e-9;
  for (int i = 0; i < rho_samples; ++i) {
    const double rho = -1.0 + 2.0 * (i + 1) / (rho_samples + 1);
    const Point p{rho};
    const double F = profiles.F.value(p);
    const double G = profiles.G.value(p);
    const double dF = profiles.F.gradient(p)[0];
    const double dG = profiles.G.gradient(p)[0];
    transverse.value = std::min(transverse.value, dF * 1.0 - dG * 1.0);
    if (rho < 0.25 - margin) f_increasing.value = std::min(f_increasing.value, dF);
    if (rho > -0.25 + margin) g_decreasing.value = std::min(g_decreasing.value, -dG);
    if (rho <= -0.25) ends.value = std::max(ends.value, std::abs(F - rho) + std::abs(G));
    if (rho >= 0.25) ends.value = std::max(ends.value, std::abs(F) + std::abs(G + rho));
    range.value = std::max({range.value, F - 0.0, G - 0.0, -1.0 - F, -1.0 - G});
  }
  transverse.pass = transverse.value > t;
  f_increasing.pass = f_increasing.value > 0;
  g_decreasing.pass = g_decreasing.value > 0;
  ends.pass = ends.value <= std::max(t, 1e-12);
  range.pass = range.value <= std::max(t, 1e-12);

  r.clauses = {a, b, transverse, f_increasing, g_decreasing, ends, range};
  r.pass = std::all_of(r.clauses.begin(), r.clauses.end(), [](const Clause& c) { return c.pass; });
  return r;
}

namespace models {

Chart contact_chart(int resolution) {
  return Chart{{{"phi", 0.0, 2 * M_PI, true, resolution},
                {"t", -1.0, 0.0, false, resolution},
                {"theta", 0.0, 2 * M_PI, true, resolution}}};
}

Chart collar3_chart(int resolution) {
  return Chart{{{"s", -1.0, 0.0, false, resolution},
                {"phi", 0.0, 2 * M_PI, true, resolution},
                {"theta", 0.0, 2 * M_PI, true, resolution}}};
}

Chart collar4_chart(int resolution, double delta) {
  return Chart{{{"s", -1.0, 0.0, false, resolution},
                {"phi", 0.0, 2 * M_PI, true, resolution},
                {"t", -delta, 0.0, false, resolution},
                {"theta", 0.0, 2 * M_PI, true, resolution}}};
}

Chart interface_chart(int resolution, double lo, double hi) {
  return Chart{{{"rho", lo, hi, false, resolution},
                {"phi", 0.0, 2 * M_PI, true, resolution},
                {"theta", 0.0, 2 * M_PI, true, resolution}}};
}

OneForm contact_example(double K) {
  return OneForm::basis(3, 2, ScalarField::exp_of(3, 1)) +
         OneForm::basis(3, 0, ScalarField::constant(3, K));
}

OneForm horizontal_example(double K) {
  return OneForm::basis(3, 2, ScalarField::constant(3, 1.0)) +
         OneForm::basis(3, 1, K * ScalarField::exp_of(3, 0));
}

OneForm collar_lambda(double K, int m) {
  return OneForm::basis(4, 1, (K * m) * ScalarField::exp_of(4, 0)) +
         OneForm::basis(4, 3, ScalarField::exp_of(4, 2));
}

double smoothstep(double u) {
  u = std::clamp(u, 0.0, 1.0);
  return u * u * u * (10 + u * (-15 + 6 * u));
}

double smoothstep_derivative(double u) {
  if (u <= 0 || u >= 1) return 0.0;
  return 30 * u * u * (1 - u) * (1 - u);
}

namespace {

// Antiderivative of the smoothstep vanishing at 0, continued by u - 1/2.
double smoothstep_integral(double u) {
  if (u <= 0) return 0.0;
  if (u >= 1) return u - 0.5;
  return u * u * u * u * (2.5 + u * (-3 + u));
}

}  // namespace

SmoothingProfiles standard_smoothing() {
  auto u_of = [](double rho) { return 2 * rho + 0.5; };
  auto F = [u_of](double rho) {
    const double u = u_of(rho);
    if (u <= 0) return rho;
    const double c = std::min(u, 1.0);
    return -0.25 + 0.5 * (c - smoothstep_integral(c));
  };
  auto dF = [u_of](double rho) { return 1.0 - smoothstep(u_of(rho)); };
  auto G = [u_of](double rho) {
    const double u = u_of(rho);
    return u >= 1 ? -rho : -0.5 * smoothstep_integral(u);
  };
  auto dG = [u_of](double rho) { return -smoothstep(u_of(rho)); };
  return {ScalarField::of_coordinate(1, 0, F, dF), ScalarField::of_coordinate(1, 0, G, dG)};
}

ScalarField giroux_f(int dimension, int axis, double a) {
  auto h = [a](double x) {
    return 1.5 * a * smoothstep_integral(x / a) - 0.5 * a * smoothstep_integral((x - a) / a);
  };
  auto dh = [a](double x) { return 1.5 * smoothstep(x / a) - 0.5 * smoothstep((x - a) / a); };
  return ScalarField::of_coordinate(
      dimension, axis, [h](double x) { return std::exp(-h(x)); },
      [h, dh](double x) { return -dh(x) * std::exp(-h(x)); });
}

ScalarField giroux_g(int dimension, int axis, double delta) {
  return ScalarField::of_coordinate(
      dimension, axis,
      [delta](double x) {
        if (x >= delta) return 2.0;
        const double c = 1 - x / delta;
        return 2 * (1 - c * c * c);
      },
      [delta](double x) {
        if (x >= delta) return 0.0;
        const double c = 1 - x / delta;
        return 6 * c * c / delta;
      });
}

std::pair<Profile, Profile> standard_boundary_profile(double delta, int n) {
  auto polar = [delta](double t) {
    const double s = smoothstep((t + delta / 2) / (delta / 2));
    const double angle = (1 - s) * std::atan(std::exp(-t)) + s * (-t);
    const double radius = (1 - s) * std::sqrt(std::exp(2 * t) + 1) + s;
    return std::pair{radius * std::cos(angle), radius * std::sin(angle)};
  };
  return {Profile::sample([&](double t) { return polar(t).first; }, -delta, 0.0, n),
          Profile::sample([&](double t) { return polar(t).second; }, -delta, 0.0, n)};
}

}  // namespace models

Profile load_profile_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open profile " + path);
  std::vector<double> x;
  std::vector<double> y;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw PreconditionError("profile line without comma: " + line);
    try {
      std::size_t used = 0;
      const double a = std::stod(line.substr(0, comma), &used);
      const double b = std::stod(line.substr(comma + 1));
      x.push_back(a);
      y.push_back(b);
    } catch (const std::invalid_argument&) {
      if (!first) throw PreconditionError("non-numeric profile line: " + line);
    }
    first = false;
  }
  return Profile(std::move(x), std::move(y));
}

}  // namespace spinal::forms
