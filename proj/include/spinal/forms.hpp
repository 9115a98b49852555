#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace spinal::forms {

using Point = std::vector<double>;

struct Axis {
  std::string name;
  double lo = 0.0;
  double hi = 1.0;
  bool periodic = false;
  int resolution = 8;

  // Periodic axes omit the upper endpoint; others include both ends.
  std::vector<double> samples() const;
};

struct Chart {
  std::vector<Axis> axes;

  int dimension() const { return static_cast<int>(axes.size()); }
  std::size_t node_count() const;
  // Visits every grid node in lexicographic order (last axis fastest).
  void for_each_node(const std::function<void(const Point&)>& visit) const;
  int axis_index(const std::string& name) const;
};

// Profile sampled on a strictly increasing 1-D grid. Values are linearly
// interpolated; derivatives use central differences at interior nodes and
// second-order one-sided differences at the ends.
class Profile {
 public:
  Profile(std::vector<double> x, std::vector<double> y);

  static Profile sample(const std::function<double(double)>& f, double lo, double hi, int n);

  double lo() const { return x_.front(); }
  double hi() const { return x_.back(); }
  const std::vector<double>& x() const { return x_; }
  const std::vector<double>& y() const { return y_; }

  double value(double t) const;
  double derivative(double t) const;
  double node_derivative(std::size_t i) const { return dy_[i]; }

 private:
  std::size_t segment(double t) const;

  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> dy_;
};

// Coefficient function on a chart together with its gradient.
class ScalarField {
 public:
  using Value = std::function<double(const Point&)>;
  using Gradient = std::function<std::vector<double>(const Point&)>;

  ScalarField(int dimension, Value value, Gradient gradient, bool finite_difference = false);

  static ScalarField constant(int dimension, double c);
  // f(x_axis) with derivative fprime, both in closed form.
  static ScalarField of_coordinate(int dimension, int axis, std::function<double(double)> f,
                                   std::function<double(double)> fprime);
  static ScalarField exp_of(int dimension, int axis, double rate = 1.0);
  static ScalarField linear(int dimension, int axis, double slope, double offset = 0.0);
  static ScalarField tabulated(int dimension, int axis, Profile profile);

  int dimension() const { return dimension_; }
  double value(const Point& p) const { return value_(p); }
  std::vector<double> gradient(const Point& p) const { return gradient_(p); }
  bool finite_difference() const { return finite_difference_; }

  friend ScalarField operator+(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator*(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator*(double c, const ScalarField& a);

 private:
  int dimension_;
  Value value_;
  Gradient gradient_;
  bool finite_difference_;
};

class OneForm {
 public:
  explicit OneForm(std::vector<ScalarField> coefficients);
  static OneForm zero(int dimension);
  // f dx_axis
  static OneForm basis(int dimension, int axis, ScalarField f);

  int dimension() const { return static_cast<int>(coefficients_.size()); }
  const ScalarField& operator[](int i) const { return coefficients_[i]; }
  std::vector<double> at(const Point& p) const;
  bool finite_difference() const;

  friend OneForm operator+(const OneForm& a, const OneForm& b);
  friend OneForm operator*(double c, const OneForm& a);

 private:
  std::vector<ScalarField> coefficients_;
};

// Antisymmetric coefficient matrix omega_ij = omega(d/dx_i, d/dx_j), row major.
class TwoForm {
 public:
  using Matrix = std::vector<double>;

  TwoForm(int dimension, std::function<Matrix(const Point&)> components,
          bool finite_difference = false);
  static TwoForm zero(int dimension);
  // f dx_i ^ dx_j
  static TwoForm basis(int dimension, int i, int j, ScalarField f);
  // Exterior derivative: (d alpha)_ij = d_i alpha_j - d_j alpha_i.
  static TwoForm d(const OneForm& alpha);

  int dimension() const { return dimension_; }
  Matrix at(const Point& p) const { return components_(p); }
  bool finite_difference() const { return finite_difference_; }

  friend TwoForm operator+(const TwoForm& a, const TwoForm& b);
  friend TwoForm operator*(double c, const TwoForm& a);

 private:
  int dimension_;
  std::function<Matrix(const Point&)> components_;
  bool finite_difference_;
};

// Coefficient of alpha ^ d alpha against dx_0 ^ dx_1 ^ dx_2.
double contact_coefficient(const OneForm& alpha, const Point& p);
// Coefficient of omega ^ omega against dx_0 ^ dx_1 ^ dx_2 ^ dx_3.
double symplectic_coefficient(const TwoForm& omega, const Point& p);

struct Clause {
  std::string name;
  double value = 0.0;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::string condition;
  double min_value = 0.0;
  Point worst;
  bool pass = false;
  std::size_t samples = 0;
  double tolerance = 0.0;
  std::vector<Clause> clauses;

  // One line, including "verified at N sample points" on success.
  std::string summary() const;
};

struct Tolerances {
  double closed_form = 1e-12;
  double finite_difference = 1e-6;

  double pick(bool uses_finite_differences) const {
    return uses_finite_differences ? finite_difference : closed_form;
  }
};

CheckReport contact_check(const Chart& chart, const OneForm& alpha, const Tolerances& tol = {});
CheckReport symplectic_check(const Chart& chart, const TwoForm& omega,
                             const Tolerances& tol = {});

struct ThresholdResult {
  bool bounded = false;
  double k0 = 0.0;
  int evaluations = 0;
};

using Family = std::function<CheckReport(double)>;

// Least K in [0, k_max] (to within 1e-3) such that the family passes at K and
// on a geometric ladder above it (ratio 1.1, 20 rungs, capped at k_max).
ThresholdResult thurston_threshold(const Family& family, double k_max);

// K -> contact_check(lambda + K sigma)
Family contact_family(const Chart& chart, const OneForm& lambda, const OneForm& sigma,
                      const Tolerances& tol = {});
// K -> symplectic_check(d(lambda + K sigma)) on a 4-chart
Family liouville_family(const Chart& chart, const OneForm& lambda, const OneForm& sigma,
                        const Tolerances& tol = {});
// K -> symplectic_check(base + K added); with base = eta and added = omega this
// is the rescaled form omega'_C := C omega + eta.
Family symplectic_family(const Chart& chart, const TwoForm& base, const TwoForm& added,
                         const Tolerances& tol = {});

// Positivity of alpha ^ d beta + beta ^ d alpha for alpha = f(rho) d theta and
// beta = g(rho) d phi on a (rho, phi, theta) chart: f g' - f' g. Strict in the
// interior of the rho range, non-negative at its ends. Throws
// PreconditionError when f <= 0 at a sample.
CheckReport giroux_interface_check(const ScalarField& f, const ScalarField& g,
                                   const Chart& chart, const Tolerances& tol = {});

// The four conditions on the boundary profile (f, g) on (-delta, 0]:
// f'g - fg' > 0, f(0) = 1 and g(0) = 0, f'(0) = 0, and (f, g) = (e^t, 1) on
// [-delta, -delta + match_width].
CheckReport boundary_profile_check(const Profile& f, const Profile& g, double delta,
                                   double match_width, const Tolerances& tol = {});

struct SmoothingProfiles {
  ScalarField F;
  ScalarField G;
};

// Collar model lambda_K = K m e^s d phi + e^t d theta on (s, phi, t, theta):
// (a) d lambda_K symplectic, (b) its Liouville field equals d/ds + d/dt to
// within 1e-9, (c) the corner smoothing (F, G) is transverse to that field and
// satisfies its monotonicity and end conditions.
CheckReport collar_model_check(double K, int m, const Chart& chart,
                               const SmoothingProfiles& profiles, int rho_samples = 401,
                               const Tolerances& tol = {});

namespace models {

// (phi, t, theta) with t in [-1, 0]
Chart contact_chart(int resolution);
// (s, phi, theta) with s in [-1, 0]
Chart collar3_chart(int resolution);
// (s, phi, t, theta) with s in [-1, 0], t in [-delta, 0]
Chart collar4_chart(int resolution, double delta = 0.5);
// (rho, phi, theta) with rho in [lo, hi]
Chart interface_chart(int resolution, double lo, double hi);

// e^t d theta + K d phi on contact_chart
OneForm contact_example(double K);
// d theta + K e^s d phi on collar3_chart
OneForm horizontal_example(double K);
// K m e^s d phi + e^t d theta on collar4_chart
OneForm collar_lambda(double K, int m);

// Quintic smoothstep on [0, 1], clamped outside.
double smoothstep(double u);
double smoothstep_derivative(double u);

// Corner smoothing F, G : (-1, 1) -> (-1, 0] built from the smoothstep.
SmoothingProfiles standard_smoothing();

// Fiberwise Giroux profile: f = 1 for rho <= 0, f' < 0 after, f = e^-rho
// from rho = 2a on.
ScalarField giroux_f(int dimension, int axis, double a = 0.2);
// g(0) = 0, g'(0) > 0, g' >= 0, g = 2 from rho = delta on.
ScalarField giroux_g(int dimension, int axis, double delta = 0.25);

// Boundary profile pair sampled on [-delta, 0] with n nodes.
std::pair<Profile, Profile> standard_boundary_profile(double delta = 0.5, int n = 20001);

}  // namespace models

// Reads a two-column CSV (coordinate, value); a non-numeric first row is
// treated as a header.
Profile load_profile_csv(const std::string& path);

}  // namespace spinal::forms
