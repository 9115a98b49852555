#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "spinal/error.hpp"
#include "spinal/forms.hpp"

using namespace spinal;
using namespace spinal::forms;

namespace {

const double kE = std::exp(1.0);

// max over s in [-1, 0] of -A e^{-s}, by dense sampling.
double threshold_oracle(double A) {
  double best = 0.0;
  for (int i = 0; i <= 200000; ++i) {
    const double s = -1.0 + i / 200000.0;
    best = std::max(best, -A * std::exp(-s));
  }
  return best;
}

OneForm linear_family_base(double A) {
  return OneForm::basis(3, 2, ScalarField::constant(3, 1.0)) + OneForm::basis(3, 1, ScalarField::linear(3, 0, A));
}

OneForm exp_sigma() { return OneForm::basis(3, 1, ScalarField::exp_of(3, 0)); }

const Clause* clause(const CheckReport& r, const std::string& prefix) {
  for (const auto& c : r.clauses)
    if (c.name.rfind(prefix, 0) == 0) return &c;
  return nullptr;
}

}  // namespace

TEST_SUITE("forms_numerics") {
  TEST_CASE("charts and axes") {
    const Axis periodic{"phi", 0.0, 1.0, true, 4};
    CHECK(periodic.samples().size() == 4);
    const Axis closed{"t", -1.0, 0.0, false, 4};
    CHECK(closed.samples().size() == 4);
    CHECK(closed.samples().front() == -1.0);
    CHECK(closed.samples().back() == 0.0);
    const Chart c = models::contact_chart(4);
    CHECK(c.dimension() == 3);
    CHECK(c.axis_index("t") == 1);
    std::size_t visited = 0;
    c.for_each_node([&](const Point&) { ++visited; });
    CHECK(visited == c.node_count());
  }

  TEST_CASE("contact example matches K e^t") {
    for (double K : {0.5, 1.0, 3.0}) {
      const OneForm a = models::contact_example(K);
      for (double t : {-1.0, -0.3, 0.0}) CHECK(contact_coefficient(a, {0.2, t, 0.7}) == doctest::Approx(K * std::exp(t)).epsilon(1e-14));
      const CheckReport r = contact_check(models::contact_chart(32), a);
      CHECK(r.pass);
      CHECK(std::abs(r.min_value - K / kE) < 1e-9);
      CHECK(r.worst[1] == -1.0);
      CHECK(r.summary().find("verified at") != std::string::npos);
    }
  }

  TEST_CASE("scaling a contact form scales the coefficient quadratically") {
    const OneForm a = models::horizontal_example(2.0);
    const Point p{-0.4, 1.1, 2.3};
    CHECK(contact_coefficient(3.0 * a, p) == doctest::Approx(9.0 * contact_coefficient(a, p)));
  }

  TEST_CASE("symplectic coefficient of the collar form") {
    const TwoForm w = TwoForm::d(models::collar_lambda(1.5, 2));
    for (double s : {-1.0, -0.5, 0.0})
      for (double t : {-0.5, 0.0}) {
        const double expect = 2.0 * 1.5 * 2 * std::exp(s + t);
        CHECK(symplectic_coefficient(w, {s, 0.3, t, 0.9}) == doctest::Approx(expect).epsilon(1e-13));
      }
    CHECK(symplectic_check(models::collar4_chart(6), w).pass);
    CHECK_FALSE(symplectic_check(models::collar4_chart(6), TwoForm::zero(4)).pass);
  }

  TEST_CASE("tabulated derivatives converge at second order") {
    auto error = [](int n) {
      const Profile p = Profile::sample([](double t) { return std::exp(t); }, -1.0, 0.0, n);
      double worst = 0.0;
      for (std::size_t i = 0; i < p.x().size(); ++i)
        worst = std::max(worst, std::abs(p.node_derivative(i) - std::exp(p.x()[i])));
      return worst;
    };
    const double e1 = error(101);
    const double e2 = error(201);
    const double e3 = error(401);
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.1));
    CHECK(e2 / e3 == doctest::Approx(4.0).epsilon(0.1));
  }

  TEST_CASE("finite-difference fields use the looser tolerance") {
    const Profile p = Profile::sample([](double s) { return std::exp(s); }, -1.0, 0.0, 2001);
    const OneForm a = OneForm::basis(3, 2, ScalarField::constant(3, 1.0)) +
                      OneForm::basis(3, 1, ScalarField::tabulated(3, 0, p));
    CHECK(a.finite_difference());
    const CheckReport r = contact_check(models::collar3_chart(16), a);
    CHECK(r.tolerance == Tolerances{}.finite_difference);
    CHECK(r.pass);
    CHECK(std::abs(r.min_value - 1.0 / kE) < 1e-6);
    CHECK_THROWS_AS(p.value(0.5), PreconditionError);
  }

  TEST_CASE("threshold of the linear family") {
    const double oracle = threshold_oracle(-2.0);
    CHECK(oracle == doctest::Approx(2.0 * kE).epsilon(1e-9));
    const Family fam = contact_family(models::collar3_chart(16), linear_family_base(-2.0), exp_sigma());
    const ThresholdResult t = thurston_threshold(fam, 20.0);
    REQUIRE(t.bounded);
    CHECK(std::abs(t.k0 - oracle) <= 1e-3);
    // Monotone in K around the threshold.
    CHECK_FALSE(fam(oracle - 0.01).pass);
    CHECK(fam(oracle + 0.01).pass);
    CHECK(fam(2 * oracle).pass);
  }

  TEST_CASE("threshold is zero for a contact form") {
    const OneForm lambda = OneForm::basis(3, 2, ScalarField::constant(3, 1.0)) + exp_sigma();
    const ThresholdResult t = thurston_threshold(contact_family(models::collar3_chart(16), lambda, exp_sigma()), 20.0);
    REQUIRE(t.bounded);
    CHECK(t.k0 == 0.0);
  }

  TEST_CASE("threshold reports unbounded families") {
    const Family fam = contact_family(models::collar3_chart(8), linear_family_base(-100.0), exp_sigma());
    CHECK_FALSE(thurston_threshold(fam, 20.0).bounded);
    CHECK_THROWS_AS(thurston_threshold(fam, 0.0), PreconditionError);
  }

  TEST_CASE("liouville and symplectic families") {
    const OneForm lambda = OneForm::basis(4, 3, ScalarField::exp_of(4, 2));
    const OneForm sigma = OneForm::basis(4, 1, ScalarField::exp_of(4, 0));
    const Family fam = liouville_family(models::collar4_chart(4), lambda, sigma);
    CHECK_FALSE(fam(0.0).pass);
    CHECK(fam(1.0).pass);
    const TwoForm eta = TwoForm::basis(4, 2, 3, ScalarField::exp_of(4, 2));
    const TwoForm omega = TwoForm::basis(4, 0, 1, ScalarField::constant(4, 1.0));
    const Family sym = symplectic_family(models::collar4_chart(4), eta, omega);
    CHECK_FALSE(sym(0.0).pass);
    CHECK(sym(0.5).pass);
  }

  TEST_CASE("giroux interface") {
    const ScalarField f = models::giroux_f(3, 0);
    const ScalarField g = models::giroux_g(3, 0);
    const CheckReport ok = giroux_interface_check(f, g, models::interface_chart(24, 0.0, 0.9));
    CHECK(ok.pass);
    for (const auto& c : ok.clauses) CHECK(c.pass);
    const CheckReport flat = giroux_interface_check(ScalarField::constant(3, 1.0), ScalarField::constant(3, 1.0),
                                                    models::interface_chart(8, 0.0, 0.9));
    CHECK_FALSE(flat.pass);
    CHECK_THROWS_AS(giroux_interface_check(ScalarField::constant(3, -1.0), g, models::interface_chart(8, 0.0, 0.9)),
                    PreconditionError);
    // Closed-form tail of the profile.
    CHECK(f.value({0.5, 0.0, 0.0}) == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
    CHECK(g.value({0.0, 0.0, 0.0}) == doctest::Approx(0.0));
    CHECK(g.value({0.3, 0.0, 0.0}) == doctest::Approx(2.0));
  }

  TEST_CASE("boundary profile") {
    const auto [f, g] = models::standard_boundary_profile();
    const CheckReport r = boundary_profile_check(f, g, 0.5, 0.1);
    CHECK(r.pass);
    CHECK(r.clauses.size() == 4);
    std::vector<double> bent = g.y();
    bent.back() = 0.1;
    CHECK_FALSE(boundary_profile_check(f, Profile(g.x(), bent), 0.5, 0.1).pass);
  }

  TEST_CASE("collar model") {
    const CheckReport r = collar_model_check(1.0, 1, models::collar4_chart(8), models::standard_smoothing());
    CHECK(r.pass);
    const Clause* b = clause(r, "(b)");
    REQUIRE(b != nullptr);
    CHECK(b->value < 1e-9);
    for (const auto& c : r.clauses) {
      CAPTURE(c.name);
      CHECK(c.pass);
    }
    CHECK(collar_model_check(3.0, 2, models::collar4_chart(6), models::standard_smoothing()).pass);
    CHECK_THROWS_AS(collar_model_check(0.0, 1, models::collar4_chart(4), models::standard_smoothing()),
                    PreconditionError);
  }

  TEST_CASE("smoothstep") {
    CHECK(models::smoothstep(-1.0) == 0.0);
    CHECK(models::smoothstep(0.0) == 0.0);
    CHECK(models::smoothstep(1.0) == 1.0);
    CHECK(models::smoothstep(0.5) == doctest::Approx(0.5));
    CHECK(models::smoothstep_derivative(0.0) == 0.0);
    CHECK(models::smoothstep_derivative(1.0) == 0.0);
    const double h = 1e-6;
    for (double u : {0.2, 0.5, 0.8})
      CHECK(models::smoothstep_derivative(u) ==
            doctest::Approx((models::smoothstep(u + h) - models::smoothstep(u - h)) / (2 * h)).epsilon(1e-6));
  }

  TEST_CASE("profile csv") {
    const std::string path = "profile_test.csv";
    {
      std::ofstream out(path);
      out << "t,f\n-1,0.5\n-0.5,0.7\n0,1\n";
    }
    const Profile p = load_profile_csv(path);
    CHECK(p.x().size() == 3);
    CHECK(p.value(-0.75) == doctest::Approx(0.6));
    std::remove(path.c_str());
    CHECK_THROWS(load_profile_csv("does-not-exist.csv"));
  }
}
