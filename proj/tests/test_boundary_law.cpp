#include "doctest.h"

#include <cmath>

#include "gibbslab/boundary_law.hpp"
#include "gibbslab/specification.hpp"

using namespace gibbslab;

namespace {

double f_two_term(double h, double theta) {
  const double e = std::exp(2 * h);
  return 0.5 * std::log(((1 + theta) * e + (1 - theta)) / ((1 - theta) * e + (1 + theta)));
}

// Count of roots of h = k f(h, theta) from the slope at zero: one root when
// k theta <= 1, three otherwise.
std::size_t expected_count(int k, double theta) {
  return k * std::abs(theta) > 1.0 && theta > 0 ? 3 : 1;
}

}  // namespace

TEST_CASE("f examples") {
  CHECK(ising_f(1.0, 0.5) == doctest::Approx(0.400991581427006876).epsilon(1e-15));
  CHECK(ising_f(0.0, 0.7) == 0.0);
  CHECK(ising_f(0.4, 0.0) == 0.0);
  for (double theta : {-0.9, -0.3, 0.2, 0.8, 0.99}) {
    for (double h = -4.0; h <= 4.0; h += 0.37) {
      CHECK(ising_f(h, theta) == doctest::Approx(f_two_term(h, theta)).epsilon(1e-13));
      CHECK(ising_f(h, theta) == doctest::Approx(std::atanh(theta * std::tanh(h))).epsilon(1e-13));
      CHECK(ising_f(-h, theta) == -ising_f(h, theta));
    }
  }
}

TEST_CASE("f is finite and saturates for large fields") {
  CHECK(ising_f(1e6, 0.5) == doctest::Approx(std::atanh(0.5)));
  CHECK(ising_f(-1e6, 0.5) == doctest::Approx(-std::atanh(0.5)));
  CHECK(ising_f(50.0, 0.5) == doctest::Approx(std::atanh(0.5)).epsilon(1e-15));
  CHECK(std::isfinite(ising_f(700.0, 0.9)));
  CHECK_THROWS_AS(ising_f(1.0, 1.0), std::domain_error);
}

TEST_CASE("f is increasing in h for positive theta") {
  for (double theta : {0.1, 0.5, 0.95}) {
    double prev = ising_f(-10.0, theta);
    for (double h = -9.9; h <= 10.0; h += 0.1) {
      const double cur = ising_f(h, theta);
      CHECK(cur > prev);
      prev = cur;
    }
  }
}

TEST_CASE("slope of f at zero is theta") {
  for (int i = 1; i <= 9; ++i) {
    const double theta = 0.1 * i;
    CHECK(std::abs(ising_f_slope(0.0, theta) - theta) <= 1e-6);
  }
}

TEST_CASE("Ising parameters") {
  const auto p = IsingParameters::from_coupling(1.0, 0.5);
  CHECK(std::abs(p.theta() - std::tanh(0.5)) <= 1e-15);
  const auto q = IsingParameters::from_theta(-0.4);
  CHECK(q.J() == -1.0);
  CHECK(q.beta() == doctest::Approx(std::atanh(0.4)));
  CHECK_THROWS_AS(IsingParameters::from_theta(1.0), std::domain_error);
  CHECK_THROWS_AS(IsingParameters::from_coupling(1.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(IsingParameters::from_coupling(1.0, 30.0), std::domain_error);
}

TEST_CASE("vertex equation residuals") {
  const auto t = build_tree(2, 2);
  const auto model = IsingParameters::from_theta(0.8).interaction();
  const auto h1 = BoundaryField::homogeneous(1.0);
  CHECK(functional_equation_residual(model, t, h1, 1) ==
        doctest::Approx(std::abs(4 * ising_f(1.0, 0.8) - 2.0)).epsilon(1e-12));
  CHECK(functional_equation_residual(model, t, h1, 0) ==
        doctest::Approx(std::abs(6 * ising_f(1.0, 0.8) - 2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(functional_equation_residual(model, t, h1, 5), std::invalid_argument);
  CHECK_THROWS_AS(functional_equation_residual(PairInteraction::potts(3, 1, 1), t, h1, 0),
                  std::invalid_argument);

  for (double h : {-1.3, 0.2, 2.5}) {
    const auto hf = BoundaryField::homogeneous(h);
    for (Vertex x : {Vertex{0}, Vertex{2}}) {
      const double kx = static_cast<double>(t.num_successors(x));
      CHECK(std::abs(functional_equation_residual(model, t, hf, x) -
                     std::abs(kx * 2 * ising_f(h, 0.8) - 2 * h)) <= 1e-12);
    }
  }
}

TEST_CASE("functional equation check") {
  const auto t = build_tree(2, 3);
  const auto report = solve_homogeneous(2, 0.8);
  for (double hs : report.solutions) {
    const auto cert = check_functional_equation(IsingParameters::from_theta(0.8).interaction(),
                                                t, homogeneous_solution_field(2, 0.8, hs), 1e-10);
    CHECK(cert.verdict);
    CHECK(cert.excluded.size() == t.sphere_size(3));
    CHECK(cert.normalizers.size() == t.ball_size(2));
  }
  const auto model = IsingParameters::from_theta(0.8).interaction();
  const auto sol = homogeneous_solution_field(2, 0.8, report.solutions.back());
  const auto bad = sol.with_value(5, 0.0);
  CHECK_FALSE(check_functional_equation(model, t, bad, 1e-10).verdict);
  CHECK(check_functional_equation(model, t, bad, 1e-10, 0).verdict);
  CHECK_FALSE(check_functional_equation(model, t, bad, 1e-10, 1).verdict);
}

TEST_CASE("homogeneous solutions") {
  const auto r = solve_homogeneous(2, 0.8);
  REQUIRE(r.solutions.size() == 3);
  CHECK(r.solutions[0] == doctest::Approx(-2.06343706889556054).epsilon(1e-10));
  CHECK(r.solutions[1] == 0.0);
  CHECK(r.solutions[2] == doctest::Approx(2.06343706889556054).epsilon(1e-10));
  CHECK(r.stability[0] == Stability::stable);
  CHECK(r.stability[1] == Stability::unstable);
  CHECK(r.stability[2] == Stability::stable);
  CHECK(r.slopes[1] == doctest::Approx(1.6).epsilon(1e-6));

  const auto low = solve_homogeneous(2, 0.3);
  REQUIRE(low.solutions.size() == 1);
  CHECK(low.stability[0] == Stability::stable);

  const auto crit = solve_homogeneous(2, 0.5);
  REQUIRE(crit.solutions.size() == 1);
  CHECK(crit.stability[0] == Stability::marginal);
  CHECK(std::string(to_string(Stability::marginal)) == "marginal");
}

TEST_CASE("solution count and symmetry over a theta grid") {
  for (int k = 2; k <= 5; ++k) {
    for (int i = -99; i <= 99; ++i) {
      const double theta = i / 100.0;
      if (std::abs(k * theta - 1.0) < 1e-9) continue;
      const auto r = solve_homogeneous(k, theta);
      CHECK_MESSAGE(r.solutions.size() == expected_count(k, theta), "k=" << k << " theta=" << theta);
      for (std::size_t j = 0; j < r.solutions.size(); ++j) {
        const double h = r.solutions[j];
        CHECK(std::abs(h - k * ising_f(h, theta)) <= 1e-10);
        CHECK(r.solutions[r.solutions.size() - 1 - j] == doctest::Approx(-h).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("critical values") {
  CHECK(critical_theta(2) == 0.5);
  CHECK(critical_theta(4) == 0.25);
  CHECK(critical_beta(2, 1.0) == doctest::Approx(0.549306144334054845).epsilon(1e-15));
  CHECK(critical_beta(2, 2.0) == doctest::Approx(0.549306144334054845 / 2).epsilon(1e-15));
  CHECK_THROWS_AS(critical_beta(1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(critical_beta(2, -1.0), std::invalid_argument);
}

TEST_CASE("boundary to field conversion") {
  const auto t = build_tree(2, 2);
  const auto model = PairInteraction::ising(1.0, 1.0);
  const auto plus = ising_field_from_boundary(model, t, 1, Configuration::uniform(t.sphere(2), 1.0));
  CHECK(plus.at(1) == 2.0);
  auto m = Configuration::uniform(t.sphere(2), 1.0).to_map();
  m[4] = -1.0;
  const auto mixed = ising_field_from_boundary(model, t, 1, Configuration(m));
  CHECK(mixed.at(1) == 0.0);
  CHECK(mixed.at(2) == 2.0);
  const auto root = ising_field_from_boundary(model, t, 0, Configuration::uniform(t.sphere(1), 1.0));
  CHECK(root.at(0) == 3.0);
}

TEST_CASE("root-adjusted solution field") {
  const double hs = solve_homogeneous(2, 0.8).solutions.back();
  const auto h = homogeneous_solution_field(2, 0.8, hs);
  CHECK(h.at(0) == doctest::Approx(3.09515560334334).epsilon(1e-12));
  CHECK(h.at(17) == hs);
}
