#include "gibbslab/boundary_law.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gibbslab {

double ising_f(double h, double theta) {
  if (!(std::abs(theta) < 1.0)) {
    throw std::domain_error("theta must satisfy |theta| < 1");
  }
  if (std::isnan(h)) throw std::domain_error("field value is NaN");
  if (h < 0.0) return -ising_f(-h, theta);
  if (h > 300.0) return std::atanh(theta);
  // Numerator and denominator divided by e^{2h}.
  const double e = std::exp(-2.0 * h);
  return 0.5 * (std::log((1.0 + theta) + (1.0 - theta) * e) -
                std::log((1.0 - theta) + (1.0 + theta) * e));
}

double ising_f_slope(double h, double theta, double step) {
  return (ising_f(h + step, theta) - ising_f(h - step, theta)) / (2.0 * step);
}

IsingParameters::IsingParameters(double J, double beta, double theta)
    : J_(J), beta_(beta), theta_(theta) {
  if (!std::isfinite(J) || !std::isfinite(beta) || beta < 0.0) {
    throw std::invalid_argument("Ising parameters need finite J and beta >= 0");
  }
  if (!(std::abs(theta_) < 1.0)) {
    throw std::domain_error("theta = tanh(J beta) must satisfy |theta| < 1");
  }
  const double c = J * beta;
  for (int i = -12; i <= 12; ++i) {
    const double h = 0.25 * i;
    const std::array<double, 2> up{c + h, -c - h};
    const std::array<double, 2> down{-c + h, c - h};
    const double ratio = log_sum_exp(up) - log_sum_exp(down);
    const double expected = 2.0 * ising_f(h, theta_);
    if (std::abs(ratio - expected) > 1e-12) {
      throw std::domain_error("theta = tanh(J beta) fails the log-ratio identity at h = " +
                              std::to_string(h) + " (J beta = " + std::to_string(c) + ")");
    }
  }
}

IsingParameters IsingParameters::from_coupling(double J, double beta) {
  return IsingParameters(J, beta, std::tanh(J * beta));
}

IsingParameters IsingParameters::from_theta(double theta) {
  if (!(std::abs(theta) < 1.0)) {
    throw std::domain_error("theta must satisfy |theta| < 1");
  }
  return IsingParameters(theta < 0.0 ? -1.0 : 1.0, std::atanh(std::abs(theta)), theta);
}

std::string_view to_string(Stability s) {
  switch (s) {
    case Stability::stable: return "stable";
    case Stability::unstable: return "unstable";
    case Stability::marginal: return "marginal";
  }
  return "unknown";
}

double functional_equation_residual(const PairInteraction& interaction,
                                    const CayleyTree& tree, const BoundaryField& h,
                                    Vertex x) {
  if (!interaction.space().is_binary()) {
    throw std::invalid_argument("the boundary-law equation is stated for two spin values");
  }
  if (tree.num_successors(x) == 0) {
    throw std::invalid_argument("vertex " + std::to_string(x) +
                                " has no successors in this truncation");
  }
  constexpr std::size_t down = 0;
  constexpr std::size_t up = 1;
  const double lhs = log_successor_factor(interaction, tree, h, x, up) -
                     log_successor_factor(interaction, tree, h, x, down);
  const double hx = h.at(x);
  const double rhs = interaction.field_term(up, hx) - interaction.field_term(down, hx);
  return std::abs(lhs - rhs);
}

ConsistencyCertificate check_functional_equation(const PairInteraction& interaction,
                                                 const CayleyTree& tree,
                                                 const BoundaryField& h, double tol,
                                                 std::optional<int> generation) {
  const std::vector<Vertex> vertices =
      generation ? tree.sphere(*generation) : tree.ball(tree.depth());
  ConsistencyCertificate cert;
  for (Vertex x : vertices) {
    if (tree.num_successors(x) == 0) {
      cert.excluded.push_back(x);
      continue;
    }
    cert.add_residual(functional_equation_residual(interaction, tree, h, x));
    cert.normalizers[x] = std::exp(log_normalizer(interaction, tree, h, x, 1));
  }
  cert.finish(tol);
  return cert;
}

FixedPointReport solve_homogeneous(int k, double theta, double tol) {
  if (k < 1) throw std::invalid_argument("tree order k must be >= 1");
  if (!(std::abs(theta) < 1.0)) throw std::domain_error("theta must satisfy |theta| < 1");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

  const double kk = static_cast<double>(k);
  auto g = [&](double h) { return h - kk * ising_f(h, theta); };

  constexpr int cells = 10'000;
  const double bound = kk * std::abs(std::atanh(theta)) + 1.0;
  const double cell = 2.0 * bound / cells;

  // Nodes are symmetric about 0 and include it exactly.
  std::vector<double> xs(cells + 1);
  std::vector<double> gs(cells + 1);
  for (int i = 0; i <= cells; ++i) {
    xs[i] = bound * static_cast<double>(2 * i - cells) / cells;
    gs[i] = g(xs[i]);
  }

  std::vector<double> roots;
  for (int i = 0; i <= cells; ++i) {
    if (gs[i] == 0.0) {
      roots.push_back(xs[i]);
      continue;
    }
    if (i == cells || gs[i + 1] == 0.0 || (gs[i] < 0.0) == (gs[i + 1] < 0.0)) continue;
    double lo = xs[i];
    double hi = xs[i + 1];
    const bool lo_negative = gs[i] < 0.0;
    double root = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
      root = 0.5 * (lo + hi);
      const double gm = g(root);
      if (gm == 0.0) {
        lo = hi = root;
        break;
      }
      ((gm < 0.0) == lo_negative ? lo : hi) = root;
    }
    roots.push_back(0.5 * (lo + hi));
  }
  std::sort(roots.begin(), roots.end());

  FixedPointReport report;
  report.k = k;
  report.theta = theta;
  report.tol = tol;
  for (double r : roots) {
    if (!report.solutions.empty() && r - report.solutions.back() <= 1e-9) {
      if (std::abs(g(r)) < std::abs(g(report.solutions.back()))) report.solutions.back() = r;
      continue;
    }
    report.solutions.push_back(r);
  }
  for (std::size_t i = 0; i < report.solutions.size(); ++i) {
    const double h = report.solutions[i];
    if (i > 0 && h - report.solutions[i - 1] < 10.0 * cell) report.close_roots_warning = true;
    const double slope = kk * ising_f_slope(h, theta);
    report.slopes.push_back(slope);
    if (std::abs(std::abs(slope) - 1.0) <= 1e-8) {
      report.stability.push_back(Stability::marginal);
    } else {
      report.stability.push_back(std::abs(slope) < 1.0 ? Stability::stable
                                                       : Stability::unstable);
    }
  }
  return report;
}

double critical_theta(int k) {
  if (k < 1) throw std::invalid_argument("tree order k must be >= 1");
  return 1.0 / k;
}

double critical_beta(int k, double J) {
  if (k < 2) throw std::invalid_argument("no ferromagnetic transition for k < 2");
  if (!(J > 0.0)) throw std::invalid_argument("critical beta needs J > 0");
  return std::atanh(critical_theta(k)) / J;
}

BoundaryField ising_field_from_boundary(const PairInteraction& interaction,
                                        const CayleyTree& tree, int n,
                                        const Configuration& omega) {
  if (!interaction.is_ising()) {
    throw std::invalid_argument("boundary-to-field conversion is defined for Ising only");
  }
  if (n < 0 || n + 1 > tree.depth()) {
    throw std::invalid_argument("boundary sphere W_" + std::to_string(n + 1) +
                                " lies beyond the tree depth");
  }
  std::map<Vertex, double> values;
  for (Vertex x : tree.sphere(n)) {
    double s = 0.0;
    for (Vertex y : tree.successors(x)) s += omega.at(y);
    values.emplace(x, interaction.coupling() * s);
  }
  return BoundaryField::per_vertex(std::move(values));
}

BoundaryField homogeneous_solution_field(int k, double theta, double h_star) {
  if (k < 1) throw std::invalid_argument("tree order k must be >= 1");
  return BoundaryField::homogeneous(h_star)
      .with_value(0, (k + 1.0) * ising_f(h_star, theta));
}

}  // namespace gibbslab
