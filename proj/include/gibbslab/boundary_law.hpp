#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "gibbslab/boundary_field.hpp"
#include "gibbslab/hamiltonian.hpp"
#include "gibbslab/specification.hpp"
#include "gibbslab/spins.hpp"
#include "gibbslab/topology.hpp"

namespace gibbslab {

/// f(h, theta) = 1/2 ln [((1+theta) e^{2h} + (1-theta)) / ((1-theta) e^{2h} + (1+theta))].
///
/// Evaluated with e^{-2|h|} and oddness in h, so it never overflows; for
/// |h| > 300 it returns the limit +-atanh(theta). Requires |theta| < 1.
double ising_f(double h, double theta);

/// Central finite difference of ising_f in h.
double ising_f_slope(double h, double theta, double step = 1e-6);

/// (J, beta) with theta = tanh(J beta).
///
/// Construction machine-checks that, with this theta, the single-successor
/// log-ratio log[sum_u e^{J beta u + u h} / sum_u e^{-J beta u + u h}] equals
/// 2 f(h, theta) to 1e-12 over a grid of h, and throws std::domain_error if
/// not (this happens once |J beta| is large enough that 1 - theta loses
/// precision).
class IsingParameters {
 public:
  static IsingParameters from_coupling(double J, double beta);
  /// J = sign(theta), beta = atanh(|theta|).
  static IsingParameters from_theta(double theta);

  double J() const noexcept { return J_; }
  double beta() const noexcept { return beta_; }
  double theta() const noexcept { return theta_; }
  PairInteraction interaction() const { return PairInteraction::ising(J_, beta_); }

 private:
  IsingParameters(double J, double beta, double theta);
  double J_;
  double beta_;
  double theta_;
};

enum class Stability { stable, unstable, marginal };

std::string_view to_string(Stability s);

/// Translation-invariant solutions of h = k f(h, theta).
struct FixedPointReport {
  int k = 0;
  double theta = 0.0;
  double tol = 0.0;
  std::vector<double> solutions;      // ascending
  std::vector<double> slopes;         // k f'(h) at each solution
  std::vector<Stability> stability;
  bool close_roots_warning = false;   // two roots within 10 grid cells
};

/// |log LHS - log RHS| of the compatibility condition at vertex x:
///   prod_{y in S(x)} sum_u exp(J beta rho(+,u) + rho(u,h_y)) / sum_u exp(J beta rho(-,u) + rho(u,h_y))
///     = exp(rho(+,h_x) - rho(-,h_x)).
/// Needs a two-valued spin space and a vertex with successors.
double functional_equation_residual(const PairInteraction& interaction,
                                    const CayleyTree& tree, const BoundaryField& h,
                                    Vertex x);

/// Maximizes the residual over non-leaf vertices (all of them, or only those of
/// one generation). Leaves are listed in `excluded`; a(x) at the top spin is
/// recorded for every checked vertex.
ConsistencyCertificate check_functional_equation(const PairInteraction& interaction,
                                                 const CayleyTree& tree,
                                                 const BoundaryField& h, double tol,
                                                 std::optional<int> generation = {});

/// All roots of h - k f(h, theta) on [-B, B], B = k|atanh(theta)| + 1, from sign
/// changes on a 10^4-cell grid refined by bisection to `tol`.
FixedPointReport solve_homogeneous(int k, double theta, double tol = 1e-12);

/// theta at which the homogeneous solution count changes from 1 to 3: 1/k.
double critical_theta(int k);

/// beta_c = atanh(1/k) / J; throws for k == 1 where no transition occurs.
double critical_beta(int k, double J);

/// Per-vertex field equivalent to a boundary configuration on W_{n+1}:
/// h_x = beta J sum_{y in S(x)} omega(y) for x in W_n. With this field the
/// field-boundary kernel equals the configuration-boundary one.
BoundaryField ising_field_from_boundary(const PairInteraction& interaction,
                                        const CayleyTree& tree, int n,
                                        const Configuration& omega);

/// Field solving the recursion on the whole truncated tree from a homogeneous
/// root h* of h = k f(h, theta): h* on every non-root vertex and
/// (k+1) f(h*, theta) at the root, which has one extra successor.
BoundaryField homogeneous_solution_field(int k, double theta, double h_star);

}  // namespace gibbslab
