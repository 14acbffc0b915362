#pragma once

#include <vector>

#include "gibbslab/boundary_field.hpp"
#include "gibbslab/hamiltonian.hpp"
#include "gibbslab/specification.hpp"
#include "gibbslab/topology.hpp"

namespace gibbslab {

/// Finite marginals mu_0, ..., mu_{n_max} on the balls V_n, each the
/// field-boundary kernel for the same field h.
struct MarginalFamily {
  PairInteraction interaction;
  BoundaryField field;
  std::vector<FiniteVolumeKernel> levels;

  int max_level() const noexcept { return static_cast<int>(levels.size()) - 1; }
  const std::vector<double>& table(int n) const { return levels.at(static_cast<std::size_t>(n)).probabilities; }
};

MarginalFamily build_marginals(const PairInteraction& interaction, const CayleyTree& tree,
                               const BoundaryField& h, int n_max,
                               std::uint64_t max_states = kDefaultMaxStates);

/// Pushforward of a table on Omega_{V_n} under restriction to V_m, m < n.
std::vector<double> project(const std::vector<double>& mu_n, const CayleyTree& tree,
                            std::size_t num_spins, int n, int m);

/// Max-norm deviation of project(mu_n) from mu_{n-1}, one residual per level.
ConsistencyCertificate check_kolmogorov_consistency(const MarginalFamily& family,
                                                    const CayleyTree& tree, double tol);

/// E[sigma(x)] under the deepest computed level.
double magnetization(const MarginalFamily& family, const CayleyTree& tree, Vertex x);

}  // namespace gibbslab
