#include "gibbslab/measures.hpp"

#include <stdexcept>
#include <string>

namespace gibbslab {

MarginalFamily build_marginals(const PairInteraction& interaction, const CayleyTree& tree,
                               const BoundaryField& h, int n_max,
                               std::uint64_t max_states) {
  if (n_max < 0 || n_max > tree.depth()) {
    throw std::invalid_argument("marginal depth " + std::to_string(n_max) +
                                " outside the tree");
  }
  checked_state_count(interaction.num_spins(), tree.ball_size(n_max), max_states);
  MarginalFamily family{interaction, h, {}};
  family.levels.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    family.levels.push_back(kernel_field_boundary(interaction, tree, n, h, max_states));
  }
  return family;
}

std::vector<double> project(const std::vector<double>& mu_n, const CayleyTree& tree,
                            std::size_t num_spins, int n, int m) {
  if (m < 0 || m >= n) {
    throw std::invalid_argument("projection needs 0 <= m < n");
  }
  const std::uint64_t expected = detail::ipow(num_spins, tree.ball_size(n));
  if (mu_n.size() != expected) {
    throw std::invalid_argument("table size does not match |Phi|^|V_n|");
  }
  // V_m is an index prefix of V_n, so restriction is integer division.
  const std::uint64_t block = detail::ipow(num_spins, tree.ball_size(n) - tree.ball_size(m));
  std::vector<double> out(mu_n.size() / block);
  for (std::size_t p = 0; p < out.size(); ++p) {
    out[p] = detail::pairwise_sum(std::span<const double>(mu_n).subspan(p * block, block));
  }
  return out;
}

ConsistencyCertificate check_kolmogorov_consistency(const MarginalFamily& family,
                                                    const CayleyTree& tree, double tol) {
  if (family.levels.size() < 2) {
    throw std::invalid_argument("consistency needs at least two levels");
  }
  ConsistencyCertificate cert;
  const std::size_t q = family.interaction.num_spins();
  for (int n = 1; n <= family.max_level(); ++n) {
    const auto projected = project(family.table(n), tree, q, n, n - 1);
    cert.add_residual(max_abs_difference(projected, family.table(n - 1)));
  }
  for (const auto& level : family.levels) cert.log_z[level.n] = level.log_z;
  cert.finish(tol);
  return cert;
}

double magnetization(const MarginalFamily& family, const CayleyTree& tree, Vertex x) {
  if (family.levels.empty()) throw std::invalid_argument("empty marginal family");
  const int level = family.max_level();
  if (!tree.contains(x) || tree.generation(x) > level) {
    throw std::out_of_range("vertex " + std::to_string(x) +
                            " lies outside the computed volumes");
  }
  const auto& mu = family.table(level);
  const SpinSpace& space = family.interaction.space();
  const std::size_t q = space.size();
  // Digit of x in the lexicographic index: (i / stride) % q.
  const std::uint64_t stride = detail::ipow(q, tree.ball_size(level) - 1 - x);
  std::vector<double> per_value(q, 0.0);
  for (std::uint64_t i = 0; i < mu.size(); ++i) {
    per_value[(i / stride) % q] += mu[i];
  }
  double m = 0.0;
  for (std::size_t s = 0; s < q; ++s) m += space.value(s) * per_value[s];
  return m;
}

}  // namespace gibbslab
