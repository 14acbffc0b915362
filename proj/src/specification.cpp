#include "gibbslab/specification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace gibbslab {

namespace detail {

double pairwise_sum(std::span<const double> xs) {
  if (xs.size() <= 16) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

double normalize_log_weights(std::vector<double>& w) {
  if (w.empty()) throw std::invalid_argument("empty weight table");
  const double top = *std::max_element(w.begin(), w.end());
  if (!std::isfinite(top)) throw std::domain_error("kernel weights are not finite");
  for (double& x : w) x = std::exp(x - top);
  const double total = pairwise_sum(w);
  for (double& x : w) x /= total;
  return top + std::log(total);
}

}  // namespace detail

double log_sum_exp(std::span<const double> xs) {
  if (xs.empty()) return -std::numeric_limits<double>::infinity();
  const double top = *std::max_element(xs.begin(), xs.end());
  if (!std::isfinite(top)) return top;
  std::vector<double> e(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) e[i] = std::exp(xs[i] - top);
  return top + std::log(detail::pairwise_sum(e));
}

double max_abs_difference(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("table sizes differ");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

double FiniteVolumeKernel::probability(const SpinSpace& space,
                                       const Configuration& sigma) const {
  std::vector<Vertex> support(num_sites);
  for (std::size_t i = 0; i < num_sites; ++i) support[i] = i;
  ConfigEnumerator e(space, std::move(support), probabilities.size());
  return probabilities.at(e.index_of(sigma));
}

void ConsistencyCertificate::add_residual(double r) {
  residuals.push_back(r);
  residual = std::max(residual, r);
}

void ConsistencyCertificate::finish(double tolerance) {
  tol = tolerance;
  verdict = residual <= tol;
  for (double r : residuals) {
    if (std::isnan(r)) verdict = false;
  }
}

FiniteVolumeKernel kernel_config_boundary(const Potential& p, const CayleyTree& tree,
                                          int n, const Configuration& omega,
                                          std::uint64_t max_states) {
  if (n < 0 || n + 1 > tree.depth()) {
    throw std::invalid_argument("configuration-boundary kernel at level " +
                                std::to_string(n) + " needs depth >= " +
                                std::to_string(n + 1));
  }
  const SpinSpace& space = p.space();
  const std::size_t q = space.size();
  const std::size_t inner = tree.ball_size(n);
  const std::size_t region = tree.ball_size(n + 1);
  const std::uint64_t count = checked_state_count(q, inner, max_states);

  for (Vertex x : omega.support()) {
    if (x < inner) {
      throw std::invalid_argument("boundary configuration overlaps the volume at vertex " +
                                  std::to_string(x));
    }
  }
  std::vector<int> spins(region, 0);
  detail::densify(space, omega, inner, region, spins);

  std::vector<Vertex> parent(region, 0);
  for (Vertex y = 1; y < region; ++y) parent[y] = *tree.parent(y);

  std::vector<double> w(count);
  std::span<int> volume(spins.data(), inner);
  if (const PairInteraction* pair = p.pair_interaction()) {
    const double c = pair->coupling();
    for (std::uint64_t i = 0; i < count; ++i) {
      detail::decode_digits(i, q, volume);
      double s = 0.0;
      for (Vertex y = 1; y < region; ++y) {
        s += pair->rho(static_cast<std::size_t>(spins[parent[y]]),
                       static_cast<std::size_t>(spins[y]));
      }
      w[i] = c * s;
    }
  } else {
    const auto sets = local_sets(tree, region, inner, p.range());
    for (std::uint64_t i = 0; i < count; ++i) {
      detail::decode_digits(i, q, volume);
      double h = 0.0;
      for (const auto& B : sets) h += p.evaluate(tree, B, spins);
      w[i] = -h;
    }
  }

  FiniteVolumeKernel k;
  k.n = n;
  k.flavor = KernelFlavor::configuration_boundary;
  k.boundary = restrict(omega, tree.sphere(n + 1));
  k.num_spins = q;
  k.num_sites = inner;
  k.log_z = detail::normalize_log_weights(w);
  k.probabilities = std::move(w);
  return k;
}

FiniteVolumeKernel kernel_field_boundary(const PairInteraction& interaction,
                                         const CayleyTree& tree, int n,
                                         const BoundaryField& h,
                                         std::uint64_t max_states) {
  if (n < 0 || n > tree.depth()) {
    throw std::invalid_argument("field-boundary kernel level " + std::to_string(n) +
                                " outside the tree");
  }
  if (!h.covers_sphere(tree, n)) {
    throw std::invalid_argument("field is not defined on all of W_" + std::to_string(n));
  }
  const std::size_t q = interaction.num_spins();
  const std::size_t sites = tree.ball_size(n);
  const Vertex first = tree.sphere_begin(n);
  const std::uint64_t count = checked_state_count(q, sites, max_states);

  std::vector<double> field((sites - first) * q);
  for (Vertex x = first; x < sites; ++x) {
    const double hx = h.at(x);
    for (std::size_t s = 0; s < q; ++s) field[(x - first) * q + s] = interaction.field_term(s, hx);
  }
  std::vector<Vertex> parent(sites, 0);
  for (Vertex y = 1; y < sites; ++y) parent[y] = *tree.parent(y);

  const double c = interaction.coupling();
  std::vector<int> spins(sites, 0);
  std::vector<double> w(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    detail::decode_digits(i, q, spins);
    double pairs = 0.0;
    for (Vertex y = 1; y < sites; ++y) {
      pairs += interaction.rho(static_cast<std::size_t>(spins[parent[y]]),
                               static_cast<std::size_t>(spins[y]));
    }
    double fields = 0.0;
    for (Vertex x = first; x < sites; ++x) {
      fields += field[(x - first) * q + static_cast<std::size_t>(spins[x])];
    }
    w[i] = c * pairs + fields;
  }

  FiniteVolumeKernel k;
  k.n = n;
  k.flavor = KernelFlavor::field_boundary;
  k.boundary = h;
  k.num_spins = q;
  k.num_sites = sites;
  k.log_z = detail::normalize_log_weights(w);
  k.probabilities = std::move(w);
  return k;
}

FiniteVolumeKernel compose(const FiniteVolumeKernel& outer, const CayleyTree& tree,
                           const SpinSpace& space, int n,
                           const InnerKernelFamily& inner,
                           std::uint64_t max_states) {
  if (outer.flavor != KernelFlavor::configuration_boundary) {
    throw std::invalid_argument("composition needs a configuration-boundary outer kernel");
  }
  const int m = outer.n;
  if (n < 0 || n > m) {
    throw std::invalid_argument("inner volume V_" + std::to_string(n) +
                                " is not inside V_" + std::to_string(m));
  }
  const std::size_t q = space.size();
  if (outer.num_spins != q || outer.num_sites != tree.ball_size(m)) {
    throw std::invalid_argument("outer kernel does not match tree and spin space");
  }
  const std::size_t sites_m = tree.ball_size(m);
  const std::size_t sites_n = tree.ball_size(n);
  const std::uint64_t inner_count = checked_state_count(q, sites_n, max_states);
  const std::uint64_t outer_count = checked_state_count(q, sites_m, max_states);
  const std::uint64_t suffix_count = outer_count / inner_count;

  // Marginal of the outer kernel on V_m \ V_n.
  std::vector<double> marginal(suffix_count, 0.0);
  for (std::uint64_t p = 0; p < inner_count; ++p) {
    for (std::uint64_t u = 0; u < suffix_count; ++u) {
      marginal[u] += outer.probabilities[p * suffix_count + u];
    }
  }

  auto checked = [&](FiniteVolumeKernel k) {
    if (k.probabilities.size() != inner_count) {
      throw std::invalid_argument("inner kernel has the wrong number of entries");
    }
    return std::move(k.probabilities);
  };

  FiniteVolumeKernel out;
  out.n = m;
  out.flavor = outer.flavor;
  out.boundary = outer.boundary;
  out.num_spins = q;
  out.num_sites = sites_m;
  out.log_z = outer.log_z;
  out.probabilities.assign(outer_count, 0.0);

  if (n == m) {
    const auto table = checked(inner(std::get<Configuration>(outer.boundary)));
    for (std::uint64_t p = 0; p < inner_count; ++p) out.probabilities[p] = table[p];
    return out;
  }

  // Only W_{n+1}, the leading digits of the suffix, reaches the inner kernel.
  const std::uint64_t tail = detail::ipow(q, sites_m - tree.ball_size(n + 1));
  const std::uint64_t n_boundaries = suffix_count / tail;
  ConfigEnumerator boundaries(space, tree.sphere(n + 1), max_states);
  std::vector<std::vector<double>> cache(n_boundaries);
  for (std::uint64_t u = 0; u < suffix_count; ++u) {
    const std::uint64_t b = u / tail;
    if (cache[b].empty()) cache[b] = checked(inner(boundaries.at(b)));
    const auto& table = cache[b];
    for (std::uint64_t p = 0; p < inner_count; ++p) {
      out.probabilities[p * suffix_count + u] = marginal[u] * table[p];
    }
  }
  return out;
}

ConsistencyCertificate check_specification(const FiniteVolumeKernel& outer,
                                           const CayleyTree& tree,
                                           const SpinSpace& space, int n,
                                           const InnerKernelFamily& inner, double tol,
                                           std::uint64_t max_states) {
  const FiniteVolumeKernel composed = compose(outer, tree, space, n, inner, max_states);
  ConsistencyCertificate cert;
  cert.add_residual(max_abs_difference(composed.probabilities, outer.probabilities));
  cert.log_z[outer.n] = outer.log_z;
  cert.finish(tol);
  return cert;
}

ConsistencyCertificate check_specification(const Potential& p, const CayleyTree& tree,
                                           int m, int n, const Configuration& omega,
                                           double tol, std::uint64_t max_states) {
  if (!(0 <= n && n < m && m <= tree.depth() - 1)) {
    throw std::invalid_argument("specification check needs 0 <= n < m <= depth - 1");
  }
  const FiniteVolumeKernel outer = kernel_config_boundary(p, tree, m, omega, max_states);
  auto inner = [&](const Configuration& b) {
    return kernel_config_boundary(p, tree, n, b, max_states);
  };
  ConsistencyCertificate cert =
      check_specification(outer, tree, p.space(), n, inner, tol, max_states);
  return cert;
}

double log_successor_factor(const PairInteraction& interaction, const CayleyTree& tree,
                            const BoundaryField& h, Vertex x, std::size_t t) {
  const std::size_t q = interaction.num_spins();
  const double c = interaction.coupling();
  std::vector<double> terms(q);
  double total = 0.0;
  for (Vertex y : tree.successors(x)) {
    const double hy = h.at(y);
    for (std::size_t u = 0; u < q; ++u) {
      terms[u] = c * interaction.rho(t, u) + interaction.field_term(u, hy);
    }
    total += log_sum_exp(terms);
  }
  return total;
}

double log_normalizer(const PairInteraction& interaction, const CayleyTree& tree,
                      const BoundaryField& h, Vertex x, std::size_t t) {
  return log_successor_factor(interaction, tree, h, x, t) -
         interaction.field_term(t, h.at(x));
}

ConsistencyCertificate check_compatibility_bruteforce(const PairInteraction& interaction,
                                                      const CayleyTree& tree, int n,
                                                      const BoundaryField& h, double tol,
                                                      std::uint64_t max_states) {
  if (n < 1 || n > tree.depth()) {
    throw std::invalid_argument("compatibility check needs 1 <= n <= depth");
  }
  const FiniteVolumeKernel upper = kernel_field_boundary(interaction, tree, n, h, max_states);
  const FiniteVolumeKernel lower =
      kernel_field_boundary(interaction, tree, n - 1, h, max_states);

  const std::uint64_t outer_states = lower.probabilities.size();
  const std::uint64_t shell = upper.probabilities.size() / outer_states;
  std::vector<double> projected(outer_states);
  for (std::uint64_t p = 0; p < outer_states; ++p) {
    projected[p] = detail::pairwise_sum(
        std::span<const double>(upper.probabilities).subspan(p * shell, shell));
  }

  ConsistencyCertificate cert;
  cert.add_residual(max_abs_difference(projected, lower.probabilities));
  cert.log_z[n - 1] = lower.log_z;
  cert.log_z[n] = upper.log_z;

  if (interaction.space().is_binary()) {
    const std::size_t top = 1;
    double sum_log_a = 0.0;
    for (Vertex x : tree.sphere(n - 1)) {
      const double la = log_normalizer(interaction, tree, h, x, top);
      cert.normalizers[x] = std::exp(la);
      sum_log_a += la;
    }
    cert.z_recursion_residual = std::abs(upper.log_z - lower.log_z - sum_log_a);
  }
  cert.finish(tol);
  return cert;
}

}  // namespace gibbslab
