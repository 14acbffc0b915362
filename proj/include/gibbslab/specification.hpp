#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "gibbslab/boundary_field.hpp"
#include "gibbslab/hamiltonian.hpp"
#include "gibbslab/spins.hpp"
#include "gibbslab/topology.hpp"

namespace gibbslab {

enum class KernelFlavor { configuration_boundary, field_boundary };

/// Exact probability table over Omega_{V_n} for one boundary datum.
///
/// Entry i is the configuration ConfigEnumerator(space, ball(n)).at(i); the
/// root is the most significant digit. log_z is the log-partition function of
/// the flavor's exponent.
struct FiniteVolumeKernel {
  int n = 0;
  KernelFlavor flavor = KernelFlavor::configuration_boundary;
  std::variant<Configuration, BoundaryField> boundary;
  std::size_t num_spins = 0;
  std::size_t num_sites = 0;
  std::vector<double> probabilities;
  double log_z = 0.0;

  double probability(std::uint64_t index) const { return probabilities.at(index); }
  double probability(const SpinSpace& space, const Configuration& sigma) const;
};

/// Outcome of a consistency check: per-check residuals, their maximum and a
/// verdict against the tolerance. Normalizers a(x) and log Z by level are
/// filled in by the checks that produce them.
struct ConsistencyCertificate {
  std::vector<double> residuals;
  double residual = 0.0;
  double tol = 0.0;
  bool verdict = true;
  std::map<Vertex, double> normalizers;
  std::map<int, double> log_z;
  std::optional<double> z_recursion_residual;
  std::vector<Vertex> excluded;

  void add_residual(double r);
  void finish(double tolerance);
};

/// Boltzmann kernel with a fixed boundary configuration omega on W_{n+1}:
/// weight(sigma) = -H_{V_n}(sigma omega).
FiniteVolumeKernel kernel_config_boundary(const Potential& p, const CayleyTree& tree,
                                          int n, const Configuration& omega,
                                          std::uint64_t max_states = kDefaultMaxStates);

/// Kernel with a boundary field on W_n:
/// weight(sigma) = J beta sum_{<x,y> in V_n} rho(sigma_x, sigma_y)
///               + sum_{x in W_n} rho(sigma_x, h_x).
FiniteVolumeKernel kernel_field_boundary(const PairInteraction& interaction,
                                         const CayleyTree& tree, int n,
                                         const BoundaryField& h,
                                         std::uint64_t max_states = kDefaultMaxStates);

/// Maps a boundary configuration on W_{n+1} to the kernel on V_n.
using InnerKernelFamily = std::function<FiniteVolumeKernel(const Configuration&)>;

/// zeta_m zeta_n: draw tau from `outer` (a configuration-boundary kernel on
/// V_m), then resample V_n from the inner kernel given tau outside V_n.
/// Returned as a point-mass table over Omega_{V_m}; log_z is inherited from
/// `outer`. With n == m the inner boundary is the outer one.
FiniteVolumeKernel compose(const FiniteVolumeKernel& outer, const CayleyTree& tree,
                           const SpinSpace& space, int n,
                           const InnerKernelFamily& inner,
                           std::uint64_t max_states = kDefaultMaxStates);

/// max_sigma |compose(zeta_m, zeta_n)(sigma) - zeta_m(sigma)| for the kernels
/// of `p` with boundary omega on W_{m+1}.
ConsistencyCertificate check_specification(const Potential& p, const CayleyTree& tree,
                                           int m, int n, const Configuration& omega,
                                           double tol,
                                           std::uint64_t max_states = kDefaultMaxStates);

/// Same check for an explicit outer kernel and inner family.
ConsistencyCertificate check_specification(const FiniteVolumeKernel& outer,
                                           const CayleyTree& tree,
                                           const SpinSpace& space, int n,
                                           const InnerKernelFamily& inner, double tol,
                                           std::uint64_t max_states = kDefaultMaxStates);

/// Brute-force compatibility of field kernels at levels n-1 and n:
/// max over sigma on V_{n-1} of |sum_omega zeta_n(sigma omega) - zeta_{n-1}(sigma)|.
///
/// For binary spin spaces the certificate also carries a(x) for x in W_{n-1}
/// (taken at the top spin value) and |log Z_n - log Z_{n-1} - sum log a(x)|.
ConsistencyCertificate check_compatibility_bruteforce(
    const PairInteraction& interaction, const CayleyTree& tree, int n,
    const BoundaryField& h, double tol, std::uint64_t max_states = kDefaultMaxStates);

/// sum_{y in S(x)} log sum_u exp(J beta rho(t, u) + rho(u, h_y)), t a spin index.
double log_successor_factor(const PairInteraction& interaction, const CayleyTree& tree,
                            const BoundaryField& h, Vertex x, std::size_t t);

/// log a(x) = log_successor_factor(x, t) - rho(t, h_x).
double log_normalizer(const PairInteraction& interaction, const CayleyTree& tree,
                      const BoundaryField& h, Vertex x, std::size_t t);

/// Entrywise max |a - b|; tables must have equal size.
double max_abs_difference(std::span<const double> a, std::span<const double> b);

/// log sum exp, max-shifted, with pairwise summation.
double log_sum_exp(std::span<const double> xs);

namespace detail {

/// Deterministic pairwise sum.
double pairwise_sum(std::span<const double> xs);

/// Turns log weights into probabilities in place and returns log Z.
double normalize_log_weights(std::vector<double>& log_weights);

}  // namespace detail

}  // namespace gibbslab
