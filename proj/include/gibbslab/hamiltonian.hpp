#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gibbslab/spins.hpp"
#include "gibbslab/topology.hpp"

namespace gibbslab {

/// Nearest-neighbour model: the rho table over Phi x Phi, coupling J and
/// inverse temperature beta.
///
/// rho is evaluated with the parent spin first, rho(sigma(parent), sigma(child)).
/// A real-valued external field h enters as h * rho(s, max Phi); for Ising
/// that is the bilinear s*h, for Potts it is h * delta(s, q).
class PairInteraction {
 public:
  PairInteraction(SpinSpace space, std::vector<std::vector<double>> rho, double J,
                  double beta);

  static PairInteraction ising(double J, double beta);
  /// Kronecker rho on {1, ..., q}.
  static PairInteraction potts(int q, double J, double beta);

  const SpinSpace& space() const noexcept { return space_; }
  std::size_t num_spins() const noexcept { return space_.size(); }
  double J() const noexcept { return J_; }
  double beta() const noexcept { return beta_; }
  double coupling() const noexcept { return J_ * beta_; }

  /// rho by spin index.
  double rho(std::size_t a, std::size_t b) const { return rho_[a * space_.size() + b]; }
  double field_term(std::size_t s, double h) const {
    return h * rho(s, space_.size() - 1);
  }

  /// True when the model is rho(a,b) = a*b on {-1,+1}.
  bool is_ising() const;

  PairInteraction with_parameters(double J, double beta) const;

 private:
  SpinSpace space_;
  std::vector<double> rho_;
  double J_;
  double beta_;
};

/// A family {P_B} of local energy terms over finite vertex sets, with a
/// declared range: P_B must vanish whenever diam(B) exceeds range().
///
/// `spins` is a dense per-vertex array of spin indices; only entries for
/// vertices in B may be read.
class Potential {
 public:
  virtual ~Potential() = default;

  virtual const SpinSpace& space() const = 0;
  virtual int range() const = 0;
  virtual double evaluate(const CayleyTree& tree, std::span<const Vertex> B,
                          std::span<const int> spins) const = 0;

  /// P_B on a configuration covering B.
  double evaluate_config(const CayleyTree& tree, std::span<const Vertex> B,
                         const Configuration& sigma) const;

  /// Non-null for nearest-neighbour pair potentials; enables the edge-sum path.
  virtual const PairInteraction* pair_interaction() const noexcept { return nullptr; }
};

/// P_B = -beta * J * rho(sigma(x), sigma(y)) on edges B = <x,y>, zero otherwise.
class PairPotential final : public Potential {
 public:
  explicit PairPotential(PairInteraction interaction)
      : interaction_(std::move(interaction)) {}

  const SpinSpace& space() const override { return interaction_.space(); }
  int range() const override { return 1; }
  double evaluate(const CayleyTree& tree, std::span<const Vertex> B,
                  std::span<const int> spins) const override;
  const PairInteraction* pair_interaction() const noexcept override {
    return &interaction_;
  }

  const PairInteraction& interaction() const noexcept { return interaction_; }

 private:
  PairInteraction interaction_;
};

/// User-supplied potential; mainly for counterexamples and custom models.
class FunctionPotential final : public Potential {
 public:
  using Fn = std::function<double(const CayleyTree&, std::span<const Vertex>,
                                  std::span<const int>)>;

  FunctionPotential(SpinSpace space, int declared_range, Fn fn)
      : space_(std::move(space)), range_(declared_range), fn_(std::move(fn)) {}

  const SpinSpace& space() const override { return space_; }
  int range() const override { return range_; }
  double evaluate(const CayleyTree& tree, std::span<const Vertex> B,
                  std::span<const int> spins) const override {
    return fn_(tree, B, spins);
  }

 private:
  SpinSpace space_;
  int range_;
  Fn fn_;
};

PairPotential pair_potential(const PairInteraction& interaction);

/// Diameter of a vertex set (0 for singletons and the empty set).
int diameter(const CayleyTree& tree, std::span<const Vertex> B);

/// All vertex sets B inside the index prefix [0, region_size) with
/// min(B) < meet_size and diam(B) <= max_diam. Since V_n is an index prefix,
/// meet_size = |V_n| selects exactly the sets meeting V_n.
std::vector<std::vector<Vertex>> local_sets(const CayleyTree& tree,
                                            std::size_t region_size,
                                            std::size_t meet_size, int max_diam);

/// Checks P_B == 0 for every B with diam(B) > R, over all vertex subsets of
/// the tree of size 2..max_set_size and every spin assignment on B.
bool is_finite_range(const Potential& p, const CayleyTree& tree, int R,
                     std::size_t max_set_size = 3,
                     std::uint64_t max_checks = kDefaultMaxStates);

/// H_{V_n}(sigma) = sum of P_B over the local sets B meeting V_n.
///
/// With a boundary on W_{n+1} the sets may reach into the boundary sphere and
/// are evaluated on merge(sigma, boundary); without one (free boundary) only
/// sets inside V_n count.
double hamiltonian_volume(const Potential& p, const CayleyTree& tree, int n,
                          const Configuration& sigma,
                          const std::optional<Configuration>& boundary);

/// The same energy for a pair interaction, by iterating the tree edges directly.
double edge_hamiltonian(const PairInteraction& interaction, const CayleyTree& tree,
                        int n, const Configuration& sigma,
                        const std::optional<Configuration>& boundary);

namespace detail {

/// Fills spins[x] for every x in the support of c that lies in [0, spins.size()).
/// Throws if some vertex of [first, last) is not covered.
void densify(const SpinSpace& space, const Configuration& c, Vertex first,
             Vertex last, std::span<int> spins);

}  // namespace detail

}  // namespace gibbslab
