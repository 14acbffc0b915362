#include "gibbslab/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace gibbslab {

PairInteraction::PairInteraction(SpinSpace space, std::vector<std::vector<double>> rho,
                                 double J, double beta)
    : space_(std::move(space)), J_(J), beta_(beta) {
  const std::size_t q = space_.size();
  if (rho.size() != q) {
    throw std::invalid_argument("rho must have one row per spin value");
  }
  rho_.reserve(q * q);
  for (const auto& row : rho) {
    if (row.size() != q) {
      throw std::invalid_argument("rho must have one column per spin value");
    }
    for (double v : row) {
      if (!std::isfinite(v)) throw std::invalid_argument("rho entries must be finite");
      rho_.push_back(v);
    }
  }
  if (!std::isfinite(J_)) throw std::invalid_argument("J must be finite");
  if (!std::isfinite(beta_) || beta_ < 0.0) {
    throw std::invalid_argument("beta must be finite and non-negative");
  }
}

PairInteraction PairInteraction::ising(double J, double beta) {
  return PairInteraction(SpinSpace::ising(), {{1.0, -1.0}, {-1.0, 1.0}}, J, beta);
}

PairInteraction PairInteraction::potts(int q, double J, double beta) {
  auto space = SpinSpace::potts(q);
  std::vector<std::vector<double>> rho(space.size(), std::vector<double>(space.size()));
  for (std::size_t i = 0; i < space.size(); ++i) rho[i][i] = 1.0;
  return PairInteraction(std::move(space), std::move(rho), J, beta);
}

bool PairInteraction::is_ising() const {
  if (space_ != SpinSpace::ising()) return false;
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      if (rho(a, b) != space_.value(a) * space_.value(b)) return false;
    }
  }
  return true;
}

PairInteraction PairInteraction::with_parameters(double J, double beta) const {
  PairInteraction copy = *this;
  copy.J_ = J;
  copy.beta_ = beta;
  if (!std::isfinite(J) || !std::isfinite(beta) || beta < 0.0) {
    throw std::invalid_argument("J must be finite and beta non-negative");
  }
  return copy;
}

double Potential::evaluate_config(const CayleyTree& tree, std::span<const Vertex> B,
                                  const Configuration& sigma) const {
  Vertex top = 0;
  for (Vertex x : B) top = std::max(top, x + 1);
  std::vector<int> spins(top, 0);
  for (Vertex x : B) spins[x] = static_cast<int>(space().index_of(sigma.at(x)));
  return evaluate(tree, B, spins);
}

double PairPotential::evaluate(const CayleyTree& tree, std::span<const Vertex> B,
                               std::span<const int> spins) const {
  if (B.size() != 2) return 0.0;
  Vertex x = std::min(B[0], B[1]);
  Vertex y = std::max(B[0], B[1]);
  if (tree.parent(y) != x) return 0.0;
  return -interaction_.coupling() *
         interaction_.rho(static_cast<std::size_t>(spins[x]),
                          static_cast<std::size_t>(spins[y]));
}

PairPotential pair_potential(const PairInteraction& interaction) {
  return PairPotential(interaction);
}

int diameter(const CayleyTree& tree, std::span<const Vertex> B) {
  int d = 0;
  for (std::size_t i = 0; i < B.size(); ++i) {
    for (std::size_t j = i + 1; j < B.size(); ++j) {
      d = std::max(d, tree.distance(B[i], B[j]));
    }
  }
  return d;
}

namespace {

// Vertices y > x inside [0, region) within distance R of x.
std::vector<Vertex> nearby(const CayleyTree& tree, Vertex x, std::size_t region, int R) {
  std::vector<Vertex> out;
  std::vector<std::pair<Vertex, int>> stack{{x, 0}};
  std::vector<Vertex> seen{x};
  while (!stack.empty()) {
    auto [v, d] = stack.back();
    stack.pop_back();
    if (v > x) out.push_back(v);
    if (d == R) continue;
    std::vector<Vertex> next = tree.successors(v);
    if (auto p = tree.parent(v)) next.push_back(*p);
    for (Vertex w : next) {
      if (w >= region || std::find(seen.begin(), seen.end(), w) != seen.end()) continue;
      seen.push_back(w);
      stack.emplace_back(w, d + 1);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::vector<Vertex>> local_sets(const CayleyTree& tree,
                                            std::size_t region_size,
                                            std::size_t meet_size, int max_diam) {
  if (region_size > tree.size() || meet_size > region_size) {
    throw std::out_of_range("local set region exceeds the tree");
  }
  std::vector<std::vector<Vertex>> sets;
  for (Vertex x = 0; x < meet_size; ++x) {
    const std::vector<Vertex> cand = nearby(tree, x, region_size, max_diam);
    std::vector<Vertex> current{x};
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
      sets.push_back(current);
      for (std::size_t i = from; i < cand.size(); ++i) {
        bool ok = true;
        for (Vertex z : current) {
          if (tree.distance(z, cand[i]) > max_diam) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        current.push_back(cand[i]);
        grow(i + 1);
        current.pop_back();
      }
    };
    grow(0);
  }
  return sets;
}

bool is_finite_range(const Potential& p, const CayleyTree& tree, int R,
                     std::size_t max_set_size, std::uint64_t max_checks) {
  if (R < 0) throw std::invalid_argument("range bound must be >= 0");
  const std::size_t nv = tree.size();
  const std::size_t q = p.space().size();
  std::vector<int> spins(nv, 0);
  std::uint64_t checks = 0;

  std::vector<Vertex> B;
  std::function<bool(Vertex)> visit = [&](Vertex from) -> bool {
    if (B.size() >= 2 && diameter(tree, B) > R) {
      const std::uint64_t n_states = checked_state_count(q, B.size(), max_checks);
      checks += n_states;
      if (checks > max_checks) {
        throw CapacityError("finite-range check exceeds " + std::to_string(max_checks) +
                            " evaluations");
      }
      std::vector<int> digits(B.size());
      for (std::uint64_t s = 0; s < n_states; ++s) {
        detail::decode_digits(s, q, digits);
        for (std::size_t i = 0; i < B.size(); ++i) spins[B[i]] = digits[i];
        if (p.evaluate(tree, B, spins) != 0.0) return false;
      }
    }
    if (B.size() == max_set_size) return true;
    for (Vertex y = from; y < nv; ++y) {
      B.push_back(y);
      const bool ok = visit(y + 1);
      B.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return visit(0);
}

namespace detail {

void densify(const SpinSpace& space, const Configuration& c, Vertex first, Vertex last,
             std::span<int> spins) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Vertex x = c.support()[i];
    if (x < spins.size()) spins[x] = static_cast<int>(space.index_of(c.values()[i]));
  }
  for (Vertex x = first; x < last; ++x) {
    if (!c.contains(x)) {
      throw std::invalid_argument("configuration does not cover vertex " +
                                  std::to_string(x));
    }
  }
}

}  // namespace detail

namespace {

std::size_t prepare_region(const SpinSpace& space, const CayleyTree& tree, int n,
                           const Configuration& sigma,
                           const std::optional<Configuration>& boundary,
                           std::vector<int>& spins) {
  const std::size_t inner = tree.ball_size(n);
  std::size_t region = inner;
  if (boundary) {
    if (n + 1 > tree.depth()) {
      throw std::invalid_argument("boundary sphere W_" + std::to_string(n + 1) +
                                  " lies beyond the tree depth");
    }
    region = tree.ball_size(n + 1);
  }
  spins.assign(region, 0);
  detail::densify(space, sigma, 0, inner, spins);
  if (boundary) detail::densify(space, *boundary, inner, region, spins);
  return region;
}

}  // namespace

double hamiltonian_volume(const Potential& p, const CayleyTree& tree, int n,
                          const Configuration& sigma,
                          const std::optional<Configuration>& boundary) {
  std::vector<int> spins;
  const std::size_t region = prepare_region(p.space(), tree, n, sigma, boundary, spins);
  double h = 0.0;
  for (const auto& B : local_sets(tree, region, tree.ball_size(n), p.range())) {
    h += p.evaluate(tree, B, spins);
  }
  return h;
}

double edge_hamiltonian(const PairInteraction& interaction, const CayleyTree& tree,
                        int n, const Configuration& sigma,
                        const std::optional<Configuration>& boundary) {
  std::vector<int> spins;
  const std::size_t region =
      prepare_region(interaction.space(), tree, n, sigma, boundary, spins);
  double sum = 0.0;
  for (Vertex y = 1; y < region; ++y) {
    const Vertex x = *tree.parent(y);
    sum += interaction.rho(static_cast<std::size_t>(spins[x]),
                           static_cast<std::size_t>(spins[y]));
  }
  return -interaction.coupling() * sum;
}

}  // namespace gibbslab
