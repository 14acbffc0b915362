#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "gibbslab/errors.hpp"
#include "gibbslab/topology.hpp"

namespace gibbslab {

/// Finite spin space Phi: strictly increasing, finite real values.
class SpinSpace {
 public:
  explicit SpinSpace(std::vector<double> values);

  static SpinSpace ising();        // {-1, +1}
  static SpinSpace potts(int q);   // {1, ..., q}

  std::size_t size() const noexcept { return values_.size(); }
  double value(std::size_t index) const { return values_.at(index); }
  const std::vector<double>& values() const noexcept { return values_; }
  bool is_binary() const noexcept { return values_.size() == 2; }

  /// Position of `v` in the value order, or nullopt if v is not a spin value.
  std::optional<std::size_t> find(double v) const;
  /// Like find(), but throws std::invalid_argument.
  std::size_t index_of(double v) const;

  bool operator==(const SpinSpace&) const = default;

 private:
  std::vector<double> values_;
};

/// A spin assignment on a finite vertex set A (the support). Also used as the
/// cylinder constraint sigma|_A = sigma_A.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(const std::map<Vertex, double>& assignment);
  /// `support` must be strictly increasing and match `values` in length.
  Configuration(std::vector<Vertex> support, std::vector<double> values);

  /// Every vertex of `support` set to `value`.
  static Configuration uniform(std::span<const Vertex> support, double value);

  const std::vector<Vertex>& support() const noexcept { return support_; }
  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return support_.size(); }
  bool empty() const noexcept { return support_.empty(); }

  bool contains(Vertex x) const;
  std::optional<double> get(Vertex x) const;
  /// Throws std::out_of_range when x is outside the support.
  double at(Vertex x) const;

  /// Throws std::invalid_argument if any value is not in `space`.
  void validate(const SpinSpace& space) const;

  /// Global spin flip v -> -v (meaningful for symmetric spaces like Ising).
  Configuration negated() const;

  std::map<Vertex, double> to_map() const;

  bool operator==(const Configuration&) const = default;

 private:
  std::vector<Vertex> support_;
  std::vector<double> values_;
};

/// Disjoint union of two configurations.
Configuration merge(const Configuration& a, const Configuration& b);

/// pi_A: restriction of c to A, which must be a subset of the support.
Configuration restrict(const Configuration& c, std::span<const Vertex> A);

/// Pointwise order: a <= b iff a(x) <= b(x) for every x. Supports must agree.
bool leq(const Configuration& a, const Configuration& b);

/// Pointwise supremum of a non-empty family of equal-support configurations.
Configuration supremum(std::span<const Configuration> family);

/// Lazy lexicographic enumeration of Phi^A.
///
/// The first vertex of A (lowest index) is the most significant digit and
/// digits follow the SpinSpace value order, so index 0 is the all-minimum
/// configuration.
class ConfigEnumerator {
 public:
  ConfigEnumerator(SpinSpace space, std::vector<Vertex> support,
                   std::uint64_t max_states = kDefaultMaxStates);

  std::uint64_t count() const noexcept { return count_; }
  const std::vector<Vertex>& support() const noexcept { return support_; }

  Configuration at(std::uint64_t index) const;
  std::uint64_t index_of(const Configuration& c) const;

 private:
  SpinSpace space_;
  std::vector<Vertex> support_;
  std::uint64_t count_;
};

/// All |Phi|^|A| configurations on A in enumeration order.
std::vector<Configuration> enumerate_configs(
    const SpinSpace& space, std::span<const Vertex> A,
    std::uint64_t max_states = kDefaultMaxStates);

namespace detail {

/// Writes the base-q digits of `index` into `digits` (most significant first).
inline void decode_digits(std::uint64_t index, std::size_t q,
                          std::span<int> digits) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    digits[i] = static_cast<int>(index % q);
    index /= q;
  }
}

inline std::uint64_t ipow(std::uint64_t base, std::size_t exponent) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exponent; ++i) r *= base;
  return r;
}

}  // namespace detail

}  // namespace gibbslab
