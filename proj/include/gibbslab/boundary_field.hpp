#pragma once

#include <map>
#include <optional>

#include "gibbslab/topology.hpp"

namespace gibbslab {

/// Real field h: V -> R entering the kernels on the outer sphere.
///
/// Either homogeneous (one value everywhere) or per-vertex. A homogeneous
/// field may carry per-vertex overrides, which is how a single-site
/// perturbation of a translation-invariant field is expressed.
class BoundaryField {
 public:
  static BoundaryField homogeneous(double h);
  static BoundaryField per_vertex(std::map<Vertex, double> values);

  bool is_homogeneous() const noexcept { return base_.has_value() && overrides_.empty(); }
  std::optional<double> base() const noexcept { return base_; }
  const std::map<Vertex, double>& overrides() const noexcept { return overrides_; }

  std::optional<double> get(Vertex x) const;
  /// Throws std::out_of_range when the field is undefined at x.
  double at(Vertex x) const;
  /// True if h is defined on every vertex of W_n.
  bool covers_sphere(const CayleyTree& tree, int n) const;

  BoundaryField with_value(Vertex x, double h) const;
  BoundaryField negated() const;

 private:
  std::optional<double> base_;
  std::map<Vertex, double> overrides_;
};

}  // namespace gibbslab
