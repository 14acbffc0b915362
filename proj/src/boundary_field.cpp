#include "gibbslab/boundary_field.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gibbslab {

namespace {

void require_finite(double h) {
  if (!std::isfinite(h)) throw std::invalid_argument("field values must be finite");
}

}  // namespace

BoundaryField BoundaryField::homogeneous(double h) {
  require_finite(h);
  BoundaryField f;
  f.base_ = h;
  return f;
}

BoundaryField BoundaryField::per_vertex(std::map<Vertex, double> values) {
  for (const auto& [x, h] : values) require_finite(h);
  BoundaryField f;
  f.overrides_ = std::move(values);
  return f;
}

std::optional<double> BoundaryField::get(Vertex x) const {
  if (auto it = overrides_.find(x); it != overrides_.end()) return it->second;
  return base_;
}

double BoundaryField::at(Vertex x) const {
  if (auto h = get(x)) return *h;
  throw std::out_of_range("field undefined at vertex " + std::to_string(x));
}

bool BoundaryField::covers_sphere(const CayleyTree& tree, int n) const {
  if (base_) return true;
  const Vertex first = tree.sphere_begin(n);
  const Vertex last = first + tree.sphere_size(n);
  for (Vertex x = first; x < last; ++x) {
    if (!overrides_.contains(x)) return false;
  }
  return true;
}

BoundaryField BoundaryField::with_value(Vertex x, double h) const {
  require_finite(h);
  BoundaryField f = *this;
  f.overrides_[x] = h;
  return f;
}

BoundaryField BoundaryField::negated() const {
  BoundaryField f;
  if (base_) f.base_ = -*base_;
  for (const auto& [x, h] : overrides_) f.overrides_.emplace(x, -h);
  return f;
}

}  // namespace gibbslab
