#include "gibbslab/topology.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gibbslab/errors.hpp"

namespace gibbslab {

CayleyTree::CayleyTree(int k, int depth, std::uint64_t max_vertices)
    : k_(k), depth_(depth) {
  if (k < 1) throw std::invalid_argument("tree order k must be >= 1");
  if (depth < 0) throw std::invalid_argument("tree depth must be >= 0");

  offsets_.reserve(static_cast<std::size_t>(depth) + 2);
  offsets_.push_back(0);
  std::uint64_t width = 1;
  std::uint64_t total = 0;
  for (int n = 0; n <= depth; ++n) {
    if (n == 1) {
      width = static_cast<std::uint64_t>(k) + 1;
    } else if (n > 1) {
      width *= static_cast<std::uint64_t>(k);
    }
    total += width;
    if (width > max_vertices || total > max_vertices) {
      throw CapacityError("tree with k=" + std::to_string(k) + ", depth=" +
                          std::to_string(depth) + " exceeds " +
                          std::to_string(max_vertices) + " vertices");
    }
    offsets_.push_back(static_cast<std::size_t>(total));
  }
}

void CayleyTree::check_vertex(Vertex x) const {
  if (!contains(x)) {
    throw std::out_of_range("vertex " + std::to_string(x) + " not in tree of " +
                            std::to_string(size()) + " vertices");
  }
}

void CayleyTree::check_level(int n) const {
  if (n < 0 || n > depth_) {
    throw std::out_of_range("level " + std::to_string(n) + " outside [0, " +
                            std::to_string(depth_) + "]");
  }
}

int CayleyTree::generation(Vertex x) const {
  check_vertex(x);
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), x);
  return static_cast<int>(it - offsets_.begin()) - 1;
}

std::optional<Vertex> CayleyTree::parent(Vertex x) const {
  const int g = generation(x);
  if (g == 0) return std::nullopt;
  if (g == 1) return root();
  return offsets_[g - 1] + (x - offsets_[g]) / static_cast<std::size_t>(k_);
}

std::size_t CayleyTree::num_successors(Vertex x) const {
  const int g = generation(x);
  if (g == depth_) return 0;
  return g == 0 ? static_cast<std::size_t>(k_) + 1 : static_cast<std::size_t>(k_);
}

std::vector<Vertex> CayleyTree::successors(Vertex x) const {
  const std::size_t count = num_successors(x);
  std::vector<Vertex> out(count);
  if (count == 0) return out;
  const int g = generation(x);
  const Vertex first =
      g == 0 ? offsets_[1]
             : offsets_[g + 1] + (x - offsets_[g]) * static_cast<std::size_t>(k_);
  for (std::size_t i = 0; i < count; ++i) out[i] = first + i;
  return out;
}

std::size_t CayleyTree::sphere_size(int n) const {
  check_level(n);
  return offsets_[n + 1] - offsets_[n];
}

std::size_t CayleyTree::ball_size(int n) const {
  check_level(n);
  return offsets_[n + 1];
}

Vertex CayleyTree::sphere_begin(int n) const {
  check_level(n);
  return offsets_[n];
}

std::vector<Vertex> CayleyTree::sphere(int n) const {
  check_level(n);
  std::vector<Vertex> out(offsets_[n + 1] - offsets_[n]);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = offsets_[n] + i;
  return out;
}

std::vector<Vertex> CayleyTree::ball(int n) const {
  check_level(n);
  std::vector<Vertex> out(offsets_[n + 1]);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

int CayleyTree::distance(Vertex x, Vertex y) const {
  int gx = generation(x);
  int gy = generation(y);
  int d = 0;
  while (gx > gy) { x = *parent(x); --gx; ++d; }
  while (gy > gx) { y = *parent(y); --gy; ++d; }
  while (x != y) {
    x = *parent(x);
    y = *parent(y);
    d += 2;
  }
  return d;
}

CayleyTree build_tree(int k, int depth, std::uint64_t max_vertices) {
  return CayleyTree(k, depth, max_vertices);
}

}  // namespace gibbslab
