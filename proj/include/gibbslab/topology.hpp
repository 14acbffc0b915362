#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace gibbslab {

using Vertex = std::size_t;

/// Finite truncation of the Cayley tree of order k at depth N, rooted at x0.
///
/// Vertices are indexed breadth-first: the root is 0, then W_1, W_2, ... in
/// order, with the children of a vertex occupying a contiguous index block in
/// creation order. This indexing fixes the bit order of every configuration
/// enumeration downstream and is part of the stable interface.
///
/// The root has k+1 successors, every other vertex of generation < N has k,
/// generation-N vertices have none. The structure is purely arithmetic, so a
/// tree is cheap to copy and immutable after construction.
class CayleyTree {
 public:
  static constexpr std::uint64_t kDefaultMaxVertices = 10'000'000;

  CayleyTree(int k, int depth,
             std::uint64_t max_vertices = kDefaultMaxVertices);

  int order() const noexcept { return k_; }
  int depth() const noexcept { return depth_; }
  std::size_t size() const noexcept { return offsets_.back(); }
  Vertex root() const noexcept { return 0; }
  bool contains(Vertex x) const noexcept { return x < size(); }

  int generation(Vertex x) const;
  std::optional<Vertex> parent(Vertex x) const;

  /// S(x): the direct successors of x, away from the root.
  std::vector<Vertex> successors(Vertex x) const;
  std::size_t num_successors(Vertex x) const;

  /// W_n, in index order.
  std::vector<Vertex> sphere(int n) const;
  /// V_n = W_0 u ... u W_n, in index order.
  std::vector<Vertex> ball(int n) const;

  std::size_t sphere_size(int n) const;
  std::size_t ball_size(int n) const;
  /// Index of the first vertex of W_n. Since V_n is an index prefix,
  /// this equals |V_{n-1}|.
  Vertex sphere_begin(int n) const;

  /// Edge count of the unique path from x to y.
  int distance(Vertex x, Vertex y) const;

 private:
  void check_vertex(Vertex x) const;
  void check_level(int n) const;

  int k_;
  int depth_;
  // offsets_[n] = first index of W_n; offsets_[depth+1] = vertex count.
  std::vector<std::size_t> offsets_;
};

CayleyTree build_tree(int k, int depth,
                      std::uint64_t max_vertices = CayleyTree::kDefaultMaxVertices);

}  // namespace gibbslab
