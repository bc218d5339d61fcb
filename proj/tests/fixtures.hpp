#pragma once

#include <utility>
#include <vector>

#include "shortcycles/embedding.hpp"
#include "shortcycles/graph.hpp"
#include "shortcycles/oracle.hpp"

namespace shortcycles::testing {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

// K_n with edges listed lexicographically: (0,1), (0,2), ..., (n-2,n-1).
inline Graph complete_graph(int n) {
  EdgeList edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return build_graph(static_cast<std::size_t>(n), edges);
}

// 0-1-...-(k-1)-0, edge i joins i and i+1.
inline Graph cycle_graph(int k) {
  EdgeList edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return build_graph(static_cast<std::size_t>(k), edges);
}

inline Graph path_graph(int k) {
  EdgeList edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return build_graph(static_cast<std::size_t>(k), edges);
}

// Outer 5-cycle 0..4, spokes i-(i+5), inner pentagram on 5..9.
inline Graph petersen_graph() {
  EdgeList edges;
  for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
  for (int i = 0; i < 5; ++i) edges.emplace_back(i, i + 5);
  for (int i = 0; i < 5; ++i) edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  return build_graph(10, edges);
}

// K4 drawn with vertex 0 inside triangle 1-2-3, rotations clockwise.
// Edge ids: e01=0 e02=1 e03=2 e12=3 e13=4 e23=5.
inline Rotation planar_k4_rotation() {
  return {{0, 1, 2}, {3, 0, 4}, {5, 1, 3}, {4, 2, 5}};
}

// Rotation of a degree-two cycle graph: at vertex i, (edge i-1, edge i).
inline Rotation cycle_rotation(int k) {
  Rotation rot(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) rot[static_cast<std::size_t>(i)] = {(i + k - 1) % k, i};
  return rot;
}

inline EmbeddingScheme signed_scheme(const Graph& g, std::vector<int> signs,
                                     std::optional<Rotation> rotation = std::nullopt) {
  return validate_scheme(g, std::move(rotation), signs);
}

// Small random instances in the shape used by the property suites.
inline Instance small_instance(std::uint64_t seed, bool with_rotation = false) {
  Random rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const std::size_t n = 4 + rng.below(6);
  const std::size_t capacity = n * (n - 1) / 2 - (n - 1);
  const std::size_t extra = 1 + rng.below(std::min<std::size_t>(6, capacity));
  const double fractions[] = {0.0, 0.3, 0.5, 1.0};
  const double neg = fractions[rng.below(4)];
  return random_instance({n, extra, neg, with_rotation, seed});
}

}  // namespace shortcycles::testing
