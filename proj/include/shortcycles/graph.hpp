#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace shortcycles {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr EdgeId kNoEdge = -1;

struct Endpoints {
  VertexId u;
  VertexId v;

  VertexId other(VertexId w) const noexcept { return w == u ? v : u; }
  bool operator==(const Endpoints&) const = default;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;

  auto operator<=>(const Incidence&) const = default;
};

/// Simple undirected graph with dense vertex ids 0..n-1 and edge ids equal to
/// input order. Adjacency lists are sorted by neighbor id; every traversal in
/// the library relies on that order for reproducible output.
///
/// Construct through build_graph(), which rejects loops, parallel edges and
/// out-of-range endpoints. Connectivity is not enforced here.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Endpoints& endpoints(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Endpoints> edges() const noexcept { return edges_; }
  std::span<const Incidence> neighbors(VertexId v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  // Edge id joining u and v, or kNoEdge.
  EdgeId find_edge(VertexId u, VertexId v) const;

  // Dimension of the cycle space for a connected graph: m - n + 1.
  std::size_t cyclomatic_number() const noexcept {
    return edges_.size() + 1 - adjacency_.size();
  }

  bool operator==(const Graph&) const = default;

 private:
  friend Graph build_graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edge_list);

  std::vector<Endpoints> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

Graph build_graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edge_list);

bool is_connected(const Graph& g);

/// Rooted breadth-first-search tree. Frontier is FIFO, neighbors are scanned
/// in ascending adjacency order and the first discoverer becomes the parent.
class BfsTree {
 public:
  VertexId root() const noexcept { return root_; }
  std::size_t vertex_count() const noexcept { return depth_.size(); }

  // kNoEdge for the root and for vertices not reached.
  EdgeId parent_edge(VertexId v) const { return parent_edge_[static_cast<std::size_t>(v)]; }
  // -1 for the root and for vertices not reached.
  VertexId parent(VertexId v) const { return parent_[static_cast<std::size_t>(v)]; }
  // -1 for vertices not reached.
  std::int32_t depth(VertexId v) const { return depth_[static_cast<std::size_t>(v)]; }
  bool contains_edge(EdgeId e) const { return in_tree_[static_cast<std::size_t>(e)] != 0; }

  std::span<const EdgeId> parent_edges() const noexcept { return parent_edge_; }
  std::span<const std::int32_t> depths() const noexcept { return depth_; }
  // Vertices in discovery order; the root comes first.
  std::span<const VertexId> order() const noexcept { return order_; }

  bool operator==(const BfsTree&) const = default;

 private:
  friend BfsTree bfs_tree(const Graph& g, VertexId root);

  VertexId root_ = 0;
  std::vector<EdgeId> parent_edge_;
  std::vector<VertexId> parent_;
  std::vector<std::int32_t> depth_;
  std::vector<char> in_tree_;
  std::vector<VertexId> order_;
};

BfsTree bfs_tree(const Graph& g, VertexId root);

/// Edges on the tree path from v up to the root, nearest to v first.
std::vector<EdgeId> tree_path(const BfsTree& t, VertexId v);

/// Hop distances from `source` to every vertex (-1 when unreachable).
std::vector<std::int32_t> bfs_distances(const Graph& g, VertexId source);

}  // namespace shortcycles
