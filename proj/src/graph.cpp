#include "shortcycles/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "shortcycles/error.hpp"

namespace shortcycles {

EdgeId Graph::find_edge(VertexId u, VertexId v) const {
  if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= vertex_count() ||
      static_cast<std::size_t>(v) >= vertex_count()) {
    return kNoEdge;
  }
  auto adj = neighbors(u);
  auto it = std::lower_bound(adj.begin(), adj.end(), Incidence{v, kNoEdge});
  if (it != adj.end() && it->neighbor == v) return it->edge;
  return kNoEdge;
}

Graph build_graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edge_list) {
  if (n < 1) throw Error(ErrorKind::bad_parameter, "graph needs at least one vertex");
  Graph g;
  g.adjacency_.resize(n);
  g.edges_.reserve(edge_list.size());
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edge_list.size());
  for (std::size_t i = 0; i < edge_list.size(); ++i) {
    auto [u, v] = edge_list[i];
    const auto id = static_cast<std::int64_t>(i);
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw Error(ErrorKind::endpoint_out_of_range,
                  "endpoints (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" +
                      std::to_string(n),
                  id);
    }
    if (u == v) throw Error(ErrorKind::loop_edge, "edge joins vertex " + std::to_string(u) + " to itself", id);
    const auto key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) | static_cast<std::uint32_t>(std::max(u, v));
    if (!seen.insert(key).second) throw Error(ErrorKind::parallel_edge, "duplicate endpoint pair", id);
    g.edges_.push_back({u, v});
    g.adjacency_[static_cast<std::size_t>(u)].push_back({v, static_cast<EdgeId>(i)});
    g.adjacency_[static_cast<std::size_t>(v)].push_back({u, static_cast<EdgeId>(i)});
  }
  for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());
  return g;
}

std::vector<std::int32_t> bfs_distances(const Graph& g, VertexId source) {
  std::vector<std::int32_t> dist(g.vertex_count(), -1);
  std::deque<VertexId> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (const auto& [w, e] : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::int32_t d) { return d < 0; });
}

BfsTree bfs_tree(const Graph& g, VertexId root) {
  if (root < 0 || static_cast<std::size_t>(root) >= g.vertex_count()) {
    throw Error(ErrorKind::root_out_of_range, "", root);
  }
  const std::size_t n = g.vertex_count();
  BfsTree t;
  t.root_ = root;
  t.parent_edge_.assign(n, kNoEdge);
  t.parent_.assign(n, -1);
  t.depth_.assign(n, -1);
  t.in_tree_.assign(g.edge_count(), 0);
  t.order_.reserve(n);

  t.depth_[static_cast<std::size_t>(root)] = 0;
  t.order_.push_back(root);
  for (std::size_t head = 0; head < t.order_.size(); ++head) {
    const VertexId u = t.order_[head];
    for (const auto& [w, e] : g.neighbors(u)) {
      const auto wi = static_cast<std::size_t>(w);
      if (t.depth_[wi] >= 0) continue;
      t.depth_[wi] = t.depth_[static_cast<std::size_t>(u)] + 1;
      t.parent_edge_[wi] = e;
      t.parent_[wi] = u;
      t.in_tree_[static_cast<std::size_t>(e)] = 1;
      t.order_.push_back(w);
    }
  }
  return t;
}

std::vector<EdgeId> tree_path(const BfsTree& t, VertexId v) {
  std::vector<EdgeId> path;
  if (t.depth(v) > 0) path.reserve(static_cast<std::size_t>(t.depth(v)));
  while (t.parent_edge(v) != kNoEdge) {
    path.push_back(t.parent_edge(v));
    v = t.parent(v);
  }
  return path;
}

}  // namespace shortcycles
