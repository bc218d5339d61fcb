#include "shortcycles/oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "shortcycles/error.hpp"

namespace shortcycles {

std::uint64_t Random::below(std::uint64_t bound) {
  // Rejection sampling keeps the result unbiased for any bound.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

bool Random::chance(double p) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return u < p;
}

namespace {

class CycleEnumerator {
 public:
  CycleEnumerator(const Graph& g, std::size_t cap) : g_(g), cap_(cap), on_path_(g.vertex_count(), 0) {}

  std::vector<Cycle> run() {
    for (std::size_t s = 0; s < g_.vertex_count(); ++s) {
      anchor_ = static_cast<VertexId>(s);
      path_ = {anchor_};
      on_path_[s] = 1;
      extend(anchor_);
      on_path_[s] = 0;
    }
    std::sort(found_.begin(), found_.end(),
              [](const Cycle& a, const Cycle& b) { return canonical_less(a.edge_ids, b.edge_ids); });
    return std::move(found_);
  }

 private:
  void extend(VertexId u) {
    for (const auto& [w, e] : g_.neighbors(u)) {
      if (w == anchor_) {
        // Close only when the walk has three or more vertices, and only in
        // the direction whose second vertex is smaller than its last.
        if (path_.size() >= 3 && path_[1] < u) record(e);
        continue;
      }
      if (w < anchor_ || on_path_[static_cast<std::size_t>(w)]) continue;
      on_path_[static_cast<std::size_t>(w)] = 1;
      path_.push_back(w);
      edges_.push_back(e);
      extend(w);
      edges_.pop_back();
      path_.pop_back();
      on_path_[static_cast<std::size_t>(w)] = 0;
    }
  }

  void record(EdgeId closing) {
    if (found_.size() >= cap_) {
      throw Error(ErrorKind::cycle_cap_exceeded, "too many simple cycles", static_cast<std::int64_t>(cap_));
    }
    Cycle c;
    c.edge_ids = edges_;
    c.edge_ids.push_back(closing);
    std::sort(c.edge_ids.begin(), c.edge_ids.end());
    c.vertex_walk = path_;
    // path_[1] < u already puts the walk in canonical direction.
    c.vertex_walk.push_back(anchor_);
    found_.push_back(std::move(c));
  }

  const Graph& g_;
  std::size_t cap_;
  VertexId anchor_ = 0;
  std::vector<VertexId> path_;
  std::vector<EdgeId> edges_;
  std::vector<char> on_path_;
  std::vector<Cycle> found_;
};

}  // namespace

std::vector<Cycle> enumerate_simple_cycles(const Graph& g, std::size_t cap) {
  return CycleEnumerator(g, cap).run();
}

std::optional<Cycle> oracle_shortest_two_sided(const Graph& g, const EmbeddingScheme& s, std::size_t cap) {
  for (Cycle& c : enumerate_simple_cycles(g, cap)) {
    if (edge_set_parity(s, c.edge_ids) == Parity::two_sided) return std::move(c);
  }
  return std::nullopt;
}

ParitySets oracle_shortest_parity_sets(const Graph& g, std::size_t cap) {
  ParitySets out;
  for (Cycle& c : enumerate_simple_cycles(g, cap)) {
    auto& bucket = c.is_even() ? out.even : out.odd;
    if (bucket.empty() || bucket.front().length() == c.length()) bucket.push_back(std::move(c));
  }
  return out;
}

namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

std::uint64_t pair_key(VertexId u, VertexId v) {
  return (static_cast<std::uint64_t>(std::min(u, v)) << 32) | static_cast<std::uint32_t>(std::max(u, v));
}

}  // namespace

Instance random_instance(const InstanceParams& p) {
  if (p.n < 1) throw Error(ErrorKind::bad_parameter, "n must be at least 1");
  if (!(p.negative_fraction >= 0.0 && p.negative_fraction <= 1.0)) {
    throw Error(ErrorKind::bad_parameter, "negative_fraction must lie in [0, 1]");
  }
  const std::size_t capacity = p.n * (p.n - 1) / 2;
  const std::size_t total = p.n - 1 + p.extra_edges;
  if (total > capacity) {
    throw Error(ErrorKind::too_many_edges,
                std::to_string(total) + " edges requested, a simple graph on " + std::to_string(p.n) +
                    " vertices holds " + std::to_string(capacity));
  }

  Random rng(p.seed);
  std::vector<VertexId> label(p.n);
  for (std::size_t i = 0; i < p.n; ++i) label[i] = static_cast<VertexId>(i);
  rng.shuffle(label);

  EdgeList edges;
  std::set<std::uint64_t> present;
  for (std::size_t i = 1; i < p.n; ++i) {
    const VertexId u = label[rng.below(i)];
    const VertexId v = label[i];
    edges.emplace_back(u, v);
    present.insert(pair_key(u, v));
  }

  if (p.extra_edges > 0) {
    if (2 * total <= capacity) {
      // Sparse: rejection sampling terminates quickly.
      while (edges.size() < total) {
        const auto u = static_cast<VertexId>(rng.below(p.n));
        const auto v = static_cast<VertexId>(rng.below(p.n));
        if (u == v || !present.insert(pair_key(u, v)).second) continue;
        edges.emplace_back(u, v);
      }
    } else {
      EdgeList absent;
      for (std::size_t u = 0; u < p.n; ++u) {
        for (std::size_t v = u + 1; v < p.n; ++v) {
          if (!present.count(pair_key(static_cast<VertexId>(u), static_cast<VertexId>(v)))) {
            absent.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
          }
        }
      }
      rng.shuffle(absent);
      edges.insert(edges.end(), absent.begin(), absent.begin() + static_cast<std::ptrdiff_t>(p.extra_edges));
    }
  }
  rng.shuffle(edges);

  Graph g = build_graph(p.n, edges);
  std::vector<int> signature(g.edge_count());
  for (auto& sign : signature) sign = rng.chance(p.negative_fraction) ? -1 : 1;

  std::optional<Rotation> rotation;
  if (p.with_rotation) {
    rotation.emplace(p.n);
    for (std::size_t v = 0; v < p.n; ++v) {
      for (const auto& inc : g.neighbors(static_cast<VertexId>(v))) (*rotation)[v].push_back(inc.edge);
      rng.shuffle((*rotation)[v]);
    }
  }
  EmbeddingScheme s = validate_scheme(g, std::move(rotation), signature);
  return Instance{std::move(g), std::move(s)};
}

namespace {

// Mutable embedding used while growing a projective-plane instance.
struct GrowingEmbedding {
  std::size_t n = 0;
  EdgeList edges;
  Rotation rotation;
  std::vector<int> signature;

  Instance freeze() const {
    Graph g = build_graph(n, edges);
    EmbeddingScheme s = validate_scheme(g, rotation, signature);
    return Instance{std::move(g), std::move(s)};
  }

  // Places `added` in the corner at the head of `d`, so that the face walk
  // arriving along d continues along `added`.
  void insert_at_corner(const Graph& g, const EmbeddingScheme& s, const Dart& d, EdgeId added) {
    const VertexId head = g.endpoints(d.edge).other(d.tail);
    const int flag = d.flag * s.signature(d.edge);
    auto& order = rotation[static_cast<std::size_t>(head)];
    auto it = std::find(order.begin(), order.end(), d.edge);
    if (flag > 0) ++it;
    order.insert(it, added);
  }
};

}  // namespace

Instance random_projective_instance(const ProjectiveParams& p) {
  if (p.n < 3) throw Error(ErrorKind::bad_parameter, "projective instances need n >= 3");
  if (p.extra_edges < 1) throw Error(ErrorKind::bad_parameter, "projective instances need at least one extra edge");
  Random rng(p.seed);
  GrowingEmbedding grow;

  // One-sided cycle on k vertices: a single face, Euler genus 1.
  const std::size_t k = 3 + rng.below(p.n - 2);
  grow.n = k;
  grow.rotation.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    grow.edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % k));
    grow.signature.push_back(1);
    grow.rotation[i] = {static_cast<EdgeId>((i + k - 1) % k), static_cast<EdgeId>(i)};
  }
  grow.signature[rng.below(k)] = -1;

  // Pendant vertices keep the face count.
  while (grow.n < p.n) {
    const Instance current = grow.freeze();
    const FaceSet faces = trace_faces(current.graph, current.scheme);
    std::vector<Dart> corners;
    for (const Face& f : faces.faces) corners.insert(corners.end(), f.begin(), f.end());
    const Dart at = corners[rng.below(corners.size())];
    const VertexId host = current.graph.endpoints(at.edge).other(at.tail);
    const auto fresh = static_cast<VertexId>(grow.n++);
    const auto added = static_cast<EdgeId>(grow.edges.size());
    grow.edges.emplace_back(host, fresh);
    grow.signature.push_back(1);
    grow.rotation.push_back({added});
    grow.insert_at_corner(current.graph, current.scheme, at, added);
  }

  // A chord between two corners of one face splits it in two, adding one
  // edge and one face.
  // The cycle itself is the first edge beyond a spanning tree.
  for (std::size_t added_count = 1; added_count < p.extra_edges; ++added_count) {
    const Instance current = grow.freeze();
    const Graph& g = current.graph;
    const FaceSet faces = trace_faces(g, current.scheme);
    std::vector<std::pair<Dart, Dart>> options;
    for (const Face& f : faces.faces) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) {
          const VertexId u = g.endpoints(f[i].edge).other(f[i].tail);
          const VertexId w = g.endpoints(f[j].edge).other(f[j].tail);
          if (u != w && g.find_edge(u, w) == kNoEdge) options.emplace_back(f[i], f[j]);
        }
      }
    }
    if (options.empty()) {
      throw Error(ErrorKind::too_many_edges, "no face admits another chord after " + std::to_string(added_count) +
                                                 " extra edges");
    }
    const auto [di, dj] = options[rng.below(options.size())];
    const VertexId u = g.endpoints(di.edge).other(di.tail);
    const VertexId w = g.endpoints(dj.edge).other(dj.tail);
    const int flag_u = di.flag * current.scheme.signature(di.edge);
    const int flag_w = dj.flag * current.scheme.signature(dj.edge);
    const auto added = static_cast<EdgeId>(grow.edges.size());
    grow.edges.emplace_back(u, w);
    grow.signature.push_back(flag_u * flag_w);
    grow.insert_at_corner(g, current.scheme, di, added);
    grow.insert_at_corner(g, current.scheme, dj, added);
  }

  // Relabel vertices and edges, then scramble signatures with local changes.
  std::vector<VertexId> vlabel(grow.n);
  for (std::size_t i = 0; i < grow.n; ++i) vlabel[i] = static_cast<VertexId>(i);
  rng.shuffle(vlabel);
  std::vector<EdgeId> eorder(grow.edges.size());
  for (std::size_t i = 0; i < eorder.size(); ++i) eorder[i] = static_cast<EdgeId>(i);
  rng.shuffle(eorder);
  std::vector<EdgeId> elabel(eorder.size());
  for (std::size_t i = 0; i < eorder.size(); ++i) elabel[static_cast<std::size_t>(eorder[i])] = static_cast<EdgeId>(i);

  GrowingEmbedding out;
  out.n = grow.n;
  out.rotation.resize(grow.n);
  for (EdgeId old : eorder) {
    const auto [u, v] = grow.edges[static_cast<std::size_t>(old)];
    out.edges.emplace_back(vlabel[static_cast<std::size_t>(u)], vlabel[static_cast<std::size_t>(v)]);
    out.signature.push_back(grow.signature[static_cast<std::size_t>(old)]);
  }
  for (std::size_t v = 0; v < grow.n; ++v) {
    auto& order = out.rotation[static_cast<std::size_t>(vlabel[v])];
    for (EdgeId old : grow.rotation[v]) order.push_back(elabel[static_cast<std::size_t>(old)]);
  }

  Instance result = out.freeze();
  for (std::size_t v = 0; v < grow.n; ++v) {
    if (rng.chance(0.5)) result.scheme = local_change(result.scheme, result.graph, static_cast<VertexId>(v));
  }
  return result;
}

}  // namespace shortcycles
