#include "shortcycles/embedding.hpp"

#include <algorithm>
#include <string>

#include "shortcycles/error.hpp"

namespace shortcycles {

std::span<const EdgeId> EmbeddingScheme::rotation_at(VertexId v) const {
  if (!rotation_) throw Error(ErrorKind::missing_rotation, "scheme has no rotation system");
  return (*rotation_)[static_cast<std::size_t>(v)];
}

EmbeddingScheme validate_scheme(const Graph& g, std::optional<Rotation> rotation,
                                std::span<const int> signature) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();

  if (rotation) {
    if (rotation->size() != n) {
      throw Error(ErrorKind::bad_rotation,
                  "rotation lists " + std::to_string(rotation->size()) + " vertices, graph has " +
                      std::to_string(n),
                  static_cast<std::int64_t>(std::min(rotation->size(), n)));
    }
    for (std::size_t v = 0; v < n; ++v) {
      const auto vid = static_cast<VertexId>(v);
      std::vector<EdgeId> listed = (*rotation)[v];
      std::vector<EdgeId> incident;
      for (const auto& inc : g.neighbors(vid)) incident.push_back(inc.edge);
      std::sort(listed.begin(), listed.end());
      std::sort(incident.begin(), incident.end());
      if (listed != incident) {
        throw Error(ErrorKind::bad_rotation, "rotation must list each incident edge exactly once",
                    static_cast<std::int64_t>(v));
      }
    }
  }

  if (signature.size() < m) {
    throw Error(ErrorKind::missing_signature, "", static_cast<std::int64_t>(signature.size()));
  }
  if (signature.size() > m) {
    throw Error(ErrorKind::bad_parameter, "more signatures than edges");
  }
  for (std::size_t e = 0; e < m; ++e) {
    if (signature[e] != 1 && signature[e] != -1) {
      throw Error(ErrorKind::bad_signature_value, "signature must be +1 or -1, got " +
                                                      std::to_string(signature[e]),
                  static_cast<std::int64_t>(e));
    }
  }

  EmbeddingScheme s;
  s.rotation_ = std::move(rotation);
  s.signature_.assign(signature.begin(), signature.end());
  return s;
}

EmbeddingScheme all_positive_scheme(const Graph& g) {
  const std::vector<int> plus(g.edge_count(), 1);
  return validate_scheme(g, std::nullopt, plus);
}

Parity edge_set_parity(const EmbeddingScheme& s, std::span<const EdgeId> edges) {
  std::size_t negatives = 0;
  for (EdgeId e : edges) negatives += s.signature(e) < 0 ? 1 : 0;
  return negatives % 2 == 0 ? Parity::two_sided : Parity::one_sided;
}

EmbeddingScheme local_change(const EmbeddingScheme& s, const Graph& g, VertexId v) {
  if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count()) {
    throw Error(ErrorKind::vertex_out_of_range, "", v);
  }
  EmbeddingScheme out = s;
  if (out.rotation_) {
    auto& order = (*out.rotation_)[static_cast<std::size_t>(v)];
    std::reverse(order.begin(), order.end());
  }
  for (const auto& inc : g.neighbors(v)) {
    auto& sign = out.signature_[static_cast<std::size_t>(inc.edge)];
    sign = -sign;
  }
  return out;
}

EmbeddingScheme normalize_on_tree(const EmbeddingScheme& s, const Graph& g, const BfsTree& t) {
  EmbeddingScheme out = s;
  for (VertexId v : t.order()) {
    const EdgeId up = t.parent_edge(v);
    if (up != kNoEdge && out.signature(up) < 0) out = local_change(out, g, v);
  }
  return out;
}

namespace {

std::size_t position_in_rotation(std::span<const EdgeId> order, EdgeId e) {
  const auto it = std::find(order.begin(), order.end(), e);
  return static_cast<std::size_t>(it - order.begin());
}

// Darts are indexed as edge*4 + side*2 + (flag < 0), where side is 0 when the
// tail is the first endpoint of the edge.
std::size_t dart_index(const Graph& g, const Dart& d) {
  const std::size_t side = g.endpoints(d.edge).u == d.tail ? 0 : 1;
  return static_cast<std::size_t>(d.edge) * 4 + side * 2 + (d.flag < 0 ? 1 : 0);
}

// Rotation positions cached per (edge, endpoint side) for tracing.
class RotationIndex {
 public:
  RotationIndex(const Graph& g, const EmbeddingScheme& s) : g_(g), s_(s), pos_(g.edge_count() * 2) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const auto order = s.rotation_at(static_cast<VertexId>(v));
      for (std::size_t i = 0; i < order.size(); ++i) {
        const EdgeId e = order[i];
        const std::size_t side = g.endpoints(e).u == static_cast<VertexId>(v) ? 0 : 1;
        pos_[static_cast<std::size_t>(e) * 2 + side] = i;
      }
    }
  }

  Dart next(const Dart& d) const {
    const VertexId head = g_.endpoints(d.edge).other(d.tail);
    const int flag = d.flag * s_.signature(d.edge);
    const auto order = s_.rotation_at(head);
    const std::size_t side = g_.endpoints(d.edge).u == head ? 0 : 1;
    const std::size_t i = pos_[static_cast<std::size_t>(d.edge) * 2 + side];
    const std::size_t k = order.size();
    const std::size_t j = flag > 0 ? (i + 1) % k : (i + k - 1) % k;
    return Dart{order[j], head, flag};
  }

 private:
  const Graph& g_;
  const EmbeddingScheme& s_;
  std::vector<std::size_t> pos_;
};

}  // namespace

Dart next_dart(const Graph& g, const EmbeddingScheme& s, const Dart& d) {
  const VertexId head = g.endpoints(d.edge).other(d.tail);
  const int flag = d.flag * s.signature(d.edge);
  const auto order = s.rotation_at(head);
  const std::size_t k = order.size();
  const std::size_t i = position_in_rotation(order, d.edge);
  const std::size_t j = flag > 0 ? (i + 1) % k : (i + k - 1) % k;
  return Dart{order[j], head, flag};
}

Dart mirror(const Graph& g, const EmbeddingScheme& s, const Dart& d) {
  return Dart{d.edge, g.endpoints(d.edge).other(d.tail), -d.flag * s.signature(d.edge)};
}

FaceSet trace_faces(const Graph& g, const EmbeddingScheme& s) {
  if (!s.has_rotation()) throw Error(ErrorKind::missing_rotation, "face tracing needs a rotation system");
  FaceSet out;
  if (g.edge_count() == 0) {
    // A lone vertex on the sphere bounds one face.
    out.faces.emplace_back();
    return out;
  }

  const RotationIndex index(g, s);
  std::vector<char> used(g.edge_count() * 4, 0);
  auto mark_orbit = [&](Dart start, Face* record) {
    Dart d = start;
    do {
      used[dart_index(g, d)] = 1;
      if (record) record->push_back(d);
      d = index.next(d);
    } while (d != start);
  };

  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.endpoints(static_cast<EdgeId>(e));
    for (VertexId tail : {std::min(a, b), std::max(a, b)}) {
      for (int flag : {-1, 1}) {
        const Dart start{static_cast<EdgeId>(e), tail, flag};
        if (used[dart_index(g, start)]) continue;
        Face face;
        mark_orbit(start, &face);
        const Dart back = mirror(g, s, start);
        if (!used[dart_index(g, back)]) mark_orbit(back, nullptr);
        out.faces.push_back(std::move(face));
      }
    }
  }
  return out;
}

bool is_orientable(const Graph& g, const EmbeddingScheme& s) {
  if (!is_connected(g)) throw Error(ErrorKind::not_connected, "orientability needs a connected graph");
  const auto normalized = normalize_on_tree(s, g, bfs_tree(g, 0));
  const auto signs = normalized.signatures();
  return std::all_of(signs.begin(), signs.end(), [](int x) { return x > 0; });
}

GenusInfo euler_genus(const Graph& g, const EmbeddingScheme& s) {
  if (!s.has_rotation()) throw Error(ErrorKind::missing_rotation, "genus needs a rotation system");
  if (!is_connected(g)) throw Error(ErrorKind::not_connected, "genus needs a connected graph");
  const FaceSet faces = trace_faces(g, s);
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const auto m = static_cast<std::int64_t>(g.edge_count());
  const auto f = static_cast<std::int64_t>(faces.count());
  return GenusInfo{2 - n + m - f, is_orientable(g, s), faces.count()};
}

}  // namespace shortcycles
