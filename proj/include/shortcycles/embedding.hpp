#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "shortcycles/graph.hpp"

namespace shortcycles {

using Rotation = std::vector<std::vector<EdgeId>>;

enum class Parity { two_sided, one_sided };

/// Generalized embedding scheme: an optional rotation system (a cyclic order
/// of incident edges at every vertex) and a signature of +1/-1 per edge.
///
/// Signature-only schemes are valid. Parity queries work on them; face
/// tracing and genus require the rotation.
class EmbeddingScheme {
 public:
  bool has_rotation() const noexcept { return rotation_.has_value(); }
  const std::optional<Rotation>& rotation() const noexcept { return rotation_; }
  std::span<const EdgeId> rotation_at(VertexId v) const;

  int signature(EdgeId e) const { return signature_[static_cast<std::size_t>(e)]; }
  std::span<const int> signatures() const noexcept { return signature_; }

  bool operator==(const EmbeddingScheme&) const = default;

 private:
  friend EmbeddingScheme validate_scheme(const Graph&, std::optional<Rotation>, std::span<const int>);
  friend EmbeddingScheme local_change(const EmbeddingScheme&, const Graph&, VertexId);

  std::optional<Rotation> rotation_;
  std::vector<int> signature_;
};

/// Checks that rotation[v] lists exactly the edges incident to v (each once)
/// and that every edge carries a signature of +1 or -1.
EmbeddingScheme validate_scheme(const Graph& g, std::optional<Rotation> rotation,
                                std::span<const int> signature);

/// Scheme with every signature +1 and no rotation.
EmbeddingScheme all_positive_scheme(const Graph& g);

/// Two-sided iff the edge set holds an even number of negative edges.
Parity edge_set_parity(const EmbeddingScheme& s, std::span<const EdgeId> edges);

/// Flips vertex v: reverses its rotation and negates the signature of each
/// incident edge. Cycle parities are unchanged.
EmbeddingScheme local_change(const EmbeddingScheme& s, const Graph& g, VertexId v);

/// Applies local changes root-down along t so that every tree edge ends up
/// with signature +1.
EmbeddingScheme normalize_on_tree(const EmbeddingScheme& s, const Graph& g, const BfsTree& t);

// One traversal step of a face: `edge` is walked from `tail` to the other
// endpoint while the local orientation flag equals `flag` (+1 or -1).
struct Dart {
  EdgeId edge;
  VertexId tail;
  int flag;

  auto operator<=>(const Dart&) const = default;
};

using Face = std::vector<Dart>;

struct FaceSet {
  std::vector<Face> faces;

  std::size_t count() const noexcept { return faces.size(); }
};

/// The dart that follows d on its face. At the head vertex, with the flag
/// updated by the signature of d's edge, the walk continues along the
/// successor of that edge in the rotation (flag +1) or its predecessor
/// (flag -1).
Dart next_dart(const Graph& g, const EmbeddingScheme& s, const Dart& d);

/// The same step walked in the opposite direction. Every face is reached
/// twice by the successor rule, once per traversal direction; mirror() maps
/// one traversal onto the other.
Dart mirror(const Graph& g, const EmbeddingScheme& s, const Dart& d);

/// Traces all faces. Each face appears once, starting from its smallest dart;
/// the mirror traversals are not listed.
FaceSet trace_faces(const Graph& g, const EmbeddingScheme& s);

struct GenusInfo {
  std::int64_t euler_genus;
  bool orientable;
  std::size_t faces;
};

/// Euler genus 2 - n + m - f, plus orientability decided by normalizing the
/// signature on a BFS tree and checking that no negative edge remains.
GenusInfo euler_genus(const Graph& g, const EmbeddingScheme& s);

bool is_orientable(const Graph& g, const EmbeddingScheme& s);

}  // namespace shortcycles
