#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "shortcycles/cycle_space.hpp"
#include "shortcycles/embedding.hpp"
#include "shortcycles/graph.hpp"

namespace shortcycles {

// Brute-force reference answers for small graphs. Nothing here touches BFS
// trees or the candidate sets; the enumeration is an independent check.

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

/// Every simple cycle exactly once, in canonical order. Each cycle is
/// anchored at its smallest vertex and only one of its two directions is
/// followed. Throws CycleCapExceeded when there are more than `cap`.
std::vector<Cycle> enumerate_simple_cycles(const Graph& g, std::size_t cap = kDefaultCycleCap);

std::optional<Cycle> oracle_shortest_two_sided(const Graph& g, const EmbeddingScheme& s,
                                               std::size_t cap = kDefaultCycleCap);

struct ParitySets {
  std::vector<Cycle> even;
  std::vector<Cycle> odd;
};

/// All minimum-length even cycles and all minimum-length odd cycles.
ParitySets oracle_shortest_parity_sets(const Graph& g, std::size_t cap = kDefaultCycleCap);

struct InstanceParams {
  std::size_t n = 1;
  std::size_t extra_edges = 0;
  double negative_fraction = 0.0;
  bool with_rotation = false;
  std::uint64_t seed = 0;
};

struct Instance {
  Graph graph;
  EmbeddingScheme scheme;
};

/// Random spanning tree plus `extra_edges` further distinct edges, shuffled
/// edge order, independent negative signatures and (optionally) uniformly
/// random rotations. Deterministic in the seed. Throws TooManyEdges when the
/// simple graph on n vertices cannot hold that many edges.
Instance random_instance(const InstanceParams& p);

struct ProjectiveParams {
  std::size_t n = 3;
  // Edges beyond a spanning tree, at least 1.
  std::size_t extra_edges = 1;
  std::uint64_t seed = 0;
};

/// Random embedding in the projective plane with n - 1 + extra_edges edges:
/// a one-sided cycle, grown by pendant vertices and face-splitting chords
/// (both keep the Euler genus at 1), then relabelled and scrambled by random
/// local changes. Throws TooManyEdges when no face can take another chord.
Instance random_projective_instance(const ProjectiveParams& p);

/// Bounded integers and coin flips from a 64-bit Mersenne twister with
/// library-independent reductions, so seeds reproduce across platforms.
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // True with probability p.
  bool chance(double p);

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace shortcycles
