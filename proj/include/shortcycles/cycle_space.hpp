#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "shortcycles/graph.hpp"

namespace shortcycles {

/// Sorted, duplicate-free list of edge ids.
using EdgeSet = std::vector<EdgeId>;

// Cycle produced as the fundamental cycle of cotree_edge in the BFS tree
// rooted at root.
struct FundamentalTag {
  VertexId root;
  EdgeId cotree_edge;

  auto operator<=>(const FundamentalTag&) const = default;
};

// Cycle produced as the sum of two C1 members, referenced by their index in
// the ordered C1 set (first < second).
struct SumTag {
  std::size_t first;
  std::size_t second;

  auto operator<=>(const SumTag&) const = default;
};

using Provenance = std::variant<FundamentalTag, SumTag>;

/// A simple cycle given by its edge set.
///
/// `vertex_walk` is closed (its last entry repeats the first), starts at the
/// smallest vertex on the cycle and leaves it toward the smaller of that
/// vertex's two cycle neighbors. Provenance is sorted and duplicate-free.
struct Cycle {
  EdgeSet edge_ids;
  std::vector<VertexId> vertex_walk;
  std::vector<Provenance> provenance;

  std::size_t length() const noexcept { return edge_ids.size(); }
  bool is_even() const noexcept { return edge_ids.size() % 2 == 0; }
  bool has_fundamental_provenance() const;
};

/// Canonical order on cycles: by length, then lexicographically by edge ids.
bool canonical_less(const EdgeSet& a, const EdgeSet& b);

enum class CandidateOrigin { c1, c2, c };

/// Deduplicated cycles in canonical order.
struct CandidateSet {
  CandidateOrigin origin = CandidateOrigin::c;
  std::vector<Cycle> cycles;

  std::size_t size() const noexcept { return cycles.size(); }
  bool empty() const noexcept { return cycles.empty(); }
  // Member with exactly these edges, or nullptr.
  const Cycle* find(const EdgeSet& edges) const;
};

/// A ⊕ B for sorted edge sets.
EdgeSet symmetric_difference(std::span<const EdgeId> a, std::span<const EdgeId> b);

/// The cycle spanned by `edges` when they form one connected 2-regular
/// subgraph; nullopt otherwise. Input order and duplicates are tolerated
/// (duplicates cancel, as in GF(2)).
std::optional<Cycle> as_single_cycle(const Graph& g, std::span<const EdgeId> edges);

/// tree_path(u) ⊕ tree_path(v) ⊕ {e} for cotree edge e = (u, v).
Cycle fundamental_cycle(const Graph& g, const BfsTree& t, EdgeId e);

struct CandidateOptions {
  // Worker threads for C1 (over roots) and C2 (over pairs). The result does
  // not depend on this value.
  unsigned threads = 1;
  // Skip C1 pairs that share no edge. Such a pair sums to an edge-disjoint
  // union, which is never a single cycle, so the output is unchanged.
  bool shared_edge_prefilter = false;
};

/// Fundamental cycles of the BFS trees rooted at every vertex.
CandidateSet generate_c1(const Graph& g, const CandidateOptions& options = {});

/// Sums of two distinct C1 members that form a single cycle. Every unordered
/// pair is examined, O(|C1|^2 * m) in total.
CandidateSet generate_c2(const Graph& g, const CandidateSet& c1, const CandidateOptions& options = {});

/// C1 ∪ C2 with provenance merged.
CandidateSet merge_candidates(const CandidateSet& c1, const CandidateSet& c2);

CandidateSet candidate_c(const Graph& g, const CandidateOptions& options = {});

/// All three sets from one pass.
struct CandidatePool {
  CandidateSet c1;
  CandidateSet c2;
  CandidateSet c;
};

CandidatePool build_candidates(const Graph& g, const CandidateOptions& options = {});

}  // namespace shortcycles
