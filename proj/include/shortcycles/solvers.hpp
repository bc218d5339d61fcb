#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "shortcycles/cycle_space.hpp"
#include "shortcycles/embedding.hpp"
#include "shortcycles/graph.hpp"

namespace shortcycles {

// Every solver below reads its answer off the candidate set C = C1 ∪ C2.
// Overloads taking a CandidatePool reuse an already computed pool; the
// others build one from the graph and throw NotConnected on disconnected
// input. Single-cycle results are the canonical minimum (length, then edge
// ids); set results list every qualifying cycle in canonical order.

std::optional<Cycle> shortest_two_sided(const CandidatePool& pool, const EmbeddingScheme& s);
std::optional<Cycle> shortest_two_sided(const Graph& g, const EmbeddingScheme& s,
                                        const CandidateOptions& options = {});

std::vector<Cycle> shortest_even_cycles(const CandidatePool& pool);
std::vector<Cycle> shortest_even_cycles(const Graph& g, const CandidateOptions& options = {});

// nullopt when the graph is acyclic or its girth is even: all shortest odd
// cycles are only guaranteed to be among the fundamental cycles when a
// shortest cycle is odd.
std::optional<std::vector<Cycle>> shortest_odd_cycles(const CandidatePool& pool);
std::optional<std::vector<Cycle>> shortest_odd_cycles(const Graph& g, const CandidateOptions& options = {});

std::optional<std::size_t> girth(const CandidatePool& pool);
std::optional<std::size_t> girth(const Graph& g, const CandidateOptions& options = {});

/// Shortest two-sided cycle, after checking that the scheme embeds the graph
/// in the projective plane (Euler genus 1, nonorientable). There every
/// two-sided cycle is contractible. Throws NotProjectivePlane otherwise.
std::optional<Cycle> shortest_contractible_projective(const Graph& g, const EmbeddingScheme& s,
                                                      const CandidateOptions& options = {});

/// True iff the distance along c equals the graph distance for every pair
/// of vertices on c.
bool is_isometric_cycle(const Graph& g, const Cycle& c);

enum class Query { two_sided, even, odd, girth, contractible_projective };

std::string_view to_string(Query q);

struct CandidateCounts {
  std::size_t c1 = 0;
  std::size_t c2 = 0;
  std::size_t c = 0;
};

struct SolverReport {
  Query query = Query::two_sided;
  std::vector<Cycle> cycles;
  // Parity of each reported cycle under the input scheme.
  std::vector<Parity> parities;
  // Girth for Query::girth; otherwise the common length of the cycles.
  std::optional<std::size_t> length;
  // Set when no cycle is reported. `certified` is true when the candidate
  // set proves that no qualifying cycle exists; false when the guarantee
  // does not apply (odd query on a graph with even girth).
  std::string reason;
  bool certified = true;
  CandidateCounts counts;
  std::chrono::nanoseconds elapsed{0};

  bool found() const noexcept { return !cycles.empty(); }
};

SolverReport run_query(Query q, const Graph& g, const EmbeddingScheme& s, const CandidateOptions& options = {});

}  // namespace shortcycles
