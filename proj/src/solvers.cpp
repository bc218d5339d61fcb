#include "shortcycles/solvers.hpp"

#include <algorithm>

#include "shortcycles/error.hpp"

namespace shortcycles {

std::optional<Cycle> shortest_two_sided(const CandidatePool& pool, const EmbeddingScheme& s) {
  // Candidates are already in canonical order, so the first hit is minimal.
  for (const Cycle& c : pool.c.cycles) {
    if (edge_set_parity(s, c.edge_ids) == Parity::two_sided) return c;
  }
  return std::nullopt;
}

std::optional<Cycle> shortest_two_sided(const Graph& g, const EmbeddingScheme& s, const CandidateOptions& options) {
  return shortest_two_sided(build_candidates(g, options), s);
}

std::vector<Cycle> shortest_even_cycles(const CandidatePool& pool) {
  std::vector<Cycle> out;
  for (const Cycle& c : pool.c.cycles) {
    if (!c.is_even()) continue;
    if (!out.empty() && c.length() > out.front().length()) break;
    out.push_back(c);
  }
  return out;
}

std::vector<Cycle> shortest_even_cycles(const Graph& g, const CandidateOptions& options) {
  return shortest_even_cycles(build_candidates(g, options));
}

std::optional<std::size_t> girth(const CandidatePool& pool) {
  if (pool.c.empty()) return std::nullopt;
  return pool.c.cycles.front().length();
}

std::optional<std::size_t> girth(const Graph& g, const CandidateOptions& options) {
  return girth(build_candidates(g, options));
}

std::optional<std::vector<Cycle>> shortest_odd_cycles(const CandidatePool& pool) {
  const auto shortest = girth(pool);
  if (!shortest || *shortest % 2 == 0) return std::nullopt;
  std::vector<Cycle> out;
  for (const Cycle& c : pool.c.cycles) {
    if (c.length() != *shortest) break;
    if (c.has_fundamental_provenance()) out.push_back(c);
  }
  return out;
}

std::optional<std::vector<Cycle>> shortest_odd_cycles(const Graph& g, const CandidateOptions& options) {
  return shortest_odd_cycles(build_candidates(g, options));
}

namespace {

void require_projective_plane(const Graph& g, const EmbeddingScheme& s) {
  const GenusInfo info = euler_genus(g, s);
  if (info.euler_genus != 1 || info.orientable) {
    throw Error(ErrorKind::not_projective_plane,
                "embedding has Euler genus " + std::to_string(info.euler_genus) + " and is " +
                    (info.orientable ? "orientable" : "nonorientable"));
  }
}

}  // namespace

std::optional<Cycle> shortest_contractible_projective(const Graph& g, const EmbeddingScheme& s,
                                                      const CandidateOptions& options) {
  require_projective_plane(g, s);
  return shortest_two_sided(g, s, options);
}

bool is_isometric_cycle(const Graph& g, const Cycle& c) {
  // vertex_walk is closed; drop the repeated endpoint.
  const std::size_t len = c.length();
  for (std::size_t i = 0; i < len; ++i) {
    const auto dist = bfs_distances(g, c.vertex_walk[i]);
    for (std::size_t j = i + 1; j < len; ++j) {
      const std::size_t along = std::min(j - i, len - (j - i));
      if (static_cast<std::size_t>(dist[static_cast<std::size_t>(c.vertex_walk[j])]) != along) return false;
    }
  }
  return true;
}

std::string_view to_string(Query q) {
  switch (q) {
    case Query::two_sided: return "two_sided";
    case Query::even: return "even";
    case Query::odd: return "odd";
    case Query::girth: return "girth";
    case Query::contractible_projective: return "contractible_projective";
  }
  return "unknown";
}

SolverReport run_query(Query q, const Graph& g, const EmbeddingScheme& s, const CandidateOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  if (q == Query::contractible_projective) require_projective_plane(g, s);

  const CandidatePool pool = build_candidates(g, options);
  SolverReport report;
  report.query = q;
  report.counts = {pool.c1.size(), pool.c2.size(), pool.c.size()};

  switch (q) {
    case Query::two_sided:
    case Query::contractible_projective:
      if (auto c = shortest_two_sided(pool, s)) {
        report.cycles.push_back(std::move(*c));
      } else {
        report.reason = q == Query::two_sided ? "no two-sided cycle exists"
                                              : "no two-sided cycle exists, so no contractible cycle exists";
      }
      break;
    case Query::even:
      report.cycles = shortest_even_cycles(pool);
      if (report.cycles.empty()) report.reason = "no even cycle exists";
      break;
    case Query::odd:
      if (auto found = shortest_odd_cycles(pool)) {
        report.cycles = std::move(*found);
      } else if (pool.c.empty()) {
        report.reason = "graph is acyclic";
      } else {
        report.reason = "shortest cycle is even; completeness of odd cycles is not guaranteed";
        report.certified = false;
      }
      break;
    case Query::girth:
      if (!pool.c.empty()) {
        report.cycles.push_back(pool.c.cycles.front());
      } else {
        report.reason = "graph is acyclic";
      }
      break;
  }

  if (!report.cycles.empty()) report.length = report.cycles.front().length();
  for (const Cycle& c : report.cycles) report.parities.push_back(edge_set_parity(s, c.edge_ids));
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - started);
  return report;
}

}  // namespace shortcycles
