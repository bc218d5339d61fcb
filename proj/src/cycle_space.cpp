#include "shortcycles/cycle_space.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iterator>
#include <map>

#include "parallel.hpp"
#include "shortcycles/error.hpp"

namespace shortcycles {

bool Cycle::has_fundamental_provenance() const {
  return std::any_of(provenance.begin(), provenance.end(),
                     [](const Provenance& p) { return std::holds_alternative<FundamentalTag>(p); });
}

bool canonical_less(const EdgeSet& a, const EdgeSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

const Cycle* CandidateSet::find(const EdgeSet& edges) const {
  auto it = std::lower_bound(cycles.begin(), cycles.end(), edges,
                             [](const Cycle& c, const EdgeSet& key) { return canonical_less(c.edge_ids, key); });
  if (it != cycles.end() && it->edge_ids == edges) return &*it;
  return nullptr;
}

EdgeSet symmetric_difference(std::span<const EdgeId> a, std::span<const EdgeId> b) {
  EdgeSet out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

namespace {

// Reusable scratch for deciding whether an edge set is one simple cycle.
// Vertex slots are invalidated by bumping a generation stamp instead of
// clearing.
class CycleChecker {
 public:
  explicit CycleChecker(const Graph& g)
      : g_(g), stamp_(g.vertex_count(), 0), slot_a_(g.vertex_count()), slot_b_(g.vertex_count()) {}

  // `edges` must be duplicate-free.
  bool is_single_cycle(std::span<const EdgeId> edges) {
    if (edges.empty()) return false;
    ++generation_;
    for (EdgeId e : edges) {
      const auto [u, v] = g_.endpoints(e);
      if (!attach(u, e) || !attach(v, e)) return false;
    }
    for (EdgeId e : edges) {
      const auto [u, v] = g_.endpoints(e);
      if (slot_b_[static_cast<std::size_t>(u)] == kNoEdge || slot_b_[static_cast<std::size_t>(v)] == kNoEdge) {
        return false;
      }
    }
    // Every vertex has degree two; the set is one cycle iff walking from any
    // edge returns after visiting all of them.
    const EdgeId first = edges.front();
    const VertexId start = g_.endpoints(first).u;
    VertexId at = g_.endpoints(first).v;
    EdgeId via = first;
    std::size_t steps = 1;
    while (at != start) {
      via = other_slot(at, via);
      at = g_.endpoints(via).other(at);
      ++steps;
    }
    return steps == edges.size();
  }

  // Closed walk of a set already known to be a cycle.
  std::vector<VertexId> walk(std::span<const EdgeId> edges) {
    is_single_cycle(edges);
    VertexId start = g_.endpoints(edges.front()).u;
    for (EdgeId e : edges) start = std::min({start, g_.endpoints(e).u, g_.endpoints(e).v});
    const auto si = static_cast<std::size_t>(start);
    const EdgeId ea = slot_a_[si];
    const EdgeId eb = slot_b_[si];
    EdgeId via = g_.endpoints(ea).other(start) < g_.endpoints(eb).other(start) ? ea : eb;

    std::vector<VertexId> out{start};
    out.reserve(edges.size() + 1);
    VertexId at = g_.endpoints(via).other(start);
    while (at != start) {
      out.push_back(at);
      via = other_slot(at, via);
      at = g_.endpoints(via).other(at);
    }
    out.push_back(start);
    return out;
  }

 private:
  bool attach(VertexId v, EdgeId e) {
    const auto i = static_cast<std::size_t>(v);
    if (stamp_[i] != generation_) {
      stamp_[i] = generation_;
      slot_a_[i] = e;
      slot_b_[i] = kNoEdge;
      return true;
    }
    if (slot_b_[i] != kNoEdge) return false;
    slot_b_[i] = e;
    return true;
  }

  EdgeId other_slot(VertexId v, EdgeId e) const {
    const auto i = static_cast<std::size_t>(v);
    return slot_a_[i] == e ? slot_b_[i] : slot_a_[i];
  }

  const Graph& g_;
  std::uint64_t generation_ = 0;
  std::vector<std::uint64_t> stamp_;
  std::vector<EdgeId> slot_a_;
  std::vector<EdgeId> slot_b_;
};

void sort_and_unique(std::vector<Provenance>& tags) {
  std::sort(tags.begin(), tags.end());
  tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
}

struct Record {
  EdgeSet edges;
  Provenance tag;
};

bool record_less(const Record& a, const Record& b) {
  if (a.edges != b.edges) return canonical_less(a.edges, b.edges);
  return a.tag < b.tag;
}

// Groups records by edge set and builds one Cycle per group.
CandidateSet collect(const Graph& g, std::vector<Record> records, CandidateOrigin origin) {
  std::sort(records.begin(), records.end(), record_less);
  CandidateSet out;
  out.origin = origin;
  CycleChecker checker(g);
  for (std::size_t i = 0; i < records.size();) {
    std::size_t j = i;
    Cycle c;
    c.edge_ids = std::move(records[i].edges);
    while (j < records.size() && (j == i || records[j].edges == c.edge_ids)) {
      c.provenance.push_back(records[j].tag);
      ++j;
    }
    sort_and_unique(c.provenance);
    c.vertex_walk = checker.walk(c.edge_ids);
    out.cycles.push_back(std::move(c));
    i = j;
  }
  return out;
}

// Edges of the fundamental cycle of cotree edge e: climb both endpoints to
// their lowest common ancestor.
EdgeSet fundamental_edges(const Graph& g, const BfsTree& t, EdgeId e) {
  auto [u, v] = g.endpoints(e);
  EdgeSet out{e};
  while (u != v) {
    if (t.depth(u) >= t.depth(v)) {
      out.push_back(t.parent_edge(u));
      u = t.parent(u);
    } else {
      out.push_back(t.parent_edge(v));
      v = t.parent(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<Cycle> as_single_cycle(const Graph& g, std::span<const EdgeId> edges) {
  // Reduce mod 2 so the input is treated as a GF(2) vector.
  EdgeSet sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  EdgeSet reduced;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    if ((j - i) % 2 == 1) reduced.push_back(sorted[i]);
    i = j;
  }
  for (EdgeId e : reduced) {
    if (e < 0 || static_cast<std::size_t>(e) >= g.edge_count()) return std::nullopt;
  }
  CycleChecker checker(g);
  if (!checker.is_single_cycle(reduced)) return std::nullopt;
  Cycle c;
  c.vertex_walk = checker.walk(reduced);
  c.edge_ids = std::move(reduced);
  return c;
}

Cycle fundamental_cycle(const Graph& g, const BfsTree& t, EdgeId e) {
  if (e < 0 || static_cast<std::size_t>(e) >= g.edge_count()) {
    throw Error(ErrorKind::endpoint_out_of_range, "no such edge", e);
  }
  if (t.contains_edge(e)) throw Error(ErrorKind::edge_in_tree, "", e);
  const auto [u, v] = g.endpoints(e);
  if (t.depth(u) < 0 || t.depth(v) < 0) {
    throw Error(ErrorKind::not_connected, "cotree edge not reached by the tree", e);
  }
  EdgeSet edges = fundamental_edges(g, t, e);
  CycleChecker checker(g);
  Cycle c;
  c.vertex_walk = checker.walk(edges);
  c.edge_ids = std::move(edges);
  c.provenance.push_back(FundamentalTag{t.root(), e});
  return c;
}

CandidateSet generate_c1(const Graph& g, const CandidateOptions& options) {
  if (!is_connected(g)) throw Error(ErrorKind::not_connected, "candidate cycles need a connected graph");
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Record>> per_root(n);
  detail::parallel_for(n, options.threads, [&](std::size_t, std::size_t r) {
    const auto root = static_cast<VertexId>(r);
    const BfsTree t = bfs_tree(g, root);
    auto& out = per_root[r];
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const auto id = static_cast<EdgeId>(e);
      if (t.contains_edge(id)) continue;
      out.push_back(Record{fundamental_edges(g, t, id), FundamentalTag{root, id}});
    }
  });
  std::vector<Record> all;
  for (auto& part : per_root) std::move(part.begin(), part.end(), std::back_inserter(all));
  return collect(g, std::move(all), CandidateOrigin::c1);
}

CandidateSet generate_c2(const Graph& g, const CandidateSet& c1, const CandidateOptions& options) {
  const std::size_t count = c1.size();
  const std::size_t words = (g.edge_count() + 63) / 64;
  std::vector<std::uint64_t> bits(count * words, 0);
  for (std::size_t i = 0; i < count; ++i) {
    for (EdgeId e : c1.cycles[i].edge_ids) {
      const auto ue = static_cast<std::size_t>(e);
      bits[i * words + ue / 64] |= std::uint64_t{1} << (ue % 64);
    }
  }

  const std::size_t workers = detail::worker_count(count, options.threads);
  std::vector<CycleChecker> checkers(workers, CycleChecker(g));
  std::vector<std::vector<EdgeId>> scratch(workers);
  std::vector<std::vector<Record>> per_row(count);

  detail::parallel_for(count, options.threads, [&](std::size_t worker, std::size_t i) {
    auto& checker = checkers[worker];
    auto& edges = scratch[worker];
    const std::uint64_t* a = &bits[i * words];
    for (std::size_t j = i + 1; j < count; ++j) {
      const std::uint64_t* b = &bits[j * words];
      if (options.shared_edge_prefilter) {
        bool shared = false;
        for (std::size_t w = 0; w < words && !shared; ++w) shared = (a[w] & b[w]) != 0;
        if (!shared) continue;
      }
      edges.clear();
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t x = a[w] ^ b[w];
        while (x != 0) {
          edges.push_back(static_cast<EdgeId>(w * 64 + static_cast<std::size_t>(std::countr_zero(x))));
          x &= x - 1;
        }
      }
      if (checker.is_single_cycle(edges)) per_row[i].push_back(Record{edges, SumTag{i, j}});
    }
  });

  std::vector<Record> all;
  for (auto& part : per_row) std::move(part.begin(), part.end(), std::back_inserter(all));
  return collect(g, std::move(all), CandidateOrigin::c2);
}

CandidateSet merge_candidates(const CandidateSet& c1, const CandidateSet& c2) {
  CandidateSet out;
  out.origin = CandidateOrigin::c;
  out.cycles.reserve(c1.size() + c2.size());
  auto a = c1.cycles.begin();
  auto b = c2.cycles.begin();
  while (a != c1.cycles.end() || b != c2.cycles.end()) {
    if (b == c2.cycles.end() || (a != c1.cycles.end() && canonical_less(a->edge_ids, b->edge_ids))) {
      out.cycles.push_back(*a++);
    } else if (a == c1.cycles.end() || canonical_less(b->edge_ids, a->edge_ids)) {
      out.cycles.push_back(*b++);
    } else {
      Cycle merged = *a++;
      merged.provenance.insert(merged.provenance.end(), b->provenance.begin(), b->provenance.end());
      sort_and_unique(merged.provenance);
      ++b;
      out.cycles.push_back(std::move(merged));
    }
  }
  return out;
}

CandidatePool build_candidates(const Graph& g, const CandidateOptions& options) {
  CandidatePool pool;
  pool.c1 = generate_c1(g, options);
  pool.c2 = generate_c2(g, pool.c1, options);
  pool.c = merge_candidates(pool.c1, pool.c2);
  return pool;
}

CandidateSet candidate_c(const Graph& g, const CandidateOptions& options) {
  return build_candidates(g, options).c;
}

}  // namespace shortcycles
