#include "shortcycles/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"
#include "shortcycles/error.hpp"

namespace shortcycles {

namespace {

using json = nlohmann::ordered_json;

struct Record {
  std::size_t line;
  std::vector<std::string_view> tokens;
};

std::vector<Record> tokenize(std::string_view text) {
  std::vector<Record> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    Record rec{line_no, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) rec.tokens.push_back(line.substr(start, i - start));
    }
    if (!rec.tokens.empty()) out.push_back(std::move(rec));
  }
  return out;
}

[[noreturn]] void syntax(std::size_t line, const std::string& message) {
  throw Error(ErrorKind::syntax_error, message).at_line(line);
}

std::int64_t parse_int(std::string_view token, std::size_t line) {
  std::string_view digits = token;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
    syntax(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

VertexId parse_id(std::string_view token, std::size_t line) {
  const auto value = parse_int(token, line);
  if (value < 0 || value > std::numeric_limits<std::int32_t>::max()) {
    syntax(line, "id out of range: '" + std::string(token) + "'");
  }
  return static_cast<VertexId>(value);
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const auto records = tokenize(text);
  if (records.empty()) throw Error(ErrorKind::syntax_error, "empty instance").at_line(1);

  const Record& header = records.front();
  if (header.tokens.size() != 3 || header.tokens[0] != "graph") {
    syntax(header.line, "expected 'graph <n> <m>'");
  }
  const auto n = parse_int(header.tokens[1], header.line);
  const auto m = parse_int(header.tokens[2], header.line);
  if (n < 1) syntax(header.line, "vertex count must be at least 1");
  if (m < 0) syntax(header.line, "edge count must be non-negative");

  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<int> signature;
  std::vector<std::size_t> edge_line;
  Rotation rotation;
  std::vector<std::size_t> rot_line;

  std::size_t r = 1;
  for (; r < records.size() && records[r].tokens[0] == "e"; ++r) {
    const Record& rec = records[r];
    if (rec.tokens.size() != 4 && rec.tokens.size() != 5) syntax(rec.line, "expected 'e <id> <u> <v> [+1|-1]'");
    const auto id = parse_int(rec.tokens[1], rec.line);
    if (id != static_cast<std::int64_t>(edges.size())) {
      throw Error(ErrorKind::id_mismatch,
                  "expected edge id " + std::to_string(edges.size()) + ", got " + std::to_string(id))
          .at_line(rec.line);
    }
    if (static_cast<std::int64_t>(edges.size()) >= m) syntax(rec.line, "more edge records than declared");
    edges.emplace_back(parse_id(rec.tokens[2], rec.line), parse_id(rec.tokens[3], rec.line));
    const auto sign = rec.tokens.size() == 5 ? parse_int(rec.tokens[4], rec.line) : 1;
    signature.push_back(static_cast<int>(std::clamp<std::int64_t>(sign, std::numeric_limits<int>::min(), std::numeric_limits<int>::max())));
    edge_line.push_back(rec.line);
  }
  if (static_cast<std::int64_t>(edges.size()) != m) {
    const std::size_t line = r < records.size() ? records[r].line : records.back().line;
    syntax(line, "expected " + std::to_string(m) + " edge records, found " + std::to_string(edges.size()));
  }

  for (; r < records.size() && records[r].tokens[0] == "rot"; ++r) {
    const Record& rec = records[r];
    if (rec.tokens.size() < 2) syntax(rec.line, "expected 'rot <v> <e>...'");
    const auto v = parse_int(rec.tokens[1], rec.line);
    if (v != static_cast<std::int64_t>(rotation.size())) {
      throw Error(ErrorKind::id_mismatch,
                  "expected rotation for vertex " + std::to_string(rotation.size()) + ", got " + std::to_string(v))
          .at_line(rec.line);
    }
    if (static_cast<std::int64_t>(rotation.size()) >= n) syntax(rec.line, "more rotation records than vertices");
    std::vector<EdgeId> order;
    for (std::size_t k = 2; k < rec.tokens.size(); ++k) order.push_back(parse_id(rec.tokens[k], rec.line));
    rotation.push_back(std::move(order));
    rot_line.push_back(rec.line);
  }
  if (r < records.size()) syntax(records[r].line, "unexpected record '" + std::string(records[r].tokens[0]) + "'");
  if (!rotation.empty() && static_cast<std::int64_t>(rotation.size()) != n) {
    syntax(rot_line.back(), "rotations given for " + std::to_string(rotation.size()) + " of " + std::to_string(n) +
                                " vertices; give all or none");
  }

  auto line_of = [&](const Error& e, const std::vector<std::size_t>& lines) {
    const auto idx = e.index();
    if (idx && *idx >= 0 && static_cast<std::size_t>(*idx) < lines.size()) return lines[static_cast<std::size_t>(*idx)];
    return header.line;
  };

  Graph g;
  try {
    g = build_graph(static_cast<std::size_t>(n), edges);
  } catch (const Error& e) {
    throw e.at_line(line_of(e, edge_line));
  }
  std::optional<Rotation> rot;
  if (!rotation.empty()) rot = std::move(rotation);
  try {
    EmbeddingScheme s = validate_scheme(g, std::move(rot), signature);
    return Instance{std::move(g), std::move(s)};
  } catch (const Error& e) {
    throw e.at_line(line_of(e, e.kind() == ErrorKind::bad_rotation ? rot_line : edge_line));
  }
}

std::string serialize_instance(const Instance& instance) {
  const Graph& g = instance.graph;
  const EmbeddingScheme& s = instance.scheme;
  std::ostringstream out;
  out << "graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.endpoints(static_cast<EdgeId>(e));
    out << "e " << e << ' ' << u << ' ' << v << ' ' << (s.signature(static_cast<EdgeId>(e)) > 0 ? "+1" : "-1")
        << '\n';
  }
  if (s.has_rotation()) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      out << "rot " << v;
      for (EdgeId e : s.rotation_at(static_cast<VertexId>(v))) out << ' ' << e;
      out << '\n';
    }
  }
  return out.str();
}

namespace {

std::string_view parity_name(Parity p) { return p == Parity::two_sided ? "two_sided" : "one_sided"; }

json provenance_json(const Provenance& tag) {
  if (const auto* f = std::get_if<FundamentalTag>(&tag)) {
    return json{{"kind", "fundamental"}, {"root", f->root}, {"cotree_edge", f->cotree_edge}};
  }
  const auto& sum = std::get<SumTag>(tag);
  return json{{"kind", "sum"}, {"c1_pair", {sum.first, sum.second}}};
}

void write_walk(std::ostream& out, const Cycle& c) {
  out << c.length() << ':';
  for (VertexId v : c.vertex_walk) out << ' ' << v;
  out << '\n';
}

}  // namespace

std::string serialize_report(const SolverReport& report, OutputFormat format) {
  if (format == OutputFormat::structured) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["query"] = std::string(to_string(report.query));
    doc["status"] = report.found() ? "found" : "none";
    if (!report.found()) {
      doc["reason"] = report.reason;
      doc["certified"] = report.certified;
    }
    doc["length"] = report.length ? json(*report.length) : json(nullptr);
    doc["candidate_counts"] = {{"c1", report.counts.c1}, {"c2", report.counts.c2}, {"c", report.counts.c}};
    json cycles = json::array();
    for (std::size_t i = 0; i < report.cycles.size(); ++i) {
      const Cycle& c = report.cycles[i];
      json prov = json::array();
      for (const auto& tag : c.provenance) prov.push_back(provenance_json(tag));
      json item;
      item["length"] = c.length();
      item["edge_ids"] = c.edge_ids;
      item["vertex_walk"] = c.vertex_walk;
      if (i < report.parities.size()) item["parity"] = std::string(parity_name(report.parities[i]));
      item["provenance"] = std::move(prov);
      cycles.push_back(std::move(item));
    }
    doc["cycles"] = std::move(cycles);
    return doc.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "query: " << to_string(report.query) << '\n';
  out << "candidates: C1=" << report.counts.c1 << " C2=" << report.counts.c2 << " C=" << report.counts.c << '\n';
  if (!report.found()) {
    out << "NONE\nreason: " << report.reason << '\n';
    return out.str();
  }
  if (report.query == Query::girth) out << "girth: " << *report.length << '\n';
  for (const Cycle& c : report.cycles) write_walk(out, c);
  return out.str();
}

namespace {

std::string surface_name(const GenusInfo& info) {
  if (info.orientable) {
    if (info.euler_genus == 0) return "sphere";
    if (info.euler_genus == 2) return "torus";
    return "orientable surface of genus " + std::to_string(info.euler_genus / 2);
  }
  if (info.euler_genus == 1) return "projective plane";
  if (info.euler_genus == 2) return "Klein bottle";
  return "nonorientable surface with " + std::to_string(info.euler_genus) + " crosscaps";
}

}  // namespace

std::string serialize_genus(const GenusInfo& info, OutputFormat format) {
  if (format == OutputFormat::structured) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["query"] = "genus";
    doc["euler_genus"] = info.euler_genus;
    doc["orientable"] = info.orientable;
    doc["faces"] = info.faces;
    doc["surface"] = surface_name(info);
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "euler_genus: " << info.euler_genus << '\n'
      << "orientable: " << (info.orientable ? "true" : "false") << '\n'
      << "faces: " << info.faces << '\n'
      << "surface: " << surface_name(info) << '\n';
  return out.str();
}

bool VerifyReport::all_pass() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const VerifyClause& c) { return c.pass; });
}

namespace {

std::set<EdgeSet> edge_sets(const std::vector<Cycle>& cycles) {
  std::set<EdgeSet> out;
  for (const Cycle& c : cycles) out.insert(c.edge_ids);
  return out;
}

std::string describe_length(const std::optional<Cycle>& c) {
  return c ? std::to_string(c->length()) : std::string("none");
}

}  // namespace

VerifyReport verify_instance(const Graph& g, const EmbeddingScheme& s, const CandidateOptions& options,
                             std::size_t cap) {
  const CandidatePool pool = build_candidates(g, options);
  const auto all = enumerate_simple_cycles(g, cap);
  VerifyReport report;

  {
    const auto found = shortest_two_sided(pool, s);
    std::optional<Cycle> expected;
    for (const Cycle& c : all) {
      if (edge_set_parity(s, c.edge_ids) == Parity::two_sided) {
        expected = c;
        break;
      }
    }
    const bool same = (!found && !expected) ||
                      (found && expected && found->length() == expected->length() &&
                       edge_set_parity(s, found->edge_ids) == Parity::two_sided);
    report.clauses.push_back({"two_sided", same,
                              "solver " + describe_length(found) + ", oracle " + describe_length(expected)});
  }

  const ParitySets oracle = oracle_shortest_parity_sets(g, cap);
  {
    const auto found = shortest_even_cycles(pool);
    const bool same = edge_sets(found) == edge_sets(oracle.even);
    report.clauses.push_back({"even", same,
                              "solver " + std::to_string(found.size()) + " cycles, oracle " +
                                  std::to_string(oracle.even.size()) + " cycles" +
                                  (oracle.even.empty() ? "" : " of length " + std::to_string(oracle.even.front().length()))});
  }

  {
    const std::size_t oracle_girth = all.empty() ? 0 : all.front().length();
    if (all.empty() || oracle_girth % 2 == 0) {
      const bool absent = !shortest_odd_cycles(pool).has_value();
      report.clauses.push_back({"odd", absent,
                                all.empty() ? "graph is acyclic; nothing to check"
                                            : "girth " + std::to_string(oracle_girth) + " is even; nothing to check"});
    } else {
      const auto found = shortest_odd_cycles(pool);
      bool in_c1 = true;
      for (const Cycle& c : oracle.odd) in_c1 = in_c1 && pool.c1.find(c.edge_ids) != nullptr;
      const bool same = found && edge_sets(*found) == edge_sets(oracle.odd) && in_c1;
      report.clauses.push_back({"odd", same,
                                "solver " + std::to_string(found ? found->size() : 0) + " cycles, oracle " +
                                    std::to_string(oracle.odd.size()) + " cycles of length " +
                                    std::to_string(oracle_girth) + (in_c1 ? ", all in C1" : ", some missing from C1")});
    }
  }
  return report;
}

std::string serialize_verify(const VerifyReport& report, OutputFormat format) {
  if (format == OutputFormat::structured) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["query"] = "verify";
    json clauses = json::array();
    for (const auto& c : report.clauses) {
      clauses.push_back({{"name", c.name}, {"result", c.pass ? "PASS" : "FAIL"}, {"detail", c.detail}});
    }
    doc["clauses"] = std::move(clauses);
    doc["all_pass"] = report.all_pass();
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  for (const auto& c : report.clauses) out << c.name << ": " << (c.pass ? "PASS" : "FAIL") << " (" << c.detail << ")\n";
  return out.str();
}

}  // namespace shortcycles
