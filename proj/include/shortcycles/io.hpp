#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "shortcycles/cycle_space.hpp"
#include "shortcycles/embedding.hpp"
#include "shortcycles/oracle.hpp"
#include "shortcycles/solvers.hpp"

namespace shortcycles {

// Instance text format, one record per line, '#' starts a comment:
//
//   graph <n> <m>
//   e <id> <u> <v> [+1|-1]     m times, ids 0..m-1 in order; sign defaults to +1
//   rot <v> <e> <e> ...        optional; all n vertices in order, or none
//
// Parse failures throw Error with the offending 1-based line attached.
Instance parse_instance(std::string_view text);

std::string serialize_instance(const Instance& instance);

enum class OutputFormat { text, structured };

// Structured output is a JSON document carrying "format_version": 1.
inline constexpr int kFormatVersion = 1;

std::string serialize_report(const SolverReport& report, OutputFormat format);

std::string serialize_genus(const GenusInfo& info, OutputFormat format);

/// Outcome of one solver-versus-oracle comparison.
struct VerifyClause {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyClause> clauses;

  bool all_pass() const;
};

/// Cross-checks the candidate-set solvers against exhaustive enumeration:
/// shortest two-sided length, the full set of shortest even cycles, and
/// (when the girth is odd) the full set of shortest odd cycles with
/// fundamental-cycle provenance.
VerifyReport verify_instance(const Graph& g, const EmbeddingScheme& s, const CandidateOptions& options = {},
                             std::size_t cap = kDefaultCycleCap);

std::string serialize_verify(const VerifyReport& report, OutputFormat format);

}  // namespace shortcycles
