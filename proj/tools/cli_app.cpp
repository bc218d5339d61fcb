#include "cli_app.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "shortcycles/error.hpp"
#include "shortcycles/io.hpp"
#include "shortcycles/oracle.hpp"
#include "shortcycles/solvers.hpp"

namespace shortcycles::cli {

namespace {

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

struct GenOptions {
  std::size_t n = 8;
  std::size_t extra = 4;
  double neg = 0.0;
  bool rot = false;
  bool projective = false;
  std::uint64_t seed = 0;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shortest two-sided, even and odd cycles from BFS candidate cycles", "shortcycles"};
  app.require_subcommand(1);

  std::string format_name = "text";
  unsigned threads = 1;
  bool timing = false;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_option("--threads", threads, "Worker threads for candidate generation")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();
  app.add_flag("--timing", timing, "Print elapsed solver time to stderr");

  std::string file;
  const std::map<std::string, Query> queries = {
      {"twosided", Query::two_sided},
      {"even", Query::even},
      {"odd", Query::odd},
      {"girth", Query::girth},
      {"contractible", Query::contractible_projective},
  };
  const std::map<std::string, std::string> descriptions = {
      {"twosided", "Shortest two-sided cycle"},
      {"even", "All shortest even cycles"},
      {"odd", "All shortest odd cycles (when the girth is odd)"},
      {"girth", "Length of a shortest cycle"},
      {"contractible", "Shortest contractible cycle of a projective-plane embedding"},
  };
  std::map<std::string, CLI::App*> solver_commands;
  for (const auto& [name, query] : queries) {
    auto* sub = app.add_subcommand(name, descriptions.at(name));
    sub->add_option("file", file, "Instance file, or - for stdin")->required();
    sub->fallthrough();
    solver_commands[name] = sub;
  }
  auto* genus_cmd = app.add_subcommand("genus", "Euler genus, orientability and face count");
  genus_cmd->add_option("file", file, "Instance file, or - for stdin")->required();
  genus_cmd->fallthrough();
  auto* verify_cmd = app.add_subcommand("verify", "Check every solver against exhaustive cycle enumeration");
  verify_cmd->add_option("file", file, "Instance file, or - for stdin")->required();
  verify_cmd->fallthrough();

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Emit a random instance");
  gen_cmd->add_option("--n", gen.n, "Vertex count")->capture_default_str();
  gen_cmd->add_option("--extra", gen.extra, "Edges beyond a spanning tree")->capture_default_str();
  gen_cmd->add_option("--neg", gen.neg, "Probability that an edge gets signature -1")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  gen_cmd->add_flag("--rot", gen.rot, "Attach a uniformly random rotation system");
  gen_cmd->add_flag("--projective", gen.projective, "Generate an embedding in the projective plane");
  gen_cmd->add_option("--seed", gen.seed, "Random seed (decimal)")->capture_default_str();
  gen_cmd->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  const OutputFormat format = format_name == "structured" ? OutputFormat::structured : OutputFormat::text;
  const CandidateOptions options{threads, false};

  try {
    if (gen_cmd->parsed()) {
      const Instance instance = gen.projective
                                    ? random_projective_instance({gen.n, gen.extra, gen.seed})
                                    : random_instance({gen.n, gen.extra, gen.neg, gen.rot, gen.seed});
      out << serialize_instance(instance);
      return kExitOk;
    }

    const Instance instance = parse_instance(read_input(file, in));
    if (!is_connected(instance.graph)) throw Error(ErrorKind::not_connected, "input graph is not connected");

    if (genus_cmd->parsed()) {
      out << serialize_genus(euler_genus(instance.graph, instance.scheme), format);
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      const VerifyReport report = verify_instance(instance.graph, instance.scheme, options);
      out << serialize_verify(report, format);
      return report.all_pass() ? kExitOk : kExitError;
    }
    for (const auto& [name, sub] : solver_commands) {
      if (!sub->parsed()) continue;
      const SolverReport report = run_query(queries.at(name), instance.graph, instance.scheme, options);
      out << serialize_report(report, format);
      if (timing) {
        err << "elapsed_ms: " << std::chrono::duration<double, std::milli>(report.elapsed).count() << '\n';
      }
      if (report.found()) return kExitOk;
      return report.certified ? kExitNone : kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace shortcycles::cli
