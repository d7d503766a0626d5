// Copyright 2026 The Spider Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spider/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "spider/digraph.hpp"
#include "spider/errors.hpp"
#include "spider/oracle.hpp"
#include "spider/solver.hpp"
#include "spider/spider.hpp"

namespace spider::cli {

namespace {

class InputUnavailable : public Error {
 public:
  explicit InputUnavailable(const std::string& path) : Error("cannot open " + path) {}
};

// Opens `path` for reading, or hands back `fallback` for "-".
class Source {
 public:
  Source(const std::string& path, std::istream& fallback) : stream_(&fallback) {
    if (path != "-") {
      file_ = std::make_unique<std::ifstream>(path);
      if (!*file_) throw InputUnavailable(path);
      stream_ = file_.get();
    }
  }
  std::istream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream* stream_;
};

void print_oracle(std::ostream& out, const OracleResult& result) {
  out << "exists " << (result.exists ? "true" : "false") << '\n';
  if (result.witness) write_spider(out, *result.witness);
  for (const auto& [root, legs] : result.best_per_root) out << "best " << root << ' ' << legs << '\n';
}

int do_generate(const CommandConfig& cfg, std::ostream& out) {
  const Digraph g = generate(cfg.generator, cfg.seed);
  if (cfg.output == "-") {
    write_edge_list(out, g);
  } else {
    std::ofstream file(cfg.output);
    if (!file) throw InputUnavailable(cfg.output);
    write_edge_list(file, g);
  }
  return kExitOk;
}

int do_solve(const CommandConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  Source src(cfg.input, in);
  const Digraph g = parse_edge_list(src.get());
  SolveOutcome result;
  try {
    result = find_spider(g, cfg.ell, cfg.mode);
  } catch (const InsufficientOutDegree& e) {
    err << "error: " << e.what() << " (need min out-degree ≥ 2ℓ = " << 2 * cfg.ell << ")\n";
    return kExitPrecondition;
  }
  write_spider(out, result.spider);
  if (cfg.trace) {
    err << explain_trace(result.trace);
    err << "# H coloring (u v color)\n";
    write_coloring(err, result.colored, result.coloring);
  }
  return kExitOk;
}

int do_verify(const CommandConfig& cfg, std::istream& in, std::ostream& out) {
  if (cfg.input == "-" && cfg.spider_path == "-") {
    throw CLI::ValidationError("--graph and --spider cannot both read stdin");
  }
  Source graph_src(cfg.input, in);
  const Digraph g = parse_edge_list(graph_src.get());
  Source spider_src(cfg.spider_path, in);
  const Spider s = parse_spider(spider_src.get());
  if (const auto bad = verify_spider(g, s, cfg.ell)) {
    out << "invalid " << bad->describe() << '\n';
    return kExitInvalid;
  }
  out << "ok\n";
  return kExitOk;
}

int do_oracle(const CommandConfig& cfg, std::istream& in, std::ostream& out) {
  Source src(cfg.input, in);
  const Digraph g = parse_edge_list(src.get());
  const OracleResult result = has_spider_bruteforce(g, cfg.ell, cfg.cap);
  print_oracle(out, result);
  return result.exists ? kExitOk : kExitNoSpider;
}

int do_search(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  const SearchReport report = search_spider_free(cfg.generator, cfg.ell, cfg.trials, cfg.seed, cfg.cap);
  for (const SearchHit& hit : report.hits) {
    out << "# trial " << hit.trial << " seed " << hit.seed << " min_out " << hit.min_out << '\n';
    write_edge_list(out, hit.graph);
  }
  err << "sampled " << report.sampled << ", skipped " << report.skipped << ", spider-free "
      << report.hits.size() << '\n';
  return kExitOk;
}

int do_bench(const CommandConfig& cfg, std::ostream& out) {
  out << "n\tm\tell\tms\ta\tc\ts\n";
  for (std::size_t i = 0; i < cfg.sizes.size(); ++i) {
    const std::size_t n = cfg.sizes[i];
    const Digraph g = gen_random_out_regular(n, 2 * cfg.ell, cfg.seed + i);
    double best_ms = 0;
    SolveTrace trace;
    for (std::size_t rep = 0; rep < std::max<std::size_t>(cfg.reps, 1); ++rep) {
      const auto start = std::chrono::steady_clock::now();
      SolveOutcome result = find_spider(g, cfg.ell, Mode::kFast);
      const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
      if (rep == 0 || elapsed.count() < best_ms) best_ms = elapsed.count();
      trace = std::move(result.trace);
    }
    std::ostringstream row;
    row.setf(std::ios::fixed);
    row.precision(3);
    row << n << '\t' << g.edge_count() << '\t' << cfg.ell << '\t' << best_ms << '\t' << trace.a
        << '\t' << trace.c << '\t' << trace.s << '\n';
    out << row.str() << std::flush;
  }
  return kExitOk;
}

}  // namespace

int execute(const CommandConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  switch (cfg.command) {
    case Command::kGenerate: return do_generate(cfg, out);
    case Command::kSolve: return do_solve(cfg, in, out, err);
    case Command::kVerify: return do_verify(cfg, in, out);
    case Command::kOracle: return do_oracle(cfg, in, out);
    case Command::kSearch: return do_search(cfg, out, err);
    case Command::kBench: return do_bench(cfg, out);
  }
  return kExitUsage;
}

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CommandConfig cfg;
  std::string family_name;
  std::string mode_name = "checked";

  CLI::App app{"Find, verify and search for (2,ℓ)-spiders in digraphs", "spider_tool"};
  app.require_subcommand(1);
  const auto positive = CLI::PositiveNumber;

  auto* gen = app.add_subcommand("generate", "Write a generated digraph as an edge list");
  gen->add_option("family", family_name, "complete | random-out-regular | tournament")->required();
  gen->add_option("--n", cfg.generator.n, "Vertex count")->required()->check(positive);
  gen->add_option("--d", cfg.generator.d, "Out-degree (random-out-regular)");
  gen->add_option("--seed", cfg.seed, "Random seed");
  gen->add_option("-o,--output", cfg.output, "Output path, - for stdout");

  auto* solve = app.add_subcommand("solve", "Find a (2,ℓ)-spider; needs min out-degree ≥ 2ℓ");
  solve->add_option("--ell", cfg.ell, "Number of legs")->required()->check(positive);
  solve->add_option("-i,--input", cfg.input, "Edge-list path, - for stdin");
  solve->add_option("--mode", mode_name, "checked | fast")->check(CLI::IsMember({"checked", "fast"}));
  solve->add_flag("--trace", cfg.trace, "Write the proof trace and H coloring to stderr");

  auto* verify = app.add_subcommand("verify", "Check a spider against a graph");
  verify->add_option("--ell", cfg.ell, "Expected number of legs")->required();
  verify->add_option("--graph", cfg.input, "Edge-list path, - for stdin")->required();
  verify->add_option("--spider", cfg.spider_path, "Spider path, - for stdin")->required();

  auto* oracle = app.add_subcommand("oracle", "Exhaustive spider existence for small graphs");
  oracle->add_option("--ell", cfg.ell, "Number of legs")->required()->check(positive);
  oracle->add_option("-i,--input", cfg.input, "Edge-list path, - for stdin");
  oracle->add_option("--cap", cfg.cap, "Largest vertex count searched")->check(CLI::Range(1, 32));

  auto* search = app.add_subcommand("search", "Sample a family and print spider-free members");
  search->add_option("--family", family_name, "complete | random-out-regular | tournament")->required();
  search->add_option("--n", cfg.generator.n, "Vertex count")->required()->check(positive);
  search->add_option("--d", cfg.generator.d, "Out-degree (random-out-regular)");
  search->add_option("--ell", cfg.ell, "Number of legs")->required()->check(positive);
  search->add_option("--trials", cfg.trials, "Number of samples");
  search->add_option("--seed", cfg.seed, "Seed of the first sample");
  search->add_option("--cap", cfg.cap, "Largest vertex count searched")->check(CLI::Range(1, 32));

  auto* bench = app.add_subcommand("bench", "Time fast-mode solves over a size ladder (TSV)");
  bench->add_option("--ell", cfg.ell, "Number of legs")->default_val(25)->check(positive);
  bench->add_option("--sizes", cfg.sizes, "Vertex counts")->delimiter(',');
  bench->add_option("--seed", cfg.seed, "Seed of the first size");
  bench->add_option("--reps", cfg.reps, "Timed repetitions per size (best is reported)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (app.got_subcommand(gen)) cfg.command = Command::kGenerate;
    if (app.got_subcommand(solve)) cfg.command = Command::kSolve;
    if (app.got_subcommand(verify)) cfg.command = Command::kVerify;
    if (app.got_subcommand(oracle)) cfg.command = Command::kOracle;
    if (app.got_subcommand(search)) cfg.command = Command::kSearch;
    if (app.got_subcommand(bench)) cfg.command = Command::kBench;
    cfg.mode = mode_name == "fast" ? Mode::kFast : Mode::kChecked;
    if (cfg.command == Command::kGenerate || cfg.command == Command::kSearch) {
      const auto family = family_from_string(family_name);
      if (!family) throw CLI::ValidationError("family", "unknown family \"" + family_name + "\"");
      cfg.generator.family = *family;
      if (*family == Family::kRandomOutRegular && cfg.generator.d >= cfg.generator.n) {
        throw CLI::ValidationError("--d", "random-out-regular needs 0 <= d < n");
      }
      if (*family == Family::kTournament && cfg.generator.n % 2 == 0) {
        throw CLI::ValidationError("--n", "tournament needs odd n");
      }
    }
    if (cfg.command == Command::kBench) {
      for (std::size_t n : cfg.sizes) {
        if (n <= 2 * cfg.ell) throw CLI::ValidationError("--sizes", "every size must exceed 2ℓ");
      }
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return execute(cfg, in, out, err);
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InputUnavailable& e) {
    err << "error: " << e.what() << '\n';
    return kExitNoInput;
  } catch (const InstanceTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return kExitInternal;
  } catch (const ExtensionExhausted& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace spider::cli
