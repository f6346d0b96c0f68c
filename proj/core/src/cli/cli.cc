// Copyright 2026 The MiniOO Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "minioo/cli/cli.h"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "minioo/checker/report.h"
#include "minioo/checker/rules.h"
#include "minioo/frontend/source.h"
#include "minioo/harness/diff.h"
#include "minioo/harness/iso.h"
#include "minioo/harness/suite.h"
#include "minioo/interp/interpreter.h"

namespace minioo {
namespace {

namespace fs = std::filesystem;

struct Options {
  std::vector<std::string> files;
  std::string rules = "all";
  std::string form = "strict";
  std::string format = "text";
  std::string suite;
  std::string factory;
  std::string entry_a;
  std::string entry_b;
  std::string universe;
  int max_size = -1;
  std::string encoding = "identity";
  std::string corpus_dir;
  bool update = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

fs::path resolve_path(const CliContext& ctx, const std::string& path) {
  fs::path p(path);
  if (!ctx.base_dir.empty() && p.is_relative()) p = ctx.base_dir / p;
  return p;
}

std::vector<std::int64_t> parse_universe(const std::string& csv) {
  std::vector<std::int64_t> out;
  std::stringstream in(csv);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad --universe element '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("empty --universe");
  return out;
}

// Loads the concatenated program, printing frontend errors on failure.
std::optional<LoadResult> load(const Options& opt, const CliContext& ctx) {
  std::string error;
  auto sources = read_sources(opt.files, ctx.base_dir, &error);
  if (!sources) {
    ctx.err << error << "\n";
    return std::nullopt;
  }
  LoadResult loaded = load_program(*sources);
  if (!loaded.ok()) {
    for (const std::string& e : loaded.errors) ctx.err << e << "\n";
    return std::nullopt;
  }
  return loaded;
}

int cmd_check(const Options& opt, const CliContext& ctx) {
  if (opt.form != "strict" && opt.form != "relaxed") {
    throw UsageError("--form must be strict or relaxed");
  }
  if (opt.format != "text" && opt.format != "json") {
    throw UsageError("--format must be text or json");
  }
  const MutationForm form =
      opt.form == "strict" ? MutationForm::kStrict : MutationForm::kRelaxed;
  std::optional<CheckConfig> config = CheckConfig::from_flags(opt.rules, form);
  if (!config) throw UsageError("bad --rules '" + opt.rules + "'");
  auto loaded = load(opt, ctx);
  if (!loaded) return kExitFrontend;
  std::vector<Diagnostic> diags = check_all(*loaded->program, *config);
  ctx.out << (opt.format == "json" ? format_json(diags, *config)
                                   : format_text(diags));
  return diags.empty() ? kExitOk : kExitFailure;
}

int cmd_run(const Options& opt, const CliContext& ctx) {
  auto loaded = load(opt, ctx);
  if (!loaded) return kExitFrontend;
  if (auto bad = check_runnable(*loaded->program)) {
    ctx.err << to_string(*bad) << "\n";
    return kExitFrontend;
  }
  ExecOutcome outcome = run_program(*loaded->program);
  for (const std::string& line : outcome.output) ctx.out << line << "\n";
  for (const Span& s : outcome.assertions_failed) {
    ctx.err << to_string(s) << ": assertion failed\n";
  }
  if (outcome.error) {
    ctx.err << to_string(*outcome.error) << "\n";
    return kExitRuntime;
  }
  return outcome.assertions_failed.empty() ? kExitOk : kExitFailure;
}

int cmd_subst(const Options& opt, const CliContext& ctx) {
  if (opt.format != "text" && opt.format != "json") {
    throw UsageError("--format must be text or json");
  }
  std::ifstream in(resolve_path(ctx, opt.suite), std::ios::binary);
  if (!in) {
    ctx.err << opt.suite << ": cannot read file\n";
    return kExitFrontend;
  }
  std::ostringstream text;
  text << in.rdbuf();
  ContractSuite suite;
  try {
    suite = parse_suite(text.str());
  } catch (const SuiteError& e) {
    throw UsageError(opt.suite + ": " + e.what());
  }
  auto loaded = load(opt, ctx);
  if (!loaded) return kExitFrontend;
  SubstitutionReport report;
  try {
    report = substitution_test(*loaded->program, suite, opt.factory);
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  ctx.out << (opt.format == "json" ? format_json(report) : format_text(report));
  return report.substitutable ? kExitOk : kExitFailure;
}

int cmd_diff(const Options& opt, const CliContext& ctx) {
  if (opt.max_size < 0) throw UsageError("--max-size must be non-negative");
  DiffSpec spec{opt.entry_a, opt.entry_b, parse_universe(opt.universe),
                opt.max_size, opt.factory};
  auto loaded = load(opt, ctx);
  if (!loaded) return kExitFrontend;
  std::optional<Witness> witness;
  try {
    witness = differential_search(*loaded->program, spec);
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  if (!witness) {
    ctx.out << "no witness\n";
    return kExitOk;
  }
  ctx.out << format_text(*witness, spec);
  return kExitFailure;
}

int cmd_iso(const Options& opt, const CliContext& ctx) {
  const std::vector<std::int64_t> universe =
      opt.universe.empty() ? std::vector<std::int64_t>{42, 43}
                           : parse_universe(opt.universe);
  const int max_size = opt.max_size < 0 ? 3 : opt.max_size;
  UfEncoding enc;
  if (opt.encoding == "identity") {
    enc = UfEncoding::identity(universe);
  } else if (opt.encoding == "primes") {
    enc = UfEncoding::primes(universe);
  } else {
    throw UsageError("--encoding must be identity or primes");
  }
  IsoReport report;
  try {
    report = check_isomorphism(enc, universe, max_size);
  } catch (const EncodingError& e) {
    throw UsageError(std::string("invalid encoding: ") + e.what());
  }
  ctx.out << format_text(report);
  return report.counterexamples.empty() ? kExitOk : kExitFailure;
}

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::optional<std::string> read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

// First differing line, 1-based.
int first_difference(const std::string& a, const std::string& b) {
  std::istringstream sa(a), sb(b);
  int line = 1;
  for (;; ++line) {
    std::string la, lb;
    const bool ha = static_cast<bool>(std::getline(sa, la));
    const bool hb = static_cast<bool>(std::getline(sb, lb));
    if (!ha && !hb) return line;
    if (ha != hb || la != lb) return line;
  }
}

int cmd_corpus_verify(const Options& opt, const CliContext& ctx) {
  const fs::path dir = resolve_path(ctx, opt.corpus_dir);
  if (!fs::is_directory(dir)) {
    ctx.err << opt.corpus_dir << ": not a directory\n";
    return kExitFrontend;
  }
  std::optional<std::string> manifest = read_text(dir / "manifest.txt");
  struct Fixture {
    std::string name;
    std::vector<std::string> args;
  };
  std::vector<Fixture> fixtures;
  if (manifest) {
    std::istringstream in(*manifest);
    int line_no = 0;
    for (std::string line; std::getline(in, line);) {
      ++line_no;
      if (split_words(line).empty() || line[0] == '#') continue;
      const std::size_t colon = line.find(':');
      std::string name =
          colon == std::string::npos ? "" : line.substr(0, colon);
      if (name.empty() || name.find_first_of(" \t/") != std::string::npos) {
        ctx.err << "manifest.txt:" << line_no << ": malformed fixture\n";
        return kExitUsage;
      }
      fixtures.push_back({name, split_words(line.substr(colon + 1))});
    }
  }
  if (fixtures.empty()) {
    ctx.err << "warning: no fixtures in " << opt.corpus_dir << "\n";
    return kExitOk;
  }
  std::sort(fixtures.begin(), fixtures.end(),
            [](const Fixture& a, const Fixture& b) { return a.name < b.name; });

  int mismatches = 0;
  for (const Fixture& f : fixtures) {
    std::ostringstream captured;
    CliContext inner{captured, captured, dir.string()};
    const int code = run_cli(f.args, inner);
    const fs::path golden = dir / "golden" / f.name;
    if (opt.update) {
      fs::create_directories(golden);
      std::ofstream(golden / "out.txt", std::ios::binary) << captured.str();
      std::ofstream(golden / "exit", std::ios::binary) << code << "\n";
      continue;
    }
    std::optional<std::string> want_out = read_text(golden / "out.txt");
    std::optional<std::string> want_exit = read_text(golden / "exit");
    if (!want_out || !want_exit) {
      ctx.out << f.name << ": missing golden\n";
      ++mismatches;
    } else if (*want_out != captured.str()) {
      ctx.out << f.name << ": output differs at line "
              << first_difference(*want_out, captured.str()) << "\n";
      ++mismatches;
    } else if (split_words(*want_exit) !=
               std::vector<std::string>{std::to_string(code)}) {
      ctx.out << f.name << ": exit " << code << ", expected "
              << split_words(*want_exit).front() << "\n";
      ++mismatches;
    }
  }
  if (opt.update) {
    ctx.out << "updated " << fixtures.size() << " fixtures\n";
    return kExitOk;
  }
  ctx.out << fixtures.size() - mismatches << "/" << fixtures.size()
          << " fixtures match\n";
  return mismatches == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, const CliContext& ctx) {
  CLI::App app{"MiniOO analysis workbench", "minioo"};
  app.require_subcommand(1);
  Options opt;

  auto add_files = [&](CLI::App* cmd) {
    cmd->add_option("files", opt.files, "MiniOO source files, concatenated")
        ->required();
  };

  CLI::App* check = app.add_subcommand("check", "Check the rule set");
  add_files(check);
  check->add_option("--rules", opt.rules, "all or a subset of r1,r2,r3,r4");
  check->add_option("--form", opt.form, "strict or relaxed");
  check->add_option("--format", opt.format, "text or json");

  CLI::App* run = app.add_subcommand("run", "Interpret main()");
  add_files(run);

  CLI::App* subst = app.add_subcommand("subst", "Run a substitution test");
  add_files(subst);
  subst->add_option("--suite", opt.suite, "Suite file")->required();
  subst->add_option("--factory", opt.factory, "Derived factory")->required();
  subst->add_option("--format", opt.format, "text or json");

  CLI::App* diff = app.add_subcommand("diff", "Differential search");
  add_files(diff);
  diff->add_option("--entry-a", opt.entry_a, "First function")->required();
  diff->add_option("--entry-b", opt.entry_b, "Second function")->required();
  diff->add_option("--factory", opt.factory, "Collection factory")
      ->required();
  diff->add_option("--universe", opt.universe, "Elements, comma-separated")
      ->required();
  diff->add_option("--max-size", opt.max_size, "Largest collection")
      ->required();

  CLI::App* iso = app.add_subcommand("iso", "Bag/integer isomorphism check");
  iso->add_option("--universe", opt.universe, "Elements, comma-separated");
  iso->add_option("--max-size", opt.max_size, "Largest multiset");
  iso->add_option("--encoding", opt.encoding, "identity or primes");

  CLI::App* verify =
      app.add_subcommand("corpus-verify", "Compare fixtures with goldens");
  verify->add_option("dir", opt.corpus_dir, "Corpus directory")->required();
  verify->add_flag("--update", opt.update, "Rewrite the goldens");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, ctx.out, ctx.err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, ctx.out, ctx.err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, ctx.out, ctx.err);
    return kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(opt, ctx);
    if (run->parsed()) return cmd_run(opt, ctx);
    if (subst->parsed()) return cmd_subst(opt, ctx);
    if (diff->parsed()) return cmd_diff(opt, ctx);
    if (iso->parsed()) return cmd_iso(opt, ctx);
    return cmd_corpus_verify(opt, ctx);
  } catch (const UsageError& e) {
    ctx.err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace minioo
