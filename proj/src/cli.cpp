#include "blm/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "blm/dataset.hpp"
#include "blm/error.hpp"
#include "blm/generator.hpp"
#include "blm/validate.hpp"

#ifndef BLM_DEFAULT_LEXICON
#define BLM_DEFAULT_LEXICON ""
#endif

namespace blm {

namespace {

namespace fs = std::filesystem;

struct UsageError : Error {
  using Error::Error;
};

struct RunConfig {
  std::string variation = "I";
  std::string clauses = "main";
  std::size_t count = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  Fractions fractions;
  std::string in;
  std::string out;
  std::string out_dir;
  std::string lexicon;
};

fs::path lexicon_path(const RunConfig& cfg) {
  if (!cfg.lexicon.empty()) return cfg.lexicon;
  if (const char* env = std::getenv("BLM_LEXICON"); env && *env) return env;
  if (*BLM_DEFAULT_LEXICON) return BLM_DEFAULT_LEXICON;
  throw UsageError("no lexicon: pass --lexicon or set BLM_LEXICON");
}

std::vector<ClauseType> parse_clauses(const std::string& list) {
  std::vector<ClauseType> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(parse_clause_type(item));
    } catch (const ParseError&) {
      throw UsageError("unknown clause type '" + item + "' (main, completive, relative)");
    }
  }
  if (out.empty()) throw UsageError("--clauses is empty");
  return out;
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string(flag) + " is required");
}

void emit(std::span<const MatrixInstance> matrices, const RunConfig& cfg, std::ostream& out) {
  if (cfg.out.empty()) {
    for (const auto& m : matrices) out << to_record(m) << '\n';
  } else {
    write_matrices(matrices, cfg.out, cfg.seed);
  }
}

int do_generate(const RunConfig& cfg, std::ostream& out) {
  if (cfg.count == 0) throw UsageError("--count must be positive");
  GenerateOptions opt;
  try {
    opt.variation = parse_variation_type(cfg.variation);
  } catch (const ParseError&) {
    throw UsageError("--type must be I, II or III");
  }
  opt.clauses = parse_clauses(cfg.clauses);
  opt.count = cfg.count;
  opt.seed = cfg.seed;
  opt.threads = cfg.threads;
  const Lexicon lexicon = Lexicon::load(lexicon_path(cfg));
  const auto matrices = Generator(lexicon, opt).run();
  emit(matrices, cfg, out);
  return kExitOk;
}

int do_shuffle(const RunConfig& cfg, std::ostream& out) {
  require(cfg.in, "--in");
  auto matrices = read_matrices(cfg.in);
  for (auto& m : matrices) m = shuffle_contexts(m, cfg.seed);
  emit(matrices, cfg, out);
  return kExitOk;
}

int do_split(const RunConfig& cfg, std::ostream& out) {
  try {
    cfg.fractions.check();
  } catch (const PlanError& e) {
    throw UsageError(e.what());
  }
  require(cfg.in, "--in");
  require(cfg.out_dir, "--out-dir");
  const auto matrices = read_matrices(cfg.in);
  const Split parts = split(matrices, cfg.fractions, cfg.seed);
  const fs::path dir = cfg.out_dir;
  fs::create_directories(dir);
  write_matrices(parts.train, dir / "train.jsonl", cfg.seed);
  write_matrices(parts.val, dir / "val.jsonl", cfg.seed);
  write_matrices(parts.test, dir / "test.jsonl", cfg.seed);
  DatasetManifest man = DatasetManifest::of(matrices, cfg.seed);
  man.splits = SplitSizes{parts.train.size(), parts.val.size(), parts.test.size()};
  write_manifest(man, dir / "split.manifest");
  out << man.to_record() << '\n';
  return kExitOk;
}

int do_validate(const RunConfig& cfg, std::ostream& out) {
  require(cfg.in, "--in");
  const Lexicon lexicon = Lexicon::load(lexicon_path(cfg));
  const auto matrices = read_matrices(cfg.in);
  std::size_t count = 0;
  for (const auto& m : matrices) {
    for (const auto& v : validate_matrix(m, lexicon)) {
      out << format_violation(v) << '\n';
      ++count;
    }
  }
  out << matrices.size() << " matrices, " << count << " violations\n";
  return count ? kExitViolations : kExitOk;
}

int do_stats(const RunConfig& cfg, std::ostream& out) {
  require(cfg.in, "--in");
  const auto matrices = read_matrices(cfg.in);
  out << format_stats(stats(matrices));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Generate, shuffle, split, validate and summarize agreement matrices", "blm"};
  app.require_subcommand(1, 1);

  auto add_lexicon = [&](CLI::App* sub) {
    sub->add_option("--lexicon", cfg.lexicon, "Lexicon file (default: $BLM_LEXICON)");
  };

  auto* gen = app.add_subcommand("generate", "Generate matrices");
  gen->add_option("--type", cfg.variation, "Variation type: I, II or III");
  gen->add_option("--clauses", cfg.clauses, "Comma-separated: main,completive,relative");
  gen->add_option("--count", cfg.count, "Number of matrices")->required();
  gen->add_option("--seed", cfg.seed, "Global seed");
  gen->add_option("--threads", cfg.threads, "Worker threads (0: all cores)");
  gen->add_option("--out", cfg.out, "Output file (default: stdout)");
  add_lexicon(gen);

  auto* shuf = app.add_subcommand("shuffle", "Shuffle the context rows of every matrix");
  shuf->add_option("--in", cfg.in, "Input dataset");
  shuf->add_option("--out", cfg.out, "Output file (default: stdout)");
  shuf->add_option("--seed", cfg.seed, "Shuffle seed");

  auto* spl = app.add_subcommand("split", "Split into train/val/test");
  spl->add_option("--in", cfg.in, "Input dataset");
  spl->add_option("--out-dir", cfg.out_dir, "Directory for the three splits");
  spl->add_option("--train", cfg.fractions.train, "Train fraction");
  spl->add_option("--val", cfg.fractions.val, "Validation fraction");
  spl->add_option("--test", cfg.fractions.test, "Test fraction");
  spl->add_option("--seed", cfg.seed, "Split seed");

  auto* val = app.add_subcommand("validate", "Check rule conformance");
  val->add_option("--in", cfg.in, "Input dataset");
  add_lexicon(val);

  auto* st = app.add_subcommand("stats", "Counts and answer-position histogram");
  st->add_option("--in", cfg.in, "Input dataset");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return do_generate(cfg, out);
    if (shuf->parsed()) return do_shuffle(cfg, out);
    if (spl->parsed()) return do_split(cfg, out);
    if (val->parsed()) return do_validate(cfg, out);
    if (st->parsed()) return do_stats(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace blm
