#pragma once

// Line-delimited matrix records, manifests, seeded splits and corpus
// statistics.

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "blm/answers.hpp"
#include "blm/validate.hpp"
#include "blm/variation.hpp"

namespace blm {

inline constexpr int kFormatVersion = 1;

// One record per line, keys in a fixed order:
// id, clause_type, variation_type, ordered, contexts, answers,
// correct_index, program, provenance.
std::string to_record(const MatrixInstance& m);

// Throws ParseError (with the line number) on malformed input. A record
// without exactly six answers fails with an "AnswerArity" message.
MatrixInstance from_record(std::string_view line, std::size_t line_no = 0);

struct CountKey {
  ClauseType clause_type = ClauseType::Main;
  VariationType variation_type = VariationType::I;
  bool ordered = true;
  friend auto operator<=>(const CountKey&, const CountKey&) = default;
};

struct SplitSizes {
  std::size_t train = 0;
  std::size_t val = 0;
  std::size_t test = 0;
  friend bool operator==(const SplitSizes&, const SplitSizes&) = default;
};

struct DatasetManifest {
  int format_version = kFormatVersion;
  std::uint64_t global_seed = 0;
  std::size_t total = 0;
  std::map<CountKey, std::size_t> counts;
  std::optional<SplitSizes> splits;

  static DatasetManifest of(std::span<const MatrixInstance> matrices,
                            std::uint64_t global_seed = 0);

  // Same line format as matrix records.
  std::string to_record() const;
  static DatasetManifest from_record(std::string_view line);

  friend bool operator==(const DatasetManifest&, const DatasetManifest&) = default;
};

// Sidecar manifest path: "<path>.manifest".
std::filesystem::path manifest_path(const std::filesystem::path& dataset);

// Writes the dataset file and its sidecar manifest.
DatasetManifest write_matrices(std::span<const MatrixInstance> matrices,
                               const std::filesystem::path& path,
                               std::uint64_t global_seed = 0);

// Reads a dataset file. When a sidecar manifest exists, its format version
// must match (FormatError otherwise).
std::vector<MatrixInstance> read_matrices(const std::filesystem::path& path);

void write_manifest(const DatasetManifest& manifest,
                    const std::filesystem::path& path);
DatasetManifest read_manifest(const std::filesystem::path& path);

struct Fractions {
  double train = 0.8;
  double val = 0.1;
  double test = 0.1;

  // Throws PlanError unless every fraction is in [0, 1] and they sum to
  // 1 within 1e-9.
  void check() const;
};

// train = round(n * f_train), val = round(n * f_val) capped by what is
// left, test = the remainder.
SplitSizes split_sizes(std::size_t n, const Fractions& fractions);

// Seeded shuffle of [0, n), cut into train/val/test index lists.
std::array<std::vector<std::size_t>, 3> split_indices(std::size_t n,
                                                      const Fractions& fractions,
                                                      std::uint64_t seed);

struct Split {
  std::vector<MatrixInstance> train;
  std::vector<MatrixInstance> val;
  std::vector<MatrixInstance> test;
};

Split split(std::span<const MatrixInstance> matrices, const Fractions& fractions,
            std::uint64_t seed);

// counts[type][position]: how often each contrast type sits at each
// answer position.
using RotationHistogram = std::array<std::array<std::size_t, kAnswerCount>, kAnswerCount>;

struct StatsReport {
  DatasetManifest manifest;
  RotationHistogram histogram{};
  // RotationSkew entries for cells more than 1 away from total / 6.
  std::vector<Violation> skew;
};

StatsReport stats(std::span<const MatrixInstance> matrices);

std::string format_stats(const StatsReport& report);

}  // namespace blm
