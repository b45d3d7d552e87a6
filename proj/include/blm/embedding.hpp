#pragma once

// Binary container for sentence embeddings, read by the learner.
//
//   magic      8 bytes  "BLMEMB1\0"
//   count      u64 LE
//   records    count times:
//     key_len  u16 LE
//     key      key_len bytes of UTF-8 ("<matrix id>/ctx/<0..6>" or "/ans/<0..5>")
//     values   768 x IEEE-754 binary32, LE

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "blm/variation.hpp"

namespace blm {

inline constexpr std::size_t kEmbeddingDim = 768;
inline constexpr std::array<char, 8> kEmbeddingMagic = {'B', 'L', 'M', 'E', 'M', 'B', '1', '\0'};

struct EmbeddingRecord {
  std::string key;
  std::vector<float> values;  // kEmbeddingDim entries
};

// The 13 keys of a matrix: 7 contexts then 6 answers.
std::vector<std::string> embedding_keys(const MatrixInstance& m);

// FormatError for a wrong vector length or a key longer than 65535 bytes.
void write_embeddings(std::ostream& out, std::span<const EmbeddingRecord> records);
void write_embeddings(const std::filesystem::path& path,
                      std::span<const EmbeddingRecord> records);

// FormatError on a bad magic or a truncated stream.
std::vector<EmbeddingRecord> read_embeddings(std::istream& in);
std::vector<EmbeddingRecord> read_embeddings(const std::filesystem::path& path);

}  // namespace blm
