#include "blm/embedding.hpp"

#include <bit>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>

#include "blm/error.hpp"

namespace blm {

namespace {

template <typename U>
void put_le(std::ostream& out, U value) {
  char bytes[sizeof(U)];
  for (std::size_t i = 0; i < sizeof(U); ++i) {
    bytes[i] = static_cast<char>((value >> (8 * i)) & 0xFF);
  }
  out.write(bytes, sizeof(U));
}

template <typename U>
U get_le(std::istream& in) {
  unsigned char bytes[sizeof(U)];
  if (!in.read(reinterpret_cast<char*>(bytes), sizeof(U))) {
    throw FormatError("embedding container is truncated");
  }
  U value = 0;
  for (std::size_t i = 0; i < sizeof(U); ++i) value |= static_cast<U>(bytes[i]) << (8 * i);
  return value;
}

}  // namespace

std::vector<std::string> embedding_keys(const MatrixInstance& m) {
  std::vector<std::string> keys;
  for (std::size_t i = 0; i < m.contexts.size(); ++i) {
    keys.push_back(m.id + "/ctx/" + std::to_string(i));
  }
  for (std::size_t i = 0; i < m.answers.size(); ++i) {
    keys.push_back(m.id + "/ans/" + std::to_string(i));
  }
  return keys;
}

void write_embeddings(std::ostream& out, std::span<const EmbeddingRecord> records) {
  out.write(kEmbeddingMagic.data(), kEmbeddingMagic.size());
  put_le<std::uint64_t>(out, records.size());
  for (const auto& r : records) {
    if (r.values.size() != kEmbeddingDim) {
      throw FormatError("embedding '" + r.key + "' has " + std::to_string(r.values.size()) +
                        " values, expected 768");
    }
    if (r.key.size() > 0xFFFF) throw FormatError("embedding key too long");
    put_le<std::uint16_t>(out, static_cast<std::uint16_t>(r.key.size()));
    out.write(r.key.data(), static_cast<std::streamsize>(r.key.size()));
    for (float v : r.values) put_le<std::uint32_t>(out, std::bit_cast<std::uint32_t>(v));
  }
  if (!out) throw IoError("embedding write failed");
}

void write_embeddings(const std::filesystem::path& path,
                      std::span<const EmbeddingRecord> records) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  write_embeddings(out, records);
}

std::vector<EmbeddingRecord> read_embeddings(std::istream& in) {
  std::array<char, 8> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kEmbeddingMagic) {
    throw FormatError("not a BLMEMB1 embedding container");
  }
  const auto count = get_le<std::uint64_t>(in);
  std::vector<EmbeddingRecord> out;
  for (std::uint64_t n = 0; n < count; ++n) {
    EmbeddingRecord r;
    r.key.resize(get_le<std::uint16_t>(in));
    if (!in.read(r.key.data(), static_cast<std::streamsize>(r.key.size()))) {
      throw FormatError("embedding container is truncated");
    }
    r.values.resize(kEmbeddingDim);
    for (float& v : r.values) v = std::bit_cast<float>(get_le<std::uint32_t>(in));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<EmbeddingRecord> read_embeddings(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_embeddings(in);
}

}  // namespace blm
