#pragma once

#include <filesystem>
#include <sstream>
#include <string>

#include "blm/lexicon.hpp"
#include "blm/rules.hpp"

namespace blm::test {

inline std::filesystem::path data_dir() { return BLM_DATA_DIR; }

inline const Lexicon& reference_lexicon() {
  static const Lexicon lex = Lexicon::load(data_dir() / "reference_lexicon.tsv");
  return lex;
}

inline const Lexicon& full_lexicon() {
  static const Lexicon lex = Lexicon::load(data_dir() / "lexicon_fr.tsv");
  return lex;
}

inline Lexicon lexicon_from(const std::string& text) {
  std::istringstream in(text);
  return Lexicon::parse(in);
}

// ordinateur / programme / experience, "est en panne".
inline Binding reference_binding() {
  Binding b;
  b.subject = "ordinateur";
  b.verb = "être-en-panne";
  b.n1 = "programme";
  b.n2 = "expérience";
  b.prep1 = "avec";
  b.prep2 = "de";
  b.frame = "jean-suppose";
  b.relative_clause = "dont-jean-se-servait";
  return b;
}

// Fresh scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("blm_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace blm::test
