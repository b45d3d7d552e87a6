#pragma once

// Corpus generation: matrix `ordinal` uses clause type
// clauses[ordinal % clauses.size()], answer rotation `ordinal`, and a seed
// derived from (seed, ordinal), so growing the count leaves earlier
// matrices unchanged.

#include <cstdint>
#include <map>
#include <vector>

#include "blm/lexicon.hpp"
#include "blm/rules.hpp"
#include "blm/variation.hpp"

namespace blm {

struct GenerateOptions {
  VariationType variation = VariationType::I;
  std::vector<ClauseType> clauses{ClauseType::Main};
  std::size_t count = 0;
  std::uint64_t seed = 0;
  RuleProgram program = RuleProgram::standard();
  unsigned threads = 0;  // 0: hardware concurrency
};

class Generator {
 public:
  Generator(const Lexicon& lexicon, GenerateOptions options);

  MatrixInstance make(std::uint64_t ordinal) const;

  // Matrices 0 .. count-1 in ordinal order, built in parallel.
  std::vector<MatrixInstance> run() const;

 private:
  const Lexicon& lexicon_;
  GenerateOptions options_;
  std::map<ClauseType, SentencePool> pools_;  // type III only
};

}  // namespace blm
