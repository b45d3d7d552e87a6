#pragma once

// Type I / II / III matrix assembly and the unordered (shuffled) control.
//
//   Type I    one binding for every row and answer
//   Type II   one slot (the subject by default) takes a different lexeme
//             on each context row
//   Type III  each row is drawn from a pool of sentences realizing that
//             row's cell; subjects are pairwise distinct across rows

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blm/answers.hpp"
#include "blm/lexicon.hpp"
#include "blm/random.hpp"
#include "blm/rules.hpp"

namespace blm {

enum class VariationType : std::uint8_t { I, II, III };

std::string_view to_string(VariationType v);
VariationType parse_variation_type(std::string_view s);

struct Answer {
  std::string surface;
  ContrastType contrast_type = ContrastType::Correct;
  friend bool operator==(const Answer&, const Answer&) = default;
};

struct ContextProvenance {
  int position = 0;  // template position the row realizes
  Binding binding;
  friend bool operator==(const ContextProvenance&, const ContextProvenance&) = default;
};

struct MatrixInstance {
  std::string id;
  ClauseType clause_type = ClauseType::Main;
  VariationType variation_type = VariationType::I;
  bool ordered = true;
  std::vector<std::string> contexts;  // 7
  std::vector<Answer> answers;        // 6
  std::size_t correct_index = 0;
  RuleProgram program;
  std::vector<ContextProvenance> context_provenance;  // aligned with contexts
  std::vector<Binding> answer_provenance;             // aligned with answers

  friend bool operator==(const MatrixInstance&, const MatrixInstance&) = default;
};

// "<clause>-<type>-<ordinal>", e.g. "main-I-000042".
std::string matrix_id(ClauseType clause, VariationType variation,
                      std::uint64_t ordinal);

MatrixInstance build_type1(const Binding& binding, ClauseType clause,
                           const RuleProgram& program, std::uint64_t ordinal,
                           const Lexicon& lexicon);

enum class VariedSlot : std::uint8_t { Subject, N1, N2 };

// A replacement lexeme for one context row, with the number the caller
// expects it to take there.
struct Substitute {
  std::string lemma;
  Number number = Number::Sing;
};

// One substitute per context row. A substitute whose number disagrees with
// the row's template value throws NumberError; for the N2 slot, rows
// without a second attractor ignore theirs. The answer set keeps the base
// binding.
MatrixInstance build_type2(const Binding& base, std::span<const Substitute> substitutes,
                           ClauseType clause, const RuleProgram& program,
                           std::uint64_t ordinal, const Lexicon& lexicon,
                           VariedSlot slot = VariedSlot::Subject);

struct PooledSentence {
  std::string surface;
  Binding binding;
};

// Sentences grouped by (clause type, cell pattern).
class SentencePool {
 public:
  // Throws PlanError unless the surface reads back as exactly `pattern`
  // under its binding.
  void add(ClauseType clause, const CellPattern& pattern, PooledSentence sentence,
           const Lexicon& lexicon);

  // Empty span when the cell has no sentences.
  std::span<const PooledSentence> cell(ClauseType clause,
                                       const CellPattern& pattern) const;

  std::size_t size() const;

  // Realizes every binding in every cell the program uses.
  static SentencePool from_bindings(std::span<const Binding> bindings,
                                    ClauseType clause, const RuleProgram& program,
                                    const Lexicon& lexicon);

 private:
  std::map<std::pair<ClauseType, CellPattern>, std::vector<PooledSentence>> cells_;
};

struct Type3Options {
  // Rows get pairwise distinct subject lemmas.
  bool distinct_subjects = true;
};

// Rows are drawn from their cells; the correct answer comes from the
// answer cell (preferring an unused subject) and each distractor from an
// independently drawn answer-cell binding. Throws CoverageError for empty
// cells or, with distinct subjects, too few subject lemmas.
MatrixInstance build_type3(const SentencePool& pool, const RuleProgram& program,
                           ClauseType clause, std::uint64_t ordinal,
                           std::uint64_t seed, const Lexicon& lexicon,
                           Type3Options options = {});

// Reorders contexts (and their provenance) so that row i becomes old row
// permutation[i]; answers are untouched. Throws StateError on an already
// unordered matrix and ArityError on a bad permutation.
MatrixInstance permute_contexts(const MatrixInstance& m,
                                std::span<const std::size_t> permutation);

// Seeded uniform permutation; the id gets a "-shuffled" suffix.
MatrixInstance shuffle_contexts(const MatrixInstance& m, std::uint64_t seed);

// Seeded lexical sampling used by the generator.

// Distinct nouns for subject, N1 and N2; verb, prepositions and clause
// material drawn uniformly. `subject` pins the subject lemma when set.
Binding sample_binding(const Lexicon& lexicon, ClauseType clause, Rng& rng,
                       std::string_view subject = {});

// Seven substitutes for `slot`, pairwise distinct where the lexicon allows,
// never equal to the binding's other nouns.
std::vector<Substitute> sample_substitutes(const Lexicon& lexicon,
                                           const Binding& base,
                                           const RuleProgram& program,
                                           VariedSlot slot, Rng& rng);

// One binding per subject noun of the lexicon.
std::vector<Binding> sample_pool_bindings(const Lexicon& lexicon,
                                          ClauseType clause, Rng& rng);

}  // namespace blm
