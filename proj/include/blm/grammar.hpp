#pragma once

// Sentence structure for one agreement sentence:
//   main       : SUBJNP(Num) ATTRACTORS VERB(Num) [trailer]
//   completive : frame SUBJNP(Num) ATTRACTORS VERB(Num) [trailer]
//   relative   : SUBJNP(Num) ATTRACTORS RELCLAUSE VERB(Num) [trailer]

#include <optional>
#include <string>
#include <vector>

#include "blm/lexicon.hpp"
#include "blm/types.hpp"

namespace blm {

// How an attractor NP attaches to what precedes it.
enum class Link : std::uint8_t {
  Preposition,   // "avec le programme"
  Coordination,  // "et l'expérience"
};

inline constexpr std::string_view kCoordinator = "et";

struct AttractorSlot {
  std::string preposition;  // unused for Coordination
  std::string noun;         // noun lemma
  Number number = Number::Sing;
  Link link = Link::Preposition;

  friend bool operator==(const AttractorSlot&, const AttractorSlot&) = default;
};

struct SentencePlan {
  ClauseType clause_type = ClauseType::Main;
  Number subject_number = Number::Sing;
  std::vector<AttractorSlot> attractors;  // 1 or 2
  Number verb_number = Number::Sing;
  std::optional<std::string> fixed_trailer;    // PP-TMP / PP-MNR material
  std::optional<std::string> embedding_frame;  // completive only
  std::optional<std::string> relative_clause;  // relative only
  bool subject_determiner = true;  // false: SUBJNP -> N(Num)
  // Lets answer construction build deliberate agreement errors.
  bool agreement_override = false;

  // Throws PlanError on a broken invariant; prepositions are checked
  // against the lexicon.
  void check(const Lexicon& lexicon) const;

  friend bool operator==(const SentencePlan&, const SentencePlan&) = default;
};

// Uppercases the first character (ASCII and Latin-1 lowercase letters).
std::string capitalize_first(std::string s);

// Builds the surface sentence. Output is capitalized, single-spaced and
// ends with exactly one period.
std::string linearize(const SentencePlan& plan, const Lexicon& lexicon,
                      const LexEntry& subject_noun, const LexEntry& verb);

}  // namespace blm
