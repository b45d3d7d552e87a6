#pragma once

// French lexical material and number-marked realization of noun phrases
// and verbs. Surface forms are stored, never computed.

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blm/types.hpp"

namespace blm {

enum class Category : std::uint8_t {
  Noun,
  Verb,
  FixedPP,
  FixedTMP,
  FixedMNR,
  RelClause,
  Frame,  // completive embedding frame, e.g. "Jean suppose que"
};

enum class Gender : std::uint8_t { Masc, Fem, NA };

std::string_view to_string(Category c);
std::string_view to_string(Gender g);
Category parse_category(std::string_view s);
Gender parse_gender(std::string_view s);

// Typographic apostrophe used in every generated string.
inline constexpr std::string_view kApostrophe = "’";

// Replaces ASCII apostrophes with U+2019.
std::string normalize_apostrophes(std::string_view s);

// True when the first code point of s is a vowel (accented or not).
bool starts_with_vowel(std::string_view s);

struct LexEntry {
  std::string lemma;
  Category category = Category::Noun;
  Gender gender = Gender::NA;
  std::string sing_form;
  std::string plur_form;
  // Singular begins with a vowel or a mute h. Mute h is flagged by hand.
  bool vowel_onset = false;

  const std::string& form(Number n) const {
    return n == Number::Sing ? sing_form : plur_form;
  }

  // Throws PlanError describing the first broken invariant.
  void check() const;

  friend bool operator==(const LexEntry&, const LexEntry&) = default;
};

class Lexicon {
 public:
  // Record format, one per line, tab separated:
  //   category  lemma  gender  sing_form  plur_form  vowel_onset
  // plus two-field preposition records "Prep<TAB>avec". Lines starting
  // with '#' and blank lines are ignored.
  static Lexicon load(const std::filesystem::path& path);
  static Lexicon parse(std::istream& in, std::string_view source = "<input>");

  // Validates and inserts; DuplicateError on a repeated (lemma, category).
  void add(LexEntry entry);
  void add_preposition(std::string prep);

  const LexEntry& get(std::string_view lemma, Category category) const;
  const LexEntry* find(std::string_view lemma, Category category) const;

  // Entries of one category in insertion order.
  std::vector<const LexEntry*> of_category(Category category) const;

  const std::vector<std::string>& prepositions() const { return preps_; }
  bool has_preposition(std::string_view prep) const;

  std::size_t size() const { return entries_.size(); }

  // Throws CoverageError unless the lexicon can populate a matrix of the
  // given clause type: three nouns, a verb, two prepositions and the
  // clause's fixed frame material.
  void require_generation_ready(ClauseType clause) const;

 private:
  using Key = std::pair<std::string, Category>;
  std::map<Key, LexEntry, std::less<>> entries_;
  std::vector<Key> order_;
  std::vector<std::string> preps_;
};

// Where a noun phrase is realized.
struct NpSite {
  enum class Kind : std::uint8_t { Subject, AfterPrep, Bare };
  Kind kind = Kind::Subject;
  std::string preposition;

  static NpSite subject() { return {}; }
  static NpSite after(std::string prep) {
    return {Kind::AfterPrep, std::move(prep)};
  }
  // Determinerless noun.
  static NpSite bare() { return {Kind::Bare, {}}; }
};

// Determiner + noun with elision (l') and, after a preposition, the
// contractions de+le -> du, de+les -> des, a+le -> au, a+les -> aux.
// AfterPrep output includes the preposition. Lowercase throughout.
std::string realize_np(const LexEntry& entry, Number number, const NpSite& site);

std::string realize_verb(const LexEntry& entry, Number number);

}  // namespace blm
