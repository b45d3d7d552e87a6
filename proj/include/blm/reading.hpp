#pragma once

// Recovers agreement attributes from a surface sentence, given the
// lexemes it was built from. Every attribute combination is realized and
// compared with the surface; stored forms make the match unique.

#include <optional>
#include <string_view>
#include <vector>

#include "blm/lexicon.hpp"
#include "blm/rules.hpp"
#include "blm/types.hpp"

namespace blm {

struct SentenceReading {
  Number subject_number = Number::Sing;
  Number verb_number = Number::Sing;
  Number n1_number = Number::Sing;
  std::optional<Number> n2_number;
  int attractor_count = 1;
  bool coordinated = false;  // second NP joined by "et"

  PositionAssignment as_assignment(int position) const {
    return {position, subject_number, n1_number, n2_number, attractor_count};
  }
  friend bool operator==(const SentenceReading&, const SentenceReading&) = default;
};

// All readings of `surface` under `binding`; empty when the sentence is
// not built from those lexemes. Lookup failures yield no readings.
std::vector<SentenceReading> read_sentence(std::string_view surface,
                                           ClauseType clause,
                                           const Binding& binding,
                                           const Lexicon& lexicon);

// The reading when there is exactly one.
std::optional<SentenceReading> read_unique(std::string_view surface,
                                           ClauseType clause,
                                           const Binding& binding,
                                           const Lexicon& lexicon);

}  // namespace blm
