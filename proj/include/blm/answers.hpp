#pragma once

// Six-way answer sets built as minimal pairs against the correct answer.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "blm/grammar.hpp"
#include "blm/lexicon.hpp"
#include "blm/rules.hpp"

namespace blm {

// Declaration order is the canonical presentation order.
enum class ContrastType : std::uint8_t { Coord, Correct, WNA, AE, AlterN1, AlterN2 };

inline constexpr std::size_t kAnswerCount = 6;

inline constexpr std::array<ContrastType, kAnswerCount> kCanonicalOrder = {
    ContrastType::Coord, ContrastType::Correct, ContrastType::WNA,
    ContrastType::AE,    ContrastType::AlterN1, ContrastType::AlterN2};

constexpr std::size_t canonical_index(ContrastType t) {
  return static_cast<std::size_t>(t);
}

std::string_view to_string(ContrastType t);
ContrastType parse_contrast_type(std::string_view s);

struct AnswerCandidate {
  std::string surface;
  ContrastType contrast_type = ContrastType::Correct;
  SentencePlan plan;
};

struct AnswerSet {
  std::vector<AnswerCandidate> candidates;
  std::size_t correct_index = 0;
};

// The plan of each contrast, derived from the correct answer's plan:
//   Correct  the plan itself
//   Coord    singular subject, verb and N1; N2 joined by "et" instead of
//            its preposition
//   WNA      first attractor only, singular subject, verb and N1
//   AE       singular subject and N1, plural verb, both attractors
//   AlterN1  N1 number flipped
//   AlterN2  N2 number flipped
// Every type except Correct and AlterN1 needs a second attractor; its
// absence throws ConstructionError.
SentencePlan contrast_plan(ContrastType type, const SentencePlan& answer_plan);

AnswerCandidate make_contrast(ContrastType type, const SentencePlan& answer_plan,
                              const Binding& binding, const Lexicon& lexicon);

// All six contrasts in canonical order.
std::vector<AnswerCandidate> make_all_contrasts(const SentencePlan& answer_plan,
                                                const Binding& binding,
                                                const Lexicon& lexicon);

// Places candidates in canonical order, then rotates right by
// ordinal mod 6, so over six consecutive ordinals every type visits every
// position once. Throws ArityError unless there is one candidate per type.
AnswerSet rotate_answers(std::vector<AnswerCandidate> candidates,
                         std::uint64_t ordinal);

// Position of `type` after rotation by `ordinal`.
constexpr std::size_t rotated_position(ContrastType type, std::uint64_t ordinal) {
  return static_cast<std::size_t>((canonical_index(type) + ordinal) % kAnswerCount);
}

}  // namespace blm
