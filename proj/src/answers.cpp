#include "blm/answers.hpp"

#include "blm/error.hpp"

namespace blm {

namespace {

constexpr std::array<std::string_view, kAnswerCount> kNames = {
    "Coord", "Correct", "WNA", "AE", "AlterN1", "AlterN2"};

void require_second_attractor(ContrastType type, const SentencePlan& plan) {
  if (plan.attractors.size() < 2) {
    throw ConstructionError(std::string(to_string(type)) +
                            " needs a second attractor in the answer plan");
  }
}

}  // namespace

std::string_view to_string(ContrastType t) { return kNames[canonical_index(t)]; }

ContrastType parse_contrast_type(std::string_view s) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == s) return kCanonicalOrder[i];
  }
  throw ParseError("unknown contrast type '" + std::string(s) + "'");
}

SentencePlan contrast_plan(ContrastType type, const SentencePlan& answer_plan) {
  SentencePlan p = answer_plan;
  switch (type) {
    case ContrastType::Correct:
      break;
    case ContrastType::Coord:
      require_second_attractor(type, p);
      p.subject_number = p.verb_number = Number::Sing;
      p.attractors[0].number = Number::Sing;
      p.attractors[1].link = Link::Coordination;
      p.attractors[1].preposition.clear();
      break;
    case ContrastType::WNA:
      require_second_attractor(type, p);
      p.subject_number = p.verb_number = Number::Sing;
      p.attractors.resize(1);
      p.attractors[0].number = Number::Sing;
      break;
    case ContrastType::AE:
      require_second_attractor(type, p);
      p.subject_number = Number::Sing;
      p.verb_number = Number::Plur;
      p.agreement_override = true;
      p.attractors[0].number = Number::Sing;
      break;
    case ContrastType::AlterN1:
      p.attractors[0].number = flip(p.attractors[0].number);
      break;
    case ContrastType::AlterN2:
      require_second_attractor(type, p);
      p.attractors[1].number = flip(p.attractors[1].number);
      break;
  }
  return p;
}

AnswerCandidate make_contrast(ContrastType type, const SentencePlan& answer_plan,
                              const Binding& binding, const Lexicon& lexicon) {
  SentencePlan plan = contrast_plan(type, answer_plan);
  std::string surface = realize(plan, binding, lexicon);
  return {std::move(surface), type, std::move(plan)};
}

std::vector<AnswerCandidate> make_all_contrasts(const SentencePlan& answer_plan,
                                                const Binding& binding,
                                                const Lexicon& lexicon) {
  std::vector<AnswerCandidate> out;
  out.reserve(kAnswerCount);
  for (ContrastType t : kCanonicalOrder) {
    out.push_back(make_contrast(t, answer_plan, binding, lexicon));
  }
  return out;
}

AnswerSet rotate_answers(std::vector<AnswerCandidate> candidates,
                         std::uint64_t ordinal) {
  if (candidates.size() != kAnswerCount) {
    throw ArityError("an answer set needs 6 candidates, got " +
                     std::to_string(candidates.size()));
  }
  std::array<bool, kAnswerCount> seen{};
  for (const auto& c : candidates) {
    auto i = canonical_index(c.contrast_type);
    if (seen[i]) {
      throw ArityError("contrast type " + std::string(to_string(c.contrast_type)) +
                       " appears twice");
    }
    seen[i] = true;
  }
  AnswerSet set;
  set.candidates.resize(kAnswerCount);
  for (auto& c : candidates) {
    const std::size_t pos = rotated_position(c.contrast_type, ordinal);
    if (c.contrast_type == ContrastType::Correct) set.correct_index = pos;
    set.candidates[pos] = std::move(c);
  }
  return set;
}

}  // namespace blm
