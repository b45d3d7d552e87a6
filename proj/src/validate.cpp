#include "blm/validate.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>

#include "blm/error.hpp"
#include "blm/reading.hpp"

namespace blm {

namespace {

struct Mismatch {
  Rule rule;
  std::string what;
};

std::string show(std::optional<Number> n) {
  return n ? std::string(to_string(*n)) : "absent";
}

// What the rules prescribe for a grammatical sentence at one position.
SentenceReading grammatical(const PositionAssignment& a) {
  return {a.subject_number, a.subject_number, a.n1_number, a.n2_number,
          a.attractor_count, false};
}

// What each contrast type must read as, given the answer position.
SentenceReading expected_answer(ContrastType t, const PositionAssignment& a) {
  SentenceReading r = grammatical(a);
  switch (t) {
    case ContrastType::Correct:
      break;
    case ContrastType::Coord:
      r.subject_number = r.verb_number = r.n1_number = Number::Sing;
      r.coordinated = true;
      break;
    case ContrastType::WNA:
      r.subject_number = r.verb_number = r.n1_number = Number::Sing;
      r.attractor_count = 1;
      r.n2_number.reset();
      break;
    case ContrastType::AE:
      r.subject_number = r.n1_number = Number::Sing;
      r.verb_number = Number::Plur;
      break;
    case ContrastType::AlterN1:
      r.n1_number = flip(r.n1_number);
      break;
    case ContrastType::AlterN2:
      if (r.n2_number) r.n2_number = flip(*r.n2_number);
      break;
  }
  return r;
}

Rule probed_rule(ContrastType t) {
  switch (t) {
    case ContrastType::AE: return Rule::R1;
    case ContrastType::Coord:
    case ContrastType::WNA: return Rule::R2;
    case ContrastType::AlterN1: return Rule::R3;
    case ContrastType::AlterN2: return Rule::R4;
    case ContrastType::Correct: break;
  }
  return Rule::R1;
}

std::vector<Mismatch> compare(const SentenceReading& got, const SentenceReading& want) {
  std::vector<Mismatch> out;
  if (got.verb_number != got.subject_number && want.verb_number == want.subject_number) {
    out.push_back({Rule::R1, "verb " + std::string(to_string(got.verb_number)) +
                                 " does not agree with subject " +
                                 std::string(to_string(got.subject_number))});
  }
  if (got.subject_number != want.subject_number) {
    out.push_back({Rule::R1, "subject " + std::string(to_string(got.subject_number)) +
                                 ", expected " +
                                 std::string(to_string(want.subject_number))});
  }
  if (got.verb_number != want.verb_number) {
    out.push_back({Rule::R1, "verb " + std::string(to_string(got.verb_number)) +
                                 ", expected " + std::string(to_string(want.verb_number))});
  }
  if (got.attractor_count != want.attractor_count) {
    out.push_back({Rule::R2, std::to_string(got.attractor_count) + " attractors, expected " +
                                 std::to_string(want.attractor_count)});
  }
  if (got.coordinated != want.coordinated) {
    out.push_back({Rule::R2, got.coordinated ? "unexpected coordination"
                                             : "missing coordination"});
  }
  if (got.n1_number != want.n1_number) {
    out.push_back({Rule::R3, "N1 " + std::string(to_string(got.n1_number)) +
                                 ", expected " + std::string(to_string(want.n1_number))});
  }
  if (got.n2_number != want.n2_number) {
    out.push_back({Rule::R4, "N2 " + show(got.n2_number) + ", expected " +
                                 show(want.n2_number)});
  }
  return out;
}

std::string join(const std::vector<Mismatch>& ms) {
  std::string out;
  for (const auto& m : ms) {
    if (!out.empty()) out += "; ";
    out += m.what;
  }
  return out;
}

}  // namespace

std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::R1: return "R1";
    case Rule::R2: return "R2";
    case Rule::R3: return "R3";
    case Rule::R4: return "R4";
    case Rule::AnswerArity: return "AnswerArity";
    case Rule::RotationSkew: return "RotationSkew";
    case Rule::DuplicateAnswer: return "DuplicateAnswer";
    case Rule::Provenance: return "Provenance";
  }
  return "?";
}

std::string format_violation(const Violation& v) {
  return v.matrix_id + "\t" + std::string(to_string(v.rule)) + "\t" + v.detail;
}

std::vector<Violation> validate_matrix(const MatrixInstance& m, const Lexicon& lexicon) {
  std::vector<Violation> out;
  auto report = [&](Rule rule, std::string detail) {
    out.push_back({m.id, rule, std::move(detail)});
  };

  std::vector<PositionAssignment> expected;
  try {
    expected = apply_rules(m.program);
  } catch (const PlanError& e) {
    report(Rule::Provenance, std::string("invalid rule program: ") + e.what());
    return out;
  }

  auto check_sentence = [&](const std::string& label, std::string_view surface,
                            const Binding& binding, const SentenceReading& want,
                            std::optional<Rule> fixed_rule) {
    auto got = read_unique(surface, m.clause_type, binding, lexicon);
    if (!got) {
      report(Rule::Provenance,
             label + " does not read back from its lexemes: '" + std::string(surface) + "'");
      return;
    }
    auto mismatches = compare(*got, want);
    if (mismatches.empty()) return;
    Rule first = fixed_rule ? *fixed_rule
                            : std::min_element(mismatches.begin(), mismatches.end(),
                                               [](const Mismatch& a, const Mismatch& b) {
                                                 return a.rule < b.rule;
                                               })->rule;
    report(first, label + ": " + join(mismatches));
  };

  // Context rows.
  if (m.contexts.size() != kContextCount ||
      m.context_provenance.size() != m.contexts.size()) {
    report(Rule::Provenance, "expected 7 context rows with provenance, got " +
                                 std::to_string(m.contexts.size()) + " rows and " +
                                 std::to_string(m.context_provenance.size()) +
                                 " provenance records");
  } else {
    std::set<int> positions;
    for (std::size_t i = 0; i < m.contexts.size(); ++i) {
      const auto& prov = m.context_provenance[i];
      const int position = m.ordered ? static_cast<int>(i) : prov.position;
      if (m.ordered && prov.position != position) {
        report(Rule::Provenance, "ordered row " + std::to_string(i) +
                                     " records position " + std::to_string(prov.position));
      }
      if (position < 0 || position >= kContextCount || !positions.insert(position).second) {
        report(Rule::Provenance, "row " + std::to_string(i) + " has bad position " +
                                     std::to_string(position));
        continue;
      }
      check_sentence("context " + std::to_string(i), m.contexts[i], prov.binding,
                     grammatical(expected[position]), std::nullopt);
    }
  }

  // Answer set shape.
  if (m.answers.size() != kAnswerCount || m.answer_provenance.size() != m.answers.size()) {
    report(Rule::AnswerArity, "expected 6 answers with provenance, got " +
                                  std::to_string(m.answers.size()) + " answers and " +
                                  std::to_string(m.answer_provenance.size()) +
                                  " provenance records");
    return out;
  }
  std::array<int, kAnswerCount> per_type{};
  for (const auto& a : m.answers) ++per_type[canonical_index(a.contrast_type)];
  for (ContrastType t : kCanonicalOrder) {
    if (per_type[canonical_index(t)] != 1) {
      report(Rule::AnswerArity, std::string(to_string(t)) + " appears " +
                                    std::to_string(per_type[canonical_index(t)]) +
                                    " times");
    }
  }
  if (m.correct_index >= kAnswerCount ||
      m.answers[m.correct_index].contrast_type != ContrastType::Correct) {
    report(Rule::AnswerArity, "correct_index " + std::to_string(m.correct_index) +
                                  " does not point at the Correct answer");
  }
  std::set<std::string_view> surfaces;
  for (const auto& a : m.answers) {
    if (!surfaces.insert(a.surface).second) {
      report(Rule::DuplicateAnswer, "answer '" + a.surface + "' appears twice");
    }
  }

  // Each answer against its definition.
  const PositionAssignment& answer_position = expected[kContextCount];
  for (std::size_t i = 0; i < m.answers.size(); ++i) {
    const Answer& a = m.answers[i];
    const bool correct = a.contrast_type == ContrastType::Correct;
    if (!correct && answer_position.attractor_count < 2) {
      report(Rule::R2, "the answer position has a single attractor; " +
                           std::string(to_string(a.contrast_type)) + " is undefined");
      continue;
    }
    check_sentence("answer " + std::to_string(i) + " (" +
                       std::string(to_string(a.contrast_type)) + ")",
                   a.surface, m.answer_provenance[i],
                   expected_answer(a.contrast_type, answer_position),
                   correct ? std::nullopt : std::optional(probed_rule(a.contrast_type)));
  }
  return out;
}

}  // namespace blm
