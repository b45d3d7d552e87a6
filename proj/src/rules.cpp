#include "blm/rules.hpp"

#include <type_traits>

#include "blm/error.hpp"

namespace blm {

void RuleProgram::check() const {
  if (sequence_length != kSequenceLength) {
    throw PlanError("sequence length must be 8, got " +
                    std::to_string(sequence_length));
  }
  if (subject_rule.period <= 0 || n1_rule.period <= 0) {
    throw PlanError("alternation periods must be positive");
  }
  if (const auto* alt = std::get_if<Alternate>(&n2_rule); alt && alt->period <= 0) {
    throw PlanError("alternation periods must be positive");
  }
  if (attractor_rule.block <= 0 || attractor_rule.start < 1) {
    throw PlanError("progression needs a positive block and start >= 1");
  }
  if (attractor_rule.at(kSequenceLength - 1) != 2) {
    throw PlanError("progression must end on 2 attractors at the answer position");
  }
}

Number RuleProgram::n2_at(int position) const {
  return std::visit(
      [position](const auto& rule) -> Number {
        if constexpr (std::is_same_v<std::decay_t<decltype(rule)>, Constant>) {
          return rule.value;
        } else {
          return rule.at(position);
        }
      },
      n2_rule);
}

std::vector<PositionAssignment> apply_rules(const RuleProgram& program) {
  program.check();
  std::vector<PositionAssignment> out;
  out.reserve(kSequenceLength);
  for (int i = 0; i < program.sequence_length; ++i) {
    PositionAssignment a;
    a.position = i;
    a.subject_number = program.subject_rule.at(i);
    a.n1_number = program.n1_rule.at(i);
    a.attractor_count = program.attractor_rule.at(i);
    if (a.attractor_count == 2) a.n2_number = program.n2_at(i);
    out.push_back(a);
  }
  return out;
}

void Binding::check(ClauseType clause) const {
  std::string missing;
  auto need = [&](const std::string& v, const char* name) {
    if (v.empty()) missing += std::string(missing.empty() ? "" : ", ") + name;
  };
  need(subject, "subject");
  need(verb, "verb");
  need(n1, "n1");
  need(n2, "n2");
  need(prep1, "prep1");
  need(prep2, "prep2");
  if (clause == ClauseType::Completive) need(frame, "frame");
  if (clause == ClauseType::Relative) need(relative_clause, "relative_clause");
  if (!missing.empty()) {
    throw BindingError("incomplete binding for " +
                       std::string(to_string(clause)) + ": missing " + missing);
  }
}

namespace {

std::optional<std::string> trailer_surface(const Binding& b,
                                           const Lexicon& lexicon) {
  if (b.trailer.empty()) return std::nullopt;
  for (Category c : {Category::FixedTMP, Category::FixedMNR, Category::FixedPP}) {
    if (const LexEntry* e = lexicon.find(b.trailer, c)) return e->sing_form;
  }
  throw LookupError("no trailer '" + b.trailer + "' in lexicon");
}

}  // namespace

SentencePlan plan_for(const PositionAssignment& assignment, ClauseType clause,
                      const Binding& binding, const Lexicon& lexicon) {
  binding.check(clause);
  SentencePlan p;
  p.clause_type = clause;
  p.subject_number = assignment.subject_number;
  p.verb_number = assignment.subject_number;
  p.subject_determiner = !binding.bare_subject;
  p.attractors.push_back({binding.prep1, binding.n1, assignment.n1_number,
                          Link::Preposition});
  if (assignment.attractor_count == 2) {
    p.attractors.push_back({binding.prep2, binding.n2,
                            assignment.n2_number.value_or(Number::Sing),
                            Link::Preposition});
  }
  if (clause == ClauseType::Completive) {
    p.embedding_frame = lexicon.get(binding.frame, Category::Frame).sing_form;
  }
  if (clause == ClauseType::Relative) {
    p.relative_clause =
        lexicon.get(binding.relative_clause, Category::RelClause).sing_form;
  }
  p.fixed_trailer = trailer_surface(binding, lexicon);
  return p;
}

MatrixPlans build_matrix_plans(const RuleProgram& program, ClauseType clause,
                               const Binding& binding, const Lexicon& lexicon) {
  const auto assignments = apply_rules(program);
  MatrixPlans out;
  for (int i = 0; i < kContextCount; ++i) {
    out.contexts.push_back(plan_for(assignments[i], clause, binding, lexicon));
  }
  out.answer = plan_for(assignments[kContextCount], clause, binding, lexicon);
  return out;
}

std::string realize(const SentencePlan& plan, const Binding& binding,
                    const Lexicon& lexicon) {
  return linearize(plan, lexicon, lexicon.get(binding.subject, Category::Noun),
                   lexicon.get(binding.verb, Category::Verb));
}

}  // namespace blm
