#include "blm/reading.hpp"

#include "blm/error.hpp"

namespace blm {

std::vector<SentenceReading> read_sentence(std::string_view surface,
                                           ClauseType clause,
                                           const Binding& binding,
                                           const Lexicon& lexicon) {
  std::vector<SentenceReading> out;
  const LexEntry* subject = lexicon.find(binding.subject, Category::Noun);
  const LexEntry* verb = lexicon.find(binding.verb, Category::Verb);
  if (!subject || !verb) return out;

  SentencePlan base;
  try {
    base = plan_for(PositionAssignment{}, clause, binding, lexicon);
  } catch (const Error&) {
    return out;
  }
  base.agreement_override = true;

  constexpr Number kNumbers[] = {Number::Sing, Number::Plur};
  auto try_plan = [&](const SentencePlan& plan, SentenceReading r) {
    try {
      if (linearize(plan, lexicon, *subject, *verb) == surface) out.push_back(r);
    } catch (const Error&) {
    }
  };

  for (Number subj : kNumbers) {
    for (Number vb : kNumbers) {
      for (Number n1 : kNumbers) {
        SentencePlan p = base;
        p.subject_number = subj;
        p.verb_number = vb;
        p.attractors.resize(1);
        p.attractors[0] = {binding.prep1, binding.n1, n1, Link::Preposition};
        try_plan(p, {subj, vb, n1, std::nullopt, 1, false});
        for (Number n2 : kNumbers) {
          for (bool coord : {false, true}) {
            SentencePlan q = p;
            q.attractors.push_back({coord ? "" : binding.prep2, binding.n2, n2,
                                    coord ? Link::Coordination : Link::Preposition});
            try_plan(q, {subj, vb, n1, n2, 2, coord});
          }
        }
      }
    }
  }
  return out;
}

std::optional<SentenceReading> read_unique(std::string_view surface,
                                           ClauseType clause,
                                           const Binding& binding,
                                           const Lexicon& lexicon) {
  auto readings = read_sentence(surface, clause, binding, lexicon);
  if (readings.size() != 1) return std::nullopt;
  return readings.front();
}

}  // namespace blm
