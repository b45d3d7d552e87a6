#include "blm/grammar.hpp"

#include "blm/error.hpp"

namespace blm {

void SentencePlan::check(const Lexicon& lexicon) const {
  if (attractors.empty() || attractors.size() > 2) {
    throw PlanError("a plan needs 1 or 2 attractors, got " +
                    std::to_string(attractors.size()));
  }
  if (!agreement_override && verb_number != subject_number) {
    throw PlanError("verb number differs from subject number without override");
  }
  for (std::size_t i = 0; i < attractors.size(); ++i) {
    const AttractorSlot& a = attractors[i];
    if (a.link == Link::Coordination) {
      if (i == 0) throw PlanError("the first attractor cannot be coordinated");
    } else if (!lexicon.has_preposition(a.preposition)) {
      throw PlanError("preposition '" + a.preposition + "' not in lexicon");
    }
  }
  if (clause_type == ClauseType::Completive && !embedding_frame) {
    throw PlanError("completive plan without embedding frame");
  }
  if (clause_type == ClauseType::Relative && !relative_clause) {
    throw PlanError("relative plan without relative clause");
  }
}

std::string capitalize_first(std::string s) {
  if (s.empty()) return s;
  auto c = static_cast<unsigned char>(s[0]);
  if (c >= 'a' && c <= 'z') {
    s[0] = static_cast<char>(c - 'a' + 'A');
  } else if (c == 0xC3 && s.size() > 1) {
    // U+00E0..U+00FE map to U+00C0..U+00DE, except the division sign.
    auto d = static_cast<unsigned char>(s[1]);
    if (d >= 0xA0 && d <= 0xBE && d != 0xB7) s[1] = static_cast<char>(d - 0x20);
  }
  return s;
}

std::string linearize(const SentencePlan& plan, const Lexicon& lexicon,
                      const LexEntry& subject_noun, const LexEntry& verb) {
  plan.check(lexicon);

  std::string out;
  if (plan.clause_type == ClauseType::Completive) {
    out += *plan.embedding_frame;
    out += ' ';
  }
  out += realize_np(subject_noun, plan.subject_number,
                    plan.subject_determiner ? NpSite::subject() : NpSite::bare());
  for (const AttractorSlot& a : plan.attractors) {
    const LexEntry& noun = lexicon.get(a.noun, Category::Noun);
    out += ' ';
    if (a.link == Link::Coordination) {
      out += kCoordinator;
      out += ' ';
      out += realize_np(noun, a.number, NpSite::subject());
    } else {
      out += realize_np(noun, a.number, NpSite::after(a.preposition));
    }
  }
  if (plan.clause_type == ClauseType::Relative) {
    out += ' ';
    out += *plan.relative_clause;
  }
  out += ' ';
  out += realize_verb(verb, plan.verb_number);
  if (plan.fixed_trailer) {
    out += ' ';
    out += *plan.fixed_trailer;
  }
  while (!out.empty() && (out.back() == '.' || out.back() == ' ')) out.pop_back();
  out += '.';
  return capitalize_first(std::move(out));
}

}  // namespace blm
