#include "blm/variation.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "blm/error.hpp"
#include "blm/reading.hpp"

namespace blm {

namespace {

constexpr int kMaxDistractorDraws = 64;

std::string& slot_of(Binding& b, VariedSlot slot) {
  switch (slot) {
    case VariedSlot::Subject: return b.subject;
    case VariedSlot::N1: return b.n1;
    case VariedSlot::N2: return b.n2;
  }
  return b.subject;
}

std::optional<Number> slot_number(const PositionAssignment& a, VariedSlot slot) {
  switch (slot) {
    case VariedSlot::Subject: return a.subject_number;
    case VariedSlot::N1: return a.n1_number;
    case VariedSlot::N2: return a.n2_number;
  }
  return std::nullopt;
}

// Fills the answer half of a matrix from per-type candidates and bindings
// listed in canonical order.
void attach_answers(MatrixInstance& m, std::vector<AnswerCandidate> candidates,
                    std::vector<Binding> bindings, std::uint64_t ordinal) {
  std::vector<Binding> rotated(kAnswerCount);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    rotated[rotated_position(candidates[i].contrast_type, ordinal)] =
        std::move(bindings[i]);
  }
  AnswerSet set = rotate_answers(std::move(candidates), ordinal);
  for (auto& c : set.candidates) {
    m.answers.push_back({std::move(c.surface), c.contrast_type});
  }
  m.correct_index = set.correct_index;
  m.answer_provenance = std::move(rotated);
}

MatrixInstance skeleton(ClauseType clause, VariationType variation,
                        const RuleProgram& program, std::uint64_t ordinal) {
  MatrixInstance m;
  m.id = matrix_id(clause, variation, ordinal);
  m.clause_type = clause;
  m.variation_type = variation;
  m.program = program;
  return m;
}

template <typename T>
const T& pick(std::span<const T> items, Rng& rng) {
  return items[static_cast<std::size_t>(rng.below(items.size()))];
}

}  // namespace

std::string_view to_string(VariationType v) {
  switch (v) {
    case VariationType::I: return "I";
    case VariationType::II: return "II";
    case VariationType::III: return "III";
  }
  return "?";
}

VariationType parse_variation_type(std::string_view s) {
  if (s == "I") return VariationType::I;
  if (s == "II") return VariationType::II;
  if (s == "III") return VariationType::III;
  throw ParseError("unknown variation type '" + std::string(s) + "'");
}

std::string matrix_id(ClauseType clause, VariationType variation,
                      std::uint64_t ordinal) {
  char digits[32];
  std::snprintf(digits, sizeof digits, "%06llu",
                static_cast<unsigned long long>(ordinal));
  return std::string(short_name(clause)) + "-" + std::string(to_string(variation)) +
         "-" + digits;
}

MatrixInstance build_type1(const Binding& binding, ClauseType clause,
                           const RuleProgram& program, std::uint64_t ordinal,
                           const Lexicon& lexicon) {
  MatrixPlans plans = build_matrix_plans(program, clause, binding, lexicon);
  MatrixInstance m = skeleton(clause, VariationType::I, program, ordinal);
  for (int i = 0; i < kContextCount; ++i) {
    m.contexts.push_back(realize(plans.contexts[i], binding, lexicon));
    m.context_provenance.push_back({i, binding});
  }
  attach_answers(m, make_all_contrasts(plans.answer, binding, lexicon),
                 std::vector<Binding>(kAnswerCount, binding), ordinal);
  return m;
}

MatrixInstance build_type2(const Binding& base, std::span<const Substitute> substitutes,
                           ClauseType clause, const RuleProgram& program,
                           std::uint64_t ordinal, const Lexicon& lexicon,
                           VariedSlot slot) {
  if (substitutes.size() != kContextCount) {
    throw ArityError("type II needs 7 substitutes, got " +
                     std::to_string(substitutes.size()));
  }
  const auto assignments = apply_rules(program);
  MatrixInstance m = skeleton(clause, VariationType::II, program, ordinal);
  for (int i = 0; i < kContextCount; ++i) {
    const Substitute& sub = substitutes[i];
    lexicon.get(sub.lemma, Category::Noun);
    const auto expected = slot_number(assignments[i], slot);
    if (expected && *expected != sub.number) {
      throw NumberError("substitute '" + sub.lemma + "' for row " +
                        std::to_string(i) + " is " + std::string(to_string(sub.number)) +
                        " but the row needs " + std::string(to_string(*expected)));
    }
    Binding row = base;
    slot_of(row, slot) = sub.lemma;
    m.contexts.push_back(
        realize(plan_for(assignments[i], clause, row, lexicon), row, lexicon));
    m.context_provenance.push_back({i, std::move(row)});
  }
  const SentencePlan answer = plan_for(assignments[kContextCount], clause, base, lexicon);
  attach_answers(m, make_all_contrasts(answer, base, lexicon),
                 std::vector<Binding>(kAnswerCount, base), ordinal);
  return m;
}

void SentencePool::add(ClauseType clause, const CellPattern& pattern,
                       PooledSentence sentence, const Lexicon& lexicon) {
  auto reading = read_unique(sentence.surface, clause, sentence.binding, lexicon);
  if (!reading || reading->coordinated ||
      reading->verb_number != reading->subject_number ||
      CellPattern::of(reading->as_assignment(0)) != pattern) {
    throw PlanError("pooled sentence does not realize its cell: '" +
                    sentence.surface + "'");
  }
  cells_[{clause, pattern}].push_back(std::move(sentence));
}

std::span<const PooledSentence> SentencePool::cell(ClauseType clause,
                                                   const CellPattern& pattern) const {
  auto it = cells_.find({clause, pattern});
  if (it == cells_.end()) return {};
  return it->second;
}

std::size_t SentencePool::size() const {
  std::size_t n = 0;
  for (const auto& [key, sentences] : cells_) n += sentences.size();
  return n;
}

SentencePool SentencePool::from_bindings(std::span<const Binding> bindings,
                                         ClauseType clause,
                                         const RuleProgram& program,
                                         const Lexicon& lexicon) {
  SentencePool pool;
  for (const PositionAssignment& a : apply_rules(program)) {
    for (const Binding& b : bindings) {
      std::string surface = realize(plan_for(a, clause, b, lexicon), b, lexicon);
      pool.cells_[{clause, CellPattern::of(a)}].push_back({std::move(surface), b});
    }
  }
  return pool;
}

MatrixInstance build_type3(const SentencePool& pool, const RuleProgram& program,
                           ClauseType clause, std::uint64_t ordinal,
                           std::uint64_t seed, const Lexicon& lexicon,
                           Type3Options options) {
  const auto assignments = apply_rules(program);
  MatrixInstance m = skeleton(clause, VariationType::III, program, ordinal);
  Rng rng(seed);

  auto cell_for = [&](int position) {
    auto cell = pool.cell(clause, CellPattern::of(assignments[position]));
    if (cell.empty()) {
      throw CoverageError("no pooled " + std::string(to_string(clause)) +
                          " sentence for position " + std::to_string(position));
    }
    return cell;
  };

  std::set<std::string, std::less<>> used_subjects;
  auto unused = [&](std::span<const PooledSentence> cell) {
    std::vector<const PooledSentence*> out;
    for (const auto& s : cell) {
      if (!options.distinct_subjects || !used_subjects.contains(s.binding.subject)) {
        out.push_back(&s);
      }
    }
    return out;
  };

  for (int i = 0; i < kContextCount; ++i) {
    auto candidates = unused(cell_for(i));
    if (candidates.empty()) {
      throw CoverageError("position " + std::to_string(i) +
                          " has no sentence with an unused subject; type III "
                          "needs 7 distinct subject lexemes");
    }
    const PooledSentence* chosen = pick<const PooledSentence*>(candidates, rng);
    used_subjects.insert(chosen->binding.subject);
    m.contexts.push_back(chosen->surface);
    m.context_provenance.push_back({i, chosen->binding});
  }

  const auto answer_cell = cell_for(kContextCount);
  auto fresh = unused(answer_cell);
  const Binding& correct_binding =
      fresh.empty() ? pick(answer_cell, rng).binding
                    : pick<const PooledSentence*>(fresh, rng)->binding;

  std::vector<AnswerCandidate> candidates;
  std::vector<Binding> bindings;
  std::set<std::string, std::less<>> surfaces;
  for (ContrastType t : kCanonicalOrder) {
    const Binding* b = &correct_binding;
    for (int attempt = 0;; ++attempt) {
      if (t != ContrastType::Correct) b = &pick(answer_cell, rng).binding;
      const SentencePlan answer =
          plan_for(assignments[kContextCount], clause, *b, lexicon);
      AnswerCandidate c = make_contrast(t, answer, *b, lexicon);
      if (!surfaces.contains(c.surface)) {
        surfaces.insert(c.surface);
        candidates.push_back(std::move(c));
        bindings.push_back(*b);
        break;
      }
      if (t == ContrastType::Correct || attempt + 1 >= kMaxDistractorDraws) {
        throw ConstructionError("cannot draw a distinct " + std::string(to_string(t)) +
                                " answer for " + m.id);
      }
    }
  }
  attach_answers(m, std::move(candidates), std::move(bindings), ordinal);
  return m;
}

MatrixInstance permute_contexts(const MatrixInstance& m,
                                std::span<const std::size_t> permutation) {
  if (!m.ordered) throw StateError("matrix " + m.id + " is already shuffled");
  if (permutation.size() != m.contexts.size() ||
      m.context_provenance.size() != m.contexts.size()) {
    throw ArityError("permutation size does not match the context rows");
  }
  std::vector<bool> seen(permutation.size(), false);
  for (std::size_t p : permutation) {
    if (p >= seen.size() || seen[p]) throw ArityError("not a permutation");
    seen[p] = true;
  }
  MatrixInstance out = m;
  for (std::size_t i = 0; i < permutation.size(); ++i) {
    out.contexts[i] = m.contexts[permutation[i]];
    out.context_provenance[i] = m.context_provenance[permutation[i]];
  }
  out.ordered = false;
  out.id += "-shuffled";
  return out;
}

MatrixInstance shuffle_contexts(const MatrixInstance& m, std::uint64_t seed) {
  if (!m.ordered) throw StateError("matrix " + m.id + " is already shuffled");
  std::vector<std::size_t> perm(m.contexts.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  Rng rng(derive_seed(seed, m.id));
  rng.shuffle(std::span(perm));
  return permute_contexts(m, perm);
}

Binding sample_binding(const Lexicon& lexicon, ClauseType clause, Rng& rng,
                       std::string_view subject) {
  lexicon.require_generation_ready(clause);
  const auto nouns = lexicon.of_category(Category::Noun);
  const auto verbs = lexicon.of_category(Category::Verb);
  const auto& preps = lexicon.prepositions();

  Binding b;
  b.subject = subject.empty() ? pick<const LexEntry*>(nouns, rng)->lemma
                              : std::string(subject);
  do {
    b.n1 = pick<const LexEntry*>(nouns, rng)->lemma;
  } while (b.n1 == b.subject);
  do {
    b.n2 = pick<const LexEntry*>(nouns, rng)->lemma;
  } while (b.n2 == b.subject || b.n2 == b.n1);
  b.verb = pick<const LexEntry*>(verbs, rng)->lemma;
  b.prep1 = pick<std::string>(preps, rng);
  do {
    b.prep2 = pick<std::string>(preps, rng);
  } while (b.prep2 == b.prep1);
  if (clause == ClauseType::Completive) {
    b.frame = pick<const LexEntry*>(lexicon.of_category(Category::Frame), rng)->lemma;
  }
  if (clause == ClauseType::Relative) {
    b.relative_clause =
        pick<const LexEntry*>(lexicon.of_category(Category::RelClause), rng)->lemma;
  }
  return b;
}

std::vector<Substitute> sample_substitutes(const Lexicon& lexicon,
                                           const Binding& base,
                                           const RuleProgram& program,
                                           VariedSlot slot, Rng& rng) {
  const auto assignments = apply_rules(program);
  std::vector<std::string> pool;
  for (const LexEntry* e : lexicon.of_category(Category::Noun)) {
    if (e->lemma != base.subject && e->lemma != base.n1 && e->lemma != base.n2) {
      pool.push_back(e->lemma);
    }
  }
  if (pool.empty()) throw CoverageError("no nouns left to vary the slot with");
  rng.shuffle(std::span(pool));
  std::vector<Substitute> out;
  for (int i = 0; i < kContextCount; ++i) {
    out.push_back({pool[static_cast<std::size_t>(i) % pool.size()],
                   slot_number(assignments[i], slot).value_or(Number::Sing)});
  }
  return out;
}

std::vector<Binding> sample_pool_bindings(const Lexicon& lexicon,
                                          ClauseType clause, Rng& rng) {
  std::vector<Binding> out;
  for (const LexEntry* e : lexicon.of_category(Category::Noun)) {
    out.push_back(sample_binding(lexicon, clause, rng, e->lemma));
  }
  return out;
}

}  // namespace blm
