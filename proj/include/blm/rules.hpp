#pragma once

// Rule operators over an 8-position sequence (7 contexts + the answer).
//
// ALTERNATE(period, start): the value is `start` on positions
// [0, period), the other value on [period, 2*period), and so on.
// PROGRESSION(block, start): attractor count is start + position / block.

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "blm/grammar.hpp"
#include "blm/lexicon.hpp"
#include "blm/types.hpp"

namespace blm {

inline constexpr int kSequenceLength = 8;
inline constexpr int kContextCount = 7;

struct Alternate {
  int period = 1;
  Number start = Number::Sing;

  Number at(int position) const {
    return (position / period) % 2 == 0 ? start : flip(start);
  }
  friend bool operator==(const Alternate&, const Alternate&) = default;
};

struct Constant {
  Number value = Number::Sing;
  friend bool operator==(const Constant&, const Constant&) = default;
};

struct Progression {
  int block = 4;
  int start = 1;

  int at(int position) const { return start + position / block; }
  friend bool operator==(const Progression&, const Progression&) = default;
};

struct RuleProgram {
  Alternate subject_rule{1, Number::Sing};
  Alternate n1_rule{2, Number::Sing};
  std::variant<Constant, Alternate> n2_rule{Constant{Number::Sing}};
  Progression attractor_rule{4, 1};
  int sequence_length = kSequenceLength;

  // The agreement template: subject alternates every sentence, N1 every
  // two sentences, N2 constant singular, one attractor on positions 0-3
  // and two on 4-7.
  static RuleProgram standard() { return {}; }

  // Throws PlanError when periods are not positive, the length is not 8,
  // or the progression leaves {1, 2} or never reaches 2 by the answer.
  void check() const;

  Number n2_at(int position) const;

  friend bool operator==(const RuleProgram&, const RuleProgram&) = default;
};

struct PositionAssignment {
  int position = 0;
  Number subject_number = Number::Sing;
  Number n1_number = Number::Sing;
  std::optional<Number> n2_number;  // present iff attractor_count == 2
  int attractor_count = 1;

  friend bool operator==(const PositionAssignment&,
                         const PositionAssignment&) = default;
};

// The position-free part of an assignment, used to key sentence pools.
struct CellPattern {
  Number subject_number = Number::Sing;
  Number n1_number = Number::Sing;
  std::optional<Number> n2_number;
  int attractor_count = 1;

  static CellPattern of(const PositionAssignment& a) {
    return {a.subject_number, a.n1_number, a.n2_number, a.attractor_count};
  }
  friend auto operator<=>(const CellPattern&, const CellPattern&) = default;
};

std::vector<PositionAssignment> apply_rules(const RuleProgram& program);

// Lexical choices for every slot of a matrix, by lemma. frame and
// relative_clause are lemmas of Frame / RelClause entries and are needed
// only by their clause types; trailer names an optional FixedTMP/FixedMNR.
struct Binding {
  std::string subject;
  std::string verb;
  std::string n1;
  std::string n2;
  std::string prep1;
  std::string prep2;
  std::string frame;
  std::string relative_clause;
  std::string trailer;
  bool bare_subject = false;

  // Throws BindingError when a slot required by the clause type is empty.
  void check(ClauseType clause) const;

  friend bool operator==(const Binding&, const Binding&) = default;
};

// Plan for one position. Frame and clause material are resolved to their
// surface strings through the lexicon.
SentencePlan plan_for(const PositionAssignment& assignment, ClauseType clause,
                      const Binding& binding, const Lexicon& lexicon);

struct MatrixPlans {
  std::vector<SentencePlan> contexts;  // positions 0..6
  SentencePlan answer;                 // position 7
};

MatrixPlans build_matrix_plans(const RuleProgram& program, ClauseType clause,
                               const Binding& binding, const Lexicon& lexicon);

// Linearizes a plan with the binding's subject and verb.
std::string realize(const SentencePlan& plan, const Binding& binding,
                    const Lexicon& lexicon);

}  // namespace blm
