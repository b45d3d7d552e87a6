#pragma once

// Rule conformance of a matrix, checked from its surfaces.
//
// Each context row and each answer is read back against the lexemes in
// its provenance and compared with what the rule program prescribes for
// its position. A sentence reports at most one violation, labelled with
// the first rule it breaks in R1..R4 order; the detail lists every
// mismatch. Distractors are checked against their own definition, with
// failures reported under the rule the distractor probes: AE under R1,
// Coord and WNA under R2, AlterN1 under R3, AlterN2 under R4.

#include <string>
#include <string_view>
#include <vector>

#include "blm/lexicon.hpp"
#include "blm/variation.hpp"

namespace blm {

enum class Rule : std::uint8_t {
  R1,  // subject-verb agreement and subject alternation
  R2,  // number of attractors
  R3,  // number of the first attractor
  R4,  // number of the second attractor
  AnswerArity,
  RotationSkew,
  DuplicateAnswer,
  Provenance,  // a surface does not read back from its recorded lexemes
};

std::string_view to_string(Rule r);

struct Violation {
  std::string matrix_id;
  Rule rule = Rule::R1;
  std::string detail;
};

std::vector<Violation> validate_matrix(const MatrixInstance& m, const Lexicon& lexicon);

std::string format_violation(const Violation& v);

}  // namespace blm
