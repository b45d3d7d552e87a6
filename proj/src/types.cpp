#include "blm/types.hpp"

#include "blm/error.hpp"

namespace blm {

std::string_view to_string(Number n) {
  return n == Number::Sing ? "Sing" : "Plur";
}

std::string_view to_string(ClauseType c) {
  switch (c) {
    case ClauseType::Main: return "MainClause";
    case ClauseType::Completive: return "CompletiveClause";
    case ClauseType::Relative: return "RelativeClause";
  }
  return "?";
}

std::string_view short_name(ClauseType c) {
  switch (c) {
    case ClauseType::Main: return "main";
    case ClauseType::Completive: return "completive";
    case ClauseType::Relative: return "relative";
  }
  return "?";
}

Number parse_number(std::string_view s) {
  if (s == "Sing") return Number::Sing;
  if (s == "Plur") return Number::Plur;
  throw ParseError("unknown number '" + std::string(s) + "'");
}

ClauseType parse_clause_type(std::string_view s) {
  for (ClauseType c : kClauseTypes) {
    if (s == to_string(c) || s == short_name(c)) return c;
  }
  throw ParseError("unknown clause type '" + std::string(s) + "'");
}

}  // namespace blm
