#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace blm {

enum class Number : std::uint8_t { Sing, Plur };

enum class ClauseType : std::uint8_t { Main, Completive, Relative };

inline constexpr std::array<ClauseType, 3> kClauseTypes = {
    ClauseType::Main, ClauseType::Completive, ClauseType::Relative};

constexpr Number flip(Number n) {
  return n == Number::Sing ? Number::Plur : Number::Sing;
}

std::string_view to_string(Number n);
std::string_view to_string(ClauseType c);

// Short names used on the command line: main, completive, relative.
std::string_view short_name(ClauseType c);

Number parse_number(std::string_view s);
// Accepts both the record names (MainClause) and the short names (main).
ClauseType parse_clause_type(std::string_view s);

}  // namespace blm
