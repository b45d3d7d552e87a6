#include <doctest.h>

#include <string>

#include "blm/error.hpp"
#include "blm/lexicon.hpp"
#include "fixtures.hpp"

using namespace blm;
using blm::test::lexicon_from;

TEST_CASE("load a single noun") {
  auto lex = lexicon_from("Noun\tordinateur\tMasc\tordinateur\tordinateurs\t1\n");
  CHECK(lex.size() == 1);
  CHECK(lex.get("ordinateur", Category::Noun).plur_form == "ordinateurs");
}

TEST_CASE("reference fixture loads") {
  const auto& lex = test::reference_lexicon();
  CHECK(lex.size() == 6);
  CHECK(lex.has_preposition("avec"));
  CHECK(lex.has_preposition("de"));
  for (ClauseType c : kClauseTypes) CHECK_NOTHROW(lex.require_generation_ready(c));
}

TEST_CASE("full fixture loads and every entry passes its invariants") {
  const auto& lex = test::full_lexicon();
  CHECK(lex.of_category(Category::Noun).size() >= 40);
  for (Category c : {Category::Noun, Category::Verb}) {
    for (const LexEntry* e : lex.of_category(c)) CHECK_NOTHROW(e->check());
  }
}

TEST_CASE("vowel onset contradicting the form is rejected with its line") {
  const std::string text =
      "# comment\n"
      "Noun\tprogramme\tMasc\tprogramme\tprogrammes\t0\n"
      "Noun\tordinateur\tMasc\tordinateur\tordinateurs\t0\n";
  try {
    lexicon_from(text);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(lexicon_from("Noun\ttable\tFem\ttable\ttables\t1\n"), ParseError);
}

TEST_CASE("mute h accepts either onset flag") {
  CHECK_NOTHROW(lexicon_from("Noun\thistoire\tFem\thistoire\thistoires\t1\n"));
  CHECK_NOTHROW(lexicon_from("Noun\thibou\tMasc\thibou\thiboux\t0\n"));
}

TEST_CASE("malformed and duplicate records") {
  CHECK_THROWS_AS(lexicon_from("Noun\tordinateur\tMasc\n"), ParseError);
  CHECK_THROWS_AS(lexicon_from("Adverb\tvite\tNA\tvite\tvite\t0\n"), ParseError);
  CHECK_THROWS_AS(lexicon_from("Noun\tordinateur\tNA\tordinateur\tordinateurs\t1\n"),
                  ParseError);
  CHECK_THROWS_AS(lexicon_from("Verb\têtre\tNA\test\test\t1\n"), ParseError);
  CHECK_THROWS_AS(lexicon_from("Noun\ttable\tFem\ttable\ttables\t0\n"
                               "Noun\ttable\tFem\ttable\ttables\t0\n"),
                  DuplicateError);
  // Same lemma in two categories is fine.
  CHECK_NOTHROW(lexicon_from("Noun\tpasse\tFem\tpasse\tpasses\t0\n"
                             "Verb\tpasse\tNA\tpasse\tpassent\t0\n"));
}

TEST_CASE("ASCII apostrophes are normalized on load") {
  auto lex = lexicon_from("Verb\treposer\tNA\trepose sur l'étagère\treposent sur l'étagère\t0\n");
  CHECK(lex.get("reposer", Category::Verb).sing_form == "repose sur l’étagère");
}

TEST_CASE("realize_np elision and contraction") {
  const auto& lex = test::full_lexicon();
  const auto& ordinateur = lex.get("ordinateur", Category::Noun);
  const auto& experience = lex.get("expérience", Category::Noun);
  const auto& programme = lex.get("programme", Category::Noun);
  const auto& histoire = lex.get("histoire", Category::Noun);
  const auto& droit = lex.get("droit", Category::Noun);
  const auto& peinture = lex.get("peinture", Category::Noun);

  CHECK(realize_np(ordinateur, Number::Sing, NpSite::subject()) == "l’ordinateur");
  CHECK(realize_np(ordinateur, Number::Plur, NpSite::subject()) == "les ordinateurs");
  CHECK(realize_np(experience, Number::Plur, NpSite::after("de")) == "des expériences");
  CHECK(realize_np(experience, Number::Sing, NpSite::after("de")) == "de l’expérience");
  CHECK(realize_np(programme, Number::Plur, NpSite::after("avec")) == "avec les programmes");
  CHECK(realize_np(programme, Number::Sing, NpSite::after("avec")) == "avec le programme");
  CHECK(realize_np(droit, Number::Sing, NpSite::after("de")) == "du droit");
  CHECK(realize_np(droit, Number::Sing, NpSite::after("à")) == "au droit");
  CHECK(realize_np(droit, Number::Plur, NpSite::after("à")) == "aux droits");
  CHECK(realize_np(peinture, Number::Sing, NpSite::after("à")) == "à la peinture");
  CHECK(realize_np(peinture, Number::Sing, NpSite::after("de")) == "de la peinture");
  CHECK(realize_np(histoire, Number::Sing, NpSite::after("sur")) == "sur l’histoire");
  CHECK(realize_np(programme, Number::Plur, NpSite::bare()) == "programmes");
}

TEST_CASE("realize_verb") {
  const auto& lex = test::reference_lexicon();
  const auto& verb = lex.get("être-en-panne", Category::Verb);
  CHECK(realize_verb(verb, Number::Sing) == "est en panne");
  CHECK(realize_verb(verb, Number::Plur) == "sont en panne");
  CHECK_THROWS_AS(realize_verb(lex.get("ordinateur", Category::Noun), Number::Sing),
                  CategoryError);
  CHECK_THROWS_AS(realize_np(verb, Number::Sing, NpSite::subject()), CategoryError);
}

namespace {

// Drops the preposition (and any contracted article) in front of the noun.
std::string strip_np(const std::string& np) {
  for (std::string_view lead : {"du ", "des ", "au ", "aux "}) {
    if (np.starts_with(lead)) return np.substr(lead.size());
  }
  std::string rest = np;
  for (;;) {
    for (std::string_view det : {"le ", "la ", "les "}) {
      if (rest.starts_with(det)) return rest.substr(det.size());
    }
    if (rest.starts_with("l’")) return rest.substr(std::string("l’").size());
    auto space = rest.find(' ');
    if (space == std::string::npos) return rest;
    rest = rest.substr(space + 1);
  }
}

}  // namespace

TEST_CASE("property: every noun, number and site round-trips and never leaves de les / à les") {
  const auto& lex = test::full_lexicon();
  for (const LexEntry* e : lex.of_category(Category::Noun)) {
    for (Number n : {Number::Sing, Number::Plur}) {
      const std::string subj = realize_np(*e, n, NpSite::subject());
      CHECK(strip_np(subj) == e->form(n));
      if (n == Number::Sing) {
        CHECK(subj.starts_with("l’") == e->vowel_onset);
        if (!e->vowel_onset) {
          CHECK(subj.starts_with(e->gender == Gender::Fem ? "la " : "le "));
        }
      }
      for (const auto& p : lex.prepositions()) {
        const std::string np = realize_np(*e, n, NpSite::after(p));
        CHECK_FALSE(np.empty());
        CHECK(np.find("de les ") == std::string::npos);
        CHECK(np.find("à les ") == std::string::npos);
        CHECK(np.find("de le ") == std::string::npos);
        CHECK(np.find("à le ") == std::string::npos);
        CHECK(strip_np(np) == e->form(n));
      }
    }
  }
}
