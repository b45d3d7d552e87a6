#include <doctest.h>

#include <algorithm>
#include <set>

#include "blm/error.hpp"
#include "blm/validate.hpp"
#include "blm/variation.hpp"
#include "fixtures.hpp"

using namespace blm;

namespace {

constexpr Number S = Number::Sing;
constexpr Number P = Number::Plur;

Binding typeii_base() {
  Binding b;
  b.subject = "activité";
  b.verb = "rencontrer-succès";
  b.n1 = "peinture";
  b.n2 = "enfant";
  b.prep1 = "avec";
  b.prep2 = "de";
  b.frame = "jean-suppose";
  b.relative_clause = "dont-jean-se-servait";
  return b;
}

Binding make(std::string subject, std::string verb, std::string n1, std::string prep1,
             std::string n2 = "enfant", std::string prep2 = "de") {
  Binding b;
  b.subject = std::move(subject);
  b.verb = std::move(verb);
  b.n1 = std::move(n1);
  b.prep1 = std::move(prep1);
  b.n2 = std::move(n2);
  b.prep2 = std::move(prep2);
  return b;
}

std::multiset<std::string> sorted(const std::vector<std::string>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("type I reproduces the reference main-clause matrix") {
  const auto& lex = test::reference_lexicon();
  const auto m = build_type1(test::reference_binding(), ClauseType::Main,
                             RuleProgram::standard(), 0, lex);
  CHECK(m.id == "main-I-000000");
  REQUIRE(m.contexts.size() == 7);
  CHECK(m.contexts[0] == "L’ordinateur avec le programme est en panne.");
  CHECK(m.contexts[6] == "L’ordinateur avec les programmes de l’expérience est en panne.");
  CHECK(m.correct_index == 1);
  CHECK(m.answers[1].surface ==
        "Les ordinateurs avec les programmes de l’expérience sont en panne.");
  CHECK(validate_matrix(m, lex).empty());
  CHECK(build_type1(test::reference_binding(), ClauseType::Main, RuleProgram::standard(), 0,
                    lex) == m);
}

TEST_CASE("type I keeps the same lexemes on every row") {
  const auto& lex = test::full_lexicon();
  Rng rng(3);
  for (ClauseType c : kClauseTypes) {
    const auto b = sample_binding(lex, c, rng);
    const auto m = build_type1(b, c, RuleProgram::standard(), 5, lex);
    for (const auto& p : m.context_provenance) CHECK(p.binding == b);
    for (const auto& a : m.answer_provenance) CHECK(a == b);
    CHECK(validate_matrix(m, lex).empty());
  }
}

TEST_CASE("type II reproduces the partially varied matrix") {
  const auto& lex = test::full_lexicon();
  const std::vector<Substitute> subs = {{"expérience", S}, {"travail", P},   {"association", S},
                                        {"séance", P},     {"activité", S},  {"création", P},
                                        {"activité", S}};
  const auto m = build_type2(typeii_base(), subs, ClauseType::Main, RuleProgram::standard(),
                             0, lex);
  const std::vector<std::string> expected = {
      "L’expérience avec la peinture a rencontré un grand succès.",
      "Les travaux avec la peinture ont rencontré un grand succès.",
      "L’association avec les peintures a rencontré un grand succès.",
      "Les séances avec les peintures ont rencontré un grand succès.",
      "L’activité avec la peinture de l’enfant a rencontré un grand succès.",
      "Les créations avec la peinture de l’enfant ont rencontré un grand succès.",
      "L’activité avec les peintures de l’enfant a rencontré un grand succès.",
  };
  CHECK(m.contexts == expected);
  CHECK(m.variation_type == VariationType::II);
  CHECK(validate_matrix(m, lex).empty());
}

TEST_CASE("type II with the base subject everywhere collapses to type I") {
  const auto& lex = test::reference_lexicon();
  const auto base = test::reference_binding();
  const auto a = apply_rules(RuleProgram::standard());
  std::vector<Substitute> subs;
  for (int i = 0; i < 7; ++i) subs.push_back({base.subject, a[i].subject_number});
  auto two = build_type2(base, subs, ClauseType::Relative, RuleProgram::standard(), 4, lex);
  auto one = build_type1(base, ClauseType::Relative, RuleProgram::standard(), 4, lex);
  CHECK(two.contexts == one.contexts);
  CHECK(two.answers == one.answers);
  CHECK(two.context_provenance == one.context_provenance);
}

TEST_CASE("type II substitute with the wrong number") {
  const auto& lex = test::full_lexicon();
  std::vector<Substitute> subs(7, {"expérience", S});
  CHECK_THROWS_AS(build_type2(typeii_base(), subs, ClauseType::Main, RuleProgram::standard(),
                              0, lex),
                  NumberError);
  subs.pop_back();
  CHECK_THROWS_AS(build_type2(typeii_base(), subs, ClauseType::Main, RuleProgram::standard(),
                              0, lex),
                  ArityError);
}

TEST_CASE("type II rows 0 and 1 differ only in the subject NP and the verb") {
  const auto& lex = test::full_lexicon();
  Rng rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    const ClauseType c = kClauseTypes[trial % 3];
    const auto base = sample_binding(lex, c, rng);
    const auto subs = sample_substitutes(lex, base, RuleProgram::standard(),
                                         VariedSlot::Subject, rng);
    const auto m = build_type2(base, subs, c, RuleProgram::standard(), trial, lex);
    // Strip the subject NP (first word after the frame is the determiner).
    const auto& s0 = lex.get(subs[0].lemma, Category::Noun).sing_form;
    const auto& s1 = lex.get(subs[1].lemma, Category::Noun).plur_form;
    const auto& verb = lex.get(base.verb, Category::Verb);
    std::string r0 = m.contexts[0], r1 = m.contexts[1];
    auto cut = [](std::string s, const std::string& what) {
      auto at = s.find(what);
      REQUIRE(at != std::string::npos);
      return s.substr(at + what.size());
    };
    r0 = cut(r0, s0);
    r1 = cut(r1, s1);
    r0 = r0.substr(0, r0.rfind(verb.sing_form));
    r1 = r1.substr(0, r1.rfind(verb.plur_form));
    CHECK(r0 == r1);

    // Only the subject lemma sequence varies.
    std::set<std::string> subjects, n1s, n2s, verbs;
    for (const auto& p : m.context_provenance) {
      subjects.insert(p.binding.subject);
      n1s.insert(p.binding.n1);
      n2s.insert(p.binding.n2);
      verbs.insert(p.binding.verb);
    }
    CHECK(subjects.size() > 1);
    CHECK(n1s.size() == 1);
    CHECK(n2s.size() == 1);
    CHECK(verbs.size() == 1);
    CHECK(validate_matrix(m, lex).empty());
  }
}

TEST_CASE("type II can vary N1 instead") {
  const auto& lex = test::full_lexicon();
  Rng rng(23);
  const auto base = sample_binding(lex, ClauseType::Main, rng);
  const auto subs = sample_substitutes(lex, base, RuleProgram::standard(), VariedSlot::N1, rng);
  const auto m = build_type2(base, subs, ClauseType::Main, RuleProgram::standard(), 0, lex,
                             VariedSlot::N1);
  for (const auto& p : m.context_provenance) CHECK(p.binding.subject == base.subject);
  CHECK(validate_matrix(m, lex).empty());
}

TEST_CASE("type III: the lexically varied matrix is reachable") {
  const auto& lex = test::full_lexicon();
  const auto assignments = apply_rules(RuleProgram::standard());
  const std::vector<std::pair<Binding, std::string>> rows = {
      {make("conférence", "commencer-tard", "histoire", "sur"),
       "La conférence sur l’histoire a commencé plus tard que prévu."},
      {make("responsable", "aller-démissionner", "droit", "de"),
       "Les responsables du droit vont démissionner."},
      {make("exposition", "rencontrer-succès", "peinture", "avec"),
       "L’exposition avec les peintures a rencontré un grand succès."},
      {make("menace", "inquiéter-médecins", "réforme", "de"),
       "Les menaces des réformes inquiètent les médecins."},
      {make("trousseau", "reposer-étagère", "clé", "avec", "cellule", "de"),
       "Le trousseau avec la clé de la cellule repose sur l’étagère."},
      {make("étude", "apparaître-bientôt", "effet", "sur", "drogue", "de"),
       "Les études sur l’effet de la drogue apparaîtront bientôt."},
      {make("menace", "inquiéter-médecins", "réforme", "de", "école", "dans"),
       "La menace des réformes dans l’école inquiète les médecins."},
      {make("copine", "dormir-plage", "propriétaire", "de", "villa", "de"),
       "Les copines des propriétaires de la villa dormaient sur la plage."},
  };
  SentencePool pool;
  for (int i = 0; i < 8; ++i) {
    pool.add(ClauseType::Main, CellPattern::of(assignments[i]), {rows[i].second, rows[i].first},
             lex);
  }
  // Rows 4 and 7 share the subject lemma "menace".
  CHECK_THROWS_AS(build_type3(pool, RuleProgram::standard(), ClauseType::Main, 0, 1, lex),
                  CoverageError);
  const auto m = build_type3(pool, RuleProgram::standard(), ClauseType::Main, 0, 1, lex,
                             {.distinct_subjects = false});
  for (int i = 0; i < 7; ++i) CHECK(m.contexts[i] == rows[i].second);
  CHECK(m.answers[m.correct_index].surface == rows[7].second);
  CHECK(validate_matrix(m, lex).empty());
}

TEST_CASE("type III with one sentence per cell ignores the seed") {
  const auto& lex = test::full_lexicon();
  Rng rng(5);
  auto bindings = sample_pool_bindings(lex, ClauseType::Completive, rng);
  bindings.resize(8);
  const auto assignments = apply_rules(RuleProgram::standard());
  SentencePool pool;
  for (int i = 0; i < 8; ++i) {
    const auto& b = bindings[i];
    pool.add(ClauseType::Completive, CellPattern::of(assignments[i]),
             {realize(plan_for(assignments[i], ClauseType::Completive, b, lex), b, lex), b}, lex);
  }
  const auto first = build_type3(pool, RuleProgram::standard(), ClauseType::Completive, 9, 1, lex);
  for (std::uint64_t seed : {2, 77, 12345}) {
    CHECK(build_type3(pool, RuleProgram::standard(), ClauseType::Completive, 9, seed, lex) ==
          first);
  }
  CHECK(validate_matrix(first, lex).empty());
}

TEST_CASE("type III coverage errors") {
  const auto& lex = test::full_lexicon();
  SentencePool empty;
  CHECK_THROWS_AS(build_type3(empty, RuleProgram::standard(), ClauseType::Main, 0, 1, lex),
                  CoverageError);

  // A pool holding fewer than 7 subjects cannot give distinct rows.
  Rng rng(8);
  auto bindings = sample_pool_bindings(lex, ClauseType::Main, rng);
  bindings.resize(5);
  const auto pool =
      SentencePool::from_bindings(bindings, ClauseType::Main, RuleProgram::standard(), lex);
  CHECK(pool.size() == 40);
  CHECK_THROWS_AS(build_type3(pool, RuleProgram::standard(), ClauseType::Main, 0, 1, lex),
                  CoverageError);
}

TEST_CASE("pool rejects a sentence outside its cell") {
  const auto& lex = test::reference_lexicon();
  const auto a = apply_rules(RuleProgram::standard());
  SentencePool pool;
  CHECK_THROWS_AS(pool.add(ClauseType::Main, CellPattern::of(a[1]),
                           {"L’ordinateur avec le programme est en panne.",
                            test::reference_binding()},
                           lex),
                  PlanError);
  CHECK_NOTHROW(pool.add(ClauseType::Main, CellPattern::of(a[0]),
                         {"L’ordinateur avec le programme est en panne.",
                          test::reference_binding()},
                         lex));
}

TEST_CASE("property: 1000 seeded type III matrices validate with distinct subjects") {
  const auto& lex = test::full_lexicon();
  std::map<ClauseType, SentencePool> pools;
  for (ClauseType c : kClauseTypes) {
    Rng rng(derive_seed(99, std::string(short_name(c))));
    pools.emplace(c, SentencePool::from_bindings(sample_pool_bindings(lex, c, rng), c,
                                                 RuleProgram::standard(), lex));
  }
  std::size_t failures = 0;
  for (std::uint64_t k = 0; k < 1000; ++k) {
    const ClauseType c = kClauseTypes[k % 3];
    const auto m =
        build_type3(pools.at(c), RuleProgram::standard(), c, k, derive_seed(4, k), lex);
    std::set<std::string> subjects;
    for (const auto& p : m.context_provenance) subjects.insert(p.binding.subject);
    CHECK(subjects.size() == 7);
    failures += validate_matrix(m, lex).size();
  }
  CHECK(failures == 0);
}

TEST_CASE("shuffle_contexts") {
  const auto& lex = test::reference_lexicon();
  const auto m =
      build_type1(test::reference_binding(), ClauseType::Main, RuleProgram::standard(), 2, lex);

  SUBCASE("identity permutation flips only the flag and the id") {
    const std::vector<std::size_t> id = {0, 1, 2, 3, 4, 5, 6};
    const auto u = permute_contexts(m, id);
    CHECK(u.contexts == m.contexts);
    CHECK_FALSE(u.ordered);
    CHECK(u.id == m.id + "-shuffled");
  }
  SUBCASE("permutation preserves the context multiset and the answers") {
    const auto u = shuffle_contexts(m, 42);
    CHECK(sorted(u.contexts) == sorted(m.contexts));
    CHECK(u.answers == m.answers);
    CHECK(u.correct_index == m.correct_index);
    CHECK(u.program == m.program);
    CHECK(validate_matrix(u, lex).empty());
    for (std::size_t i = 0; i < 7; ++i) {
      CHECK(u.contexts[i] == m.contexts[u.context_provenance[i].position]);
    }
  }
  SUBCASE("fixed seed reproduces the permutation") {
    CHECK(shuffle_contexts(m, 42) == shuffle_contexts(m, 42));
  }
  SUBCASE("shuffling twice is a state error") {
    CHECK_THROWS_AS(shuffle_contexts(shuffle_contexts(m, 1), 2), StateError);
  }
  SUBCASE("bad permutations") {
    const std::vector<std::size_t> dup = {0, 0, 2, 3, 4, 5, 6};
    CHECK_THROWS_AS(permute_contexts(m, dup), ArityError);
    const std::vector<std::size_t> short_perm = {0, 1};
    CHECK_THROWS_AS(permute_contexts(m, short_perm), ArityError);
  }
}

TEST_CASE("shuffle draws every permutation over many seeds") {
  const auto& lex = test::reference_lexicon();
  const auto m =
      build_type1(test::reference_binding(), ClauseType::Main, RuleProgram::standard(), 0, lex);
  // Row 0 should land on each of the 7 slots roughly 1/7 of the time.
  std::array<int, 7> where{};
  const int trials = 7000;
  for (int s = 0; s < trials; ++s) {
    const auto u = shuffle_contexts(m, static_cast<std::uint64_t>(s));
    for (std::size_t i = 0; i < 7; ++i) {
      if (u.context_provenance[i].position == 0) ++where[i];
    }
  }
  for (int c : where) CHECK(std::abs(c - trials / 7) < 150);
}
