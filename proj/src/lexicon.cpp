#include "blm/lexicon.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "blm/error.hpp"

namespace blm {

namespace {

constexpr std::array<std::string_view, 7> kCategoryNames = {
    "Noun", "Verb", "FixedPP", "FixedTMP", "FixedMNR", "RelClause", "Frame"};

// Lowercase and uppercase vowels, including the accented forms of French.
constexpr std::array<std::string_view, 46> kVowels = {
    "a", "e", "i", "o", "u", "y", "A", "E", "I", "O", "U", "Y",
    "à", "â", "ä", "æ", "é", "è", "ê", "ë", "î", "ï", "ô", "ö", "œ", "ù", "û",
    "ü", "ÿ", "À", "Â", "Ä", "Æ", "É", "È", "Ê", "Ë", "Î", "Ï", "Ô", "Ö", "Œ",
    "Ù", "Û", "Ü", "Ÿ"};

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

bool parse_flag(const std::string& s) {
  if (s == "1" || s == "true") return true;
  if (s == "0" || s == "false") return false;
  throw ParseError("vowel_onset must be 0/1 or true/false, got '" + s + "'");
}

bool is_article_contracting(std::string_view prep) {
  return prep == "de" || prep == "à";
}

}  // namespace

std::string_view to_string(Category c) {
  return kCategoryNames[static_cast<std::size_t>(c)];
}

std::string_view to_string(Gender g) {
  switch (g) {
    case Gender::Masc: return "Masc";
    case Gender::Fem: return "Fem";
    case Gender::NA: return "NA";
  }
  return "?";
}

Category parse_category(std::string_view s) {
  for (std::size_t i = 0; i < kCategoryNames.size(); ++i) {
    if (kCategoryNames[i] == s) return static_cast<Category>(i);
  }
  throw ParseError("unknown category '" + std::string(s) + "'");
}

Gender parse_gender(std::string_view s) {
  if (s == "Masc" || s == "m") return Gender::Masc;
  if (s == "Fem" || s == "f") return Gender::Fem;
  if (s == "NA" || s == "-") return Gender::NA;
  throw ParseError("unknown gender '" + std::string(s) + "'");
}

std::string normalize_apostrophes(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 4);
  for (char c : s) {
    if (c == '\'') {
      out += kApostrophe;
    } else {
      out += c;
    }
  }
  return out;
}

bool starts_with_vowel(std::string_view s) {
  return std::any_of(kVowels.begin(), kVowels.end(),
                     [&](std::string_view v) { return s.starts_with(v); });
}

void LexEntry::check() const {
  auto fail = [&](const std::string& why) {
    throw PlanError("entry '" + lemma + "' (" + std::string(to_string(category)) +
                    "): " + why);
  };
  if (lemma.empty()) fail("empty lemma");
  if (sing_form.empty() || plur_form.empty()) fail("empty surface form");
  if ((category == Category::Noun || category == Category::Verb) &&
      sing_form == plur_form) {
    fail("singular and plural forms must differ");
  }
  if (category == Category::Noun && gender == Gender::NA) {
    fail("nouns need a gender");
  }
  // 'h' may be mute or aspirated, so either flag is accepted there.
  const bool h_onset = sing_form.starts_with('h') || sing_form.starts_with('H');
  if (!h_onset && vowel_onset != starts_with_vowel(sing_form)) {
    fail(vowel_onset ? "vowel_onset set but form starts with a consonant"
                     : "form starts with a vowel but vowel_onset is unset");
  }
}

Lexicon Lexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open lexicon " + path.string());
  return parse(in, path.string());
}

Lexicon Lexicon::parse(std::istream& in, std::string_view source) {
  Lexicon lex;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    try {
      auto fields = split_tabs(line);
      if (fields[0] == "Prep") {
        if (fields.size() != 2 || fields[1].empty()) {
          throw ParseError("preposition record needs exactly 2 fields");
        }
        lex.add_preposition(normalize_apostrophes(fields[1]));
        continue;
      }
      if (fields.size() != 6) {
        throw ParseError("expected 6 tab-separated fields, got " +
                         std::to_string(fields.size()));
      }
      LexEntry e;
      e.category = parse_category(fields[0]);
      e.lemma = normalize_apostrophes(fields[1]);
      e.gender = parse_gender(fields[2]);
      e.sing_form = normalize_apostrophes(fields[3]);
      e.plur_form = normalize_apostrophes(fields[4]);
      e.vowel_onset = parse_flag(fields[5]);
      lex.add(std::move(e));
    } catch (const ParseError& err) {
      throw ParseError(std::string(source) + ": " + err.what(), line_no);
    } catch (const PlanError& err) {
      throw ParseError(std::string(source) + ": " + err.what(), line_no);
    } catch (const DuplicateError& err) {
      throw DuplicateError(std::string(source) + ": line " +
                           std::to_string(line_no) + ": " + err.what());
    }
  }
  return lex;
}

void Lexicon::add(LexEntry entry) {
  entry.check();
  Key key{entry.lemma, entry.category};
  if (entries_.contains(key)) {
    throw DuplicateError("duplicate entry (" + entry.lemma + ", " +
                         std::string(to_string(entry.category)) + ")");
  }
  order_.push_back(key);
  entries_.emplace(std::move(key), std::move(entry));
}

void Lexicon::add_preposition(std::string prep) {
  if (has_preposition(prep)) {
    throw DuplicateError("duplicate preposition '" + prep + "'");
  }
  preps_.push_back(std::move(prep));
}

const LexEntry* Lexicon::find(std::string_view lemma, Category category) const {
  auto it = entries_.find(Key{std::string(lemma), category});
  return it == entries_.end() ? nullptr : &it->second;
}

const LexEntry& Lexicon::get(std::string_view lemma, Category category) const {
  if (const LexEntry* e = find(lemma, category)) return *e;
  throw LookupError("no " + std::string(to_string(category)) + " '" +
                    std::string(lemma) + "' in lexicon");
}

std::vector<const LexEntry*> Lexicon::of_category(Category category) const {
  std::vector<const LexEntry*> out;
  for (const Key& k : order_) {
    if (k.second == category) out.push_back(&entries_.find(k)->second);
  }
  return out;
}

bool Lexicon::has_preposition(std::string_view prep) const {
  return std::find(preps_.begin(), preps_.end(), prep) != preps_.end();
}

void Lexicon::require_generation_ready(ClauseType clause) const {
  std::ostringstream missing;
  if (of_category(Category::Noun).size() < 3) missing << " three nouns;";
  if (of_category(Category::Verb).empty()) missing << " a verb;";
  if (preps_.size() < 2) missing << " two prepositions;";
  if (clause == ClauseType::Completive && of_category(Category::Frame).empty()) {
    missing << " a completive frame;";
  }
  if (clause == ClauseType::Relative &&
      of_category(Category::RelClause).empty()) {
    missing << " a relative clause;";
  }
  if (!missing.str().empty()) {
    throw CoverageError("lexicon cannot generate " +
                        std::string(to_string(clause)) + " matrices, missing:" +
                        missing.str());
  }
}

std::string realize_np(const LexEntry& entry, Number number,
                       const NpSite& site) {
  if (entry.category != Category::Noun) {
    throw CategoryError("realize_np needs a noun, got " +
                        std::string(to_string(entry.category)) + " '" +
                        entry.lemma + "'");
  }
  const std::string& noun = entry.form(number);
  if (site.kind == NpSite::Kind::Bare) return noun;

  // Article before any contraction: le/la/l'/les.
  std::string article;
  bool elided = false;
  if (number == Number::Plur) {
    article = "les";
  } else if (entry.vowel_onset) {
    elided = true;
  } else {
    article = entry.gender == Gender::Fem ? "la" : "le";
  }

  std::string out;
  if (site.kind == NpSite::Kind::AfterPrep) {
    const std::string& p = site.preposition;
    if (is_article_contracting(p) && (article == "le" || article == "les")) {
      if (p == "de") {
        out = article == "le" ? "du " : "des ";
      } else {
        out = article == "le" ? "au " : "aux ";
      }
      return out + noun;
    }
    out = p + " ";
  }
  if (elided) {
    out += "l";
    out += kApostrophe;
  } else {
    out += article + " ";
  }
  return out + noun;
}

std::string realize_verb(const LexEntry& entry, Number number) {
  if (entry.category != Category::Verb) {
    throw CategoryError("realize_verb needs a verb, got " +
                        std::string(to_string(entry.category)) + " '" +
                        entry.lemma + "'");
  }
  return entry.form(number);
}

}  // namespace blm
