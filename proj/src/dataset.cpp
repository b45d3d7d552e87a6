#include "blm/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "blm/error.hpp"
#include "blm/random.hpp"

namespace blm {

using Json = nlohmann::ordered_json;

namespace {

Json alternate_json(const Alternate& a) {
  return Json{{"rule", "Alternate"}, {"period", a.period}, {"start", to_string(a.start)}};
}

Alternate alternate_from(const Json& j) {
  if (j.at("rule") != "Alternate") throw ParseError("expected an Alternate rule");
  return {j.at("period").get<int>(), parse_number(j.at("start").get<std::string>())};
}

Json program_json(const RuleProgram& p) {
  Json n2;
  if (const auto* c = std::get_if<Constant>(&p.n2_rule)) {
    n2 = Json{{"rule", "Constant"}, {"value", to_string(c->value)}};
  } else {
    n2 = alternate_json(std::get<Alternate>(p.n2_rule));
  }
  return Json{{"subject", alternate_json(p.subject_rule)},
              {"n1", alternate_json(p.n1_rule)},
              {"n2", n2},
              {"attractors",
               {{"rule", "Progression"},
                {"block", p.attractor_rule.block},
                {"start", p.attractor_rule.start}}},
              {"sequence_length", p.sequence_length}};
}

RuleProgram program_from(const Json& j) {
  RuleProgram p;
  p.subject_rule = alternate_from(j.at("subject"));
  p.n1_rule = alternate_from(j.at("n1"));
  const Json& n2 = j.at("n2");
  if (n2.at("rule") == "Constant") {
    p.n2_rule = Constant{parse_number(n2.at("value").get<std::string>())};
  } else {
    p.n2_rule = alternate_from(n2);
  }
  const Json& at = j.at("attractors");
  if (at.at("rule") != "Progression") throw ParseError("expected a Progression rule");
  p.attractor_rule = {at.at("block").get<int>(), at.at("start").get<int>()};
  p.sequence_length = j.at("sequence_length").get<int>();
  return p;
}

Json binding_json(const Binding& b) {
  return Json{{"subject", b.subject},
              {"verb", b.verb},
              {"n1", b.n1},
              {"n2", b.n2},
              {"prep1", b.prep1},
              {"prep2", b.prep2},
              {"frame", b.frame},
              {"relative_clause", b.relative_clause},
              {"trailer", b.trailer},
              {"bare_subject", b.bare_subject}};
}

Binding binding_from(const Json& j) {
  Binding b;
  b.subject = j.at("subject").get<std::string>();
  b.verb = j.at("verb").get<std::string>();
  b.n1 = j.at("n1").get<std::string>();
  b.n2 = j.at("n2").get<std::string>();
  b.prep1 = j.at("prep1").get<std::string>();
  b.prep2 = j.at("prep2").get<std::string>();
  b.frame = j.at("frame").get<std::string>();
  b.relative_clause = j.at("relative_clause").get<std::string>();
  b.trailer = j.at("trailer").get<std::string>();
  b.bare_subject = j.at("bare_subject").get<bool>();
  return b;
}

}  // namespace

std::string to_record(const MatrixInstance& m) {
  Json answers = Json::array();
  for (const auto& a : m.answers) {
    answers.push_back({{"surface", a.surface}, {"contrast_type", to_string(a.contrast_type)}});
  }
  Json ctx_prov = Json::array();
  for (const auto& p : m.context_provenance) {
    ctx_prov.push_back({{"position", p.position}, {"binding", binding_json(p.binding)}});
  }
  Json ans_prov = Json::array();
  for (const auto& b : m.answer_provenance) ans_prov.push_back(binding_json(b));

  Json j{{"id", m.id},
         {"clause_type", to_string(m.clause_type)},
         {"variation_type", to_string(m.variation_type)},
         {"ordered", m.ordered},
         {"contexts", m.contexts},
         {"answers", std::move(answers)},
         {"correct_index", m.correct_index},
         {"program", program_json(m.program)},
         {"provenance", {{"contexts", std::move(ctx_prov)}, {"answers", std::move(ans_prov)}}}};
  return j.dump();
}

MatrixInstance from_record(std::string_view line, std::size_t line_no) {
  try {
    const Json j = Json::parse(line);
    MatrixInstance m;
    m.id = j.at("id").get<std::string>();
    m.clause_type = parse_clause_type(j.at("clause_type").get<std::string>());
    m.variation_type = parse_variation_type(j.at("variation_type").get<std::string>());
    m.ordered = j.at("ordered").get<bool>();
    m.contexts = j.at("contexts").get<std::vector<std::string>>();
    if (m.contexts.size() != kContextCount) {
      throw ParseError("expected 7 contexts, got " + std::to_string(m.contexts.size()));
    }
    const Json& answers = j.at("answers");
    if (!answers.is_array() || answers.size() != kAnswerCount) {
      throw ParseError("AnswerArity: expected 6 answers, got " +
                       std::to_string(answers.is_array() ? answers.size() : 0));
    }
    for (const Json& a : answers) {
      m.answers.push_back({a.at("surface").get<std::string>(),
                           parse_contrast_type(a.at("contrast_type").get<std::string>())});
    }
    m.correct_index = j.at("correct_index").get<std::size_t>();
    if (m.correct_index >= kAnswerCount) {
      throw ParseError("AnswerArity: correct_index out of range");
    }
    m.program = program_from(j.at("program"));
    const Json& prov = j.at("provenance");
    for (const Json& p : prov.at("contexts")) {
      m.context_provenance.push_back({p.at("position").get<int>(), binding_from(p.at("binding"))});
    }
    for (const Json& b : prov.at("answers")) m.answer_provenance.push_back(binding_from(b));
    return m;
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line_no);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed record: ") + e.what(), line_no);
  }
}

DatasetManifest DatasetManifest::of(std::span<const MatrixInstance> matrices,
                                    std::uint64_t global_seed) {
  DatasetManifest man;
  man.global_seed = global_seed;
  man.total = matrices.size();
  for (const auto& m : matrices) ++man.counts[{m.clause_type, m.variation_type, m.ordered}];
  return man;
}

std::string DatasetManifest::to_record() const {
  Json counts_json = Json::array();
  for (const auto& [key, count] : counts) {
    counts_json.push_back({{"clause_type", to_string(key.clause_type)},
                           {"variation_type", to_string(key.variation_type)},
                           {"ordered", key.ordered},
                           {"count", count}});
  }
  Json j{{"record", "manifest"},
         {"format_version", format_version},
         {"global_seed", global_seed},
         {"total", total},
         {"counts", std::move(counts_json)}};
  if (splits) {
    j["splits"] = {{"train", splits->train}, {"val", splits->val}, {"test", splits->test}};
  } else {
    j["splits"] = nullptr;
  }
  return j.dump();
}

DatasetManifest DatasetManifest::from_record(std::string_view line) {
  try {
    const Json j = Json::parse(line);
    if (j.at("record") != "manifest") throw ParseError("not a manifest record");
    DatasetManifest man;
    man.format_version = j.at("format_version").get<int>();
    man.global_seed = j.at("global_seed").get<std::uint64_t>();
    man.total = j.at("total").get<std::size_t>();
    for (const Json& c : j.at("counts")) {
      CountKey key{parse_clause_type(c.at("clause_type").get<std::string>()),
                   parse_variation_type(c.at("variation_type").get<std::string>()),
                   c.at("ordered").get<bool>()};
      man.counts[key] = c.at("count").get<std::size_t>();
    }
    if (const Json& s = j.at("splits"); !s.is_null()) {
      man.splits = SplitSizes{s.at("train").get<std::size_t>(), s.at("val").get<std::size_t>(),
                              s.at("test").get<std::size_t>()};
    }
    return man;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed manifest: ") + e.what());
  }
}

std::filesystem::path manifest_path(const std::filesystem::path& dataset) {
  auto p = dataset;
  p += ".manifest";
  return p;
}

void write_manifest(const DatasetManifest& manifest, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << manifest.to_record() << '\n';
  if (!out) throw IoError("write failed for " + path.string());
}

DatasetManifest read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  std::getline(in, line);
  return DatasetManifest::from_record(line);
}

DatasetManifest write_matrices(std::span<const MatrixInstance> matrices,
                               const std::filesystem::path& path,
                               std::uint64_t global_seed) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  for (const auto& m : matrices) out << to_record(m) << '\n';
  out.close();
  if (!out) throw IoError("write failed for " + path.string());
  DatasetManifest man = DatasetManifest::of(matrices, global_seed);
  write_manifest(man, manifest_path(path));
  return man;
}

std::vector<MatrixInstance> read_matrices(const std::filesystem::path& path) {
  if (auto side = manifest_path(path); std::filesystem::exists(side)) {
    const auto man = read_manifest(side);
    if (man.format_version != kFormatVersion) {
      throw FormatError("dataset format version " + std::to_string(man.format_version) +
                        " is not supported (expected " + std::to_string(kFormatVersion) + ")");
    }
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<MatrixInstance> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    out.push_back(from_record(line, line_no));
  }
  if (in.bad()) throw IoError("read failed for " + path.string());
  return out;
}

void Fractions::check() const {
  for (double f : {train, val, test}) {
    if (!(f >= 0.0 && f <= 1.0)) throw PlanError("split fractions must lie in [0, 1]");
  }
  if (std::abs(train + val + test - 1.0) > 1e-9) {
    throw PlanError("split fractions must sum to 1");
  }
}

SplitSizes split_sizes(std::size_t n, const Fractions& fractions) {
  fractions.check();
  auto portion = [n](double f) {
    return static_cast<std::size_t>(std::llround(static_cast<double>(n) * f));
  };
  SplitSizes s;
  s.train = std::min(portion(fractions.train), n);
  s.val = std::min(portion(fractions.val), n - s.train);
  s.test = n - s.train - s.val;
  return s;
}

std::array<std::vector<std::size_t>, 3> split_indices(std::size_t n,
                                                      const Fractions& fractions,
                                                      std::uint64_t seed) {
  const SplitSizes sizes = split_sizes(n, fractions);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(derive_seed(seed, std::string_view("split")));
  rng.shuffle(std::span(order));
  auto first = order.begin();
  std::array<std::vector<std::size_t>, 3> out;
  out[0].assign(first, first + static_cast<std::ptrdiff_t>(sizes.train));
  out[1].assign(first + static_cast<std::ptrdiff_t>(sizes.train),
                first + static_cast<std::ptrdiff_t>(sizes.train + sizes.val));
  out[2].assign(first + static_cast<std::ptrdiff_t>(sizes.train + sizes.val), order.end());
  return out;
}

Split split(std::span<const MatrixInstance> matrices, const Fractions& fractions,
            std::uint64_t seed) {
  const auto parts = split_indices(matrices.size(), fractions, seed);
  Split out;
  for (std::size_t i : parts[0]) out.train.push_back(matrices[i]);
  for (std::size_t i : parts[1]) out.val.push_back(matrices[i]);
  for (std::size_t i : parts[2]) out.test.push_back(matrices[i]);
  return out;
}

StatsReport stats(std::span<const MatrixInstance> matrices) {
  StatsReport r;
  r.manifest = DatasetManifest::of(matrices);
  for (const auto& m : matrices) {
    for (std::size_t pos = 0; pos < m.answers.size() && pos < kAnswerCount; ++pos) {
      ++r.histogram[canonical_index(m.answers[pos].contrast_type)][pos];
    }
  }
  const double uniform = static_cast<double>(matrices.size()) / kAnswerCount;
  for (ContrastType t : kCanonicalOrder) {
    for (std::size_t pos = 0; pos < kAnswerCount; ++pos) {
      const auto count = r.histogram[canonical_index(t)][pos];
      if (std::abs(static_cast<double>(count) - uniform) > 1.0) {
        std::ostringstream d;
        d << to_string(t) << " at position " << pos << ": " << count
          << " (uniform " << uniform << ")";
        r.skew.push_back({"*", Rule::RotationSkew, d.str()});
      }
    }
  }
  return r;
}

std::string format_stats(const StatsReport& report) {
  std::ostringstream out;
  out << "total\t" << report.manifest.total << '\n';
  for (const auto& [key, count] : report.manifest.counts) {
    out << "count\t" << to_string(key.clause_type) << '\t' << to_string(key.variation_type)
        << '\t' << (key.ordered ? "ordered" : "shuffled") << '\t' << count << '\n';
  }
  out << "position";
  for (std::size_t pos = 0; pos < kAnswerCount; ++pos) out << '\t' << pos;
  out << '\n';
  for (ContrastType t : kCanonicalOrder) {
    out << to_string(t);
    for (std::size_t pos = 0; pos < kAnswerCount; ++pos) {
      out << '\t' << report.histogram[canonical_index(t)][pos];
    }
    out << '\n';
  }
  for (const auto& v : report.skew) out << format_violation(v) << '\n';
  return out.str();
}

}  // namespace blm
