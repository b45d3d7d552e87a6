#include "blm/generator.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "blm/error.hpp"
#include "blm/random.hpp"

namespace blm {

Generator::Generator(const Lexicon& lexicon, GenerateOptions options)
    : lexicon_(lexicon), options_(std::move(options)) {
  if (options_.clauses.empty()) throw PlanError("no clause types requested");
  options_.program.check();
  for (ClauseType c : options_.clauses) {
    lexicon_.require_generation_ready(c);
    if (options_.variation == VariationType::III && !pools_.contains(c)) {
      Rng rng(derive_seed(options_.seed, "pool/" + std::string(short_name(c))));
      const auto bindings = sample_pool_bindings(lexicon_, c, rng);
      pools_.emplace(c, SentencePool::from_bindings(bindings, c, options_.program, lexicon_));
    }
  }
}

MatrixInstance Generator::make(std::uint64_t ordinal) const {
  const ClauseType clause = options_.clauses[ordinal % options_.clauses.size()];
  const std::uint64_t seed = derive_seed(options_.seed, ordinal);
  Rng rng(seed);
  switch (options_.variation) {
    case VariationType::I:
      return build_type1(sample_binding(lexicon_, clause, rng), clause, options_.program,
                         ordinal, lexicon_);
    case VariationType::II: {
      const Binding base = sample_binding(lexicon_, clause, rng);
      const auto subs =
          sample_substitutes(lexicon_, base, options_.program, VariedSlot::Subject, rng);
      return build_type2(base, subs, clause, options_.program, ordinal, lexicon_);
    }
    case VariationType::III:
      return build_type3(pools_.at(clause), options_.program, clause, ordinal, seed, lexicon_);
  }
  throw PlanError("unknown variation type");
}

std::vector<MatrixInstance> Generator::run() const {
  const std::size_t n = options_.count;
  std::vector<MatrixInstance> out(n);
  unsigned workers = options_.threads ? options_.threads : std::thread::hardware_concurrency();
  workers = static_cast<unsigned>(std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(n, 1)));

  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < n; i += workers) out[i] = make(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace blm
