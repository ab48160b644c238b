#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "drsl/klm.hpp"
#include "drsl/semantics.hpp"
#include "drsl/syntax.hpp"

namespace drsl {

// Budgets for the brute-force layer. The enumeration of ranked
// interpretations explodes past four atoms, so max_atoms is hard-capped there.
struct EnumerationBudget {
  int max_atoms = 3;
  int max_precisifications = 3;
  std::uint64_t max_structures = 5'000'000;
  int n_standpoints = 2;  // named standpoints for the generator
  int n_statements = 5;
  bool allow_inconsistent = false;
};

class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every convex ranked interpretation over n_atoms, each exactly once:
// choose the infinite set, then every ordered partition of the rest.
void for_each_ranked_interpretation(
    int n_atoms, const std::function<void(const RankedInterpretation&)>& fn);
std::vector<RankedInterpretation> all_ranked_interpretations(int n_atoms);

std::uint64_t count_ranked_interpretations(int n_atoms);  // parallel when built with OpenMP
std::uint64_t count_ranked_interpretations_serial(int n_atoms);

// Pointwise minimum over all ranked models; asserts the minimum is itself a
// model (throws std::logic_error otherwise). The all-infinite interpretation
// models everything, so the model set is never empty.
RankedInterpretation minimal_model_oracle(const std::vector<KlmPtr>& kb,
                                          const Vocabulary& vocab, int max_atoms = 4);
RankedInterpretation minimal_model_oracle_serial(const std::vector<KlmPtr>& kb,
                                                 const Vocabulary& vocab,
                                                 int max_atoms = 4);

struct BoundedEntailResult {
  bool entailed = true;
  bool budget_exhausted = false;
  std::uint64_t structures_checked = 0;
  std::optional<RankedStandpointStructure> counterexample;
};

// Bounded check of ranked entailment: search every structure within the
// budget (gamma up to precisification relabeling, sigma over the standpoints
// that occur) for a model of kb that is not a model of the query. False is a
// genuine counterexample; true is only budget-relative.
BoundedEntailResult bounded_ranked_entailment(const KnowledgeBase& kb,
                                              const DrslPtr& query,
                                              const EnumerationBudget& budget = {});

// Deterministic random knowledge bases. Statement shapes cover bare KLM,
// boxes, diamonds, modal conjunctions and sharpenings; by default split bases
// with classically unsatisfiable infinite cores are resampled away.
KnowledgeBase generate_random_kb(std::uint64_t seed,
                                 const EnumerationBudget& budget = {});

// Shared random pieces, also used directly by the tests.
BoolPtr random_bool(std::mt19937_64& rng, const Vocabulary& vocab, int depth = 2);
KlmPtr random_di(std::mt19937_64& rng, const Vocabulary& vocab);
std::vector<KlmPtr> random_klm_kb(std::mt19937_64& rng, const Vocabulary& vocab,
                                  int n_statements);
// Modality-bearing statement without sharpenings, parser-reachable.
DrslPtr random_statement(std::mt19937_64& rng, const Vocabulary& vocab);

}  // namespace drsl
