#pragma once

#include <string>
#include <vector>

#include "drsl/classical.hpp"
#include "drsl/syntax.hpp"

namespace drsl {

inline constexpr int kRankInfinite = -1;

// Convex rank function on all valuations of the vocabulary: finite levels are
// nonempty and every valuation is in exactly one level or in `infinite`.
// Within a row valuations are kept in display order (first atom = most
// significant bit, descending).
struct RankedInterpretation {
  int n_atoms = 0;
  std::vector<std::vector<Valuation>> levels;
  std::vector<Valuation> infinite;

  bool all_infinite() const { return levels.empty(); }
  friend bool operator==(const RankedInterpretation&, const RankedInterpretation&) = default;
};

// Display key: atom 0 is the most significant bit.
unsigned display_key(Valuation u, int n_atoms);
void sort_display(std::vector<Valuation>& vals, int n_atoms);
std::string valuation_to_string(Valuation u, const Vocabulary& vocab);

int ri_rank(const RankedInterpretation& R, Valuation u);  // kRankInfinite for infinity
bool ri_satisfies(const RankedInterpretation& R, const KlmPtr& stmt);
bool ri_leq(const RankedInterpretation& a, const RankedInterpretation& b);

// One row per rank, infinity first:  "∞: p -b f, p -b -f"
std::string ri_to_table(const RankedInterpretation& R, const Vocabulary& vocab);

// Materialized ranks; only nonempty finite ranks are stored, and n counts the
// formal trailing empty rank when R_inf is nonempty (so n = ranks.size() when
// infinite_rank is empty, ranks.size() + 1 otherwise).
struct BaseRankResult {
  std::vector<std::vector<BoolPtr>> ranks;
  std::vector<BoolPtr> infinite_rank;
  int n = 0;
};

BaseRankResult base_rank(const std::vector<KlmPtr>& kb);

bool rc_prop(const std::vector<KlmPtr>& kb, const KlmPtr& query);
bool rc_prop_ranked(const BaseRankResult& br, const KlmPtr& query);

// The minimal ranked model, built from BaseRank; all-infinite (flagged by
// all_infinite()) when the KB is classically unsatisfiable.
RankedInterpretation rc_model(const std::vector<KlmPtr>& kb, const Vocabulary& vocab,
                              int max_atoms = 20);

}  // namespace drsl
