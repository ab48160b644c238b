#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "drsl/syntax.hpp"

namespace drsl {

// Bit i = truth of the atom with index i.
using Valuation = std::uint32_t;

struct EnumerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool eval(Valuation u, const BoolPtr& f);

// Exactly the satisfying valuations over the full vocabulary.
std::vector<Valuation> models_of(const BoolPtr& f, const Vocabulary& vocab, int max_atoms = 20);

struct SolveStats {
  long long decisions = 0;
  long long propagations = 0;
};

// Literals are 2*var (positive) / 2*var + 1 (negative); vars < n_atoms are
// atoms, the rest are Tseitin auxiliaries.
struct ClauseSet {
  int n_vars = 0;
  std::vector<std::vector<int>> clauses;
  bool horn = true;  // every clause has at most one positive literal
};

ClauseSet to_cnf(const std::vector<BoolPtr>& formulas, int n_atoms);
bool sat(const ClauseSet& cs, SolveStats* stats = nullptr);

// premises |= alpha, decided as UNSAT(premises + {!alpha}).
bool entails(const std::vector<BoolPtr>& premises, const BoolPtr& alpha, SolveStats* stats = nullptr);

// Enumeration reference for differential tests.
bool entails_enum(const std::vector<BoolPtr>& premises, const BoolPtr& alpha);

// DI -> {antecedent -> consequent}; Boolean alpha -> {!alpha -> false};
// conjunction -> union.
std::vector<BoolPtr> materialize(const KlmPtr& stmt);

bool is_horn(const std::vector<BoolPtr>& formulas);

}  // namespace drsl
