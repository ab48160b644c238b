#pragma once

#include <map>
#include <string>
#include <vector>

#include "drsl/klm.hpp"
#include "drsl/standpoint.hpp"
#include "drsl/syntax.hpp"

namespace drsl {

// A ranked standpoint structure: a finite set of precisifications pi (named),
// one ranked interpretation per precisification, and a standpoint map sigma.
// sigma vectors hold sorted indices into pi/gamma. Standpoints without an
// entry are uninterpreted; evaluating one throws.
struct RankedStandpointStructure {
  Vocabulary vocabulary;
  std::vector<std::string> pi;
  std::vector<RankedInterpretation> gamma;
  std::map<std::string, std::vector<int>> sigma;
};

// Structural well-formedness complaints (sizes, sigma domain/range, the
// universal standpoint covering everything). Empty means well formed.
std::vector<std::string> structure_shape_errors(const RankedStandpointStructure& m);

// Validity: every precisification named by some sigma(s) has at least one
// finite-rank valuation.
bool is_valid(const RankedStandpointStructure& m);

// Satisfaction of a modality-free statement at one precisification.
bool satisfies_at(const RankedStandpointStructure& m, int pi_index, const KlmPtr& body);

// Satisfaction of a full statement (boxes and diamonds quantify over sigma).
bool satisfies(const RankedStandpointStructure& m, const DrslPtr& statement);

// M |= K: every statement of the knowledge base, including sharpenings as
// sigma-inclusions.
bool check_model(const RankedStandpointStructure& m, const KnowledgeBase& kb);
bool check_model(const RankedStandpointStructure& m, const NormalKB& kb);

// The canonical rational-closure structure of a knowledge base: one
// precisification per split base except K_* itself, ranked by the rational
// closure of that base. Throws std::runtime_error when the structure would
// have no precisifications (no named standpoints and no diamonds).
RankedStandpointStructure build_rc_structure(const NormalKB& kb, int max_atoms = 20);

}  // namespace drsl
