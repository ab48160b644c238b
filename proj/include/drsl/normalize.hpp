#pragma once

#include <utility>
#include <vector>

#include "drsl/syntax.hpp"

namespace drsl {

// #_s phi with a modality-free body.
struct NormalStatement {
  bool is_box = true;
  int standpoint = Vocabulary::kUniversal;
  KlmPtr body;
};

struct NormalKB {
  Vocabulary vocabulary;
  std::vector<std::pair<int, int>> sharpenings;  // (sub, super)
  std::vector<NormalStatement> statements;
};

// Drops stacked modalities, keeping the innermost.
DrslPtr collapse_modalities(const DrslPtr& stmt);

// Equivalent conjunction-free list: bare phi becomes [*]phi, box distributes
// over conjunctions, diamond extracts modal conjuncts and keeps its KLM
// residue whole. Sharpening input is a contract violation.
std::vector<NormalStatement> normalize_statement(const DrslPtr& stmt);

NormalKB normalize_kb(const KnowledgeBase& kb);

DrslPtr normal_to_drsl(const NormalStatement& st);
std::string print_normal_statement(const NormalStatement& st, const Vocabulary& vocab);
std::string print_normal_kb(const NormalKB& kb);

}  // namespace drsl
