#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "drsl/klm.hpp"
#include "drsl/normalize.hpp"
#include "drsl/syntax.hpp"

namespace drsl {

// Reflexive-transitive closure of the declared sharpenings, with the
// universal standpoint on top.
struct SharpeningClosure {
  int n = 0;  // standpoint count of the vocabulary
  std::vector<char> mat;

  bool leq(int s, int t) const { return mat[static_cast<size_t>(s) * n + t] != 0; }
};

SharpeningClosure sharpening_closure(const NormalKB& kb);

// K_s or K_s^phi. Labels key identity: the base K_* is excluded from Know_*
// by label, never by set value.
struct SplitKb {
  std::string label;
  int standpoint = -1;
  bool diamond_extended = false;
  KlmPtr extension;  // the diamond body when extended
  std::vector<KlmPtr> statements;
};

struct SplitResult {
  std::vector<SplitKb> kbs;  // sorted by label
  // standpoint name -> ascending indices into kbs; "*" is always a key
  std::map<std::string, std::vector<int>> know;
  std::vector<int> occurring;  // S: vocabulary ids of standpoints occurring in kb
};

SplitResult standpoint_split(const NormalKB& kb);

struct ClosedWorldError : std::runtime_error {
  explicit ClosedWorldError(const std::string& sp)
      : std::runtime_error("standpoint '" + sp +
                           "' does not occur in the knowledge base; add `" + sp +
                           " <= *` to the knowledge base to query it"),
        standpoint(sp) {}
  std::string standpoint;
};

struct TraceEntry {
  std::string query;
  std::string label;
  bool verdict = false;
};

// Split with per-kb BaseRank precomputed, for repeated queries.
struct PreparedSplit {
  SplitResult split;
  std::vector<BaseRankResult> base_ranks;  // parallel to split.kbs
};

PreparedSplit prepare_split(const NormalKB& kb);

// RCStandpoint on a normalized query (conjunction = every element must hold).
// trace/diagnostics may be null.
bool rc_standpoint(const PreparedSplit& ps, const Vocabulary& vocab,
                   const std::vector<NormalStatement>& query,
                   std::vector<TraceEntry>* trace = nullptr,
                   std::vector<std::string>* diagnostics = nullptr);
bool rc_standpoint(const NormalKB& kb, const std::vector<NormalStatement>& query);

}  // namespace drsl
