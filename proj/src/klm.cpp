#include "drsl/klm.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace drsl {

unsigned display_key(Valuation u, int n_atoms) {
  unsigned key = 0;
  for (int i = 0; i < n_atoms; i++) key = (key << 1) | ((u >> i) & 1u);
  return key;
}

void sort_display(std::vector<Valuation>& vals, int n_atoms) {
  std::sort(vals.begin(), vals.end(), [n_atoms](Valuation a, Valuation b) {
    return display_key(a, n_atoms) > display_key(b, n_atoms);
  });
}

std::string valuation_to_string(Valuation u, const Vocabulary& vocab) {
  std::string out;
  for (int i = 0; i < vocab.n_atoms(); i++) {
    if (i) out += ' ';
    if (!((u >> i) & 1u)) out += '-';
    out += vocab.atom(i).name;
  }
  return out;
}

int ri_rank(const RankedInterpretation& R, Valuation u) {
  for (size_t i = 0; i < R.levels.size(); i++)
    for (Valuation v : R.levels[i])
      if (v == u) return static_cast<int>(i);
  return kRankInfinite;
}

bool ri_satisfies(const RankedInterpretation& R, const KlmPtr& stmt) {
  switch (stmt->kind) {
    case KlmKind::Bool:
      for (const auto& level : R.levels)
        for (Valuation u : level)
          if (!eval(u, stmt->lhs)) return false;
      return true;
    case KlmKind::DI:
      // minimal-rank antecedent worlds must satisfy the consequent
      for (const auto& level : R.levels) {
        bool found = false;
        bool ok = true;
        for (Valuation u : level)
          if (eval(u, stmt->lhs)) {
            found = true;
            if (!eval(u, stmt->rhs)) ok = false;
          }
        if (found) return ok;
      }
      return true;
    case KlmKind::Conj:
      return ri_satisfies(R, stmt->a) && ri_satisfies(R, stmt->b);
  }
  return false;
}

bool ri_leq(const RankedInterpretation& a, const RankedInterpretation& b) {
  assert(a.n_atoms == b.n_atoms);
  for (Valuation u = 0; u < (Valuation{1} << a.n_atoms); u++) {
    int ra = ri_rank(a, u);
    int rb = ri_rank(b, u);
    if (rb == kRankInfinite) continue;
    if (ra == kRankInfinite || ra > rb) return false;
  }
  return true;
}

std::string ri_to_table(const RankedInterpretation& R, const Vocabulary& vocab) {
  std::string out;
  auto row = [&](const std::string& label, const std::vector<Valuation>& vals) {
    out += label;
    out += ':';
    for (size_t i = 0; i < vals.size(); i++) {
      out += i ? ", " : " ";
      out += valuation_to_string(vals[i], vocab);
    }
    out += '\n';
  };
  row("∞", R.infinite);
  for (size_t i = R.levels.size(); i-- > 0;) row(std::to_string(i), R.levels[i]);
  return out;
}

namespace {

// A materialized defeasible implication; Booleans arrive as !alpha ~> false.
struct MatDi {
  BoolPtr ante;
  BoolPtr material;
  std::string key;
};

// Conjunctions split into conjuncts, Booleans convert per the !alpha |~ bottom
// reading; the print key deduplicates repeated implications.
void collect_dis(const KlmPtr& stmt, std::vector<std::pair<BoolPtr, BoolPtr>>& out) {
  switch (stmt->kind) {
    case KlmKind::Bool:
      out.push_back({mk_not(stmt->lhs), mk_bottom()});
      break;
    case KlmKind::DI:
      out.push_back({stmt->lhs, stmt->rhs});
      break;
    case KlmKind::Conj:
      collect_dis(stmt->a, out);
      collect_dis(stmt->b, out);
      break;
  }
}

std::string material_key(const BoolPtr& material) {
  // Atom indices are global to the vocabulary, so a nameless print is fine as
  // a structural key.
  std::string key;
  std::function<void(const BoolPtr&)> rec = [&](const BoolPtr& f) {
    key += std::to_string(static_cast<int>(f->kind));
    if (f->kind == BoolKind::Atom) key += "a" + std::to_string(f->atom);
    key += '(';
    if (f->lhs) rec(f->lhs);
    key += ',';
    if (f->rhs) rec(f->rhs);
    key += ')';
  };
  rec(material);
  return key;
}

}  // namespace

BaseRankResult base_rank(const std::vector<KlmPtr>& kb) {
  std::vector<MatDi> e;
  {
    std::vector<std::pair<BoolPtr, BoolPtr>> dis;
    for (const auto& stmt : kb) collect_dis(stmt, dis);
    std::vector<std::string> seen;
    for (auto& [ante, cons] : dis) {
      MatDi m{ante, mk_implies(ante, cons), ""};
      m.key = material_key(m.material);
      if (std::find(seen.begin(), seen.end(), m.key) != seen.end()) continue;
      seen.push_back(m.key);
      e.push_back(std::move(m));
    }
  }

  BaseRankResult out;
  std::vector<std::vector<BoolPtr>> all_ranks;
  int i = 0;
  while (true) {
    std::vector<BoolPtr> materials;
    for (const auto& m : e) materials.push_back(m.material);
    std::vector<MatDi> e_next;
    std::vector<BoolPtr> r_i;
    for (const auto& m : e) {
      if (entails(materials, mk_not(m.ante)))
        e_next.push_back(m);
      else
        r_i.push_back(m.material);
    }
    all_ranks.push_back(std::move(r_i));
    i++;
    if (e_next.size() == e.size()) break;  // E_{i-1} = E_i
    e = std::move(e_next);
  }

  // The loop's final iteration always yields an empty rank; it is counted by n
  // (when R_inf is nonempty) but not stored.
  assert(all_ranks.back().empty());
  all_ranks.pop_back();
  for ([[maybe_unused]] auto& r : all_ranks) assert(!r.empty());
  out.ranks = std::move(all_ranks);
  for (const auto& m : e) out.infinite_rank.push_back(m.material);
  out.n = out.infinite_rank.empty() ? i - 1 : i;
  return out;
}

bool rc_prop_ranked(const BaseRankResult& br, const KlmPtr& query) {
  switch (query->kind) {
    case KlmKind::Conj:
      return rc_prop_ranked(br, query->a) && rc_prop_ranked(br, query->b);
    case KlmKind::Bool:
      return rc_prop_ranked(br, mk_klm_di(mk_not(query->lhs), mk_bottom()));
    case KlmKind::DI:
      break;
  }
  const BoolPtr& alpha = query->lhs;
  size_t drop = 0;
  auto premises = [&]() {
    std::vector<BoolPtr> p = br.infinite_rank;
    for (size_t j = drop; j < br.ranks.size(); j++)
      p.insert(p.end(), br.ranks[j].begin(), br.ranks[j].end());
    return p;
  };
  while (drop < br.ranks.size() && entails(premises(), mk_not(alpha))) drop++;
  return entails(premises(), mk_implies(alpha, query->rhs));
}

bool rc_prop(const std::vector<KlmPtr>& kb, const KlmPtr& query) {
  return rc_prop_ranked(base_rank(kb), query);
}

RankedInterpretation rc_model(const std::vector<KlmPtr>& kb, const Vocabulary& vocab,
                              int max_atoms) {
  int n = vocab.n_atoms();
  if (n > max_atoms)
    throw EnumerationError("rc_model: " + std::to_string(n) + " atoms exceeds cap " +
                           std::to_string(max_atoms));
  BaseRankResult br = base_rank(kb);
  size_t m = br.ranks.size();

  RankedInterpretation out;
  out.n_atoms = n;
  std::vector<std::vector<Valuation>> buckets(m + 1);
  for (Valuation u = 0; u < (Valuation{1} << n); u++) {
    bool inf = false;
    for (const auto& f : br.infinite_rank)
      if (!eval(u, f)) { inf = true; break; }
    if (inf) {
      out.infinite.push_back(u);
      continue;
    }
    int last_violated = -1;
    for (size_t j = 0; j < m; j++)
      for (const auto& f : br.ranks[j])
        if (!eval(u, f)) { last_violated = static_cast<int>(j); break; }
    buckets[last_violated + 1].push_back(u);
  }
  for (auto& b : buckets) {
    if (b.empty()) continue;  // compaction: empty levels vanish, order kept
    sort_display(b, n);
    out.levels.push_back(std::move(b));
  }
  sort_display(out.infinite, n);
  return out;
}

}  // namespace drsl
