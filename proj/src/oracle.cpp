#include "drsl/oracle.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <map>
#include <set>
#include <string>

#include "drsl/classical.hpp"
#include "drsl/normalize.hpp"
#include "drsl/standpoint.hpp"

namespace drsl {

namespace {

using Mask = std::uint32_t;  // bit v = valuation v; at most 16 valuations

void check_enum_atoms(int n_atoms) {
  if (n_atoms < 0 || n_atoms > 4)
    throw BudgetError("ranked interpretation enumeration is limited to 4 atoms");
}

// Every ordered partition of `rest` into nonempty blocks, appended after the
// current content of `levels`: the next element joins an existing block or
// opens a new one in any gap, so each partition is produced exactly once.
template <typename Leaf>
void ordered_partitions(Mask rest, std::vector<Mask>& levels, const Leaf& leaf) {
  if (!rest) {
    leaf(levels);
    return;
  }
  Mask bit = rest & (~rest + 1);
  Mask rem = rest & ~bit;
  for (size_t i = 0; i < levels.size(); i++) {
    levels[i] |= bit;
    ordered_partitions(rem, levels, leaf);
    levels[i] &= ~bit;
  }
  for (size_t pos = 0; pos <= levels.size(); pos++) {
    levels.insert(levels.begin() + pos, bit);
    ordered_partitions(rem, levels, leaf);
    levels.erase(levels.begin() + pos);
  }
}

RankedInterpretation masks_to_ri(int n_atoms, const std::vector<Mask>& levels, Mask inf) {
  RankedInterpretation r;
  r.n_atoms = n_atoms;
  for (Mask m : levels) {
    std::vector<Valuation> row;
    for (int v = 0; v < 1 << n_atoms; v++)
      if (m & (Mask{1} << v)) row.push_back(static_cast<Valuation>(v));
    sort_display(row, n_atoms);
    r.levels.push_back(std::move(row));
  }
  for (int v = 0; v < 1 << n_atoms; v++)
    if (inf & (Mask{1} << v)) r.infinite.push_back(static_cast<Valuation>(v));
  sort_display(r.infinite, n_atoms);
  return r;
}

// One KLM knowledge base as valuation masks, for fast model checks during
// enumeration.
struct FlatKlm {
  bool is_di = false;
  Mask ante = 0;  // DI only
  Mask cons = 0;  // DI consequent, or the Boolean formula itself
};

Mask formula_mask(const BoolPtr& f, int world) {
  Mask m = 0;
  for (int v = 0; v < world; v++)
    if (eval(static_cast<Valuation>(v), f)) m |= Mask{1} << v;
  return m;
}

void flatten_klm_masks(const KlmPtr& s, int world, std::vector<FlatKlm>& out) {
  switch (s->kind) {
    case KlmKind::Conj:
      flatten_klm_masks(s->a, world, out);
      flatten_klm_masks(s->b, world, out);
      return;
    case KlmKind::DI:
      out.push_back({true, formula_mask(s->lhs, world), formula_mask(s->rhs, world)});
      return;
    case KlmKind::Bool:
      out.push_back({false, 0, formula_mask(s->lhs, world)});
      return;
  }
}

bool masks_model(const std::vector<FlatKlm>& stmts, const std::vector<Mask>& levels) {
  Mask finite = 0;
  for (Mask m : levels) finite |= m;
  for (const auto& st : stmts) {
    if (!st.is_di) {
      if (finite & ~st.cons) return false;
      continue;
    }
    for (Mask m : levels) {
      Mask hit = m & st.ante;
      if (hit) {
        if (hit & ~st.cons) return false;
        break;
      }
    }
  }
  return true;
}

// A partially built partition: the first few elements are already placed, the
// rest is left for a worker. Splitting a fixed prefix depth balances the work,
// which is otherwise dominated by the single all-finite case.
struct PartitionJob {
  std::vector<Mask> levels;
  Mask rem = 0;
};

template <typename Complete>
std::vector<PartitionJob> partition_jobs(int world, int depth, const Complete& complete) {
  std::vector<PartitionJob> jobs;
  long long n_masks = 1LL << world;
  std::vector<Mask> levels;
  auto rec = [&](auto&& self, Mask rem, int d) -> void {
    if (!rem) {
      complete(levels);
      return;
    }
    if (d == 0) {
      jobs.push_back({levels, rem});
      return;
    }
    Mask bit = rem & (~rem + 1);
    Mask r2 = rem & ~bit;
    for (size_t i = 0; i < levels.size(); i++) {
      levels[i] |= bit;
      self(self, r2, d - 1);
      levels[i] &= ~bit;
    }
    for (size_t pos = 0; pos <= levels.size(); pos++) {
      levels.insert(levels.begin() + pos, bit);
      self(self, r2, d - 1);
      levels.erase(levels.begin() + pos);
    }
  };
  for (long long inf = 0; inf < n_masks; inf++) {
    levels.clear();
    rec(rec, static_cast<Mask>(n_masks - 1) & ~static_cast<Mask>(inf), depth);
  }
  return jobs;
}

RankedInterpretation minimal_model_impl(const std::vector<KlmPtr>& kb,
                                        const Vocabulary& vocab, int max_atoms,
                                        bool parallel) {
  int n = vocab.n_atoms();
  if (n > max_atoms) throw BudgetError("knowledge base exceeds the atom budget");
  check_enum_atoms(n);
  int world = 1 << n;
  std::vector<FlatKlm> flat;
  for (const auto& s : kb) flatten_klm_masks(s, world, flat);

  std::vector<int> best(world, INT_MAX);
  auto update = [&](std::vector<int>& tgt, const std::vector<Mask>& ls) {
    if (!masks_model(flat, ls)) return;
    for (size_t i = 0; i < ls.size(); i++)
      for (int v = 0; v < world; v++)
        if (ls[i] & (Mask{1} << v)) tgt[v] = std::min(tgt[v], static_cast<int>(i));
  };

  if (!parallel) {
    long long n_masks = 1LL << world;
    std::vector<Mask> levels;
    for (long long inf = 0; inf < n_masks; inf++) {
      Mask rest = static_cast<Mask>(n_masks - 1) & ~static_cast<Mask>(inf);
      ordered_partitions(rest, levels,
                         [&](const std::vector<Mask>& ls) { update(best, ls); });
    }
  } else {
    std::vector<PartitionJob> jobs = partition_jobs(
        world, 3, [&](const std::vector<Mask>& ls) { update(best, ls); });
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
      std::vector<int> local(world, INT_MAX);
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 16)
#endif
      for (long long i = 0; i < static_cast<long long>(jobs.size()); i++) {
        std::vector<Mask> levels = jobs[i].levels;
        ordered_partitions(jobs[i].rem, levels,
                           [&](const std::vector<Mask>& ls) { update(local, ls); });
      }
#ifdef _OPENMP
#pragma omp critical
#endif
      for (int v = 0; v < world; v++) best[v] = std::min(best[v], local[v]);
    }
  }

  int max_rank = -1;
  for (int v = 0; v < world; v++)
    if (best[v] != INT_MAX) max_rank = std::max(max_rank, best[v]);
  RankedInterpretation out;
  out.n_atoms = n;
  out.levels.assign(max_rank + 1, {});
  for (int v = 0; v < world; v++) {
    if (best[v] == INT_MAX)
      out.infinite.push_back(static_cast<Valuation>(v));
    else
      out.levels[best[v]].push_back(static_cast<Valuation>(v));
  }
  for (auto& row : out.levels) {
    if (row.empty()) throw std::logic_error("pointwise minimum is not convex");
    sort_display(row, n);
  }
  sort_display(out.infinite, n);
  for (const auto& s : kb)
    if (!ri_satisfies(out, s)) throw std::logic_error("pointwise minimum is not a model");
  return out;
}

void collect_standpoints(const DrslPtr& s, std::set<int>& out) {
  switch (s->kind) {
    case DrslKind::Klm:
      return;
    case DrslKind::Box:
    case DrslKind::Diamond:
      out.insert(s->standpoint);
      collect_standpoints(s->a, out);
      return;
    case DrslKind::Conj:
      collect_standpoints(s->a, out);
      collect_standpoints(s->b, out);
      return;
    case DrslKind::Sharpening:
      out.insert(s->standpoint);
      out.insert(s->standpoint2);
      return;
  }
}

// Evaluator over the quotient representation: gamma is a vector of pool
// indices, sigma maps standpoint id to a bitmask over positions.
struct QuotientEval {
  const std::vector<RankedInterpretation>* pool;
  const std::vector<int>* gidx;
  const std::map<int, Mask>* sigma;  // named standpoints only
  Mask full = 0;
  mutable std::map<const KlmStatement*, std::vector<signed char>> klm_cache;

  bool klm_at(const KlmPtr& s, int pos) const {
    int pi = (*gidx)[pos];
    auto& row = klm_cache[s.get()];
    if (row.empty()) row.assign(pool->size(), -1);
    if (row[pi] < 0) row[pi] = ri_satisfies((*pool)[pi], s) ? 1 : 0;
    return row[pi] == 1;
  }

  Mask sigma_of(int sp) const {
    if (sp == Vocabulary::kUniversal) return full;
    auto it = sigma->find(sp);
    return it == sigma->end() ? full : it->second;
  }

  bool at(const DrslPtr& s, int pos) const {
    switch (s->kind) {
      case DrslKind::Klm:
        return klm_at(s->klm, pos);
      case DrslKind::Box: {
        Mask m = sigma_of(s->standpoint);
        for (int j = 0; m >> j; j++)
          if ((m >> j) & 1 && !at(s->a, j)) return false;
        return true;
      }
      case DrslKind::Diamond: {
        Mask m = sigma_of(s->standpoint);
        for (int j = 0; m >> j; j++)
          if ((m >> j) & 1 && at(s->a, j)) return true;
        return false;
      }
      case DrslKind::Conj:
        return at(s->a, pos) && at(s->b, pos);
      case DrslKind::Sharpening:
        return (sigma_of(s->standpoint) & ~sigma_of(s->standpoint2)) == 0;
    }
    return false;
  }

  bool global(const DrslPtr& s, int m_size) const {
    for (int p = 0; p < m_size; p++)
      if (!at(s, p)) return false;
    return true;
  }
};

}  // namespace

void for_each_ranked_interpretation(
    int n_atoms, const std::function<void(const RankedInterpretation&)>& fn) {
  check_enum_atoms(n_atoms);
  int world = 1 << n_atoms;
  Mask all = static_cast<Mask>((1LL << world) - 1);
  std::vector<Mask> levels;
  for (long long inf = 0; inf < (1LL << world); inf++) {
    Mask rest = all & ~static_cast<Mask>(inf);
    ordered_partitions(rest, levels, [&](const std::vector<Mask>& ls) {
      fn(masks_to_ri(n_atoms, ls, static_cast<Mask>(inf)));
    });
  }
}

std::vector<RankedInterpretation> all_ranked_interpretations(int n_atoms) {
  std::vector<RankedInterpretation> out;
  for_each_ranked_interpretation(n_atoms,
                                 [&](const RankedInterpretation& r) { out.push_back(r); });
  return out;
}

std::uint64_t count_ranked_interpretations(int n_atoms) {
  check_enum_atoms(n_atoms);
  int world = 1 << n_atoms;
  std::uint64_t total = 0;
  std::vector<PartitionJob> jobs =
      partition_jobs(world, 3, [&](const std::vector<Mask>&) { total++; });
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : total)
#endif
  for (long long i = 0; i < static_cast<long long>(jobs.size()); i++) {
    std::vector<Mask> levels = jobs[i].levels;
    std::uint64_t local = 0;
    ordered_partitions(jobs[i].rem, levels, [&](const std::vector<Mask>&) { local++; });
    total += local;
  }
  return total;
}

std::uint64_t count_ranked_interpretations_serial(int n_atoms) {
  check_enum_atoms(n_atoms);
  int world = 1 << n_atoms;
  long long n_masks = 1LL << world;
  std::uint64_t total = 0;
  std::vector<Mask> levels;
  for (long long inf = 0; inf < n_masks; inf++) {
    Mask rest = static_cast<Mask>(n_masks - 1) & ~static_cast<Mask>(inf);
    ordered_partitions(rest, levels, [&](const std::vector<Mask>&) { total++; });
  }
  return total;
}

RankedInterpretation minimal_model_oracle(const std::vector<KlmPtr>& kb,
                                          const Vocabulary& vocab, int max_atoms) {
  return minimal_model_impl(kb, vocab, max_atoms, true);
}

RankedInterpretation minimal_model_oracle_serial(const std::vector<KlmPtr>& kb,
                                                 const Vocabulary& vocab, int max_atoms) {
  return minimal_model_impl(kb, vocab, max_atoms, false);
}

BoundedEntailResult bounded_ranked_entailment(const KnowledgeBase& kb,
                                              const DrslPtr& query,
                                              const EnumerationBudget& budget) {
  const Vocabulary& vocab = kb.vocabulary;
  if (vocab.n_atoms() > budget.max_atoms)
    throw BudgetError("knowledge base exceeds the atom budget");
  check_enum_atoms(vocab.n_atoms());
  std::vector<RankedInterpretation> pool = all_ranked_interpretations(vocab.n_atoms());
  int p = static_cast<int>(pool.size());

  std::set<int> occ;
  for (const auto& s : kb.statements) collect_standpoints(s, occ);
  collect_standpoints(query, occ);
  occ.erase(Vocabulary::kUniversal);
  std::vector<int> named(occ.begin(), occ.end());

  BoundedEntailResult res;
  for (int m = 1; m <= budget.max_precisifications; m++) {
    std::vector<int> gidx(m, 0);  // non-decreasing: gamma up to relabeling
    std::map<int, Mask> sigma;
    QuotientEval ev{&pool, &gidx, &sigma, static_cast<Mask>((1 << m) - 1), {}};
    while (true) {
      std::vector<Mask> digits(named.size(), 1);
      while (true) {
        sigma.clear();
        for (size_t i = 0; i < named.size(); i++) sigma[named[i]] = digits[i];
        res.structures_checked++;
        if (res.structures_checked > budget.max_structures) {
          res.budget_exhausted = true;
          return res;
        }
        bool is_model = true;
        for (const auto& s : kb.statements)
          if (!ev.global(s, m)) {
            is_model = false;
            break;
          }
        if (is_model && !ev.global(query, m)) {
          res.entailed = false;
          RankedStandpointStructure cex;
          cex.vocabulary = vocab;
          for (int j = 0; j < m; j++) {
            cex.pi.push_back("pi_" + std::to_string(j));
            cex.gamma.push_back(pool[gidx[j]]);
          }
          std::vector<int> full;
          for (int j = 0; j < m; j++) full.push_back(j);
          for (int sp = 0; sp < vocab.n_standpoints(); sp++) {
            auto it = sigma.find(sp);
            if (it == sigma.end()) {
              cex.sigma[vocab.standpoint(sp).name] = full;
            } else {
              std::vector<int> idx;
              for (int j = 0; j < m; j++)
                if (it->second & (Mask{1} << j)) idx.push_back(j);
              cex.sigma[vocab.standpoint(sp).name] = std::move(idx);
            }
          }
          res.counterexample = std::move(cex);
          return res;
        }
        // next sigma assignment
        size_t d = 0;
        while (d < digits.size()) {
          if (++digits[d] < (Mask{1} << m)) break;
          digits[d] = 1;
          d++;
        }
        if (d == digits.size()) break;
      }
      // next non-decreasing gamma index vector
      int i = m - 1;
      while (i >= 0 && gidx[i] == p - 1) i--;
      if (i < 0) break;
      int v = gidx[i] + 1;
      for (int j = i; j < m; j++) gidx[j] = v;
    }
  }
  return res;
}

BoolPtr random_bool(std::mt19937_64& rng, const Vocabulary& vocab, int depth) {
  auto pick = [&](int n) { return static_cast<int>(rng() % n); };
  if (depth <= 0 || pick(100) < 40) {
    int roll = pick(100);
    if (roll < 4 || vocab.n_atoms() == 0) return roll < 2 ? mk_top() : mk_bottom();
    return mk_atom(pick(vocab.n_atoms()));
  }
  switch (pick(5)) {
    case 0:
      return mk_not(random_bool(rng, vocab, depth - 1));
    case 1:
      return mk_and(random_bool(rng, vocab, depth - 1), random_bool(rng, vocab, depth - 1));
    case 2:
      return mk_or(random_bool(rng, vocab, depth - 1), random_bool(rng, vocab, depth - 1));
    case 3:
      return mk_implies(random_bool(rng, vocab, depth - 1),
                        random_bool(rng, vocab, depth - 1));
    default:
      return mk_iff(random_bool(rng, vocab, depth - 1), random_bool(rng, vocab, depth - 1));
  }
}

KlmPtr random_di(std::mt19937_64& rng, const Vocabulary& vocab) {
  return mk_klm_di(random_bool(rng, vocab, 2), random_bool(rng, vocab, 2));
}

namespace {

KlmPtr random_klm_statement(std::mt19937_64& rng, const Vocabulary& vocab) {
  int roll = static_cast<int>(rng() % 100);
  if (roll < 65) return random_di(rng, vocab);
  if (roll < 85) return mk_klm_bool(random_bool(rng, vocab, 2));
  return mk_klm_conj(random_di(rng, vocab), random_di(rng, vocab));
}

DrslPtr random_modal(std::mt19937_64& rng, const Vocabulary& vocab, int n_named,
                     int depth) {
  auto pick = [&](int n) { return static_cast<int>(rng() % n); };
  int sp = pick(n_named + 1);  // 0 = universal
  DrslPtr body;
  int roll = pick(100);
  if (depth > 0 && roll < 20) {
    body = random_modal(rng, vocab, n_named, depth - 1);
  } else if (depth > 0 && roll < 35) {
    DrslPtr u1 = random_modal(rng, vocab, n_named, depth - 1);
    // Boolean units inside a conjunction would reassociate on reparse, so the
    // non-modal unit is always a defeasible implication.
    DrslPtr u2 = pick(2) ? mk_drsl_klm(random_di(rng, vocab))
                         : random_modal(rng, vocab, n_named, depth - 1);
    body = mk_drsl_conj(u1, u2);
  } else {
    body = mk_drsl_klm(random_klm_statement(rng, vocab));
  }
  return pick(2) ? mk_box(sp, body) : mk_diamond(sp, body);
}

}  // namespace

std::vector<KlmPtr> random_klm_kb(std::mt19937_64& rng, const Vocabulary& vocab,
                                  int n_statements) {
  std::vector<KlmPtr> out;
  for (int i = 0; i < n_statements; i++) out.push_back(random_klm_statement(rng, vocab));
  return out;
}

DrslPtr random_statement(std::mt19937_64& rng, const Vocabulary& vocab) {
  int n_named = vocab.n_standpoints() - 1;
  int roll = static_cast<int>(rng() % 100);
  if (roll < 15) return mk_drsl_klm(random_klm_statement(rng, vocab));
  if (roll < 30)
    return mk_drsl_conj(random_modal(rng, vocab, n_named, 1),
                        random_modal(rng, vocab, n_named, 1));
  return random_modal(rng, vocab, n_named, 2);
}

namespace {

bool consistent_cores(const KnowledgeBase& kb) {
  NormalKB nk = normalize_kb(kb);
  PreparedSplit ps = prepare_split(nk);
  for (const auto& br : ps.base_ranks) {
    if (br.infinite_rank.empty()) continue;
    if (entails(br.infinite_rank, mk_bottom())) return false;
  }
  return true;
}

}  // namespace

KnowledgeBase generate_random_kb(std::uint64_t seed, const EnumerationBudget& budget) {
  std::mt19937_64 rng(seed);
  static const char* kAtoms[] = {"a", "b", "c", "d"};
  static const char* kStandpoints[] = {"s", "t", "u"};
  int na = std::min(budget.max_atoms, 4);
  int ns = std::min(budget.n_standpoints, 3);
  auto pick = [&](int n) { return static_cast<int>(rng() % n); };

  for (int attempt = 0; attempt < 500; attempt++) {
    KnowledgeBase kb;
    for (int i = 0; i < na; i++) kb.vocabulary.add_atom(kAtoms[i]);
    for (int i = 0; i < ns; i++) kb.vocabulary.add_standpoint(kStandpoints[i]);
    for (int i = 0; i < budget.n_statements; i++) {
      int roll = pick(100);
      if (ns > 0 && roll < 15) {
        int sub = 1 + pick(ns);
        int sup = pick(ns + 1);  // 0 = universal
        if (sup == sub) sup = Vocabulary::kUniversal;
        kb.statements.push_back(mk_sharpening(sub, sup));
      } else if (roll < 35) {
        kb.statements.push_back(mk_drsl_klm(random_klm_statement(rng, kb.vocabulary)));
      } else {
        kb.statements.push_back(random_statement(rng, kb.vocabulary));
      }
    }
    if (budget.allow_inconsistent || consistent_cores(kb)) return kb;
  }
  throw std::runtime_error("random generator kept producing unsatisfiable cores");
}

}  // namespace drsl
