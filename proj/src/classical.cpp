#include "drsl/classical.hpp"

#include <algorithm>
#include <optional>

namespace drsl {

bool eval(Valuation u, const BoolPtr& f) {
  switch (f->kind) {
    case BoolKind::Atom: return (u >> f->atom) & 1u;
    case BoolKind::Top: return true;
    case BoolKind::Bottom: return false;
    case BoolKind::Not: return !eval(u, f->lhs);
    case BoolKind::And: return eval(u, f->lhs) && eval(u, f->rhs);
    case BoolKind::Or: return eval(u, f->lhs) || eval(u, f->rhs);
    case BoolKind::Implies: return !eval(u, f->lhs) || eval(u, f->rhs);
    case BoolKind::Iff: return eval(u, f->lhs) == eval(u, f->rhs);
  }
  return false;
}

std::vector<Valuation> models_of(const BoolPtr& f, const Vocabulary& vocab, int max_atoms) {
  int n = vocab.n_atoms();
  if (n > max_atoms)
    throw EnumerationError("models_of: " + std::to_string(n) + " atoms exceeds cap " +
                           std::to_string(max_atoms));
  std::vector<Valuation> out;
  for (Valuation u = 0; u < (Valuation{1} << n); u++)
    if (eval(u, f)) out.push_back(u);
  return out;
}

namespace {

int max_atom_index(const BoolPtr& f) {
  switch (f->kind) {
    case BoolKind::Atom: return f->atom;
    case BoolKind::Top:
    case BoolKind::Bottom: return -1;
    case BoolKind::Not: return max_atom_index(f->lhs);
    default: return std::max(max_atom_index(f->lhs), max_atom_index(f->rhs));
  }
}

// Constant folding so the CNF converters never see true/false inside.
BoolPtr simplify(const BoolPtr& f) {
  switch (f->kind) {
    case BoolKind::Atom:
    case BoolKind::Top:
    case BoolKind::Bottom: return f;
    case BoolKind::Not: {
      BoolPtr a = simplify(f->lhs);
      if (a->kind == BoolKind::Top) return mk_bottom();
      if (a->kind == BoolKind::Bottom) return mk_top();
      return mk_not(a);
    }
    case BoolKind::And: {
      BoolPtr a = simplify(f->lhs), b = simplify(f->rhs);
      if (a->kind == BoolKind::Bottom || b->kind == BoolKind::Bottom) return mk_bottom();
      if (a->kind == BoolKind::Top) return b;
      if (b->kind == BoolKind::Top) return a;
      return mk_and(a, b);
    }
    case BoolKind::Or: {
      BoolPtr a = simplify(f->lhs), b = simplify(f->rhs);
      if (a->kind == BoolKind::Top || b->kind == BoolKind::Top) return mk_top();
      if (a->kind == BoolKind::Bottom) return b;
      if (b->kind == BoolKind::Bottom) return a;
      return mk_or(a, b);
    }
    case BoolKind::Implies: {
      BoolPtr a = simplify(f->lhs), b = simplify(f->rhs);
      if (a->kind == BoolKind::Bottom || b->kind == BoolKind::Top) return mk_top();
      if (a->kind == BoolKind::Top) return b;
      if (b->kind == BoolKind::Bottom) return mk_not(a);
      return mk_implies(a, b);
    }
    case BoolKind::Iff: {
      BoolPtr a = simplify(f->lhs), b = simplify(f->rhs);
      if (a->kind == BoolKind::Top) return b;
      if (b->kind == BoolKind::Top) return a;
      if (a->kind == BoolKind::Bottom) return simplify(mk_not(b));
      if (b->kind == BoolKind::Bottom) return simplify(mk_not(a));
      return mk_iff(a, b);
    }
  }
  return f;
}

using Clause = std::vector<int>;

// Sorted, deduplicated; empty optional = tautology.
std::optional<Clause> tidy(Clause c) {
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  for (size_t i = 0; i + 1 < c.size(); i++)
    if ((c[i] ^ c[i + 1]) == 1 && (c[i] >> 1) == (c[i + 1] >> 1)) return std::nullopt;
  return c;
}

constexpr size_t kDirectCap = 256;

// Distribution-based CNF of f (negated if neg); nullopt when the clause count
// would exceed the cap.
std::optional<std::vector<Clause>> direct_cnf(const BoolPtr& f, bool neg) {
  switch (f->kind) {
    case BoolKind::Atom:
      return std::vector<Clause>{{2 * f->atom + (neg ? 1 : 0)}};
    case BoolKind::Top:
      if (neg) return std::vector<Clause>{{}};
      return std::vector<Clause>{};
    case BoolKind::Bottom:
      if (neg) return std::vector<Clause>{};
      return std::vector<Clause>{{}};
    case BoolKind::Not:
      return direct_cnf(f->lhs, !neg);
    default: break;
  }

  auto conj = [](const BoolPtr& x, bool nx, const BoolPtr& y, bool ny)
      -> std::optional<std::vector<Clause>> {
    auto a = direct_cnf(x, nx);
    if (!a) return std::nullopt;
    auto b = direct_cnf(y, ny);
    if (!b) return std::nullopt;
    if (a->size() + b->size() > kDirectCap) return std::nullopt;
    a->insert(a->end(), b->begin(), b->end());
    return a;
  };
  auto disj = [](const BoolPtr& x, bool nx, const BoolPtr& y, bool ny)
      -> std::optional<std::vector<Clause>> {
    auto a = direct_cnf(x, nx);
    if (!a) return std::nullopt;
    auto b = direct_cnf(y, ny);
    if (!b) return std::nullopt;
    if (a->size() * b->size() > kDirectCap) return std::nullopt;
    std::vector<Clause> out;
    for (const auto& ca : *a)
      for (const auto& cb : *b) {
        Clause c = ca;
        c.insert(c.end(), cb.begin(), cb.end());
        if (auto t = tidy(std::move(c))) out.push_back(std::move(*t));
      }
    return out;
  };

  switch (f->kind) {
    case BoolKind::And:
      return neg ? disj(f->lhs, true, f->rhs, true) : conj(f->lhs, false, f->rhs, false);
    case BoolKind::Or:
      return neg ? conj(f->lhs, true, f->rhs, true) : disj(f->lhs, false, f->rhs, false);
    case BoolKind::Implies:
      return neg ? conj(f->lhs, false, f->rhs, true) : disj(f->lhs, true, f->rhs, false);
    case BoolKind::Iff: {
      // a<->b = (!a|b)&(!b|a); negated: (a|b)&(!a|!b)
      auto l = neg ? disj(f->lhs, false, f->rhs, false) : disj(f->lhs, true, f->rhs, false);
      if (!l) return std::nullopt;
      auto r = neg ? disj(f->lhs, true, f->rhs, true) : disj(f->lhs, false, f->rhs, true);
      if (!r) return std::nullopt;
      if (l->size() + r->size() > kDirectCap) return std::nullopt;
      l->insert(l->end(), r->begin(), r->end());
      return l;
    }
    default: return std::nullopt;
  }
}

// Plaisted-Greenbaum encoding; pol: +1, -1, or 0 (both).
class Tseitin {
 public:
  Tseitin(std::vector<Clause>& out, int next_var) : out_(out), next_var_(next_var) {}

  int encode_assert(const BoolPtr& f) {
    int lit = encode(f, +1);
    out_.push_back({lit});
    return next_var_;
  }

 private:
  int fresh() { return next_var_++; }

  int encode(const BoolPtr& f, int pol) {
    switch (f->kind) {
      case BoolKind::Atom: return 2 * f->atom;
      case BoolKind::Not: return encode(f->lhs, -pol) ^ 1;
      case BoolKind::And: return gate(f, pol, /*is_and=*/true);
      case BoolKind::Or: return gate(f, pol, /*is_and=*/false);
      case BoolKind::Implies: {
        int a = encode(f->lhs, -pol);
        int b = encode(f->rhs, pol);
        return or_gate(a ^ 1, b, pol);
      }
      case BoolKind::Iff: {
        int a = encode(f->lhs, 0);
        int b = encode(f->rhs, 0);
        int v = fresh();
        int pv = 2 * v;
        if (pol >= 0) {
          out_.push_back({pv ^ 1, a ^ 1, b});
          out_.push_back({pv ^ 1, a, b ^ 1});
        }
        if (pol <= 0) {
          out_.push_back({pv, a, b});
          out_.push_back({pv, a ^ 1, b ^ 1});
        }
        return pv;
      }
      default:
        // simplify() removed the constants
        throw std::logic_error("tseitin: unexpected constant");
    }
  }

  int gate(const BoolPtr& f, int pol, bool is_and) {
    int a = encode(f->lhs, pol);
    int b = encode(f->rhs, pol);
    return is_and ? and_gate(a, b, pol) : or_gate(a, b, pol);
  }

  int and_gate(int a, int b, int pol) {
    int pv = 2 * fresh();
    if (pol >= 0) {
      out_.push_back({pv ^ 1, a});
      out_.push_back({pv ^ 1, b});
    }
    if (pol <= 0) out_.push_back({pv, a ^ 1, b ^ 1});
    return pv;
  }

  int or_gate(int a, int b, int pol) {
    int pv = 2 * fresh();
    if (pol >= 0) out_.push_back({pv ^ 1, a, b});
    if (pol <= 0) {
      out_.push_back({pv, a ^ 1});
      out_.push_back({pv, b ^ 1});
    }
    return pv;
  }

  std::vector<Clause>& out_;
  int next_var_;
};

}  // namespace

ClauseSet to_cnf(const std::vector<BoolPtr>& formulas, int n_atoms) {
  ClauseSet cs;
  int next_var = n_atoms;
  for (const auto& raw : formulas) {
    BoolPtr f = simplify(raw);
    if (f->kind == BoolKind::Top) continue;
    if (f->kind == BoolKind::Bottom) {
      cs.clauses.push_back({});
      continue;
    }
    if (auto direct = direct_cnf(f, false)) {
      for (auto& c : *direct)
        if (auto t = tidy(std::move(c))) cs.clauses.push_back(std::move(*t));
      continue;
    }
    Tseitin ts(cs.clauses, next_var);
    next_var = ts.encode_assert(f);
  }
  cs.n_vars = next_var;
  for (const auto& c : cs.clauses) {
    int pos = 0;
    for (int lit : c)
      if (!(lit & 1)) pos++;
    if (pos > 1) {
      cs.horn = false;
      break;
    }
  }
  return cs;
}

namespace {

// Counter-based unit propagation; decisions snapshot state for backtracking,
// so Horn-shaped inputs (which never branch) run in one linear pass.
class Dpll {
 public:
  Dpll(const ClauseSet& cs, SolveStats* stats) : cs_(cs), stats_(stats) {
    occ_pos_.resize(cs.n_vars);
    occ_neg_.resize(cs.n_vars);
    for (size_t ci = 0; ci < cs.clauses.size(); ci++) {
      for (int lit : cs.clauses[ci])
        (lit & 1 ? occ_neg_ : occ_pos_)[lit >> 1].push_back(static_cast<int>(ci));
    }
    assign_.assign(cs.n_vars, -1);
    unassigned_.resize(cs.clauses.size());
    sat_count_.assign(cs.clauses.size(), 0);
    for (size_t ci = 0; ci < cs.clauses.size(); ci++)
      unassigned_[ci] = static_cast<int>(cs.clauses[ci].size());
  }

  bool solve() {
    for (size_t ci = 0; ci < cs_.clauses.size(); ci++) {
      if (cs_.clauses[ci].empty()) return false;
      if (cs_.clauses[ci].size() == 1) queue_.push_back(cs_.clauses[ci][0]);
    }
    if (!propagate()) return false;
    return search();
  }

 private:
  bool propagate() {
    while (!queue_.empty()) {
      int lit = queue_.back();
      queue_.pop_back();
      int var = lit >> 1;
      int want = (lit & 1) ? 0 : 1;
      if (assign_[var] != -1) {
        if (assign_[var] != want) return false;
        continue;
      }
      assign_[var] = want;
      if (stats_) stats_->propagations++;
      const auto& sat_occ = want ? occ_pos_[var] : occ_neg_[var];
      const auto& unsat_occ = want ? occ_neg_[var] : occ_pos_[var];
      for (int ci : sat_occ) sat_count_[ci]++;
      for (int ci : unsat_occ) {
        if (--unassigned_[ci] == 0 && sat_count_[ci] == 0) return false;
        if (unassigned_[ci] == 1 && sat_count_[ci] == 0) {
          for (int l : cs_.clauses[ci])
            if (assign_[l >> 1] == -1) {
              queue_.push_back(l);
              break;
            }
        }
      }
    }
    return true;
  }

  bool search() {
    int var = -1;
    for (int v = 0; v < cs_.n_vars; v++)
      if (assign_[v] == -1) { var = v; break; }
    if (var == -1) return true;
    // At unit-propagation fixpoint every unsatisfied clause has >= 2 free
    // literals; for Horn clauses one of them is negative, so all-false
    // extends to a model without branching.
    if (cs_.horn) return true;

    auto saved_assign = assign_;
    auto saved_unassigned = unassigned_;
    auto saved_sat = sat_count_;
    for (int phase = 0; phase < 2; phase++) {
      if (stats_) stats_->decisions++;
      queue_.clear();
      queue_.push_back(2 * var + phase);
      if (propagate() && search()) return true;
      assign_ = saved_assign;
      unassigned_ = saved_unassigned;
      sat_count_ = saved_sat;
    }
    queue_.clear();
    return false;
  }

  const ClauseSet& cs_;
  SolveStats* stats_;
  std::vector<std::vector<int>> occ_pos_, occ_neg_;
  std::vector<signed char> assign_;
  std::vector<int> unassigned_;
  std::vector<int> sat_count_;
  std::vector<int> queue_;
};

}  // namespace

bool sat(const ClauseSet& cs, SolveStats* stats) {
  Dpll solver(cs, stats);
  return solver.solve();
}

bool entails(const std::vector<BoolPtr>& premises, const BoolPtr& alpha, SolveStats* stats) {
  std::vector<BoolPtr> all = premises;
  all.push_back(mk_not(alpha));
  int n_atoms = 0;
  for (const auto& f : all) n_atoms = std::max(n_atoms, max_atom_index(f) + 1);
  return !sat(to_cnf(all, n_atoms), stats);
}

bool entails_enum(const std::vector<BoolPtr>& premises, const BoolPtr& alpha) {
  int n_atoms = max_atom_index(alpha) + 1;
  for (const auto& f : premises) n_atoms = std::max(n_atoms, max_atom_index(f) + 1);
  for (Valuation u = 0; u < (Valuation{1} << n_atoms); u++) {
    bool all = true;
    for (const auto& f : premises)
      if (!eval(u, f)) { all = false; break; }
    if (all && !eval(u, alpha)) return false;
  }
  return true;
}

static void materialize_into(const KlmPtr& stmt, std::vector<BoolPtr>& out) {
  switch (stmt->kind) {
    case KlmKind::Bool:
      out.push_back(mk_implies(mk_not(stmt->lhs), mk_bottom()));
      break;
    case KlmKind::DI:
      out.push_back(mk_implies(stmt->lhs, stmt->rhs));
      break;
    case KlmKind::Conj:
      materialize_into(stmt->a, out);
      materialize_into(stmt->b, out);
      break;
  }
}

std::vector<BoolPtr> materialize(const KlmPtr& stmt) {
  std::vector<BoolPtr> out;
  materialize_into(stmt, out);
  return out;
}

bool is_horn(const std::vector<BoolPtr>& formulas) {
  int n_atoms = 0;
  for (const auto& f : formulas) n_atoms = std::max(n_atoms, max_atom_index(f) + 1);
  return to_cnf(formulas, n_atoms).horn;
}

}  // namespace drsl
