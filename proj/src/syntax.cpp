#include "drsl/syntax.hpp"

#include <stdexcept>

namespace drsl {

Vocabulary::Vocabulary() {
  standpoints_.push_back({"*", true});
  sp_ids_["*"] = 0;
}

int Vocabulary::add_atom(const std::string& name) {
  auto it = atom_ids_.find(name);
  if (it != atom_ids_.end()) return it->second;
  int id = static_cast<int>(atoms_.size());
  atoms_.push_back({name, id});
  atom_ids_[name] = id;
  return id;
}

int Vocabulary::add_standpoint(const std::string& name) {
  auto it = sp_ids_.find(name);
  if (it != sp_ids_.end()) return it->second;
  int id = static_cast<int>(standpoints_.size());
  standpoints_.push_back({name, false});
  sp_ids_[name] = id;
  return id;
}

int Vocabulary::atom_id(const std::string& name) const {
  auto it = atom_ids_.find(name);
  return it == atom_ids_.end() ? -1 : it->second;
}

int Vocabulary::standpoint_id(const std::string& name) const {
  auto it = sp_ids_.find(name);
  return it == sp_ids_.end() ? -1 : it->second;
}

BoolPtr mk_atom(int atom) {
  auto n = std::make_shared<BoolFormula>();
  n->kind = BoolKind::Atom;
  n->atom = atom;
  return n;
}

static BoolPtr mk_bool0(BoolKind k) {
  auto n = std::make_shared<BoolFormula>();
  n->kind = k;
  return n;
}

BoolPtr mk_top() { return mk_bool0(BoolKind::Top); }
BoolPtr mk_bottom() { return mk_bool0(BoolKind::Bottom); }

static BoolPtr mk_bool2(BoolKind k, BoolPtr a, BoolPtr b) {
  auto n = std::make_shared<BoolFormula>();
  n->kind = k;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

BoolPtr mk_not(BoolPtr a) { return mk_bool2(BoolKind::Not, std::move(a), nullptr); }
BoolPtr mk_and(BoolPtr a, BoolPtr b) { return mk_bool2(BoolKind::And, std::move(a), std::move(b)); }
BoolPtr mk_or(BoolPtr a, BoolPtr b) { return mk_bool2(BoolKind::Or, std::move(a), std::move(b)); }
BoolPtr mk_implies(BoolPtr a, BoolPtr b) { return mk_bool2(BoolKind::Implies, std::move(a), std::move(b)); }
BoolPtr mk_iff(BoolPtr a, BoolPtr b) { return mk_bool2(BoolKind::Iff, std::move(a), std::move(b)); }

KlmPtr mk_klm_bool(BoolPtr f) {
  auto n = std::make_shared<KlmStatement>();
  n->kind = KlmKind::Bool;
  n->lhs = std::move(f);
  return n;
}

KlmPtr mk_klm_di(BoolPtr ante, BoolPtr cons) {
  auto n = std::make_shared<KlmStatement>();
  n->kind = KlmKind::DI;
  n->lhs = std::move(ante);
  n->rhs = std::move(cons);
  return n;
}

KlmPtr mk_klm_conj(KlmPtr a, KlmPtr b) {
  auto n = std::make_shared<KlmStatement>();
  n->kind = KlmKind::Conj;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

DrslPtr mk_drsl_klm(KlmPtr phi) {
  auto n = std::make_shared<DrslStatement>();
  n->kind = DrslKind::Klm;
  n->klm = std::move(phi);
  return n;
}

DrslPtr mk_box(int standpoint, DrslPtr child) {
  auto n = std::make_shared<DrslStatement>();
  n->kind = DrslKind::Box;
  n->standpoint = standpoint;
  n->a = std::move(child);
  return n;
}

DrslPtr mk_diamond(int standpoint, DrslPtr child) {
  auto n = std::make_shared<DrslStatement>();
  n->kind = DrslKind::Diamond;
  n->standpoint = standpoint;
  n->a = std::move(child);
  return n;
}

DrslPtr mk_drsl_conj(DrslPtr a, DrslPtr b) {
  auto n = std::make_shared<DrslStatement>();
  n->kind = DrslKind::Conj;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

DrslPtr mk_sharpening(int sub, int super) {
  auto n = std::make_shared<DrslStatement>();
  n->kind = DrslKind::Sharpening;
  n->standpoint = sub;
  n->standpoint2 = super;
  return n;
}

bool bool_equal(const BoolPtr& a, const BoolPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case BoolKind::Atom: return a->atom == b->atom;
    case BoolKind::Top:
    case BoolKind::Bottom: return true;
    case BoolKind::Not: return bool_equal(a->lhs, b->lhs);
    default: return bool_equal(a->lhs, b->lhs) && bool_equal(a->rhs, b->rhs);
  }
}

bool klm_equal(const KlmPtr& a, const KlmPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case KlmKind::Bool: return bool_equal(a->lhs, b->lhs);
    case KlmKind::DI: return bool_equal(a->lhs, b->lhs) && bool_equal(a->rhs, b->rhs);
    case KlmKind::Conj: return klm_equal(a->a, b->a) && klm_equal(a->b, b->b);
  }
  return false;
}

bool drsl_equal(const DrslPtr& a, const DrslPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case DrslKind::Klm: return klm_equal(a->klm, b->klm);
    case DrslKind::Box:
    case DrslKind::Diamond: return a->standpoint == b->standpoint && drsl_equal(a->a, b->a);
    case DrslKind::Conj: return drsl_equal(a->a, b->a) && drsl_equal(a->b, b->b);
    case DrslKind::Sharpening:
      return a->standpoint == b->standpoint && a->standpoint2 == b->standpoint2;
  }
  return false;
}

// Precedence: ! (6) > & (5) > | (4) > -> (3) > <-> (2) > ~> (1).
static int bool_prec(const BoolFormula& f) {
  switch (f.kind) {
    case BoolKind::Atom:
    case BoolKind::Top:
    case BoolKind::Bottom:
    case BoolKind::Not: return 6;
    case BoolKind::And: return 5;
    case BoolKind::Or: return 4;
    case BoolKind::Implies: return 3;
    case BoolKind::Iff: return 2;
  }
  return 6;
}

static void print_bool_rec(const BoolPtr& f, const Vocabulary& vocab, int ctx, std::string& out) {
  int p = bool_prec(*f);
  bool paren = p < ctx;
  if (paren) out += '(';
  switch (f->kind) {
    case BoolKind::Atom: out += vocab.atom(f->atom).name; break;
    case BoolKind::Top: out += "true"; break;
    case BoolKind::Bottom: out += "false"; break;
    case BoolKind::Not:
      out += '!';
      print_bool_rec(f->lhs, vocab, 6, out);
      break;
    case BoolKind::And:  // left-associative
      print_bool_rec(f->lhs, vocab, 5, out);
      out += " & ";
      print_bool_rec(f->rhs, vocab, 6, out);
      break;
    case BoolKind::Or:
      print_bool_rec(f->lhs, vocab, 4, out);
      out += " | ";
      print_bool_rec(f->rhs, vocab, 5, out);
      break;
    case BoolKind::Implies:  // right-associative
      print_bool_rec(f->lhs, vocab, 4, out);
      out += " -> ";
      print_bool_rec(f->rhs, vocab, 3, out);
      break;
    case BoolKind::Iff:
      print_bool_rec(f->lhs, vocab, 3, out);
      out += " <-> ";
      print_bool_rec(f->rhs, vocab, 2, out);
      break;
  }
  if (paren) out += ')';
}

std::string print_bool(const BoolPtr& f, const Vocabulary& vocab) {
  std::string out;
  print_bool_rec(f, vocab, 0, out);
  return out;
}

// Conjuncts of a KLM conjunction are printed parenthesized so the statement
// reparses as a KLM conjunction rather than a Boolean one.
static void print_klm_rec(const KlmPtr& s, const Vocabulary& vocab, bool in_conj, std::string& out) {
  switch (s->kind) {
    case KlmKind::Bool:
      if (in_conj) out += '(';
      print_bool_rec(s->lhs, vocab, 0, out);
      if (in_conj) out += ')';
      break;
    case KlmKind::DI:
      if (in_conj) out += '(';
      print_bool_rec(s->lhs, vocab, 2, out);
      out += " ~> ";
      print_bool_rec(s->rhs, vocab, 2, out);
      if (in_conj) out += ')';
      break;
    case KlmKind::Conj:
      print_klm_rec(s->a, vocab, true, out);
      out += " & ";
      print_klm_rec(s->b, vocab, true, out);
      break;
  }
}

std::string print_klm(const KlmPtr& s, const Vocabulary& vocab) {
  std::string out;
  print_klm_rec(s, vocab, false, out);
  return out;
}

static void print_drsl_rec(const DrslPtr& s, const Vocabulary& vocab, bool in_conj, std::string& out) {
  switch (s->kind) {
    case DrslKind::Klm:
      print_klm_rec(s->klm, vocab, in_conj, out);
      break;
    case DrslKind::Box:
    case DrslKind::Diamond: {
      const char open = s->kind == DrslKind::Box ? '[' : '<';
      const char close = s->kind == DrslKind::Box ? ']' : '>';
      out += open;
      out += vocab.standpoint(s->standpoint).name;
      out += close;
      out += ' ';
      if (s->a->kind == DrslKind::Box || s->a->kind == DrslKind::Diamond) {
        print_drsl_rec(s->a, vocab, false, out);
      } else {
        out += '(';
        print_drsl_rec(s->a, vocab, false, out);
        out += ')';
      }
      break;
    }
    case DrslKind::Conj:
      print_drsl_rec(s->a, vocab, true, out);
      out += " & ";
      print_drsl_rec(s->b, vocab, true, out);
      break;
    case DrslKind::Sharpening:
      out += vocab.standpoint(s->standpoint).name;
      out += " <= ";
      out += vocab.standpoint(s->standpoint2).name;
      break;
  }
}

std::string print_statement(const DrslPtr& s, const Vocabulary& vocab) {
  std::string out;
  print_drsl_rec(s, vocab, false, out);
  return out;
}

std::string print_kb(const KnowledgeBase& kb) {
  std::string out;
  std::string header;
  for (const auto& sp : kb.vocabulary.standpoints()) {
    if (sp.is_universal) continue;
    if (!header.empty()) header += ", ";
    header += sp.name;
  }
  if (!header.empty()) out += "standpoints: " + header + "\n";
  for (const auto& st : kb.statements) out += print_statement(st, kb.vocabulary) + "\n";
  return out;
}

bool is_pure_klm(const DrslPtr& s) {
  switch (s->kind) {
    case DrslKind::Klm: return true;
    case DrslKind::Conj: return is_pure_klm(s->a) && is_pure_klm(s->b);
    default: return false;
  }
}

}  // namespace drsl
