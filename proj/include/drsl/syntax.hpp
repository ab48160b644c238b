#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace drsl {

struct Atom {
  std::string name;
  int index = -1;
};

struct StandpointSymbol {
  std::string name;
  bool is_universal = false;
};

// Atom and standpoint names are interned; formulas refer to them by index.
// "*" is always present as standpoint 0.
class Vocabulary {
 public:
  static constexpr int kUniversal = 0;

  Vocabulary();

  int add_atom(const std::string& name);
  int add_standpoint(const std::string& name);
  int atom_id(const std::string& name) const;        // -1 if absent
  int standpoint_id(const std::string& name) const;  // -1 if absent

  const Atom& atom(int id) const { return atoms_.at(id); }
  const StandpointSymbol& standpoint(int id) const { return standpoints_.at(id); }
  int n_atoms() const { return static_cast<int>(atoms_.size()); }
  int n_standpoints() const { return static_cast<int>(standpoints_.size()); }
  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<StandpointSymbol>& standpoints() const { return standpoints_; }

 private:
  std::vector<Atom> atoms_;
  std::vector<StandpointSymbol> standpoints_;
  std::unordered_map<std::string, int> atom_ids_;
  std::unordered_map<std::string, int> sp_ids_;
};

enum class BoolKind { Atom, Top, Bottom, Not, And, Or, Implies, Iff };

struct BoolFormula;
using BoolPtr = std::shared_ptr<const BoolFormula>;

struct BoolFormula {
  BoolKind kind;
  int atom = -1;      // Atom
  BoolPtr lhs, rhs;   // Not uses lhs only
};

BoolPtr mk_atom(int atom);
BoolPtr mk_top();
BoolPtr mk_bottom();
BoolPtr mk_not(BoolPtr a);
BoolPtr mk_and(BoolPtr a, BoolPtr b);
BoolPtr mk_or(BoolPtr a, BoolPtr b);
BoolPtr mk_implies(BoolPtr a, BoolPtr b);
BoolPtr mk_iff(BoolPtr a, BoolPtr b);

enum class KlmKind { Bool, DI, Conj };

struct KlmStatement;
using KlmPtr = std::shared_ptr<const KlmStatement>;

// phi ::= alpha | alpha ~> beta | phi & phi
struct KlmStatement {
  KlmKind kind;
  BoolPtr lhs, rhs;  // Bool: lhs; DI: lhs ~> rhs
  KlmPtr a, b;       // Conj
};

KlmPtr mk_klm_bool(BoolPtr f);
KlmPtr mk_klm_di(BoolPtr ante, BoolPtr cons);
KlmPtr mk_klm_conj(KlmPtr a, KlmPtr b);

enum class DrslKind { Klm, Box, Diamond, Conj, Sharpening };

struct DrslStatement;
using DrslPtr = std::shared_ptr<const DrslStatement>;

// psi ::= phi | [s] psi | <s> psi | psi & psi, or a top-level sharpening s <= t.
struct DrslStatement {
  DrslKind kind;
  KlmPtr klm;           // Klm
  int standpoint = -1;  // Box/Diamond binder; Sharpening: the sub side
  int standpoint2 = -1; // Sharpening: the super side
  DrslPtr a, b;         // Box/Diamond child in a; Conj uses a, b
};

DrslPtr mk_drsl_klm(KlmPtr phi);
DrslPtr mk_box(int standpoint, DrslPtr child);
DrslPtr mk_diamond(int standpoint, DrslPtr child);
DrslPtr mk_drsl_conj(DrslPtr a, DrslPtr b);
DrslPtr mk_sharpening(int sub, int super);

struct KnowledgeBase {
  Vocabulary vocabulary;
  std::vector<DrslPtr> statements;
};

bool bool_equal(const BoolPtr& a, const BoolPtr& b);
bool klm_equal(const KlmPtr& a, const KlmPtr& b);
bool drsl_equal(const DrslPtr& a, const DrslPtr& b);

// Canonical printing; output reparses to a structurally equal AST for any
// parser-reachable tree (conjunctions are flat and right-leaning).
std::string print_bool(const BoolPtr& f, const Vocabulary& vocab);
std::string print_klm(const KlmPtr& s, const Vocabulary& vocab);
std::string print_statement(const DrslPtr& s, const Vocabulary& vocab);
std::string print_kb(const KnowledgeBase& kb);

// True if no modal operator or sharpening occurs (statement is a bare phi).
bool is_pure_klm(const DrslPtr& s);

}  // namespace drsl
