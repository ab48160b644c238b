#include "drsl/normalize.hpp"

#include <stdexcept>

namespace drsl {

DrslPtr collapse_modalities(const DrslPtr& stmt) {
  switch (stmt->kind) {
    case DrslKind::Klm:
    case DrslKind::Sharpening:
      return stmt;
    case DrslKind::Conj:
      return mk_drsl_conj(collapse_modalities(stmt->a), collapse_modalities(stmt->b));
    case DrslKind::Box:
    case DrslKind::Diamond: {
      DrslPtr child = collapse_modalities(stmt->a);
      if (child->kind == DrslKind::Box || child->kind == DrslKind::Diamond) return child;
      if (child == stmt->a) return stmt;
      return stmt->kind == DrslKind::Box ? mk_box(stmt->standpoint, child)
                                         : mk_diamond(stmt->standpoint, child);
    }
  }
  return stmt;
}

namespace {

void flatten_drsl_conj(const DrslPtr& s, std::vector<DrslPtr>& out) {
  if (s->kind == DrslKind::Conj) {
    flatten_drsl_conj(s->a, out);
    flatten_drsl_conj(s->b, out);
  } else {
    out.push_back(s);
  }
}

void flatten_klm_conj(const KlmPtr& s, std::vector<KlmPtr>& out) {
  if (s->kind == KlmKind::Conj) {
    flatten_klm_conj(s->a, out);
    flatten_klm_conj(s->b, out);
  } else {
    out.push_back(s);
  }
}

KlmPtr fold_klm(const std::vector<KlmPtr>& units) {
  KlmPtr acc;
  for (auto it = units.rbegin(); it != units.rend(); ++it)
    acc = acc ? mk_klm_conj(*it, acc) : *it;
  return acc;
}

void normalize_rec(const DrslPtr& stmt, std::vector<NormalStatement>& out);

void normalize_box(int standpoint, const DrslPtr& child, std::vector<NormalStatement>& out) {
  switch (child->kind) {
    case DrslKind::Klm: {
      std::vector<KlmPtr> units;
      flatten_klm_conj(child->klm, units);
      for (const auto& u : units) out.push_back({true, standpoint, u});
      break;
    }
    case DrslKind::Box:
    case DrslKind::Diamond:
      normalize_rec(child, out);  // modal collapse
      break;
    case DrslKind::Conj: {
      std::vector<DrslPtr> units;
      flatten_drsl_conj(child, units);
      for (const auto& u : units) {
        if (u->kind == DrslKind::Box || u->kind == DrslKind::Diamond)
          normalize_rec(u, out);
        else
          normalize_box(standpoint, u, out);
      }
      break;
    }
    case DrslKind::Sharpening:
      throw std::logic_error("normalize: sharpening under a modality");
  }
}

void normalize_diamond(int standpoint, const DrslPtr& child, std::vector<NormalStatement>& out) {
  switch (child->kind) {
    case DrslKind::Klm:
      out.push_back({false, standpoint, child->klm});  // conjunctive body stays whole
      break;
    case DrslKind::Box:
    case DrslKind::Diamond:
      normalize_rec(child, out);
      break;
    case DrslKind::Conj: {
      std::vector<DrslPtr> units;
      flatten_drsl_conj(child, units);
      std::vector<KlmPtr> residue;
      std::vector<DrslPtr> modal;
      for (const auto& u : units) {
        if (u->kind == DrslKind::Klm)
          residue.push_back(u->klm);
        else
          modal.push_back(u);
      }
      if (!residue.empty()) out.push_back({false, standpoint, fold_klm(residue)});
      for (const auto& u : modal) normalize_rec(u, out);
      break;
    }
    case DrslKind::Sharpening:
      throw std::logic_error("normalize: sharpening under a modality");
  }
}

void normalize_rec(const DrslPtr& stmt, std::vector<NormalStatement>& out) {
  switch (stmt->kind) {
    case DrslKind::Klm:
      normalize_box(Vocabulary::kUniversal, stmt, out);
      break;
    case DrslKind::Box:
      normalize_box(stmt->standpoint, stmt->a, out);
      break;
    case DrslKind::Diamond:
      normalize_diamond(stmt->standpoint, stmt->a, out);
      break;
    case DrslKind::Conj:
      normalize_rec(stmt->a, out);
      normalize_rec(stmt->b, out);
      break;
    case DrslKind::Sharpening:
      throw std::logic_error("normalize_statement: sharpening input");
  }
}

}  // namespace

std::vector<NormalStatement> normalize_statement(const DrslPtr& stmt) {
  std::vector<NormalStatement> out;
  normalize_rec(stmt, out);
  return out;
}

NormalKB normalize_kb(const KnowledgeBase& kb) {
  NormalKB out;
  out.vocabulary = kb.vocabulary;
  for (const auto& stmt : kb.statements) {
    if (stmt->kind == DrslKind::Sharpening) {
      out.sharpenings.push_back({stmt->standpoint, stmt->standpoint2});
    } else {
      auto norm = normalize_statement(stmt);
      out.statements.insert(out.statements.end(), norm.begin(), norm.end());
    }
  }
  return out;
}

DrslPtr normal_to_drsl(const NormalStatement& st) {
  DrslPtr body = mk_drsl_klm(st.body);
  return st.is_box ? mk_box(st.standpoint, body) : mk_diamond(st.standpoint, body);
}

std::string print_normal_statement(const NormalStatement& st, const Vocabulary& vocab) {
  return print_statement(normal_to_drsl(st), vocab);
}

std::string print_normal_kb(const NormalKB& kb) {
  std::string out;
  std::string header;
  for (const auto& sp : kb.vocabulary.standpoints()) {
    if (sp.is_universal) continue;
    if (!header.empty()) header += ", ";
    header += sp.name;
  }
  if (!header.empty()) out += "standpoints: " + header + "\n";
  for (const auto& [sub, sup] : kb.sharpenings)
    out += kb.vocabulary.standpoint(sub).name + " <= " + kb.vocabulary.standpoint(sup).name + "\n";
  for (const auto& st : kb.statements) out += print_normal_statement(st, kb.vocabulary) + "\n";
  return out;
}

}  // namespace drsl
