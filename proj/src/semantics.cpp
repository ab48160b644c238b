#include "drsl/semantics.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "drsl/normalize.hpp"

namespace drsl {

namespace {

const std::vector<int>& sigma_of(const RankedStandpointStructure& m, int standpoint) {
  const std::string& name = m.vocabulary.standpoint(standpoint).name;
  auto it = m.sigma.find(name);
  if (it == m.sigma.end())
    throw std::runtime_error("structure does not interpret standpoint '" + name + "'");
  return it->second;
}

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool satisfies_rec(const RankedStandpointStructure& m, int pi_index, const DrslPtr& s) {
  switch (s->kind) {
    case DrslKind::Klm:
      return ri_satisfies(m.gamma[pi_index], s->klm);
    case DrslKind::Box: {
      for (int j : sigma_of(m, s->standpoint))
        if (!satisfies_rec(m, j, s->a)) return false;
      return true;
    }
    case DrslKind::Diamond: {
      for (int j : sigma_of(m, s->standpoint))
        if (satisfies_rec(m, j, s->a)) return true;
      return false;
    }
    case DrslKind::Conj:
      return satisfies_rec(m, pi_index, s->a) && satisfies_rec(m, pi_index, s->b);
    case DrslKind::Sharpening:
      return subset(sigma_of(m, s->standpoint), sigma_of(m, s->standpoint2));
  }
  return false;
}

}  // namespace

std::vector<std::string> structure_shape_errors(const RankedStandpointStructure& m) {
  std::vector<std::string> errors;
  int n = static_cast<int>(m.pi.size());
  if (m.gamma.size() != m.pi.size())
    errors.push_back("pi and gamma have different lengths");
  std::set<std::string> names(m.pi.begin(), m.pi.end());
  if (static_cast<int>(names.size()) != n)
    errors.push_back("duplicate precisification names");
  for (size_t i = 0; i < m.gamma.size(); i++) {
    if (m.gamma[i].n_atoms != m.vocabulary.n_atoms())
      errors.push_back("gamma(" + m.pi[std::min(i, m.pi.size() - 1)] +
                       ") ranges over the wrong number of atoms");
    for (const auto& level : m.gamma[i].levels)
      if (level.empty()) {
        errors.push_back("gamma(" + m.pi[std::min(i, m.pi.size() - 1)] +
                         ") has an empty finite rank");
        break;
      }
  }
  for (const auto& [name, idx] : m.sigma) {
    if (m.vocabulary.standpoint_id(name) < 0) {
      errors.push_back("sigma maps unknown standpoint '" + name + "'");
      continue;
    }
    if (idx.empty()) errors.push_back("sigma(" + name + ") is empty");
    if (!std::is_sorted(idx.begin(), idx.end()) ||
        std::adjacent_find(idx.begin(), idx.end()) != idx.end())
      errors.push_back("sigma(" + name + ") is not a sorted set");
    for (int j : idx)
      if (j < 0 || j >= n) {
        errors.push_back("sigma(" + name + ") points outside pi");
        break;
      }
  }
  auto star = m.sigma.find("*");
  if (star == m.sigma.end())
    errors.push_back("sigma lacks the universal standpoint");
  else if (static_cast<int>(star->second.size()) != n)
    errors.push_back("sigma(*) must contain every precisification");
  return errors;
}

bool is_valid(const RankedStandpointStructure& m) {
  std::set<int> named;
  for (const auto& [name, idx] : m.sigma) named.insert(idx.begin(), idx.end());
  for (int j : named)
    if (m.gamma[j].all_infinite()) return false;
  return true;
}

bool satisfies_at(const RankedStandpointStructure& m, int pi_index, const KlmPtr& body) {
  return ri_satisfies(m.gamma[pi_index], body);
}

bool satisfies(const RankedStandpointStructure& m, const DrslPtr& statement) {
  if (statement->kind == DrslKind::Box || statement->kind == DrslKind::Diamond ||
      statement->kind == DrslKind::Sharpening)
    return satisfies_rec(m, 0, statement);  // independent of the evaluation point
  for (int j = 0; j < static_cast<int>(m.pi.size()); j++)
    if (!satisfies_rec(m, j, statement)) return false;
  return true;
}

bool check_model(const RankedStandpointStructure& m, const KnowledgeBase& kb) {
  for (const auto& st : kb.statements)
    if (!satisfies(m, st)) return false;
  return true;
}

bool check_model(const RankedStandpointStructure& m, const NormalKB& kb) {
  for (const auto& [sub, sup] : kb.sharpenings)
    if (!subset(sigma_of(m, sub), sigma_of(m, sup))) return false;
  for (const auto& st : kb.statements) {
    const auto& idx = sigma_of(m, st.standpoint);
    bool ok;
    if (st.is_box) {
      ok = true;
      for (int j : idx)
        if (!satisfies_at(m, j, st.body)) { ok = false; break; }
    } else {
      ok = false;
      for (int j : idx)
        if (satisfies_at(m, j, st.body)) { ok = true; break; }
    }
    if (!ok) return false;
  }
  return true;
}

RankedStandpointStructure build_rc_structure(const NormalKB& kb, int max_atoms) {
  SplitResult split = standpoint_split(kb);
  RankedStandpointStructure m;
  m.vocabulary = kb.vocabulary;

  std::vector<int> remap(split.kbs.size(), -1);
  for (size_t i = 0; i < split.kbs.size(); i++) {
    if (split.kbs[i].label == "K_*") continue;
    remap[i] = static_cast<int>(m.pi.size());
    m.pi.push_back("pi_" + split.kbs[i].label.substr(2));
    m.gamma.push_back(rc_model(split.kbs[i].statements, kb.vocabulary, max_atoms));
  }
  if (m.pi.empty())
    throw std::runtime_error(
        "the structure has no precisifications: every statement is universal; "
        "use the propositional rational closure of the universal base instead");

  for (const auto& [name, idx] : split.know) {
    std::vector<int> mapped;
    for (int i : idx)
      if (remap[i] >= 0) mapped.push_back(remap[i]);
    std::sort(mapped.begin(), mapped.end());
    m.sigma[name] = std::move(mapped);
  }
  return m;
}

}  // namespace drsl
