#include "drsl/standpoint.hpp"

#include <algorithm>
#include <set>

namespace drsl {

namespace {

std::vector<int> occurring_standpoints(const NormalKB& kb) {
  std::set<int> seen;
  for (const auto& st : kb.statements) seen.insert(st.standpoint);
  for (const auto& [sub, sup] : kb.sharpenings) {
    seen.insert(sub);
    seen.insert(sup);
  }
  return {seen.begin(), seen.end()};
}

std::string klm_key(const KlmPtr& s, const Vocabulary& vocab) { return print_klm(s, vocab); }

}  // namespace

SharpeningClosure sharpening_closure(const NormalKB& kb) {
  int n = kb.vocabulary.n_standpoints();
  SharpeningClosure c;
  c.n = n;
  c.mat.assign(static_cast<size_t>(n) * n, 0);
  auto at = [&](int s, int t) -> char& { return c.mat[static_cast<size_t>(s) * n + t]; };
  for (int s = 0; s < n; s++) {
    at(s, s) = 1;
    at(s, Vocabulary::kUniversal) = 1;
  }
  for (const auto& [sub, sup] : kb.sharpenings) at(sub, sup) = 1;
  for (int k = 0; k < n; k++)
    for (int s = 0; s < n; s++)
      if (at(s, k))
        for (int t = 0; t < n; t++)
          if (at(k, t)) at(s, t) = 1;
  return c;
}

SplitResult standpoint_split(const NormalKB& kb) {
  const Vocabulary& vocab = kb.vocabulary;
  SharpeningClosure closure = sharpening_closure(kb);
  SplitResult out;
  out.occurring = occurring_standpoints(kb);
  const auto& s_set = out.occurring;

  // K_s: every phi with [t]phi in kb and s <=+ t, deduplicated, statement order.
  std::map<int, std::vector<KlmPtr>> base;
  for (int s : s_set) {
    std::vector<KlmPtr> ks;
    std::set<std::string> seen;
    for (const auto& st : kb.statements) {
      if (!st.is_box || !closure.leq(s, st.standpoint)) continue;
      if (seen.insert(klm_key(st.body, vocab)).second) ks.push_back(st.body);
    }
    base[s] = std::move(ks);
  }

  struct Entry {
    std::string label;
    SplitKb kb;
  };
  std::vector<Entry> entries;
  std::map<int, std::vector<std::string>> extensions_of;  // s -> labels of K_s^phi
  for (int s : s_set) {
    std::string name = vocab.standpoint(s).name;
    entries.push_back({"K_" + name, {"K_" + name, s, false, nullptr, base[s]}});
  }
  for (const auto& st : kb.statements) {
    if (st.is_box) continue;
    std::string name = vocab.standpoint(st.standpoint).name;
    std::string label = "K_" + name + "^{" + klm_key(st.body, vocab) + "}";
    bool dup = false;
    for (const auto& e : entries)
      if (e.label == label) { dup = true; break; }
    if (dup) continue;  // keyed by (s, phi), not by occurrence
    std::vector<KlmPtr> stmts = base[st.standpoint];
    bool already = false;
    for (const auto& k : stmts)
      if (klm_key(k, vocab) == klm_key(st.body, vocab)) { already = true; break; }
    if (!already) stmts.push_back(st.body);
    entries.push_back({label, {label, st.standpoint, true, st.body, std::move(stmts)}});
    extensions_of[st.standpoint].push_back(label);
  }

  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.label < b.label; });
  std::map<std::string, int> index_of;
  for (size_t i = 0; i < entries.size(); i++) {
    index_of[entries[i].label] = static_cast<int>(i);
    out.kbs.push_back(entries[i].kb);
  }

  // Know_s over S_{<=s}; Know_* is the union over S minus the base K_* itself.
  auto know_of = [&](int s) {
    std::set<int> idx;
    for (int t : s_set) {
      if (!closure.leq(t, s)) continue;
      idx.insert(index_of.at("K_" + vocab.standpoint(t).name));
      auto it = extensions_of.find(t);
      if (it != extensions_of.end())
        for (const auto& label : it->second) idx.insert(index_of.at(label));
    }
    return idx;
  };

  std::set<int> know_star;
  for (int s : s_set) {
    std::set<int> k = know_of(s);
    know_star.insert(k.begin(), k.end());
    if (s != Vocabulary::kUniversal)
      out.know[vocab.standpoint(s).name] = {k.begin(), k.end()};
  }
  auto it = index_of.find("K_*");
  if (it != index_of.end()) know_star.erase(it->second);
  out.know["*"] = {know_star.begin(), know_star.end()};
  return out;
}

PreparedSplit prepare_split(const NormalKB& kb) {
  PreparedSplit ps;
  ps.split = standpoint_split(kb);
  ps.base_ranks.reserve(ps.split.kbs.size());
  for (const auto& skb : ps.split.kbs) ps.base_ranks.push_back(base_rank(skb.statements));
  return ps;
}

bool rc_standpoint(const PreparedSplit& ps, const Vocabulary& vocab,
                   const std::vector<NormalStatement>& query,
                   std::vector<TraceEntry>* trace, std::vector<std::string>* diagnostics) {
  bool all = true;
  for (const auto& q : query) {
    const std::string& name = vocab.standpoint(q.standpoint).name;
    auto it = ps.split.know.find(name);
    if (it == ps.split.know.end()) throw ClosedWorldError(name);
    const auto& know = it->second;
    std::string qs = print_normal_statement(q, vocab);
    if (know.empty() && diagnostics)
      diagnostics->push_back("Know_" + name + " is empty; [" + name +
                             "] holds vacuously and <" + name + "> fails vacuously");
    bool verdict = q.is_box;  // box: vacuously true, diamond: vacuously false
    for (int idx : know) {
      bool r = rc_prop_ranked(ps.base_ranks[idx], q.body);
      if (trace) trace->push_back({qs, ps.split.kbs[idx].label, r});
      if (q.is_box && !r) { verdict = false; break; }
      if (!q.is_box && r) { verdict = true; break; }
    }
    if (!verdict) {
      all = false;
      if (!trace) break;  // keep the remaining conjuncts' traces when tracing
    }
  }
  return all;
}

bool rc_standpoint(const NormalKB& kb, const std::vector<NormalStatement>& query) {
  return rc_standpoint(prepare_split(kb), kb.vocabulary, query);
}

}  // namespace drsl
