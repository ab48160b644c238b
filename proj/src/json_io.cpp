#include "drsl/json_io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace drsl {

using nlohmann::json;

std::string valuation_to_json_string(Valuation v, const Vocabulary& vocab) {
  return valuation_to_string(v, vocab);
}

Valuation valuation_from_string(const std::string& text, const Vocabulary& vocab) {
  std::istringstream in(text);
  std::string token;
  std::vector<bool> seen(vocab.n_atoms(), false);
  Valuation v = 0;
  while (in >> token) {
    bool neg = !token.empty() && token[0] == '-';
    std::string name = neg ? token.substr(1) : token;
    int id = vocab.atom_id(name);
    if (id < 0) throw std::runtime_error("unknown atom '" + name + "' in valuation");
    if (seen[id]) throw std::runtime_error("atom '" + name + "' repeated in valuation");
    seen[id] = true;
    if (!neg) v |= Valuation{1} << id;
  }
  for (int i = 0; i < vocab.n_atoms(); i++)
    if (!seen[i])
      throw std::runtime_error("valuation does not mention atom '" +
                               vocab.atom(i).name + "'");
  return v;
}

json ri_to_json(const RankedInterpretation& r, const Vocabulary& vocab) {
  json levels = json::array();
  for (const auto& level : r.levels) {
    json row = json::array();
    std::vector<Valuation> sorted = level;
    sort_display(sorted, vocab.n_atoms());
    for (Valuation v : sorted) row.push_back(valuation_to_string(v, vocab));
    levels.push_back(std::move(row));
  }
  json inf = json::array();
  std::vector<Valuation> sorted = r.infinite;
  sort_display(sorted, vocab.n_atoms());
  for (Valuation v : sorted) inf.push_back(valuation_to_string(v, vocab));
  return json{{"levels", std::move(levels)}, {"infinite", std::move(inf)}};
}

RankedInterpretation ri_from_json(const json& j, const Vocabulary& vocab) {
  if (!j.is_object() || !j.contains("levels") || !j.contains("infinite"))
    throw std::runtime_error("ranked interpretation needs 'levels' and 'infinite'");
  if (vocab.n_atoms() > 20)
    throw std::runtime_error("ranked interpretations are limited to 20 atoms");
  RankedInterpretation r;
  r.n_atoms = vocab.n_atoms();
  std::vector<bool> seen(Valuation{1} << vocab.n_atoms(), false);
  auto take = [&](const json& cell) {
    if (!cell.is_string())
      throw std::runtime_error("valuations must be strings");
    Valuation v = valuation_from_string(cell.get<std::string>(), vocab);
    if (seen[v])
      throw std::runtime_error("valuation '" + cell.get<std::string>() +
                               "' assigned two ranks");
    seen[v] = true;
    return v;
  };
  for (const auto& row : j.at("levels")) {
    std::vector<Valuation> level;
    for (const auto& cell : row) level.push_back(take(cell));
    if (level.empty())
      throw std::runtime_error("empty finite rank in ranked interpretation");
    sort_display(level, r.n_atoms);
    r.levels.push_back(std::move(level));
  }
  for (const auto& cell : j.at("infinite")) r.infinite.push_back(take(cell));
  sort_display(r.infinite, r.n_atoms);
  for (Valuation v = 0; v < (Valuation{1} << vocab.n_atoms()); v++)
    if (!seen[v])
      throw std::runtime_error("valuation '" + valuation_to_string(v, vocab) +
                               "' has no rank");
  return r;
}

json structure_to_json(const RankedStandpointStructure& m) {
  json pi = json::array();
  for (const auto& name : m.pi) pi.push_back(name);
  json gamma = json::object();
  for (size_t i = 0; i < m.pi.size(); i++)
    gamma[m.pi[i]] = ri_to_json(m.gamma[i], m.vocabulary);
  json sigma = json::object();
  for (const auto& [name, idx] : m.sigma) {
    json row = json::array();
    for (int i : idx) row.push_back(m.pi[i]);
    sigma[name] = std::move(row);
  }
  return json{{"pi", std::move(pi)}, {"gamma", std::move(gamma)},
              {"sigma", std::move(sigma)}};
}

RankedStandpointStructure structure_from_json(const json& j, const Vocabulary& vocab) {
  if (!j.is_object() || !j.contains("pi") || !j.contains("gamma") || !j.contains("sigma"))
    throw std::runtime_error("structure needs 'pi', 'gamma' and 'sigma'");
  RankedStandpointStructure m;
  m.vocabulary = vocab;
  std::map<std::string, int> index_of;
  for (const auto& cell : j.at("pi")) {
    if (!cell.is_string())
      throw std::runtime_error("precisification names must be strings");
    std::string name = cell.get<std::string>();
    if (index_of.count(name))
      throw std::runtime_error("precisification '" + name + "' listed twice");
    index_of[name] = static_cast<int>(m.pi.size());
    m.pi.push_back(name);
  }
  m.gamma.resize(m.pi.size());
  const json& gamma = j.at("gamma");
  if (!gamma.is_object()) throw std::runtime_error("'gamma' must be an object");
  for (const auto& [name, rj] : gamma.items()) {
    auto it = index_of.find(name);
    if (it == index_of.end())
      throw std::runtime_error("gamma maps unknown precisification '" + name + "'");
    m.gamma[it->second] = ri_from_json(rj, vocab);
  }
  for (size_t i = 0; i < m.pi.size(); i++)
    if (m.gamma[i].n_atoms == 0 && vocab.n_atoms() > 0)
      throw std::runtime_error("gamma lacks precisification '" + m.pi[i] + "'");
  const json& sigma = j.at("sigma");
  if (!sigma.is_object()) throw std::runtime_error("'sigma' must be an object");
  for (const auto& [name, row] : sigma.items()) {
    std::vector<int> idx;
    for (const auto& cell : row) {
      if (!cell.is_string())
        throw std::runtime_error("sigma entries must name precisifications");
      auto it = index_of.find(cell.get<std::string>());
      if (it == index_of.end())
        throw std::runtime_error("sigma(" + name + ") names unknown precisification '" +
                                 cell.get<std::string>() + "'");
      idx.push_back(it->second);
    }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    m.sigma[name] = std::move(idx);
  }
  return m;
}

}  // namespace drsl
