#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "drsl/json_io.hpp"
#include "drsl/klm.hpp"
#include "drsl/normalize.hpp"
#include "drsl/oracle.hpp"
#include "drsl/parse.hpp"
#include "drsl/semantics.hpp"
#include "drsl/standpoint.hpp"

using nlohmann::json;
using namespace drsl;

namespace {

constexpr int kSchemaVersion = 1;

struct GlobalOpts {
  bool json = false;
  bool trace = false;
  int max_atoms = 20;
};

int fail(const GlobalOpts& g, const std::string& msg) {
  if (g.json) {
    json out{{"schema", kSchemaVersion}, {"error", msg}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cerr << "error: " << msg << "\n";
  }
  return 2;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A query is one statement, or a file of statements read as a conjunction.
std::vector<NormalStatement> parse_query(const std::string& text,
                                         const std::string& file, Vocabulary& vocab,
                                         std::vector<DrslPtr>* raw = nullptr) {
  std::vector<std::string> lines;
  if (!file.empty()) {
    std::istringstream in(read_file(file));
    std::string line;
    while (std::getline(in, line)) {
      size_t a = line.find_first_not_of(" \t\r");
      if (a == std::string::npos || line[a] == '#') continue;
      lines.push_back(line);
    }
    if (lines.empty()) throw std::runtime_error("query file '" + file + "' is empty");
  } else {
    lines.push_back(text);
  }
  std::vector<NormalStatement> out;
  for (const auto& l : lines) {
    DrslPtr s = parse_statement_extend(l, vocab);
    if (raw) raw->push_back(s);
    if (s->kind == DrslKind::Sharpening)
      throw std::runtime_error("sharpening queries are answered classically; "
                               "use a single `s <= t` query");
    auto ns = normalize_statement(s);
    out.insert(out.end(), ns.begin(), ns.end());
  }
  return out;
}

int cmd_parse(const GlobalOpts& g, const std::string& kb_path) {
  KnowledgeBase kb = parse_kb_file(kb_path);
  if (g.json) {
    json atoms = json::array(), sps = json::array(), stmts = json::array();
    for (int i = 0; i < kb.vocabulary.n_atoms(); i++)
      atoms.push_back(kb.vocabulary.atom(i).name);
    for (int i = 1; i < kb.vocabulary.n_standpoints(); i++)
      sps.push_back(kb.vocabulary.standpoint(i).name);
    for (const auto& s : kb.statements)
      stmts.push_back(print_statement(s, kb.vocabulary));
    json out{{"schema", kSchemaVersion}, {"atoms", atoms}, {"standpoints", sps},
             {"statements", stmts}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << print_kb(kb);
  }
  return 0;
}

int cmd_normalize(const GlobalOpts& g, const std::string& kb_path) {
  KnowledgeBase kb = parse_kb_file(kb_path);
  NormalKB nk = normalize_kb(kb);
  if (g.json) {
    json stmts = json::array(), sharps = json::array();
    for (const auto& s : nk.statements)
      stmts.push_back(print_normal_statement(s, nk.vocabulary));
    for (const auto& [sub, sup] : nk.sharpenings)
      sharps.push_back(nk.vocabulary.standpoint(sub).name + " <= " +
                       nk.vocabulary.standpoint(sup).name);
    json out{{"schema", kSchemaVersion}, {"statements", stmts},
             {"sharpenings", sharps}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << print_normal_kb(nk);
  }
  return 0;
}

int cmd_split(const GlobalOpts& g, const std::string& kb_path) {
  KnowledgeBase kb = parse_kb_file(kb_path);
  NormalKB nk = normalize_kb(kb);
  SplitResult split = standpoint_split(nk);
  if (g.json) {
    json kbs = json::object(), know = json::object();
    for (const auto& s : split.kbs) {
      json stmts = json::array();
      for (const auto& k : s.statements) stmts.push_back(print_klm(k, nk.vocabulary));
      kbs[s.label] = std::move(stmts);
    }
    for (const auto& [name, idx] : split.know) {
      json labels = json::array();
      for (int i : idx) labels.push_back(split.kbs[i].label);
      know[name] = std::move(labels);
    }
    json out{{"schema", kSchemaVersion}, {"kbs", kbs}, {"know", know}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& s : split.kbs) {
      std::cout << s.label << ":\n";
      for (const auto& k : s.statements)
        std::cout << "  " << print_klm(k, nk.vocabulary) << "\n";
    }
    for (const auto& [name, idx] : split.know) {
      std::cout << "Know_" << name << ":";
      for (int i : idx) std::cout << " " << split.kbs[i].label;
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_baserank(const GlobalOpts& g, const std::string& kb_path, std::string label) {
  KnowledgeBase kb = parse_kb_file(kb_path);
  NormalKB nk = normalize_kb(kb);
  PreparedSplit ps = prepare_split(nk);
  if (label.empty()) {
    if (ps.split.kbs.size() == 1)
      label = ps.split.kbs[0].label;
    else
      throw std::runtime_error("several split bases exist; pick one with --label");
  }
  if (label.rfind("K_", 0) != 0) label = "K_" + label;
  const SplitKb* target = nullptr;
  for (const auto& s : ps.split.kbs)
    if (s.label == label) target = &s;
  if (!target) {
    std::string known;
    for (const auto& s : ps.split.kbs) known += (known.empty() ? "" : ", ") + s.label;
    throw std::runtime_error("no split base labeled '" + label + "' (have: " + known + ")");
  }
  const BaseRankResult& br = ps.base_ranks[target - ps.split.kbs.data()];
  if (g.json) {
    json ranks = json::array();
    for (const auto& r : br.ranks) {
      json row = json::array();
      for (const auto& f : r) row.push_back(print_bool(f, nk.vocabulary));
      ranks.push_back(std::move(row));
    }
    json inf = json::array();
    for (const auto& f : br.infinite_rank) inf.push_back(print_bool(f, nk.vocabulary));
    json out{{"schema", kSchemaVersion}, {"label", label}, {"ranks", ranks},
             {"infinite", inf}, {"n", br.n}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (size_t i = 0; i < br.ranks.size(); i++) {
      std::cout << "R_" << i << ":";
      for (const auto& f : br.ranks[i]) std::cout << " " << print_bool(f, nk.vocabulary);
      std::cout << "\n";
    }
    std::cout << "R_inf:";
    for (const auto& f : br.infinite_rank) std::cout << " " << print_bool(f, nk.vocabulary);
    std::cout << "\nn = " << br.n << "\n";
  }
  return 0;
}

int cmd_entail(const GlobalOpts& g, const std::string& kb_path, const std::string& query,
               const std::string& query_file) {
  KnowledgeBase kb = parse_kb_file(kb_path);
  Vocabulary vocab = kb.vocabulary;

  // Sharpening queries are classical: reflexive-transitive closure membership.
  if (query_file.empty()) {
    Vocabulary probe = vocab;
    DrslPtr s = parse_statement_extend(query, probe);
    if (s->kind == DrslKind::Sharpening) {
      kb.vocabulary = probe;
      NormalKB nk = normalize_kb(kb);
      SharpeningClosure c = sharpening_closure(nk);
      bool verdict = c.leq(s->standpoint, s->standpoint2);
      if (g.json) {
        json out{{"schema", kSchemaVersion}, {"verdict", verdict},
                 {"mode", "classical-sharpening"}, {"diagnostics", json::array()}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << (verdict ? "true" : "false") << "\n";
      }
      return verdict ? 0 : 1;
    }
  }

  std::vector<NormalStatement> q = parse_query(query, query_file, vocab);
  kb.vocabulary = vocab;
  NormalKB nk = normalize_kb(kb);
  PreparedSplit ps = prepare_split(nk);

  std::vector<TraceEntry> trace;
  std::vector<std::string> diagnostics;

  // A purely universal knowledge base leaves Know_* empty; fall back to the
  // propositional rational closure of K_* instead of answering vacuously.
  bool universal_fallback = false;
  auto star = ps.split.know.find("*");
  if (star != ps.split.know.end() && star->second.empty()) {
    for (const auto& c : q)
      if (c.standpoint == Vocabulary::kUniversal) universal_fallback = true;
  }
  bool verdict = true;
  if (universal_fallback) {
    const BaseRankResult* star_rank = nullptr;
    for (size_t i = 0; i < ps.split.kbs.size(); i++)
      if (ps.split.kbs[i].label == "K_*") star_rank = &ps.base_ranks[i];
    diagnostics.push_back(
        "the knowledge base is purely universal; answering against the "
        "propositional rational closure of K_*");
    for (const auto& c : q) {
      if (c.standpoint != Vocabulary::kUniversal)
        throw ClosedWorldError(vocab.standpoint(c.standpoint).name);
      bool r = rc_prop_ranked(*star_rank, c.body);
      if (g.trace)
        trace.push_back({print_normal_statement(c, vocab), "K_*", r});
      if (!r) verdict = false;
    }
  } else {
    verdict = rc_standpoint(ps, vocab, q, g.trace ? &trace : nullptr, &diagnostics);
  }

  if (g.json) {
    json tr = json::array();
    for (const auto& t : trace)
      tr.push_back({{"query", t.query}, {"kb", t.label}, {"verdict", t.verdict}});
    json out{{"schema", kSchemaVersion}, {"verdict", verdict}, {"mode", "rc-entailment"},
             {"diagnostics", diagnostics}};
    if (g.trace) out["trace"] = std::move(tr);
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& d : diagnostics) std::cerr << "note: " << d << "\n";
    if (g.trace)
      for (const auto& t : trace)
        std::cout << "[trace] " << t.label << " : " << t.query << " -> "
                  << (t.verdict ? "true" : "false") << "\n";
    std::cout << (verdict ? "true" : "false") << "\n";
  }
  return verdict ? 0 : 1;
}

int cmd_model(const GlobalOpts& g, const std::string& kb_path, bool check) {
  KnowledgeBase kb = parse_kb_file(kb_path);
  NormalKB nk = normalize_kb(kb);
  RankedStandpointStructure m = build_rc_structure(nk, g.max_atoms);
  bool valid = is_valid(m);
  bool model_ok = true;
  if (check) model_ok = check_model(m, nk);
  if (g.json) {
    json out = structure_to_json(m);
    out["schema"] = kSchemaVersion;
    out["valid"] = valid;
    if (check) out["model"] = model_ok;
    std::cout << out.dump(2) << "\n";
  } else {
    for (size_t i = 0; i < m.pi.size(); i++) {
      std::cout << m.pi[i] << ":\n";
      std::istringstream table(ri_to_table(m.gamma[i], m.vocabulary));
      std::string line;
      while (std::getline(table, line)) std::cout << "  " << line << "\n";
    }
    for (const auto& [name, idx] : m.sigma) {
      std::cout << "sigma(" << name << "):";
      for (int i : idx) std::cout << " " << m.pi[i];
      std::cout << "\n";
    }
    std::cout << "valid: " << (valid ? "yes" : "no") << "\n";
    if (check) std::cout << "model of the knowledge base: " << (model_ok ? "yes" : "no") << "\n";
  }
  return check && !model_ok ? 1 : 0;
}

int cmd_check(const GlobalOpts& g, const std::string& kb_path,
              const std::string& structure_path) {
  KnowledgeBase kb = parse_kb_file(kb_path);
  NormalKB nk = normalize_kb(kb);
  json j = json::parse(read_file(structure_path));
  RankedStandpointStructure m = structure_from_json(j, nk.vocabulary);
  std::vector<std::string> shape = structure_shape_errors(m);
  if (!shape.empty()) {
    std::string msg = "malformed structure:";
    for (const auto& e : shape) msg += "\n  " + e;
    throw std::runtime_error(msg);
  }
  bool valid = is_valid(m);
  bool model_ok = check_model(m, nk);
  if (g.json) {
    json out{{"schema", kSchemaVersion}, {"valid", valid}, {"model", model_ok},
             {"mode", "model-check"}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "valid: " << (valid ? "yes" : "no") << "\n";
    std::cout << "model of the knowledge base: " << (model_ok ? "yes" : "no") << "\n";
  }
  return model_ok ? 0 : 1;
}

std::vector<KlmPtr> propositional_statements(const NormalKB& nk) {
  std::vector<KlmPtr> out;
  for (const auto& s : nk.statements) {
    if (!s.is_box || s.standpoint != Vocabulary::kUniversal)
      throw std::runtime_error(
          "the oracle works on propositional knowledge bases; every statement "
          "must be a bare KLM statement (no modalities, no sharpenings)");
    out.push_back(s.body);
  }
  if (!nk.sharpenings.empty())
    throw std::runtime_error("sharpenings are not propositional statements");
  return out;
}

int cmd_oracle_min_model(const GlobalOpts& g, const std::string& kb_path, bool serial) {
  KnowledgeBase kb = parse_kb_file(kb_path);
  NormalKB nk = normalize_kb(kb);
  std::vector<KlmPtr> stmts = propositional_statements(nk);
  RankedInterpretation r = serial
                               ? minimal_model_oracle_serial(stmts, nk.vocabulary)
                               : minimal_model_oracle(stmts, nk.vocabulary);
  if (g.json) {
    json out = ri_to_json(r, nk.vocabulary);
    out["schema"] = kSchemaVersion;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << ri_to_table(r, nk.vocabulary);
  }
  return 0;
}

int cmd_oracle_count(const GlobalOpts& g, int atoms, bool serial) {
  std::uint64_t n = serial ? count_ranked_interpretations_serial(atoms)
                           : count_ranked_interpretations(atoms);
  if (g.json) {
    json out{{"schema", kSchemaVersion}, {"atoms", atoms}, {"count", n}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << n << "\n";
  }
  return 0;
}

int cmd_oracle_bounded(const GlobalOpts& g, const std::string& kb_path,
                       const std::string& query, int max_pi,
                       std::uint64_t max_structures) {
  KnowledgeBase kb = parse_kb_file(kb_path);
  DrslPtr q = parse_statement_extend(query, kb.vocabulary);
  EnumerationBudget budget;
  budget.max_atoms = kb.vocabulary.n_atoms();
  budget.max_precisifications = max_pi;
  budget.max_structures = max_structures;
  BoundedEntailResult res = bounded_ranked_entailment(kb, q, budget);
  if (g.json) {
    json out{{"schema", kSchemaVersion}, {"entailed", res.entailed},
             {"budget_exhausted", res.budget_exhausted},
             {"structures_checked", res.structures_checked}};
    if (res.counterexample) out["counterexample"] = structure_to_json(*res.counterexample);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (res.entailed ? "no counterexample" : "counterexample found") << " ("
              << res.structures_checked << " structures)\n";
    if (res.budget_exhausted) std::cerr << "note: structure budget exhausted\n";
    if (res.counterexample)
      std::cout << structure_to_json(*res.counterexample).dump(2) << "\n";
  }
  return res.entailed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Defeasible restricted standpoint logic reasoner"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_flag("--json", g.json, "JSON output");
  app.add_flag("--trace", g.trace, "per-knowledge-base verdicts for entail");
  app.add_option("--max-atoms", g.max_atoms, "atom cap for model construction")
      ->default_val(20);

  std::string kb_path, query, query_file, label, structure_path;
  bool check_flag = false, serial = false;
  int atoms = 3, max_pi = 2;
  std::uint64_t max_structures = 5'000'000;

  auto* p_parse = app.add_subcommand("parse", "parse and reprint a knowledge base");
  p_parse->add_option("kb", kb_path, "knowledge base file")->required();

  auto* p_norm = app.add_subcommand("normalize", "normal form of a knowledge base");
  p_norm->add_option("kb", kb_path)->required();

  auto* p_split = app.add_subcommand("split", "propositional split and Know sets");
  p_split->add_option("kb", kb_path)->required();

  auto* p_base = app.add_subcommand("baserank", "base ranks of one split base");
  p_base->add_option("kb", kb_path)->required();
  p_base->add_option("--label", label, "split base label, e.g. K_C or C");

  auto* p_entail = app.add_subcommand("entail", "rational closure entailment");
  p_entail->add_option("kb", kb_path)->required();
  p_entail->add_option("query", query, "query statement");
  p_entail->add_option("--query-file", query_file,
                       "file of statements, read as a conjunction");

  auto* p_model = app.add_subcommand("model", "the rational closure structure");
  p_model->add_option("kb", kb_path)->required();
  p_model->add_flag("--check", check_flag, "re-verify it models the knowledge base");

  auto* p_check = app.add_subcommand("check", "check a structure against a knowledge base");
  p_check->add_option("kb", kb_path)->required();
  p_check->add_option("structure", structure_path, "structure JSON file")->required();

  auto* p_oracle = app.add_subcommand("oracle", "brute-force verification oracles");
  p_oracle->require_subcommand(1);
  auto* p_min = p_oracle->add_subcommand("min-model", "pointwise-minimum ranked model");
  p_min->add_option("kb", kb_path)->required();
  p_min->add_flag("--serial", serial, "serial reference kernel");
  auto* p_count = p_oracle->add_subcommand("count-ri", "count ranked interpretations");
  p_count->add_option("--atoms", atoms)->default_val(3);
  p_count->add_flag("--serial", serial, "serial reference kernel");
  auto* p_bound = p_oracle->add_subcommand("bounded-entail", "bounded ranked entailment");
  p_bound->add_option("kb", kb_path)->required();
  p_bound->add_option("query", query)->required();
  p_bound->add_option("--max-pi", max_pi)->default_val(2);
  p_bound->add_option("--max-structures", max_structures)->default_val(5'000'000);

  for (CLI::App* sc : {p_parse, p_norm, p_split, p_base, p_entail, p_model, p_check,
                       p_oracle, p_min, p_count, p_bound})
    sc->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (p_parse->parsed()) return cmd_parse(g, kb_path);
    if (p_norm->parsed()) return cmd_normalize(g, kb_path);
    if (p_split->parsed()) return cmd_split(g, kb_path);
    if (p_base->parsed()) return cmd_baserank(g, kb_path, label);
    if (p_entail->parsed()) {
      if (query.empty() && query_file.empty())
        return fail(g, "entail needs a query statement or --query-file");
      return cmd_entail(g, kb_path, query, query_file);
    }
    if (p_model->parsed()) return cmd_model(g, kb_path, check_flag);
    if (p_check->parsed()) return cmd_check(g, kb_path, structure_path);
    if (p_oracle->parsed()) {
      if (p_min->parsed()) return cmd_oracle_min_model(g, kb_path, serial);
      if (p_count->parsed()) return cmd_oracle_count(g, atoms, serial);
      if (p_bound->parsed())
        return cmd_oracle_bounded(g, kb_path, query, max_pi, max_structures);
    }
  } catch (const ClosedWorldError& e) {
    return fail(g, e.what());
  } catch (const ParseError& e) {
    return fail(g, e.what());
  } catch (const std::exception& e) {
    return fail(g, e.what());
  }
  return fail(g, "no command");
}
