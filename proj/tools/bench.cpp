#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "drsl/klm.hpp"
#include "drsl/normalize.hpp"
#include "drsl/oracle.hpp"
#include "drsl/standpoint.hpp"

using namespace drsl;

namespace {

double seconds(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-28s %10.3fs %10.3fs %8.2fx\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  int atoms = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("%-28s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

  std::uint64_t c1 = 0, c2 = 0;
  double ts = seconds([&] { c1 = count_ranked_interpretations_serial(atoms); });
  double tp = seconds([&] { c2 = count_ranked_interpretations(atoms); });
  if (c1 != c2) {
    std::fprintf(stderr, "count mismatch: %llu vs %llu\n", (unsigned long long)c1,
                 (unsigned long long)c2);
    return 1;
  }
  row("count-ri", ts, tp);

  EnumerationBudget budget;
  budget.max_atoms = atoms;
  budget.n_standpoints = 0;
  budget.n_statements = 5;
  KnowledgeBase kb = generate_random_kb(12, budget);
  NormalKB nk = normalize_kb(kb);
  std::vector<KlmPtr> stmts;
  for (const auto& s : nk.statements) stmts.push_back(s.body);

  RankedInterpretation r1, r2;
  ts = seconds([&] { r1 = minimal_model_oracle_serial(stmts, nk.vocabulary, atoms); });
  tp = seconds([&] { r2 = minimal_model_oracle(stmts, nk.vocabulary, atoms); });
  if (!(r1 == r2)) {
    std::fprintf(stderr, "minimal model mismatch between kernels\n");
    return 1;
  }
  row("min-model", ts, tp);

  std::printf("(%llu interpretations over %d atoms)\n", (unsigned long long)c1, atoms);
  return 0;
}
