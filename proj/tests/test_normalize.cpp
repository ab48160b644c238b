#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "drsl/normalize.hpp"
#include "drsl/oracle.hpp"
#include "drsl/parse.hpp"

using namespace drsl;

namespace {

Vocabulary vocab_st() {
  Vocabulary v;
  for (const char* a : {"a", "b", "c"}) v.add_atom(a);
  v.add_standpoint("s");
  v.add_standpoint("t");
  return v;
}

std::vector<std::string> normalized_prints(const DrslPtr& st, const Vocabulary& v) {
  std::vector<std::string> out;
  for (const auto& ns : normalize_statement(st)) out.push_back(print_normal_statement(ns, v));
  return out;
}

}  // namespace

TEST_CASE("collapse_modalities keeps the innermost binder") {
  Vocabulary v = vocab_st();
  auto collapsed = [&](const char* text) {
    return print_statement(collapse_modalities(parse_statement(text, v)), v);
  };
  CHECK(collapsed("[s] [t] (a ~> b)") == "[t] (a ~> b)");
  CHECK(collapsed("[s] <t> (a ~> b)") == "<t> (a ~> b)");
  CHECK(collapsed("<s> <s> [t] (a ~> b)") == "[t] (a ~> b)");
  CHECK(collapsed("[s] (a ~> b)") == "[s] (a ~> b)");
  CHECK(collapsed("a ~> b") == "a ~> b");
  CHECK(collapsed("[s] ((a ~> b) & [t] (b ~> c))") ==
        "[s] ((a ~> b) & [t] (b ~> c))");  // only stacked binders collapse
}

TEST_CASE("normalize_statement shapes") {
  Vocabulary v = vocab_st();
  auto n = [&](const char* text) {
    return normalized_prints(parse_statement(text, v), v);
  };
  SUBCASE("bare statement gets the universal box") {
    CHECK(n("a ~> b") == std::vector<std::string>{"[*] (a ~> b)"});
    CHECK(n("a") == std::vector<std::string>{"[*] (a)"});
  }
  SUBCASE("box distributes over conjunction") {
    CHECK(n("[s] ((a ~> b) & (b ~> c) & c)") ==
          std::vector<std::string>{"[s] (a ~> b)", "[s] (b ~> c)", "[s] (c)"});
  }
  SUBCASE("diamond keeps its klm residue whole") {
    CHECK(n("<s> ((a ~> b) & (b ~> c))") ==
          std::vector<std::string>{"<s> ((a ~> b) & (b ~> c))"});
  }
  SUBCASE("diamond extracts modal conjuncts") {
    CHECK(n("<s> ((a ~> b) & [t] (b ~> c))") ==
          std::vector<std::string>{"<s> (a ~> b)", "[t] (b ~> c)"});
  }
  SUBCASE("worked combination") {
    CHECK(n("<s> ((a ~> b) & (b ~> c) & [t] (c ~> a)) & b") ==
          std::vector<std::string>{"<s> ((a ~> b) & (b ~> c))", "[t] (c ~> a)",
                                   "[*] (b)"});
  }
  SUBCASE("stacked modalities collapse first") {
    CHECK(n("[s] [t] (a ~> b)") == std::vector<std::string>{"[t] (a ~> b)"});
    CHECK(n("<s> [t] (a ~> b)") == std::vector<std::string>{"[t] (a ~> b)"});
  }
  SUBCASE("top level conjunction concatenates") {
    CHECK(n("[s] (a ~> b) & <t> (b ~> c)") ==
          std::vector<std::string>{"[s] (a ~> b)", "<t> (b ~> c)"});
  }
}

TEST_CASE("normalize output is modality free and idempotent") {
  Vocabulary v = vocab_st();
  std::mt19937_64 rng(23);
  for (int round = 0; round < 300; round++) {
    DrslPtr st = random_statement(rng, v);
    CAPTURE(round);
    CAPTURE(print_statement(st, v));
    auto ns = normalize_statement(st);
    CHECK(!ns.empty());
    for (const auto& one : ns) {
      CHECK(is_pure_klm(mk_drsl_klm(one.body)));
      auto again = normalize_statement(normal_to_drsl(one));
      REQUIRE(again.size() == 1);
      CHECK(again[0].is_box == one.is_box);
      CHECK(again[0].standpoint == one.standpoint);
      CHECK(klm_equal(again[0].body, one.body));
    }
  }
}

TEST_CASE("normal_to_drsl round trip") {
  Vocabulary v = vocab_st();
  NormalStatement ns;
  ns.is_box = false;
  ns.standpoint = v.standpoint_id("t");
  ns.body = mk_klm_di(mk_atom(0), mk_atom(1));
  DrslPtr st = normal_to_drsl(ns);
  REQUIRE(st->kind == DrslKind::Diamond);
  CHECK(st->standpoint == ns.standpoint);
  CHECK(print_statement(st, v) == "<t> (a ~> b)");
  NormalStatement boxed;
  boxed.body = ns.body;  // defaults: box, universal
  CHECK(print_statement(normal_to_drsl(boxed), v) == "[*] (a ~> b)");
}

TEST_CASE("normalize_kb") {
  KnowledgeBase kb = parse_kb(
      "standpoints: s, t\n"
      "s <= t\n"
      "[s] ((a ~> b) & (b ~> c))\n"
      "<t> (a ~> c)\n"
      "c ~> a\n");
  NormalKB nk = normalize_kb(kb);
  REQUIRE(nk.sharpenings.size() == 1);
  CHECK(nk.sharpenings[0].first == kb.vocabulary.standpoint_id("s"));
  CHECK(nk.sharpenings[0].second == kb.vocabulary.standpoint_id("t"));
  REQUIRE(nk.statements.size() == 4);
  CHECK(print_normal_statement(nk.statements[0], nk.vocabulary) == "[s] (a ~> b)");
  CHECK(print_normal_statement(nk.statements[1], nk.vocabulary) == "[s] (b ~> c)");
  CHECK(print_normal_statement(nk.statements[2], nk.vocabulary) == "<t> (a ~> c)");
  CHECK(print_normal_statement(nk.statements[3], nk.vocabulary) == "[*] (c ~> a)");
}

TEST_CASE("print_normal_kb lists sharpenings then statements") {
  KnowledgeBase kb = parse_kb("standpoints: s\ns <= *\n[s] (a ~> b)\n");
  NormalKB nk = normalize_kb(kb);
  std::string text = print_normal_kb(nk);
  CHECK(text.find("s <= *") != std::string::npos);
  CHECK(text.find("[s] (a ~> b)") != std::string::npos);
  CHECK(text.find("s <= *") < text.find("[s] (a ~> b)"));
}
