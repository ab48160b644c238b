#include "drsl/parse.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>
#include <vector>

namespace drsl {
namespace {

enum class Tok {
  Ident, True, False, Star, Not, And, Or, Arrow, Iff, Squig, Leq,
  LParen, RParen, LBracket, RBracket, LAngle, RAngle, End
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  Lexer(const std::string& text, int line) : text_(text), line_(line) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_ws();
      int col = col_();
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", line_, col});
        return out;
      }
      char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string id = ident();
        Tok k = id == "true" ? Tok::True : id == "false" ? Tok::False : Tok::Ident;
        out.push_back({k, id, line_, col});
        continue;
      }
      switch (c) {
        case '*': pos_++; out.push_back({Tok::Star, "*", line_, col}); break;
        case '!': pos_++; out.push_back({Tok::Not, "!", line_, col}); break;
        case '&': pos_++; out.push_back({Tok::And, "&", line_, col}); break;
        case '|': pos_++; out.push_back({Tok::Or, "|", line_, col}); break;
        case '(': pos_++; out.push_back({Tok::LParen, "(", line_, col}); break;
        case ')': pos_++; out.push_back({Tok::RParen, ")", line_, col}); break;
        case '[': pos_++; out.push_back({Tok::LBracket, "[", line_, col}); break;
        case ']': pos_++; out.push_back({Tok::RBracket, "]", line_, col}); break;
        case '>': pos_++; out.push_back({Tok::RAngle, ">", line_, col}); break;
        case '-':
          if (peek(1) == '>') { pos_ += 2; out.push_back({Tok::Arrow, "->", line_, col}); break; }
          throw ParseError(line_, col, "stray '-'");
        case '~':
          if (peek(1) == '>') { pos_ += 2; out.push_back({Tok::Squig, "~>", line_, col}); break; }
          throw ParseError(line_, col, "stray '~'");
        case '<':
          if (peek(1) == '-' && peek(2) == '>') { pos_ += 3; out.push_back({Tok::Iff, "<->", line_, col}); break; }
          if (peek(1) == '=') { pos_ += 2; out.push_back({Tok::Leq, "<=", line_, col}); break; }
          pos_++; out.push_back({Tok::LAngle, "<", line_, col}); break;
        default:
          throw ParseError(line_, col, std::string("unexpected character '") + c + "'");
      }
    }
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) pos_++;
  }
  char peek(size_t off) const {
    return pos_ + off < text_.size() ? text_[pos_ + off] : '\0';
  }
  std::string ident() {
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      pos_++;
    return text_.substr(start, pos_ - start);
  }
  int col_() const { return static_cast<int>(pos_) + 1; }

  const std::string& text_;
  int line_;
  size_t pos_ = 0;
};

// Parse-time expression tree; one uniform precedence pass, classified into
// Boolean / KLM / DRSL layers afterwards.
struct GExpr;
using GPtr = std::shared_ptr<GExpr>;

struct GExpr {
  enum Kind { Atom, True, False, Not, And, Or, Imp, Iff, Squig, Box, Dia } kind;
  std::string name;  // Atom: atom name; Box/Dia: standpoint name
  GPtr a, b;
  int line = 0, col = 0;
};

GPtr mk_g(GExpr::Kind k, int line, int col) {
  auto g = std::make_shared<GExpr>();
  g->kind = k;
  g->line = line;
  g->col = col;
  return g;
}

class Parser {
 public:
  Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  GPtr parse_expr_top() {
    GPtr e = parse_expr(0);
    expect(Tok::End, "end of input");
    return e;
  }

  bool looks_like_sharpening() const {
    return toks_.size() >= 2 && (toks_[0].kind == Tok::Ident || toks_[0].kind == Tok::Star) &&
           toks_[1].kind == Tok::Leq;
  }

  // name <= name, with '*' forbidden on the left.
  std::pair<Token, Token> parse_sharpening() {
    Token sub = cur();
    if (sub.kind == Tok::Star)
      throw ParseError(sub.line, sub.col, "the universal standpoint '*' cannot appear on the left of '<='");
    advance();
    expect(Tok::Leq, "'<='");
    Token sup = cur();
    if (sup.kind != Tok::Ident && sup.kind != Tok::Star)
      throw ParseError(sup.line, sup.col, "expected a standpoint name after '<='");
    advance();
    expect(Tok::End, "end of input");
    return {sub, sup};
  }

 private:
  struct OpInfo { int prec; bool right_assoc; };

  static bool binop(Tok k, OpInfo& info) {
    switch (k) {
      case Tok::And: info = {5, false}; return true;
      case Tok::Or: info = {4, false}; return true;
      case Tok::Arrow: info = {3, true}; return true;
      case Tok::Iff: info = {2, true}; return true;
      case Tok::Squig: info = {1, false}; return true;
      default: return false;
    }
  }

  GPtr parse_expr(int min_prec) {
    GPtr lhs = parse_unary();
    while (true) {
      OpInfo info;
      if (!binop(cur().kind, info) || info.prec < min_prec) break;
      Token op = cur();
      advance();
      // ~> is non-associative: parse the rhs one level tighter and reject a chain.
      int next_min = info.right_assoc ? info.prec : info.prec + 1;
      GPtr rhs = parse_expr(next_min);
      if (op.kind == Tok::Squig && cur().kind == Tok::Squig)
        throw ParseError(cur().line, cur().col, "'~>' is non-associative; parenthesize to nest");
      GExpr::Kind k = op.kind == Tok::And   ? GExpr::And
                      : op.kind == Tok::Or  ? GExpr::Or
                      : op.kind == Tok::Arrow ? GExpr::Imp
                      : op.kind == Tok::Iff ? GExpr::Iff
                                            : GExpr::Squig;
      GPtr n = mk_g(k, op.line, op.col);
      n->a = lhs;
      n->b = rhs;
      lhs = n;
    }
    return lhs;
  }

  GPtr parse_unary() {
    Token t = cur();
    switch (t.kind) {
      case Tok::Not: {
        advance();
        GPtr n = mk_g(GExpr::Not, t.line, t.col);
        n->a = parse_unary();
        return n;
      }
      case Tok::LParen: {
        advance();
        GPtr e = parse_expr(0);
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::LBracket:
      case Tok::LAngle:
        return parse_modal();
      case Tok::Ident: {
        advance();
        GPtr n = mk_g(GExpr::Atom, t.line, t.col);
        n->name = t.text;
        return n;
      }
      case Tok::True: advance(); return mk_g(GExpr::True, t.line, t.col);
      case Tok::False: advance(); return mk_g(GExpr::False, t.line, t.col);
      default:
        throw ParseError(t.line, t.col, "expected a formula, got '" + describe(t) + "'");
    }
  }

  // A modal prefix binds a parenthesized group, a single atom, a constant,
  // or another modal prefix.
  GPtr parse_modal() {
    Token open = cur();
    bool box = open.kind == Tok::LBracket;
    advance();
    Token sp = cur();
    if (sp.kind != Tok::Ident && sp.kind != Tok::Star)
      throw ParseError(sp.line, sp.col, "expected a standpoint name");
    advance();
    expect(box ? Tok::RBracket : Tok::RAngle, box ? "']'" : "'>'");
    GPtr arg;
    Token t = cur();
    switch (t.kind) {
      case Tok::LParen: {
        advance();
        arg = parse_expr(0);
        expect(Tok::RParen, "')'");
        break;
      }
      case Tok::LBracket:
      case Tok::LAngle:
        arg = parse_modal();
        break;
      case Tok::Ident:
        advance();
        arg = mk_g(GExpr::Atom, t.line, t.col);
        arg->name = t.text;
        break;
      case Tok::True: advance(); arg = mk_g(GExpr::True, t.line, t.col); break;
      case Tok::False: advance(); arg = mk_g(GExpr::False, t.line, t.col); break;
      default:
        throw ParseError(t.line, t.col, "a modal operator must be followed by '(', an atom, or another modality");
    }
    GPtr n = mk_g(box ? GExpr::Box : GExpr::Dia, open.line, open.col);
    n->name = sp.text;
    n->a = arg;
    return n;
  }

  static std::string describe(const Token& t) {
    return t.kind == Tok::End ? "end of input" : t.text;
  }

  const Token& cur() const { return toks_[idx_]; }
  void advance() { idx_++; }
  void expect(Tok k, const std::string& what) {
    if (cur().kind != k)
      throw ParseError(cur().line, cur().col, "expected " + what + ", got '" + describe(cur()) + "'");
    advance();
  }

  std::vector<Token> toks_;
  size_t idx_ = 0;
};

bool contains_squig(const GExpr& g) {
  if (g.kind == GExpr::Squig) return true;
  if (g.a && contains_squig(*g.a)) return true;
  if (g.b && contains_squig(*g.b)) return true;
  return false;
}

bool contains_modal(const GExpr& g) {
  if (g.kind == GExpr::Box || g.kind == GExpr::Dia) return true;
  if (g.a && contains_modal(*g.a)) return true;
  if (g.b && contains_modal(*g.b)) return true;
  return false;
}

void flatten_and(const GPtr& g, std::vector<GPtr>& out) {
  if (g->kind == GExpr::And) {
    flatten_and(g->a, out);
    flatten_and(g->b, out);
  } else {
    out.push_back(g);
  }
}

// Resolution callbacks implement the strict/extending vocabulary policies.
struct Resolver {
  std::function<int(const std::string&, int, int)> atom;
  std::function<int(const std::string&, int, int)> standpoint;
};

BoolPtr to_bool(const GPtr& g, const Resolver& r) {
  switch (g->kind) {
    case GExpr::Atom: return mk_atom(r.atom(g->name, g->line, g->col));
    case GExpr::True: return mk_top();
    case GExpr::False: return mk_bottom();
    case GExpr::Not: return mk_not(to_bool(g->a, r));
    case GExpr::And:
    case GExpr::Or:
    case GExpr::Imp:
    case GExpr::Iff: {
      // Convert left before right so vocabulary extension follows source order.
      BoolPtr a = to_bool(g->a, r);
      BoolPtr b = to_bool(g->b, r);
      switch (g->kind) {
        case GExpr::And: return mk_and(a, b);
        case GExpr::Or: return mk_or(a, b);
        case GExpr::Imp: return mk_implies(a, b);
        default: return mk_iff(a, b);
      }
    }
    case GExpr::Squig:
      throw ParseError(g->line, g->col, "defeasible implication '~>' inside a Boolean position");
    case GExpr::Box:
    case GExpr::Dia:
      throw ParseError(g->line, g->col, "modality inside a Boolean position");
  }
  throw ParseError(g->line, g->col, "unreachable");
}

KlmPtr to_klm(const GPtr& g, const Resolver& r) {
  if (!contains_squig(*g) && !contains_modal(*g)) return mk_klm_bool(to_bool(g, r));
  switch (g->kind) {
    case GExpr::Squig: {
      BoolPtr a = to_bool(g->a, r);
      BoolPtr b = to_bool(g->b, r);
      return mk_klm_di(a, b);
    }
    case GExpr::And: {
      std::vector<GPtr> units;
      flatten_and(g, units);
      std::vector<KlmPtr> ks;
      for (const auto& u : units) ks.push_back(to_klm(u, r));
      KlmPtr acc;
      for (auto it = ks.rbegin(); it != ks.rend(); ++it)
        acc = acc ? mk_klm_conj(*it, acc) : *it;
      return acc;
    }
    default:
      // e.g. (p ~> q) | r, or !(p ~> q): the Boolean converter reports it.
      return mk_klm_bool(to_bool(g, r));
  }
}

DrslPtr to_drsl(const GPtr& g, const Resolver& r) {
  if (!contains_modal(*g)) return mk_drsl_klm(to_klm(g, r));
  switch (g->kind) {
    case GExpr::Box:
    case GExpr::Dia: {
      int sp = r.standpoint(g->name, g->line, g->col);
      DrslPtr body = to_drsl(g->a, r);
      return g->kind == GExpr::Box ? mk_box(sp, body) : mk_diamond(sp, body);
    }
    case GExpr::And: {
      std::vector<GPtr> units;
      flatten_and(g, units);
      std::vector<DrslPtr> ds;
      for (const auto& u : units) ds.push_back(to_drsl(u, r));
      DrslPtr acc;
      for (auto it = ds.rbegin(); it != ds.rend(); ++it)
        acc = acc ? mk_drsl_conj(*it, acc) : *it;
      return acc;
    }
    default:
      // A modality under ~>, !, |, -> or <-> is not in the language.
      return mk_drsl_klm(to_klm(g, r));
  }
}

Resolver strict_resolver(const Vocabulary& vocab) {
  return {
      [&vocab](const std::string& name, int line, int col) {
        int id = vocab.atom_id(name);
        if (id < 0) throw ParseError(line, col, "unknown atom '" + name + "'");
        return id;
      },
      [&vocab](const std::string& name, int line, int col) {
        int id = vocab.standpoint_id(name);
        if (id < 0) throw ParseError(line, col, "unknown standpoint '" + name + "'");
        return id;
      },
  };
}

Resolver extend_resolver(Vocabulary& vocab) {
  return {
      [&vocab](const std::string& name, int, int) { return vocab.add_atom(name); },
      [&vocab](const std::string& name, int, int) { return vocab.add_standpoint(name); },
  };
}

DrslPtr parse_statement_with(const std::string& text, const Resolver& r, int line) {
  Parser p(Lexer(text, line).run());
  if (p.looks_like_sharpening()) {
    auto [sub, sup] = p.parse_sharpening();
    int a = r.standpoint(sub.text, sub.line, sub.col);
    int b = r.standpoint(sup.text, sup.line, sup.col);
    return mk_sharpening(a, b);
  }
  return to_drsl(p.parse_expr_top(), r);
}

std::string trimmed(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

bool valid_ident(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

BoolPtr parse_bool(const std::string& text, const Vocabulary& vocab) {
  Parser p(Lexer(text, 1).run());
  return to_bool(p.parse_expr_top(), strict_resolver(vocab));
}

DrslPtr parse_statement(const std::string& text, const Vocabulary& vocab) {
  return parse_statement_with(text, strict_resolver(vocab), 1);
}

DrslPtr parse_statement_extend(const std::string& text, Vocabulary& vocab) {
  return parse_statement_with(text, extend_resolver(vocab), 1);
}

KnowledgeBase parse_kb(const std::string& text) {
  KnowledgeBase kb;
  bool have_header = false;
  bool seen_statement = false;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    lineno++;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string line = trimmed(raw);
    if (line.empty()) continue;

    if (line.rfind("standpoints:", 0) == 0) {
      if (have_header) throw ParseError(lineno, 1, "duplicate standpoints header");
      if (seen_statement) throw ParseError(lineno, 1, "standpoints header must precede all statements");
      have_header = true;
      std::string rest = line.substr(std::string("standpoints:").size());
      std::istringstream names(rest);
      std::string name;
      while (std::getline(names, name, ',')) {
        name = trimmed(name);
        if (!valid_ident(name))
          throw ParseError(lineno, 1, "bad standpoint name '" + name + "' in header");
        if (kb.vocabulary.standpoint_id(name) >= 0)
          throw ParseError(lineno, 1, "duplicate standpoint declaration '" + name + "'");
        kb.vocabulary.add_standpoint(name);
      }
      continue;
    }

    seen_statement = true;
    Resolver r;
    if (have_header) {
      // Atoms are inferred; standpoints must have been declared.
      r.atom = [&kb](const std::string& name, int, int) { return kb.vocabulary.add_atom(name); };
      r.standpoint = [&kb](const std::string& name, int line, int col) {
        int id = kb.vocabulary.standpoint_id(name);
        if (id < 0) throw ParseError(line, col, "undeclared standpoint '" + name + "'");
        return id;
      };
    } else {
      r = extend_resolver(kb.vocabulary);
    }
    kb.statements.push_back(parse_statement_with(line, r, lineno));
  }
  return kb;
}

KnowledgeBase parse_kb_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_kb(buf.str());
}

}  // namespace drsl
