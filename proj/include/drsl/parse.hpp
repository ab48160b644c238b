#pragma once

#include <stdexcept>
#include <string>

#include "drsl/syntax.hpp"

namespace drsl {

struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
        line(line), col(col) {}
  int line;
  int col;
};

// Strict parsers: every atom and standpoint must already be in the vocabulary.
BoolPtr parse_bool(const std::string& text, const Vocabulary& vocab);
DrslPtr parse_statement(const std::string& text, const Vocabulary& vocab);

// Extending parser for queries: new atoms and standpoints are added to vocab.
DrslPtr parse_statement_extend(const std::string& text, Vocabulary& vocab);

// KB document: optional `standpoints:` header, one statement per line,
// `#` comments. With a header, statement standpoints must be declared.
KnowledgeBase parse_kb(const std::string& text);
KnowledgeBase parse_kb_file(const std::string& path);

}  // namespace drsl
