#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "laycheck/layout.hpp"

namespace laycheck {

struct SourceSpan {
  size_t begin = 0;
  size_t end = 0;
};

// Grammar:
//   layout := item*
//   item   := "f" | "v" | "c" | "p(" path "," nat ")" | "[" layout "]"
//   path   := nat ("." nat)*
// "#" starts a line comment; whitespace separates tokens.
class ParseError : public std::runtime_error {
 public:
  ParseError(SourceSpan span, std::string message, std::string expected)
      : std::runtime_error(message + " at offset " +
                           std::to_string(span.begin)),
        span(span),
        message(std::move(message)),
        expected(std::move(expected)) {}

  SourceSpan span;
  std::string message;
  std::string expected;
};

LayoutTree parse_dsl(const std::string& text);

// Canonical single-space-separated rendering; parse_dsl(print_dsl(t)) == t.
std::string print_dsl(const LayoutTree& tree);

}  // namespace laycheck
