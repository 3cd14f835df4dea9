#pragma once

#include <span>
#include <string>
#include <string_view>

#include "ratdyn/exactalg/rational_function.hpp"

namespace ratdyn {

/// Position of the first character of an embedded expression, used to
/// report errors in the coordinates of the enclosing file.
struct SourceOrigin {
  int line = 1;
  int column = 1;
};

/// Parses a rational expression over the declared variables.
///
/// Grammar (loosest binding first):
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | '+' unary | power
///   power   := primary ('^' power)?          right-associative
///   primary := integer | identifier | '(' expr ')'
///
/// Exponents must evaluate to non-negative integer constants. Throws
/// ParseError for lexical/syntax errors, undeclared identifiers and
/// division by an expression that normalizes to zero.
RationalFunction parse_expression(std::string_view src, std::span<const std::string> variables,
                                  SourceOrigin origin = {});

/// True for identifiers matching [A-Za-z][A-Za-z0-9_]*.
bool is_identifier(std::string_view name);

}  // namespace ratdyn
