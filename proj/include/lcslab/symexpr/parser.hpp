#pragma once

#include <span>
#include <string>
#include <string_view>

#include "lcslab/symexpr/expr.hpp"

namespace lcs {

/// True for names matching [a-zA-Z][a-zA-Z0-9_]*.
bool is_valid_var_name(std::string_view name);

/// Parses an arithmetic expression over the named variables.
///
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := base ('^' int)?
///   base   := int | var | '(' expr ')' | '-' factor
///
/// Unary minus applies to a whole factor, so "-x^2" is -(x^2). Exponents are
/// integers and may be negative ("z^-2" or "z^(-2)"). Variable i of the result
/// is `vars[i]`. Throws ParseError with the offending offset.
Expr parse(std::string_view text, std::span<const std::string> vars);

/// Parses a rational constant such as "3", "-1/2" or "2/4".
mpq_class parse_rational(std::string_view text);

}  // namespace lcs
