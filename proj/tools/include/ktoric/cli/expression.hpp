#pragma once

#include "ktoric/abelian.hpp"
#include "ktoric/group_ring.hpp"

#include <map>
#include <string>
#include <string_view>

namespace ktoric::cli {

using SymbolTable = std::map<std::string, GroupElement>;

/// Parses an element of Z[G].
///
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' natural)?
///   primary := integer | monomial | symbol | '(' expr ')'
///   monomial:= 't' '^' '[' ints? (';' ints?)? ']'
///
/// Monomial exponents are canonical coordinates of `group`; symbols name fixed
/// monomials. Throws InputError with the offending position.
GroupRingElement parse_expression(std::string_view text, const GroupHandle& group, const SymbolTable& symbols = {});

} // namespace ktoric::cli
