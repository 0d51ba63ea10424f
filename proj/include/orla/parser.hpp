#pragma once

#include <string_view>
#include <vector>

#include "orla/errors.hpp"
#include "orla/formula.hpp"

namespace orla {

/// Parses the surface syntax
///
///   atom      := ident | '(' ident ',' ident ')'
///   unary     := ('!' | '[]' | '<>') unary | atom | '(' formula ')'
///   conj      := unary ('&' unary)*            left associative
///   disj      := conj ('|' conj)*              left associative
///   ordered   := disj ('<' disj)?              non-associative
///   formula   := ordered ('->' formula)?       right associative
///
/// so `!`, `[]`, `<>` bind tightest, then `&`, `|`, `<`, and `->` loosest.
/// A chain `a < b < c` is rejected; parenthesize the intended reading.
Formula parse(std::string_view text);

/// A bare `ident` or a pair `(ident,ident)`.
GoalAtom parse_atom(std::string_view text);

/// Minimal-parentheses rendering of the same syntax; the operands of unary
/// connectives and of `<` are parenthesized whenever they are not atoms.
/// parse(render(f)) == f.
std::string render(const Formula& formula);

}  // namespace orla
