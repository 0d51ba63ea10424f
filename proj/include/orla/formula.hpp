#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orla/atom.hpp"

namespace orla {

enum class Connective { Atom, Not, And, Or, Implies, Always, Sometime, Before };

/// Immutable formula tree. Cheap to copy (shared nodes); equality and hashing
/// are structural. Or, Implies, Sometime and Before are first-class nodes;
/// their semantics are fixed by the defining equivalences
///   a | b   == !(!a & !b)        a -> b  == !a | b
///   <>a     == ![](!a)           a < b   == b -> <>a
class Formula {
 public:
  Connective kind() const { return node_->kind; }
  bool is_atom() const { return node_->kind == Connective::Atom; }

  /// Only valid for atom nodes.
  const GoalAtom& atom() const;

  /// 0 for atoms, 1 for unary, 2 for binary connectives.
  int arity() const;
  const Formula& child(int index = 0) const;
  const Formula& left() const { return child(0); }
  const Formula& right() const { return child(1); }

  /// Number of nodes in the tree.
  std::size_t size() const { return node_->size; }

  bool operator==(const Formula& other) const;
  std::size_t hash() const { return node_->hash; }

 private:
  struct Node {
    Connective kind;
    std::optional<GoalAtom> atom;  // set iff kind == Atom
    std::vector<Formula> children;
    std::size_t size;
    std::size_t hash;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Connective kind, std::optional<GoalAtom> atom,
                      std::vector<Formula> children);

  std::shared_ptr<const Node> node_;

  friend Formula make_atom(GoalAtom atom);
  friend Formula make_not(Formula operand);
  friend Formula make_and(Formula lhs, Formula rhs);
  friend Formula make_or(Formula lhs, Formula rhs);
  friend Formula make_implies(Formula lhs, Formula rhs);
  friend Formula make_always(Formula operand);
  friend Formula make_sometime(Formula operand);
  friend Formula make_before(Formula lhs, Formula rhs);
};

Formula make_atom(GoalAtom atom);
Formula make_not(Formula operand);
Formula make_and(Formula lhs, Formula rhs);
Formula make_or(Formula lhs, Formula rhs);
Formula make_implies(Formula lhs, Formula rhs);
Formula make_always(Formula operand);
Formula make_sometime(Formula operand);
Formula make_before(Formula lhs, Formula rhs);

/// The atom leaves, sorted and deduplicated.
std::vector<GoalAtom> atoms(const Formula& formula);
std::vector<GoalAtom> atoms(const std::vector<Formula>& formulas);

/// Every node of the tree including the formula itself, deduplicated and
/// ordered by (size, rendered text). Derived connectives are not expanded;
/// the truth table works on surface nodes.
std::vector<Formula> subformulas(const Formula& formula);

struct FormulaHash {
  std::size_t operator()(const Formula& formula) const { return formula.hash(); }
};

/// Deterministic total order: by size, then rendered text.
struct FormulaLess {
  bool operator()(const Formula& lhs, const Formula& rhs) const;
};

}  // namespace orla
