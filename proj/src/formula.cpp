#include "orla/formula.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "orla/parser.hpp"

namespace orla {

namespace {

std::size_t combine(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_atom(const GoalAtom& atom) {
  std::size_t h = std::hash<std::string>{}(atom.subject);
  return combine(h, std::hash<std::string>{}(atom.object));
}

}  // namespace

const GoalAtom& Formula::atom() const {
  if (!node_->atom) throw std::logic_error("formula node is not an atom");
  return *node_->atom;
}

int Formula::arity() const { return static_cast<int>(node_->children.size()); }

const Formula& Formula::child(int index) const {
  return node_->children.at(static_cast<std::size_t>(index));
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (node_->hash != other.node_->hash || node_->kind != other.node_->kind ||
      node_->size != other.node_->size) {
    return false;
  }
  if (node_->kind == Connective::Atom) return *node_->atom == *other.node_->atom;
  for (std::size_t i = 0; i < node_->children.size(); ++i) {
    if (!(node_->children[i] == other.node_->children[i])) return false;
  }
  return true;
}

Formula Formula::make(Connective kind, std::optional<GoalAtom> atom,
                      std::vector<Formula> children) {
  std::size_t size = 1;
  std::size_t hash = static_cast<std::size_t>(kind) * 0x2545f4914f6cdd1dULL;
  if (atom) hash = combine(hash, hash_atom(*atom));
  for (const Formula& child : children) {
    size += child.size();
    hash = combine(hash, child.hash());
  }
  auto node = std::make_shared<Node>(
      Node{kind, std::move(atom), std::move(children), size, hash});
  return Formula(std::move(node));
}

Formula make_atom(GoalAtom atom) {
  return Formula::make(Connective::Atom, std::move(atom), {});
}

Formula make_not(Formula operand) {
  return Formula::make(Connective::Not, std::nullopt, {std::move(operand)});
}

Formula make_and(Formula lhs, Formula rhs) {
  return Formula::make(Connective::And, std::nullopt,
                       {std::move(lhs), std::move(rhs)});
}

Formula make_or(Formula lhs, Formula rhs) {
  return Formula::make(Connective::Or, std::nullopt,
                       {std::move(lhs), std::move(rhs)});
}

Formula make_implies(Formula lhs, Formula rhs) {
  return Formula::make(Connective::Implies, std::nullopt,
                       {std::move(lhs), std::move(rhs)});
}

Formula make_always(Formula operand) {
  return Formula::make(Connective::Always, std::nullopt, {std::move(operand)});
}

Formula make_sometime(Formula operand) {
  return Formula::make(Connective::Sometime, std::nullopt, {std::move(operand)});
}

Formula make_before(Formula lhs, Formula rhs) {
  return Formula::make(Connective::Before, std::nullopt,
                       {std::move(lhs), std::move(rhs)});
}

namespace {

void collect_atoms(const Formula& formula, std::vector<GoalAtom>& out) {
  if (formula.is_atom()) {
    out.push_back(formula.atom());
    return;
  }
  for (int i = 0; i < formula.arity(); ++i) collect_atoms(formula.child(i), out);
}

void collect_subformulas(const Formula& formula, std::vector<Formula>& out,
                         std::unordered_set<Formula, FormulaHash>& seen) {
  if (seen.insert(formula).second) out.push_back(formula);
  for (int i = 0; i < formula.arity(); ++i) {
    collect_subformulas(formula.child(i), out, seen);
  }
}

}  // namespace

std::vector<GoalAtom> atoms(const Formula& formula) {
  std::vector<GoalAtom> out;
  collect_atoms(formula, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<GoalAtom> atoms(const std::vector<Formula>& formulas) {
  std::vector<GoalAtom> out;
  for (const Formula& formula : formulas) collect_atoms(formula, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Formula> subformulas(const Formula& formula) {
  std::vector<Formula> out;
  std::unordered_set<Formula, FormulaHash> seen;
  collect_subformulas(formula, out, seen);
  std::sort(out.begin(), out.end(), FormulaLess{});
  return out;
}

bool FormulaLess::operator()(const Formula& lhs, const Formula& rhs) const {
  if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
  if (lhs == rhs) return false;
  return render(lhs) < render(rhs);
}

}  // namespace orla
