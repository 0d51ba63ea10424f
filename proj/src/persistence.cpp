#include "orla/persistence.hpp"

#include <algorithm>
#include <stdexcept>

#include "orla/eval.hpp"

namespace orla {

const char* to_string(PersistenceClass cls) {
  switch (cls) {
    case PersistenceClass::PositivePersistent: return "positive";
    case PersistenceClass::NegativePersistent: return "negative";
    case PersistenceClass::Unknown: return "unknown";
  }
  return "?";
}

namespace {

void scan_polarities(const Formula& formula, bool positive, bool& any_positive,
                     bool& any_negative) {
  switch (formula.kind()) {
    case Connective::Atom:
      (positive ? any_positive : any_negative) = true;
      return;
    case Connective::Not:
      scan_polarities(formula.child(), !positive, any_positive, any_negative);
      return;
    case Connective::And:
    case Connective::Or:
      scan_polarities(formula.left(), positive, any_positive, any_negative);
      scan_polarities(formula.right(), positive, any_positive, any_negative);
      return;
    case Connective::Implies:
      // !lhs | rhs
      scan_polarities(formula.left(), !positive, any_positive, any_negative);
      scan_polarities(formula.right(), positive, any_positive, any_negative);
      return;
    case Connective::Always:
      scan_polarities(formula.child(), positive, any_positive, any_negative);
      return;
    case Connective::Sometime:
      // ![](!x): two flips cancel.
      scan_polarities(formula.child(), positive, any_positive, any_negative);
      return;
    case Connective::Before:
      // lhs < rhs == rhs -> <>lhs
      scan_polarities(formula.left(), positive, any_positive, any_negative);
      scan_polarities(formula.right(), !positive, any_positive, any_negative);
      return;
  }
}

}  // namespace

PersistenceClass classify_persistence(const Formula& formula) {
  bool any_positive = false;
  bool any_negative = false;
  scan_polarities(formula, true, any_positive, any_negative);
  if (any_positive && !any_negative) return PersistenceClass::PositivePersistent;
  if (any_negative && !any_positive) return PersistenceClass::NegativePersistent;
  return PersistenceClass::Unknown;
}

PersistenceCheck check_persistence_semantic(const Formula& formula,
                                            const std::vector<GoalAtom>& alphabet,
                                            std::size_t bound) {
  std::vector<GoalAtom> atoms = alphabet;
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  if (atoms.size() > bound) {
    throw std::invalid_argument(
        "semantic persistence check limited to " + std::to_string(bound) +
        " atoms, got " + std::to_string(atoms.size()));
  }

  // Every prefix pair M <= M' over the alphabet shows up as a pair of columns
  // in the truth table of some full permutation, so scanning each
  // permutation's column of the formula for a t->f (resp. f->t) step decides
  // both properties.
  PersistenceCheck result{true, true};
  std::vector<GoalAtom> perm = atoms;
  do {
    EvalTable table = eval_table(OrderedModel(perm), formula);
    bool seen_true = false;
    bool seen_false = false;
    for (std::size_t k = 0; k <= perm.size(); ++k) {
      const bool truth = table.query_value(k);
      if (seen_true && !truth) result.positive = false;
      if (seen_false && truth) result.negative = false;
      seen_true = seen_true || truth;
      seen_false = seen_false || !truth;
    }
    if (!result.positive && !result.negative) break;
  } while (std::next_permutation(perm.begin(), perm.end()));

  return result;
}

}  // namespace orla
