#include "oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace orla::testing {

Formula expand_derived(const Formula& formula) {
  switch (formula.kind()) {
    case Connective::Atom:
      return formula;
    case Connective::Not:
      return make_not(expand_derived(formula.child()));
    case Connective::And:
      return make_and(expand_derived(formula.left()),
                      expand_derived(formula.right()));
    case Connective::Always:
      return make_always(expand_derived(formula.child()));
    case Connective::Or:
      // a | b == !(!a & !b)
      return make_not(make_and(make_not(expand_derived(formula.left())),
                               make_not(expand_derived(formula.right()))));
    case Connective::Implies:
      // a -> b == !a | b
      return expand_derived(make_or(make_not(formula.left()), formula.right()));
    case Connective::Sometime:
      // <>a == ![](!a)
      return make_not(make_always(make_not(expand_derived(formula.child()))));
    case Connective::Before:
      // a < b == b -> <>a
      return expand_derived(
          make_implies(formula.right(), make_sometime(formula.left())));
  }
  throw std::logic_error("unreachable connective");
}

namespace {

bool eval_core(const OrderedModel& model, const Formula& formula) {
  switch (formula.kind()) {
    case Connective::Atom:
      return model.contains(formula.atom());
    case Connective::Not:
      return !eval_core(model, formula.child());
    case Connective::And:
      return eval_core(model, formula.left()) &&
             eval_core(model, formula.right());
    case Connective::Always:
      for (std::size_t k = 0; k <= model.size(); ++k) {
        if (!eval_core(model.prefix(k), formula.child())) return false;
      }
      return true;
    default:
      throw std::logic_error("eval_core expects expanded formulas");
  }
}

}  // namespace

bool naive_eval(const OrderedModel& model, const Formula& formula) {
  return eval_core(model, expand_derived(formula));
}

bool naive_eval(const OrderedModel& model, const std::vector<Formula>& theory) {
  return std::all_of(theory.begin(), theory.end(), [&](const Formula& f) {
    return naive_eval(model, f);
  });
}

namespace {

void extend(const OrderedModel& current, const std::vector<GoalAtom>& alphabet,
            std::vector<OrderedModel>& out) {
  out.push_back(current);
  for (const GoalAtom& atom : alphabet) {
    if (!current.contains(atom)) extend(current.extended(atom), alphabet, out);
  }
}

}  // namespace

std::vector<OrderedModel> enumerate_extensions(
    const OrderedModel& prefix, const std::vector<GoalAtom>& alphabet) {
  std::vector<GoalAtom> sorted = alphabet;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<OrderedModel> out;
  extend(prefix, sorted, out);
  return out;
}

std::optional<OrderedModel> brute_satisfiable(
    const std::vector<Formula>& theory, const OrderedModel& prefix,
    const std::vector<GoalAtom>& alphabet) {
  for (const OrderedModel& model : enumerate_extensions(prefix, alphabet)) {
    if (naive_eval(model, theory)) return model;
  }
  return std::nullopt;
}

bool brute_entails(const std::vector<Formula>& theory, const Formula& formula) {
  std::vector<GoalAtom> alphabet = atoms(theory);
  for (const GoalAtom& atom : atoms(formula)) alphabet.push_back(atom);
  for (const OrderedModel& model :
       enumerate_extensions(OrderedModel(), alphabet)) {
    if (naive_eval(model, theory) && !naive_eval(model, formula)) return false;
  }
  return true;
}

}  // namespace orla::testing
