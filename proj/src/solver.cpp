#include "orla/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "orla/parser.hpp"
#include "orla/persistence.hpp"

namespace orla {

namespace {

std::vector<GoalAtom> sorted_unique(std::vector<GoalAtom> atoms) {
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return atoms;
}

class Search {
 public:
  Search(const std::vector<Formula>& theory, const OrderedModel& prefix,
         std::vector<GoalAtom> alphabet,
         const std::function<bool(const OrderedModel&)>& visit,
         std::optional<std::size_t> exact_length)
      : theory_(theory),
        alphabet_(std::move(alphabet)),
        visit_(visit),
        exact_length_(exact_length) {
    negative_.resize(theory.size());
    for (std::size_t i = 0; i < theory.size(); ++i) {
      negative_[i] = classify_persistence(theory[i]) ==
                     PersistenceClass::NegativePersistent;
    }
    used_.assign(alphabet_.size(), false);
    current_ = prefix.atoms();
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
      if (prefix.contains(alphabet_[i])) used_[i] = true;
    }
  }

  void run() { walk(); }

 private:
  // Returns false to stop the whole search.
  bool walk() {
    const OrderedModel model{std::vector<GoalAtom>(current_)};
    bool all_true = true;
    for (std::size_t i = 0; i < theory_.size(); ++i) {
      if (eval(model, theory_[i])) continue;
      all_true = false;
      // A negatively persistent member that is already false stays false in
      // every extension: the whole subtree is dead.
      if (negative_[i]) return true;
    }
    if (all_true && (!exact_length_ || model.size() == *exact_length_)) {
      if (!visit_(model)) return false;
    }
    if (exact_length_ && model.size() >= *exact_length_) return true;
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
      if (used_[i]) continue;
      used_[i] = true;
      current_.push_back(alphabet_[i]);
      const bool keep_going = walk();
      current_.pop_back();
      used_[i] = false;
      if (!keep_going) return false;
    }
    return true;
  }

  const std::vector<Formula>& theory_;
  std::vector<GoalAtom> alphabet_;
  const std::function<bool(const OrderedModel&)>& visit_;
  std::optional<std::size_t> exact_length_;
  std::vector<bool> negative_;
  std::vector<bool> used_;
  std::vector<GoalAtom> current_;
};

}  // namespace

void for_each_model(const std::vector<Formula>& theory,
                    const OrderedModel& prefix,
                    const std::vector<GoalAtom>& alphabet,
                    const std::function<bool(const OrderedModel&)>& visit,
                    std::optional<std::size_t> exact_length) {
  Search(theory, prefix, sorted_unique(alphabet), visit, exact_length).run();
}

std::vector<OrderedModel> all_models(const std::vector<Formula>& theory,
                                     const OrderedModel& prefix,
                                     const std::vector<GoalAtom>& alphabet,
                                     std::optional<std::size_t> exact_length) {
  std::vector<OrderedModel> out;
  for_each_model(
      theory, prefix, alphabet,
      [&](const OrderedModel& model) {
        out.push_back(model);
        return true;
      },
      exact_length);
  return out;
}

std::optional<OrderedModel> satisfiable(const std::vector<Formula>& theory,
                                        const OrderedModel& required_prefix,
                                        const std::vector<GoalAtom>& alphabet) {
  std::vector<GoalAtom> full = alphabet;
  if (full.empty()) {
    full = atoms(theory);
    const auto& prefix_atoms = required_prefix.atoms();
    full.insert(full.end(), prefix_atoms.begin(), prefix_atoms.end());
  }
  std::optional<OrderedModel> witness;
  for_each_model(theory, required_prefix, full, [&](const OrderedModel& model) {
    witness = model;
    return false;
  });
  return witness;
}

bool entails(const std::vector<Formula>& theory, const Formula& formula) {
  std::vector<Formula> refutation = theory;
  refutation.push_back(make_not(formula));
  return !satisfiable(refutation).has_value();
}

bool is_subgoal(const std::vector<Formula>& theory, const Formula& psi,
                const Formula& phi) {
  return entails(theory, make_always(make_before(psi, phi)));
}

Formula simplify_subgoal(const Formula& psi, const Formula& phi) {
  if (classify_persistence(psi) != PersistenceClass::PositivePersistent) {
    throw std::invalid_argument(
        "simplify_subgoal requires a positively persistent subgoal, got " +
        render(psi));
  }
  return make_always(make_implies(phi, psi));
}

}  // namespace orla
