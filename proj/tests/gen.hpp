#pragma once

// Seeded random formulas and models for the property suites.

#include <random>
#include <vector>

#include "orla/formula.hpp"

namespace orla::testing {

inline std::vector<GoalAtom> small_alphabet(std::size_t count) {
  static const char* names[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
  std::vector<GoalAtom> atoms;
  for (std::size_t i = 0; i < count && i < 8; ++i) {
    atoms.push_back(GoalAtom::simple(names[i]));
  }
  return atoms;
}

inline Formula random_formula(std::mt19937& rng,
                              const std::vector<GoalAtom>& alphabet,
                              int max_depth) {
  std::uniform_int_distribution<int> kind(0, 7);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  if (max_depth <= 0) return make_atom(alphabet[pick(rng)]);
  switch (kind(rng)) {
    case 0: return make_atom(alphabet[pick(rng)]);
    case 1: return make_not(random_formula(rng, alphabet, max_depth - 1));
    case 2:
      return make_and(random_formula(rng, alphabet, max_depth - 1),
                      random_formula(rng, alphabet, max_depth - 1));
    case 3:
      return make_or(random_formula(rng, alphabet, max_depth - 1),
                     random_formula(rng, alphabet, max_depth - 1));
    case 4:
      return make_implies(random_formula(rng, alphabet, max_depth - 1),
                          random_formula(rng, alphabet, max_depth - 1));
    case 5: return make_always(random_formula(rng, alphabet, max_depth - 1));
    case 6: return make_sometime(random_formula(rng, alphabet, max_depth - 1));
    default:
      return make_before(random_formula(rng, alphabet, max_depth - 1),
                         random_formula(rng, alphabet, max_depth - 1));
  }
}

inline OrderedModel random_model(std::mt19937& rng,
                                 std::vector<GoalAtom> alphabet) {
  std::shuffle(alphabet.begin(), alphabet.end(), rng);
  std::uniform_int_distribution<std::size_t> length(0, alphabet.size());
  alphabet.erase(alphabet.begin() + static_cast<long>(length(rng)),
                 alphabet.end());
  return OrderedModel(std::move(alphabet));
}

}  // namespace orla::testing
