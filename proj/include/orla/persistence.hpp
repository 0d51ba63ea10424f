#pragma once

#include <cstddef>
#include <vector>

#include "orla/formula.hpp"

namespace orla {

/// PositivePersistent: once true, true in every extension (a goal formula).
/// NegativePersistent: once false, false in every extension.
/// Unknown: the syntactic check is inconclusive (the formula may still be
/// persistent; use check_persistence_semantic for a definite answer).
enum class PersistenceClass { PositivePersistent, NegativePersistent, Unknown };

const char* to_string(PersistenceClass cls);

/// Polarity-based classification: PositivePersistent if every atom occurrence
/// has positive polarity, NegativePersistent if every occurrence is negative.
/// Polarity is counted after expanding the derived connectives, so `->` flips
/// its antecedent and `x < y` flips y.
PersistenceClass classify_persistence(const Formula& formula);

struct PersistenceCheck {
  bool positive;
  bool negative;
};

inline constexpr std::size_t kDefaultPersistenceAlphabetBound = 6;

/// Decides both persistence properties for a fixed finite alphabet by
/// enumerating every ordered model over the alphabet and every prefix pair.
/// The model count grows factorially (1957 models at 6 atoms), so alphabets
/// larger than `bound` are rejected with std::invalid_argument.
PersistenceCheck check_persistence_semantic(
    const Formula& formula, const std::vector<GoalAtom>& alphabet,
    std::size_t bound = kDefaultPersistenceAlphabetBound);

}  // namespace orla
