#pragma once

// Test-only reference implementations, deliberately independent of the
// library's table-based evaluator and depth-first search:
//   - naive_eval expands derived connectives to !/&/[] and recurses over
//     prefixes exactly as the truth definition states;
//   - enumerate_extensions materializes every ordered model over an alphabet;
//   - brute_satisfiable / brute_entails scan that enumeration.

#include <optional>
#include <vector>

#include "orla/formula.hpp"

namespace orla::testing {

/// Rewrites |, ->, <> and < into their defining !/&/[] forms.
Formula expand_derived(const Formula& formula);

/// Direct recursive truth: atoms by occurrence, [] by recursion over every
/// prefix. Accepts any formula (expands first).
bool naive_eval(const OrderedModel& model, const Formula& formula);
bool naive_eval(const OrderedModel& model, const std::vector<Formula>& theory);

/// Every ordered model over the alphabet extending the prefix (the prefix
/// itself included), in depth-first atom order.
std::vector<OrderedModel> enumerate_extensions(
    const OrderedModel& prefix, const std::vector<GoalAtom>& alphabet);

std::optional<OrderedModel> brute_satisfiable(
    const std::vector<Formula>& theory, const OrderedModel& prefix,
    const std::vector<GoalAtom>& alphabet);

bool brute_entails(const std::vector<Formula>& theory, const Formula& formula);

}  // namespace orla::testing
