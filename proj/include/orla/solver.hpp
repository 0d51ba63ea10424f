#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "orla/eval.hpp"
#include "orla/formula.hpp"

namespace orla {

/// Searches for an ordered model that extends `required_prefix` and satisfies
/// every theory member. Extension atoms are drawn from `alphabet` (when empty,
/// the atoms of the theory and the prefix, which suffices by language
/// restriction). Depth-first, atoms tried in (subject, object) order, first
/// witness returned; a branch is pruned when a NegativePersistent-classified
/// member is already false. Returns nullopt iff no such model exists.
std::optional<OrderedModel> satisfiable(
    const std::vector<Formula>& theory,
    const OrderedModel& required_prefix = OrderedModel(),
    const std::vector<GoalAtom>& alphabet = {});

/// theory |= f, decided over the joint alphabet of theory and f as
/// unsatisfiability of theory + !f.
bool entails(const std::vector<Formula>& theory, const Formula& formula);

/// psi is a subgoal of phi in the theory: theory |= []( psi < phi ).
bool is_subgoal(const std::vector<Formula>& theory, const Formula& psi,
                const Formula& phi);

/// Rewrites [](psi < phi) to the equivalent [](phi -> psi), valid when psi is
/// positively persistent. Rejects psi not classified PositivePersistent.
Formula simplify_subgoal(const Formula& psi, const Formula& phi);

/// Enumerates, in depth-first (subject, object) order, every ordered model
/// over `alphabet` that extends `prefix` and satisfies the theory; calls
/// `visit` for each. `visit` returns false to stop early.
/// `exact_length`, when set, keeps only models of that total length.
void for_each_model(const std::vector<Formula>& theory,
                    const OrderedModel& prefix,
                    const std::vector<GoalAtom>& alphabet,
                    const std::function<bool(const OrderedModel&)>& visit,
                    std::optional<std::size_t> exact_length = std::nullopt);

/// Convenience wrapper collecting for_each_model results.
std::vector<OrderedModel> all_models(
    const std::vector<Formula>& theory, const OrderedModel& prefix,
    const std::vector<GoalAtom>& alphabet,
    std::optional<std::size_t> exact_length = std::nullopt);

}  // namespace orla
