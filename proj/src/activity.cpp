#include "orla/activity.hpp"

#include <algorithm>
#include <utility>

#include "orla/eval.hpp"
#include "orla/parser.hpp"

namespace orla {

void ToolMap::set(const GoalAtom& goal, ToolAlternatives alternatives) {
  entries_[goal] = std::move(alternatives);
}

const ToolAlternatives* ToolMap::find(const GoalAtom& goal) const {
  auto it = entries_.find(goal);
  return it == entries_.end() ? nullptr : &it->second;
}

AvailableTools AvailableTools::unrestricted() {
  AvailableTools tools;
  tools.unrestricted_ = true;
  return tools;
}

ToolSet AvailableTools::available_for(const GoalAtom& goal) const {
  auto it = entries_.find(goal);
  return it == entries_.end() ? ToolSet{} : it->second;
}

ActivitySystem::ActivitySystem(std::set<std::string> subjects,
                               std::set<std::string> objects,
                               std::set<std::string> artifacts)
    : subjects_(std::move(subjects)),
      objects_(std::move(objects)),
      artifacts_(std::move(artifacts)) {}

void ActivitySystem::add_activity(Activity activity) {
  auto check_atom = [&](const GoalAtom& atom) {
    if (!subjects_.count(atom.subject) || !objects_.count(atom.object)) {
      throw ValidationError("goal atom " + atom.str() +
                            " is not a subject-object pair of the system");
    }
  };
  check_atom(activity.motive);
  for (const Formula& goal : activity.goals) {
    for (const GoalAtom& atom : atoms(goal)) check_atom(atom);
  }
  for (const auto& [goal, alternatives] : activity.tools.entries()) {
    for (const ToolSet& alternative : alternatives) {
      for (const std::string& artifact : alternative) {
        if (!artifacts_.count(artifact)) {
          throw ValidationError("tool " + artifact + " for " + goal.str() +
                                " is not an artifact of the system");
        }
      }
    }
  }
  activities_.push_back(std::move(activity));
}

std::vector<const Activity*> ActivitySystem::activities_for(
    const GoalAtom& motive) const {
  std::vector<const Activity*> found;
  for (const Activity& activity : activities_) {
    if (activity.motive == motive) found.push_back(&activity);
  }
  if (found.empty()) throw UnknownMotiveError(motive.str());
  return found;
}

std::vector<GoalAtom> ActivitySystem::goal_alphabet(const GoalAtom& motive) const {
  std::vector<GoalAtom> alphabet;
  for (const Activity* activity : activities_for(motive)) {
    std::vector<GoalAtom> in_goals = atoms(activity->goals);
    alphabet.insert(alphabet.end(), in_goals.begin(), in_goals.end());
  }
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  return alphabet;
}

bool completion(const OrderedModel& observed, const ActivitySystem& system,
                const GoalAtom& motive) {
  for (const Activity* activity : system.activities_for(motive)) {
    if (eval(observed, activity->goals)) return true;
  }
  return false;
}

std::vector<GoalAtom> relevant_atoms(const OrderedModel& observed,
                                     const ActivitySystem& system,
                                     const GoalAtom& motive) {
  const Activity* completed = nullptr;
  for (const Activity* activity : system.activities_for(motive)) {
    if (eval(observed, activity->goals)) {
      completed = activity;
      break;
    }
  }
  if (completed == nullptr) {
    throw NotCompletedError("model " + observed.str() +
                            " does not complete activity " + motive.str());
  }
  std::vector<GoalAtom> relevant;
  for (const GoalAtom& atom : observed.atoms()) {
    OrderedModel without =
        observed.filtered([&](const GoalAtom& other) { return other != atom; });
    if (!eval(without, completed->goals)) relevant.push_back(atom);
  }
  std::sort(relevant.begin(), relevant.end());
  return relevant;
}

namespace {

bool tools_satisfiable(const GoalAtom& goal, const AvailableTools& available,
                       const ToolMap& tools) {
  if (available.is_unrestricted()) return true;
  const ToolAlternatives* alternatives = tools.find(goal);
  if (alternatives == nullptr) return true;  // no tools required
  const ToolSet at_hand = available.available_for(goal);
  return std::any_of(alternatives->begin(), alternatives->end(),
                     [&](const ToolSet& alternative) {
                       return std::includes(at_hand.begin(), at_hand.end(),
                                            alternative.begin(),
                                            alternative.end());
                     });
}

struct WitnessConstraints {
  const AvailableTools* available = nullptr;
  bool exempt_prefix_from_tools = false;
  const std::set<std::string>* allowed_subjects = nullptr;  // extension filter
  bool strict_subjects = false;                             // prefix too
};

// First witness, in activity order then depth-first atom order, of an
// extension of `observed` completing some activity of the motive under the
// tool and subject constraints.
std::optional<OrderedModel> find_witness(const OrderedModel& observed,
                                         const ActivitySystem& system,
                                         const GoalAtom& motive,
                                         const WitnessConstraints& constraints,
                                         std::optional<std::size_t> exact_length =
                                             std::nullopt) {
  if (constraints.strict_subjects) {
    for (const GoalAtom& atom : observed.atoms()) {
      if (!constraints.allowed_subjects->count(atom.subject)) return std::nullopt;
    }
  }
  for (const Activity* activity : system.activities_for(motive)) {
    if (!constraints.exempt_prefix_from_tools) {
      bool prefix_ok = true;
      for (const GoalAtom& atom : observed.atoms()) {
        if (!tools_satisfiable(atom, *constraints.available, activity->tools)) {
          prefix_ok = false;
          break;
        }
      }
      if (!prefix_ok) continue;
    }
    std::vector<GoalAtom> alphabet;
    for (const GoalAtom& atom : atoms(activity->goals)) {
      if (!tools_satisfiable(atom, *constraints.available, activity->tools)) {
        continue;
      }
      if (constraints.allowed_subjects && !observed.contains(atom) &&
          !constraints.allowed_subjects->count(atom.subject)) {
        continue;
      }
      alphabet.push_back(atom);
    }
    std::optional<OrderedModel> witness;
    for_each_model(
        activity->goals, observed, alphabet,
        [&](const OrderedModel& model) {
          witness = model;
          return false;
        },
        exact_length);
    if (witness) return witness;
  }
  return std::nullopt;
}

}  // namespace

std::optional<OrderedModel> achievability(const OrderedModel& observed,
                                          const AvailableTools& available,
                                          const ActivitySystem& system,
                                          const GoalAtom& motive,
                                          const AchieveOptions& options) {
  WitnessConstraints constraints;
  constraints.available = &available;
  constraints.exempt_prefix_from_tools = options.exempt_prefix_from_tools;
  return find_witness(observed, system, motive, constraints);
}

std::vector<GoalAtom> predict_next(const OrderedModel& observed,
                                   const AvailableTools& available,
                                   const ActivitySystem& system,
                                   const GoalAtom& motive, bool minimal) {
  WitnessConstraints constraints;
  constraints.available = &available;
  if (!find_witness(observed, system, motive, constraints)) {
    throw NotAchievableError("activity " + motive.str() +
                             " is not achievable from " + observed.str());
  }

  if (minimal) {
    // Witnesses of the minimum total length; the atoms right after the
    // observation across all of them.
    const std::size_t max_length =
        observed.size() + system.goal_alphabet(motive).size();
    for (std::size_t length = observed.size(); length <= max_length; ++length) {
      std::vector<GoalAtom> next;
      bool any = false;
      // Collect every witness of exactly this length (not only the first).
      for (const Activity* activity : system.activities_for(motive)) {
        if (!constraints.exempt_prefix_from_tools) {
          bool prefix_ok = true;
          for (const GoalAtom& atom : observed.atoms()) {
            if (!tools_satisfiable(atom, available, activity->tools)) {
              prefix_ok = false;
              break;
            }
          }
          if (!prefix_ok) continue;
        }
        std::vector<GoalAtom> alphabet;
        for (const GoalAtom& atom : atoms(activity->goals)) {
          if (tools_satisfiable(atom, available, activity->tools)) {
            alphabet.push_back(atom);
          }
        }
        for_each_model(
            activity->goals, observed, alphabet,
            [&](const OrderedModel& model) {
              any = true;
              if (model.size() > observed.size()) {
                next.push_back(model.at(observed.size()));
              }
              return true;
            },
            length);
      }
      if (any) {
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        return next;
      }
    }
    return {};
  }

  std::vector<GoalAtom> result;
  for (const GoalAtom& candidate : system.goal_alphabet(motive)) {
    if (observed.contains(candidate)) continue;
    if (find_witness(observed.extended(candidate), system, motive, constraints)) {
      result.push_back(candidate);
    }
  }
  return result;
}

std::optional<Abnormality> abnormality(const OrderedModel& observed,
                                       const AvailableTools& available,
                                       const ActivitySystem& system,
                                       const GoalAtom& motive) {
  WitnessConstraints constraints;
  constraints.available = &available;
  if (find_witness(observed, system, motive, constraints)) return std::nullopt;
  for (std::size_t length = observed.size(); length-- > 0;) {
    if (find_witness(observed.prefix(length), system, motive, constraints)) {
      Abnormality report;
      report.prefix_length = static_cast<int>(length);
      report.blocking_atom = observed.at(length);
      return report;
    }
  }
  return Abnormality{};  // not even the empty prefix is achievable
}

std::optional<OrderedModel> social_achievability(
    const OrderedModel& observed, const std::set<std::string>& allowed,
    const ActivitySystem& system, const GoalAtom& motive, bool strict,
    const AvailableTools& available) {
  WitnessConstraints constraints;
  constraints.available = &available;
  constraints.allowed_subjects = &allowed;
  constraints.strict_subjects = strict;
  return find_witness(observed, system, motive, constraints);
}

std::map<GoalAtom, ToolAlternatives> tool_deficit(const OrderedModel& witness,
                                                  const AvailableTools& available,
                                                  const ToolMap& tools) {
  std::map<GoalAtom, ToolAlternatives> deficit;
  if (available.is_unrestricted()) return deficit;
  for (const GoalAtom& goal : witness.atoms()) {
    if (tools_satisfiable(goal, available, tools)) continue;
    const ToolAlternatives* alternatives = tools.find(goal);
    ToolAlternatives missing;
    for (const ToolSet& alternative : *alternatives) {
      const ToolSet at_hand = available.available_for(goal);
      ToolSet gap;
      std::set_difference(alternative.begin(), alternative.end(),
                          at_hand.begin(), at_hand.end(),
                          std::inserter(gap, gap.end()));
      missing.insert(std::move(gap));
    }
    // Keep only the minimal gaps: a strict superset of another gap is noise.
    ToolAlternatives minimal;
    for (const ToolSet& gap : missing) {
      bool dominated = std::any_of(
          missing.begin(), missing.end(), [&](const ToolSet& other) {
            return other != gap && std::includes(gap.begin(), gap.end(),
                                                 other.begin(), other.end());
          });
      if (!dominated) minimal.insert(gap);
    }
    deficit[goal] = std::move(minimal);
  }
  return deficit;
}

bool entails_activity(const Activity& first, const Activity& second) {
  return std::all_of(second.goals.begin(), second.goals.end(),
                     [&](const Formula& goal) {
                       return entails(first.goals, goal);
                     });
}

bool equivalent_activities(const Activity& first, const Activity& second) {
  return entails_activity(first, second) && entails_activity(second, first);
}

}  // namespace orla
