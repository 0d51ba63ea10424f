#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orla/errors.hpp"
#include "orla/formula.hpp"
#include "orla/solver.hpp"

namespace orla {

using ToolSet = std::set<std::string>;
using ToolAlternatives = std::set<ToolSet>;

/// Required tools per goal atom, as alternatives: acting towards the goal
/// needs every tool of at least one alternative. An absent entry means no
/// tools are required.
class ToolMap {
 public:
  ToolMap() = default;

  void set(const GoalAtom& goal, ToolAlternatives alternatives);
  const ToolAlternatives* find(const GoalAtom& goal) const;
  const std::map<GoalAtom, ToolAlternatives>& entries() const { return entries_; }

 private:
  std::map<GoalAtom, ToolAlternatives> entries_;
};

/// Tools currently at hand per goal atom; an absent entry means none.
/// The unrestricted value meets every requirement.
class AvailableTools {
 public:
  static AvailableTools unrestricted();
  static AvailableTools none() { return AvailableTools(); }

  AvailableTools() = default;
  explicit AvailableTools(std::map<GoalAtom, ToolSet> entries)
      : entries_(std::move(entries)) {}

  bool is_unrestricted() const { return unrestricted_; }
  ToolSet available_for(const GoalAtom& goal) const;
  const std::map<GoalAtom, ToolSet>& entries() const { return entries_; }

 private:
  bool unrestricted_ = false;
  std::map<GoalAtom, ToolSet> entries_;
};

/// Why (motive), what (directing goal formulas), and through which artifacts
/// (tool map).
struct Activity {
  GoalAtom motive;
  std::vector<Formula> goals;  // file order is preserved for emission
  ToolMap tools;
};

/// Subjects, objects, mediating artifacts, and the activities over them.
/// Goal atoms of every activity must be subject-object pairs of the system.
class ActivitySystem {
 public:
  ActivitySystem() = default;
  ActivitySystem(std::set<std::string> subjects, std::set<std::string> objects,
                 std::set<std::string> artifacts);

  void add_activity(Activity activity);  // throws ValidationError

  const std::set<std::string>& subjects() const { return subjects_; }
  const std::set<std::string>& objects() const { return objects_; }
  const std::set<std::string>& artifacts() const { return artifacts_; }
  const std::vector<Activity>& activities() const { return activities_; }

  /// Activities sharing the motive, in insertion order. Throws
  /// UnknownMotiveError when there is none.
  std::vector<const Activity*> activities_for(const GoalAtom& motive) const;

  /// Sorted goal atoms occurring in the goals of the motive's activities.
  std::vector<GoalAtom> goal_alphabet(const GoalAtom& motive) const;

 private:
  std::set<std::string> subjects_;
  std::set<std::string> objects_;
  std::set<std::string> artifacts_;
  std::vector<Activity> activities_;
};

/// The observation satisfies every directing goal of some activity with the
/// motive.
bool completion(const OrderedModel& observed, const ActivitySystem& system,
                const GoalAtom& motive);

/// Atoms of a completing observation whose deletion falsifies some goal.
/// Requires completion; throws NotCompletedError otherwise.
std::vector<GoalAtom> relevant_atoms(const OrderedModel& observed,
                                     const ActivitySystem& system,
                                     const GoalAtom& motive);

struct AchieveOptions {
  /// When set, prefix atoms are exempt from the tool condition; only
  /// extension atoms must have a satisfiable tool alternative.
  bool exempt_prefix_from_tools = false;
};

/// Searches for an extension of the observation, over the goal atoms of the
/// activity, that completes it, where every goal atom of the witness
/// (prefix included, unless exempted) has some tool alternative fully
/// available. Returns the first witness in search order, or nullopt.
std::optional<OrderedModel> achievability(const OrderedModel& observed,
                                          const AvailableTools& available,
                                          const ActivitySystem& system,
                                          const GoalAtom& motive,
                                          const AchieveOptions& options = {});

/// Goal atoms g not in the observation such that observed+g is still
/// achievable. With `minimal`, only atoms that start the extension of some
/// minimum-length witness. Requires achievability; throws NotAchievableError.
std::vector<GoalAtom> predict_next(const OrderedModel& observed,
                                   const AvailableTools& available,
                                   const ActivitySystem& system,
                                   const GoalAtom& motive, bool minimal = false);

/// The goal after the longest achievable prefix of a non-achievable
/// observation.
struct Abnormality {
  /// Length of the longest prefix that is still achievable; -1 when not even
  /// the empty prefix is (structurally or tool-blocked).
  int prefix_length = -1;
  std::optional<GoalAtom> blocking_atom;

  bool no_prefix_achievable() const { return prefix_length < 0; }
};

/// nullopt when the observation is achievable (nothing abnormal).
std::optional<Abnormality> abnormality(const OrderedModel& observed,
                                       const AvailableTools& available,
                                       const ActivitySystem& system,
                                       const GoalAtom& motive);

/// Achievability restricted to subjects from `allowed`. Strict mode requires
/// every witness atom, prefix included, to have an allowed subject (so a
/// non-compliant observation yields nullopt); non-strict mode restricts only
/// the extension atoms.
std::optional<OrderedModel> social_achievability(
    const OrderedModel& observed, const std::set<std::string>& allowed,
    const ActivitySystem& system, const GoalAtom& motive, bool strict,
    const AvailableTools& available = AvailableTools::unrestricted());

/// For each witness atom with no fully available tool alternative, the
/// minimal sets of missing tools (one per alternative, supersets dropped).
std::map<GoalAtom, ToolAlternatives> tool_deficit(const OrderedModel& witness,
                                                  const AvailableTools& available,
                                                  const ToolMap& tools);

/// first entails second iff the goals of first entail every goal of second;
/// tool maps are not compared.
bool entails_activity(const Activity& first, const Activity& second);
bool equivalent_activities(const Activity& first, const Activity& second);

}  // namespace orla
