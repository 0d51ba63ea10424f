#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "orla/activity.hpp"
#include "orla/formula.hpp"

namespace orla {

/// A ground term of solver output: symbolic constant, number, quoted string,
/// tuple `(t1,..,tn)`, or function `f(t1,..,tn)`.
struct AspTerm {
  enum class Type { Symbol, Number, String, Tuple, Function };

  Type type = Type::Symbol;
  std::string name;      // Symbol, String (unescaped) and Function
  std::int64_t number = 0;
  std::vector<AspTerm> args;  // Tuple and Function

  std::string str() const;
  bool operator==(const AspTerm& other) const;
};

/// A ground atom, possibly classically negated (`-completed(m)`).
struct AspAtom {
  bool negated = false;
  AspTerm term;

  std::string str() const;
};

/// One answer set: the ground atoms of a solver output line.
struct AnswerSet {
  std::vector<AspAtom> atoms;
};

/// formula/2 facts for every directing goal, in prefix term notation
/// (and/or/impl/neg/h/p/before, pair atoms as (s,o) tuples). Simple atoms are
/// emitted as bare constants together with an atom/1 fact each, since the
/// fixed encoding recognizes only pair terms as atoms. Tool maps are not part
/// of the fact format.
std::string emit_facts(const ActivitySystem& system);

/// prefix/2 facts with 1-based positions; empty text for the empty model.
std::string emit_prefix(const OrderedModel& prefix);

/// length/1 fact pinning the guessed model to exactly the prefix.
std::string emit_length(const OrderedModel& prefix);

/// The fixed guess and define blocks: subformula closure, model-length
/// choice, position choice with distinctness, and the t/2-f/2 truth rules
/// per connective with the t/1-f/1 top level.
std::string emit_fixed_encoding();
std::string emit_guess();
std::string emit_define();

struct AspTask {
  enum class Kind {
    Completion,
    Achievability,
    SocialAchievability,
    Prediction,
    Minimize,
    EntailmentCheck,
  };

  Kind kind;
  std::optional<GoalAtom> motive;       // Achievability/Social/Prediction/Entailment
  std::optional<GoalAtom> motive2;      // EntailmentCheck: the entailed side
  std::set<std::string> subjects;       // SocialAchievability

  static AspTask completion();
  static AspTask achievability(GoalAtom motive);
  static AspTask social(GoalAtom motive, std::set<std::string> subjects);
  static AspTask prediction(GoalAtom motive);
  static AspTask minimize();
  static AspTask entailment(GoalAtom motive1, GoalAtom motive2);
};

/// Task-specific rule block. Motives are checked against the system.
std::string emit_task(const AspTask& task, const ActivitySystem& system);

/// The emitted program, in section order with % markers.
struct AspProgram {
  std::string facts;
  std::string guess;
  std::string define;
  std::string task_rules;

  std::string text() const;
};

/// facts + prefix + fixed encoding + task blocks. The Completion task pins
/// the model length to the prefix; the other tasks leave it free.
AspProgram assemble_program(const ActivitySystem& system,
                            const OrderedModel& prefix,
                            const std::vector<AspTask>& tasks);

/// Prefix-notation term for a formula, and its inverse.
std::string formula_to_term(const Formula& formula);
Formula term_to_formula(const AspTerm& term);
Formula parse_formula_term(std::string_view text);

/// Parses one solver output line of whitespace-separated ground atoms.
AnswerSet parse_answer_set(std::string_view line);

/// All answer sets from full solver stdout (clingo-style: the line after
/// each "Answer:" marker).
std::vector<AnswerSet> parse_solver_output(std::string_view output);

/// Ordered model from the model/2 atoms, sorted by position. Positions must
/// be 1..n without clashes.
OrderedModel extract_model(const AnswerSet& answer_set);

struct CrossCheckReport {
  bool skipped = false;
  std::string skip_reason;
  int solver_exit = 0;
  std::size_t native_count = 0;
  std::size_t solver_count = 0;
  std::vector<std::string> mismatches;

  bool ok() const { return !skipped && mismatches.empty(); }
  std::string summary() const;
};

/// Runs `solver_command` (with {file} replaced by the program path) on the
/// assembled program constrained to complete every motive, parses all answer
/// sets, and compares the extracted ordered models against native
/// enumeration. Also checks every top-level t/1 and f/1 label against native
/// evaluation. A missing solver yields a skipped report, not a failure.
CrossCheckReport cross_check(const ActivitySystem& system,
                             const OrderedModel& prefix,
                             const std::string& solver_command);

}  // namespace orla
