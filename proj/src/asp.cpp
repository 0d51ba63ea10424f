#include "orla/asp.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "orla/eval.hpp"
#include "orla/parser.hpp"
#include "orla/solver.hpp"

namespace orla {

namespace {

// Solver-side constants must be lowercase and unprimed; anything else is
// emitted as a quoted string term.
bool plain_constant(const std::string& name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

std::string constant(const std::string& name) {
  if (plain_constant(name)) return name;
  return "\"" + name + "\"";
}

std::string atom_term(const GoalAtom& atom) {
  if (atom.is_simple()) return constant(atom.object);
  return "(" + constant(atom.subject) + "," + constant(atom.object) + ")";
}

void collect_simple_atoms(const std::vector<Formula>& goals,
                          std::set<GoalAtom>& out) {
  for (const Formula& goal : goals) {
    for (const GoalAtom& atom : atoms(goal)) {
      if (atom.is_simple()) out.insert(atom);
    }
  }
}

}  // namespace

std::string formula_to_term(const Formula& formula) {
  switch (formula.kind()) {
    case Connective::Atom:
      return atom_term(formula.atom());
    case Connective::Not:
      return "neg(" + formula_to_term(formula.child()) + ")";
    case Connective::Always:
      return "h(" + formula_to_term(formula.child()) + ")";
    case Connective::Sometime:
      return "p(" + formula_to_term(formula.child()) + ")";
    case Connective::And:
      return "and(" + formula_to_term(formula.left()) + "," +
             formula_to_term(formula.right()) + ")";
    case Connective::Or:
      return "or(" + formula_to_term(formula.left()) + "," +
             formula_to_term(formula.right()) + ")";
    case Connective::Implies:
      return "impl(" + formula_to_term(formula.left()) + "," +
             formula_to_term(formula.right()) + ")";
    case Connective::Before:
      return "before(" + formula_to_term(formula.left()) + "," +
             formula_to_term(formula.right()) + ")";
  }
  throw std::logic_error("unreachable connective");
}

std::string emit_facts(const ActivitySystem& system) {
  std::string out;
  for (const Activity& activity : system.activities()) {
    const std::string motive = atom_term(activity.motive);
    for (const Formula& goal : activity.goals) {
      out += "formula(" + motive + ", " + formula_to_term(goal) + ").\n";
    }
  }
  // Bare constants are invisible to the pair-shaped atom rule of the guess
  // block, so simple atoms get explicit atom/1 facts.
  std::set<GoalAtom> simple;
  for (const Activity& activity : system.activities()) {
    collect_simple_atoms(activity.goals, simple);
  }
  for (const GoalAtom& atom : simple) {
    out += "atom(" + atom_term(atom) + ").\n";
  }
  return out;
}

std::string emit_prefix(const OrderedModel& prefix) {
  std::string out;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    out += "prefix(" + std::to_string(i + 1) + "," + atom_term(prefix.at(i)) +
           ").\n";
  }
  return out;
}

std::string emit_length(const OrderedModel& prefix) {
  return "length(" + std::to_string(prefix.size()) + ").\n";
}

std::string emit_guess() {
  return
      "subformula(S) :- formula(_,S).\n"
      "atom((S,O)) :- subformula((S,O)).\n"
      "atom(A) :- prefix(_,A).\n"
      "subformula(S) :- subformula(neg(S)).\n"
      "subformula(S) :- subformula(h(S)).\n"
      "subformula(S) :- subformula(p(S)).\n"
      "subformula(S) :- subformula(and(S,_)).\n"
      "subformula(S) :- subformula(and(_,S)).\n"
      "subformula(S) :- subformula(or(S,_)).\n"
      "subformula(S) :- subformula(or(_,S)).\n"
      "subformula(S) :- subformula(impl(S,_)).\n"
      "subformula(S) :- subformula(impl(_,S)).\n"
      "subformula(S) :- subformula(before(S,_)).\n"
      "subformula(S) :- subformula(before(_,S)).\n"
      "minlen(N) :- #count{ A: prefix(P,A), atom(A) } = N.\n"
      "maxlen(M) :- #count{ X: atom(X) } = M.\n"
      "1 { length(X): X = N..M } 1 :- minlen(N), maxlen(M).\n"
      "model(N,A) :- prefix(N,A), atom(A).\n"
      "1 { model(P,A): atom(A), not prefix(_,A) } 1 :- P = (M+1)..N, "
      "minlen(M), length(N).\n"
      ":- model(P,A), model(P1,A), P < P1.\n";
}

std::string emit_define() {
  return
      "index(N) :- length(M), N = 0..M.\n"
      "t(S) :- formula(_,S), t(S,N), length(N).\n"
      "f(S) :- formula(_,S), not t(S).\n"
      "t(A,N) :- atom(A), model(N1,A), N1 = 1..N, index(N).\n"
      "f(A,N) :- atom(A), not t(A,N), index(N).\n"
      "t(F,N) :- subformula(F), F = neg(F1), f(F1,N).\n"
      "f(F,N) :- subformula(F), F = neg(F1), t(F1,N).\n"
      "t(F,N) :- subformula(F), F = or(F1,F2), t(F1,N).\n"
      "t(F,N) :- subformula(F), F = or(F1,F2), t(F2,N).\n"
      "f(F,N) :- subformula(F), F = or(F1,F2), f(F1,N), f(F2,N).\n"
      "t(F,N) :- subformula(F), F = and(F1,F2), t(F1,N), t(F2,N).\n"
      "f(F,N) :- subformula(F), F = and(F1,F2), f(F1,N).\n"
      "f(F,N) :- subformula(F), F = and(F1,F2), f(F2,N).\n"
      "t(F,N) :- subformula(F), F = impl(F1,F2), f(F1,N).\n"
      "t(F,N) :- subformula(F), F = impl(F1,F2), t(F2,N).\n"
      "f(F,N) :- subformula(F), F = impl(F1,F2), t(F1,N), f(F2,N).\n"
      "t(F,N) :- subformula(F), F = before(F1,F2), index(N), t(F1,N1), N1 <= N.\n"
      "t(F,N) :- subformula(F), F = before(F1,F2), index(N), f(F2,N).\n"
      "f(F,N) :- subformula(F), F = before(F1,F2), index(N), not t(F,N).\n"
      "t(F,N) :- subformula(F), F = p(F1), index(N), t(F1,N1), N1 <= N.\n"
      "f(F,N) :- subformula(F), F = p(F1), index(N), not t(F,N).\n"
      "f(F,N) :- subformula(F), F = h(F1), index(N), f(F1,N1), N1 <= N.\n"
      "t(F,N) :- subformula(F), F = h(F1), index(N), not f(F,N).\n";
}

std::string emit_fixed_encoding() {
  return "% GUESS\n" + emit_guess() + "% DEFINE\n" + emit_define();
}

AspTask AspTask::completion() { return AspTask{Kind::Completion, {}, {}, {}}; }

AspTask AspTask::achievability(GoalAtom motive) {
  return AspTask{Kind::Achievability, std::move(motive), {}, {}};
}

AspTask AspTask::social(GoalAtom motive, std::set<std::string> subjects) {
  return AspTask{Kind::SocialAchievability, std::move(motive), {},
                 std::move(subjects)};
}

AspTask AspTask::prediction(GoalAtom motive) {
  return AspTask{Kind::Prediction, std::move(motive), {}, {}};
}

AspTask AspTask::minimize() { return AspTask{Kind::Minimize, {}, {}, {}}; }

AspTask AspTask::entailment(GoalAtom motive1, GoalAtom motive2) {
  return AspTask{Kind::EntailmentCheck, std::move(motive1), std::move(motive2),
                 {}};
}

namespace {

const char* kCompletedRules =
    "-completed(M) :- formula(M,F), f(F).\n"
    "completed(M) :- formula(M,_), not -completed(M).\n";

void require_motive(const AspTask& task, const ActivitySystem& system) {
  if (task.motive) system.activities_for(*task.motive);
  if (task.motive2) system.activities_for(*task.motive2);
}

std::string subject_constraint(const std::set<std::string>& subjects) {
  std::string out = ":- model(_,(S,O))";
  for (const std::string& subject : subjects) {
    out += ", S != " + constant(subject);
  }
  out += ".\n";
  return out;
}

}  // namespace

std::string emit_task(const AspTask& task, const ActivitySystem& system) {
  require_motive(task, system);
  switch (task.kind) {
    case AspTask::Kind::Completion:
      return std::string("% TASK: completion\n") + kCompletedRules;
    case AspTask::Kind::Achievability:
      return std::string("% TASK: achievability\n") + kCompletedRules +
             ":- -completed(" + atom_term(*task.motive) + ").\n";
    case AspTask::Kind::SocialAchievability:
      return std::string("% TASK: social achievability\n") + kCompletedRules +
             ":- -completed(" + atom_term(*task.motive) + ").\n" +
             subject_constraint(task.subjects);
    case AspTask::Kind::Prediction:
      return std::string(
                 "% TASK: prediction (enumerate brave consequences, e.g. "
                 "clingo --enum-mode=brave)\n") +
             kCompletedRules + ":- -completed(" + atom_term(*task.motive) +
             ").\n";
    case AspTask::Kind::Minimize:
      return "% TASK: minimize\n#minimize { N,N: length(N) }.\n";
    case AspTask::Kind::EntailmentCheck:
      return std::string("% TASK: entailment counterexample\n") +
             kCompletedRules + "fail :- completed(" + atom_term(*task.motive) +
             "), -completed(" + atom_term(*task.motive2) + ").\n" +
             ":- not fail.\n";
  }
  throw std::logic_error("unreachable task kind");
}

std::string AspProgram::text() const {
  std::string out = "% FACTS\n" + facts + "% GUESS\n" + guess + "% DEFINE\n" +
                    define;
  if (!task_rules.empty()) out += task_rules;
  return out;
}

AspProgram assemble_program(const ActivitySystem& system,
                            const OrderedModel& prefix,
                            const std::vector<AspTask>& tasks) {
  AspProgram program;
  program.facts = emit_facts(system) + emit_prefix(prefix);
  const bool pin_length =
      std::any_of(tasks.begin(), tasks.end(), [](const AspTask& task) {
        return task.kind == AspTask::Kind::Completion;
      });
  if (pin_length) program.facts += emit_length(prefix);
  program.guess = emit_guess();
  program.define = emit_define();
  for (const AspTask& task : tasks) {
    program.task_rules += emit_task(task, system);
  }
  return program;
}

// ---------------------------------------------------------------------------
// Answer-set parsing
// ---------------------------------------------------------------------------

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  AspTerm parse() {
    AspTerm term = parse_term();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input after term");
    return term;
  }

 private:
  [[noreturn]] void fail(const std::string& message) {
    throw ValidationError("malformed term '" + std::string(text_) +
                          "': " + message);
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) {
      ++pos_;
    }
  }

  char peek() { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  AspTerm parse_term() {
    skip_space();
    char c = peek();
    if (c == '(') return parse_tuple();
    if (c == '"') return parse_string();
    if (c == '-' || (c >= '0' && c <= '9')) return parse_number();
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
      return parse_symbol_or_function();
    }
    fail("unexpected character");
  }

  AspTerm parse_tuple() {
    ++pos_;  // '('
    AspTerm term;
    term.type = AspTerm::Type::Tuple;
    term.args = parse_args();
    if (peek() != ')') fail("expected ')'");
    ++pos_;
    return term;
  }

  AspTerm parse_string() {
    ++pos_;  // '"'
    AspTerm term;
    term.type = AspTerm::Type::String;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
      term.name += text_[pos_++];
    }
    if (peek() != '"') fail("unterminated string");
    ++pos_;
    return term;
  }

  AspTerm parse_number() {
    AspTerm term;
    term.type = AspTerm::Type::Number;
    std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      ++pos_;
    }
    if (pos_ == start || (text_[start] == '-' && pos_ == start + 1)) {
      fail("expected digits");
    }
    term.number = std::stoll(std::string(text_.substr(start, pos_ - start)));
    return term;
  }

  AspTerm parse_symbol_or_function() {
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      bool ident = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                   (c >= '0' && c <= '9') || c == '_' || c == '\'';
      if (!ident) break;
      ++pos_;
    }
    AspTerm term;
    term.name = std::string(text_.substr(start, pos_ - start));
    if (peek() == '(') {
      ++pos_;
      term.type = AspTerm::Type::Function;
      term.args = parse_args();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    } else {
      term.type = AspTerm::Type::Symbol;
    }
    return term;
  }

  std::vector<AspTerm> parse_args() {
    std::vector<AspTerm> args;
    skip_space();
    if (peek() == ')') return args;
    args.push_back(parse_term());
    skip_space();
    while (peek() == ',') {
      ++pos_;
      args.push_back(parse_term());
      skip_space();
    }
    return args;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

GoalAtom term_to_goal_atom(const AspTerm& term) {
  if (term.type == AspTerm::Type::Tuple && term.args.size() == 2) {
    const AspTerm& s = term.args[0];
    const AspTerm& o = term.args[1];
    auto name = [](const AspTerm& t) -> std::string {
      if (t.type != AspTerm::Type::Symbol && t.type != AspTerm::Type::String) {
        throw ValidationError("pair atom component is not a name: " + t.str());
      }
      return t.name;
    };
    return GoalAtom(name(s), name(o));
  }
  if (term.type == AspTerm::Type::Symbol || term.type == AspTerm::Type::String) {
    return GoalAtom::simple(term.name);
  }
  throw ValidationError("term is not a goal atom: " + term.str());
}

}  // namespace

std::string AspTerm::str() const {
  switch (type) {
    case Type::Symbol: return name;
    case Type::Number: return std::to_string(number);
    case Type::String: return "\"" + name + "\"";
    case Type::Tuple:
    case Type::Function: {
      std::string out = type == Type::Function ? name : "";
      out += "(";
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i > 0) out += ",";
        out += args[i].str();
      }
      out += ")";
      return out;
    }
  }
  return "?";
}

bool AspTerm::operator==(const AspTerm& other) const {
  return type == other.type && name == other.name && number == other.number &&
         args == other.args;
}

std::string AspAtom::str() const { return (negated ? "-" : "") + term.str(); }

Formula term_to_formula(const AspTerm& term) {
  if (term.type == AspTerm::Type::Function) {
    const auto& args = term.args;
    auto unary = [&](Formula (*make)(Formula)) {
      if (args.size() != 1) {
        throw ValidationError("connective " + term.name + " expects 1 operand");
      }
      return make(term_to_formula(args[0]));
    };
    auto binary = [&](Formula (*make)(Formula, Formula)) {
      if (args.size() != 2) {
        throw ValidationError("connective " + term.name + " expects 2 operands");
      }
      return make(term_to_formula(args[0]), term_to_formula(args[1]));
    };
    if (term.name == "neg") return unary(make_not);
    if (term.name == "h") return unary(make_always);
    if (term.name == "p") return unary(make_sometime);
    if (term.name == "and") return binary(make_and);
    if (term.name == "or") return binary(make_or);
    if (term.name == "impl") return binary(make_implies);
    if (term.name == "before") return binary(make_before);
    throw ValidationError("unknown connective term: " + term.name);
  }
  return make_atom(term_to_goal_atom(term));
}

Formula parse_formula_term(std::string_view text) {
  return term_to_formula(TermParser(text).parse());
}

AnswerSet parse_answer_set(std::string_view line) {
  AnswerSet result;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    // Atoms are whitespace-separated, but quoted strings may hold spaces.
    std::size_t start = i;
    bool in_string = false;
    while (i < line.size()) {
      char c = line[i];
      if (c == '"') in_string = !in_string;
      if (!in_string && (c == ' ' || c == '\t' || c == '\r')) break;
      ++i;
    }
    std::string_view token = line.substr(start, i - start);
    AspAtom atom;
    if (!token.empty() && token.front() == '-') {
      atom.negated = true;
      token.remove_prefix(1);
    }
    atom.term = TermParser(token).parse();
    result.atoms.push_back(std::move(atom));
  }
  return result;
}

std::vector<AnswerSet> parse_solver_output(std::string_view output) {
  std::vector<AnswerSet> sets;
  std::istringstream stream{std::string(output)};
  std::string line;
  bool expect_atoms = false;
  while (std::getline(stream, line)) {
    if (expect_atoms) {
      sets.push_back(parse_answer_set(line));
      expect_atoms = false;
      continue;
    }
    if (line.rfind("Answer", 0) == 0) expect_atoms = true;
  }
  return sets;
}

OrderedModel extract_model(const AnswerSet& answer_set) {
  std::map<std::int64_t, GoalAtom> by_position;
  for (const AspAtom& atom : answer_set.atoms) {
    if (atom.negated || atom.term.type != AspTerm::Type::Function ||
        atom.term.name != "model" || atom.term.args.size() != 2) {
      continue;
    }
    if (atom.term.args[0].type != AspTerm::Type::Number) {
      throw ValidationError("model/2 position is not a number: " +
                            atom.term.str());
    }
    std::int64_t position = atom.term.args[0].number;
    GoalAtom goal = term_to_goal_atom(atom.term.args[1]);
    auto [it, inserted] = by_position.emplace(position, std::move(goal));
    if (!inserted) {
      throw ValidationError("position " + std::to_string(position) +
                            " occurs twice in the answer set");
    }
  }
  std::vector<GoalAtom> atoms;
  std::int64_t expected = 1;
  for (const auto& [position, goal] : by_position) {
    if (position != expected++) {
      throw ValidationError("model positions are not contiguous from 1");
    }
    atoms.push_back(goal);
  }
  return OrderedModel(std::move(atoms));  // rejects duplicate atoms
}

// ---------------------------------------------------------------------------
// Cross-check against an external solver
// ---------------------------------------------------------------------------

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_command(const std::string& command) {
  CommandResult result;
  const std::string shell_command = "( " + command + " ) 2>&1";
  FILE* pipe = popen(shell_command.c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, n);
  }
  int status = pclose(pipe);
  if (status >= 0 && WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

std::filesystem::path write_temp_program(const std::string& text) {
  static std::atomic<int> counter{0};
  auto path = std::filesystem::temp_directory_path() /
              ("orla_asp_" + std::to_string(::getpid()) + "_" +
               std::to_string(counter++) + ".lp");
  std::ofstream file(path);
  file << text;
  return path;
}

}  // namespace

std::string CrossCheckReport::summary() const {
  if (skipped) return "SKIPPED: " + skip_reason;
  std::string out = "native models: " + std::to_string(native_count) +
                    ", solver models: " + std::to_string(solver_count);
  if (mismatches.empty()) return out + ", no mismatches";
  out += ", " + std::to_string(mismatches.size()) + " mismatches:";
  for (const std::string& mismatch : mismatches) out += "\n  " + mismatch;
  return out;
}

CrossCheckReport cross_check(const ActivitySystem& system,
                             const OrderedModel& prefix,
                             const std::string& solver_command) {
  CrossCheckReport report;
  if (solver_command.empty()) {
    report.skipped = true;
    report.skip_reason = "no solver command configured";
    return report;
  }

  // One achievability constraint per motive: answer sets then correspond to
  // the ordered models over the joint alphabet that complete every activity.
  std::vector<AspTask> tasks;
  std::set<GoalAtom> motives;
  for (const Activity& activity : system.activities()) {
    if (motives.insert(activity.motive).second) {
      tasks.push_back(AspTask::achievability(activity.motive));
    }
  }
  if (tasks.empty()) tasks.push_back(AspTask::completion());
  const AspProgram program = assemble_program(system, prefix, tasks);

  const auto path = write_temp_program(program.text());
  std::string command = solver_command;
  const std::string placeholder = "{file}";
  if (auto at = command.find(placeholder); at != std::string::npos) {
    command.replace(at, placeholder.size(), path.string());
  } else {
    command += " " + path.string();
  }

  CommandResult run = run_command(command);
  std::error_code ignored;
  std::filesystem::remove(path, ignored);

  report.solver_exit = run.exit_code;
  if (run.exit_code == 127 || run.exit_code < 0) {
    report.skipped = true;
    report.skip_reason = run.exit_code == 127
                             ? "solver not found: " + command
                             : "solver did not run: " + command;
    return report;
  }

  std::vector<AnswerSet> answer_sets = parse_solver_output(run.output);
  if (answer_sets.empty() && run.output.find("UNSATISFIABLE") == std::string::npos) {
    report.mismatches.push_back("unrecognized solver output:\n" + run.output);
    return report;
  }

  // Native side: every ordered model over the goal atoms (plus prefix
  // atoms) extending the prefix and satisfying all directing goals.
  std::vector<Formula> goals;
  std::vector<GoalAtom> alphabet;
  for (const Activity& activity : system.activities()) {
    goals.insert(goals.end(), activity.goals.begin(), activity.goals.end());
  }
  alphabet = atoms(goals);
  for (const GoalAtom& atom : prefix.atoms()) alphabet.push_back(atom);
  std::vector<OrderedModel> native = all_models(goals, prefix, alphabet);

  std::vector<OrderedModel> solver_models;
  for (const AnswerSet& answer_set : answer_sets) {
    solver_models.push_back(extract_model(answer_set));
    // Truth labels must agree with native evaluation in the extracted model.
    const OrderedModel& model = solver_models.back();
    for (const AspAtom& atom : answer_set.atoms) {
      if (atom.term.type != AspTerm::Type::Function ||
          atom.term.args.size() != 1 ||
          (atom.term.name != "t" && atom.term.name != "f") || atom.negated) {
        continue;
      }
      const Formula formula = term_to_formula(atom.term.args[0]);
      const bool expected = atom.term.name == "t";
      if (eval(model, formula) != expected) {
        report.mismatches.push_back("label " + atom.str() +
                                    " contradicts evaluation in " + model.str());
      }
    }
  }

  report.native_count = native.size();
  report.solver_count = solver_models.size();

  std::sort(native.begin(), native.end());
  std::sort(solver_models.begin(), solver_models.end());
  std::vector<OrderedModel> missing;
  std::set_difference(native.begin(), native.end(), solver_models.begin(),
                      solver_models.end(), std::back_inserter(missing));
  for (const OrderedModel& model : missing) {
    report.mismatches.push_back("missing from solver: " + model.str());
  }
  std::vector<OrderedModel> extra;
  std::set_difference(solver_models.begin(), solver_models.end(),
                      native.begin(), native.end(), std::back_inserter(extra));
  for (const OrderedModel& model : extra) {
    report.mismatches.push_back("not a native model: " + model.str());
  }
  return report;
}

}  // namespace orla
