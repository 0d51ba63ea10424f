#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "orla/activity.hpp"
#include "orla/asp.hpp"
#include "orla/eval.hpp"
#include "orla/io.hpp"
#include "orla/parser.hpp"
#include "orla/persistence.hpp"
#include "orla/solver.hpp"

namespace py = pybind11;
using namespace orla;

namespace {

// std::set<std::set<...>> has no natural python image; flatten to lists.
std::vector<std::vector<std::string>> alternatives_list(
    const ToolAlternatives& alternatives) {
  std::vector<std::vector<std::string>> out;
  for (const ToolSet& alternative : alternatives) {
    out.emplace_back(alternative.begin(), alternative.end());
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(orla, m) {
  m.doc() =
      "Reasoning about ordered goal models and activity systems: parsing and "
      "evaluating past-time goal formulas, satisfiability and entailment, "
      "activity completion/achievability/prediction, and the answer-set "
      "program emitter.";

  py::register_exception<ParseError>(m, "FormulaParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<UnknownMotiveError>(m, "UnknownMotiveError",
                                             PyExc_KeyError);
  py::register_exception<NotCompletedError>(m, "NotCompletedError",
                                            PyExc_RuntimeError);
  py::register_exception<NotAchievableError>(m, "NotAchievableError",
                                             PyExc_RuntimeError);

  py::class_<GoalAtom>(m, "GoalAtom")
      .def(py::init<std::string, std::string>(), py::arg("subject"),
           py::arg("object"))
      .def_static("simple", &GoalAtom::simple, py::arg("object"))
      .def_readonly("subject", &GoalAtom::subject)
      .def_readonly("object", &GoalAtom::object)
      .def("is_simple", &GoalAtom::is_simple)
      .def("__str__", &GoalAtom::str)
      .def("__repr__",
           [](const GoalAtom& atom) { return "GoalAtom(" + atom.str() + ")"; })
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const GoalAtom& atom) {
        return py::hash(py::make_tuple(atom.subject, atom.object));
      });

  py::class_<OrderedModel>(m, "OrderedModel")
      .def(py::init<>())
      .def(py::init<std::vector<GoalAtom>>(), py::arg("atoms"))
      .def("atoms", &OrderedModel::atoms)
      .def("__len__", &OrderedModel::size)
      .def("position", &OrderedModel::position, py::arg("atom"))
      .def("contains", &OrderedModel::contains, py::arg("atom"))
      .def("prefix", &OrderedModel::prefix, py::arg("length"))
      .def("is_prefix_of", &OrderedModel::is_prefix_of, py::arg("other"))
      .def("extended", &OrderedModel::extended, py::arg("atom"))
      .def("__str__", &OrderedModel::str)
      .def("__repr__",
           [](const OrderedModel& model) {
             return "OrderedModel(" + model.str() + ")";
           })
      .def(py::self == py::self)
      .def(py::self < py::self);

  py::enum_<Connective>(m, "Connective")
      .value("Atom", Connective::Atom)
      .value("Not", Connective::Not)
      .value("And", Connective::And)
      .value("Or", Connective::Or)
      .value("Implies", Connective::Implies)
      .value("Always", Connective::Always)
      .value("Sometime", Connective::Sometime)
      .value("Before", Connective::Before);

  py::class_<Formula>(m, "Formula")
      .def("kind", &Formula::kind)
      .def("is_atom", &Formula::is_atom)
      .def("atom", &Formula::atom)
      .def("arity", &Formula::arity)
      .def("child", &Formula::child, py::arg("index") = 0)
      .def("size", &Formula::size)
      .def("__str__", [](const Formula& f) { return render(f); })
      .def("__repr__",
           [](const Formula& f) { return "Formula(" + render(f) + ")"; })
      .def(py::self == py::self)
      .def("__hash__", &Formula::hash);

  m.def("parse", &parse, py::arg("text"), "Parse formula text into a Formula.");
  m.def("parse_atom", &parse_atom, py::arg("text"));
  m.def("render", &render, py::arg("formula"),
        "Minimal-parentheses text; parse(render(f)) == f.");
  m.def("make_atom", &make_atom);
  m.def("make_not", &make_not);
  m.def("make_and", &make_and);
  m.def("make_or", &make_or);
  m.def("make_implies", &make_implies);
  m.def("make_always", &make_always);
  m.def("make_sometime", &make_sometime);
  m.def("make_before", &make_before);
  m.def("atoms", py::overload_cast<const Formula&>(&atoms), py::arg("formula"));
  m.def("theory_atoms",
        py::overload_cast<const std::vector<Formula>&>(&atoms),
        py::arg("theory"));
  m.def("subformulas", &subformulas, py::arg("formula"));

  py::class_<EvalTable>(m, "EvalTable")
      .def("rows", &EvalTable::rows)
      .def("columns", &EvalTable::columns)
      .def("value",
           py::overload_cast<std::size_t, std::size_t>(&EvalTable::value,
                                                       py::const_),
           py::arg("row"), py::arg("prefix_length"))
      .def("value_of",
           py::overload_cast<const Formula&, std::size_t>(&EvalTable::value,
                                                          py::const_),
           py::arg("formula"), py::arg("prefix_length"))
      .def("result", &EvalTable::result);

  m.def("evaluate",
        py::overload_cast<const OrderedModel&, const Formula&>(&eval),
        py::arg("model"), py::arg("formula"),
        "Truth of the formula in the model.");
  m.def("evaluate",
        py::overload_cast<const OrderedModel&, const std::vector<Formula>&>(
            &eval),
        py::arg("model"), py::arg("theory"));
  m.def("eval_table", &eval_table, py::arg("model"), py::arg("formula"));
  m.def("restrict", &orla::restrict, py::arg("model"), py::arg("formula"),
        "Subsequence of the model over the formula's atoms.");

  py::enum_<PersistenceClass>(m, "PersistenceClass")
      .value("PositivePersistent", PersistenceClass::PositivePersistent)
      .value("NegativePersistent", PersistenceClass::NegativePersistent)
      .value("Unknown", PersistenceClass::Unknown);

  py::class_<PersistenceCheck>(m, "PersistenceCheck")
      .def_readonly("positive", &PersistenceCheck::positive)
      .def_readonly("negative", &PersistenceCheck::negative);

  m.def("classify_persistence", &classify_persistence, py::arg("formula"));
  m.def("check_persistence_semantic", &check_persistence_semantic,
        py::arg("formula"), py::arg("alphabet"),
        py::arg("bound") = kDefaultPersistenceAlphabetBound);

  m.def("satisfiable", &satisfiable, py::arg("theory"),
        py::arg("required_prefix") = OrderedModel(),
        py::arg("alphabet") = std::vector<GoalAtom>{},
        "First ordered model extending the prefix that satisfies the theory, "
        "or None.");
  m.def("entails", &entails, py::arg("theory"), py::arg("formula"));
  m.def("is_subgoal", &is_subgoal, py::arg("theory"), py::arg("psi"),
        py::arg("phi"));
  m.def("simplify_subgoal", &simplify_subgoal, py::arg("psi"), py::arg("phi"));
  m.def("all_models", &all_models, py::arg("theory"), py::arg("prefix"),
        py::arg("alphabet"),
        py::arg("exact_length") = std::optional<std::size_t>{});

  py::class_<ToolMap>(m, "ToolMap")
      .def(py::init<>())
      .def(
          "set",
          [](ToolMap& map, const GoalAtom& goal,
             const std::vector<std::vector<std::string>>& alternatives) {
            ToolAlternatives parsed;
            for (const auto& alternative : alternatives) {
              parsed.insert(ToolSet(alternative.begin(), alternative.end()));
            }
            map.set(goal, std::move(parsed));
          },
          py::arg("goal"), py::arg("alternatives"))
      .def("find",
           [](const ToolMap& map, const GoalAtom& goal)
               -> std::optional<std::vector<std::vector<std::string>>> {
             const ToolAlternatives* found = map.find(goal);
             if (found == nullptr) return std::nullopt;
             return alternatives_list(*found);
           },
           py::arg("goal"));

  py::class_<AvailableTools>(m, "AvailableTools")
      .def(py::init<>())
      .def(py::init<std::map<GoalAtom, ToolSet>>(), py::arg("entries"))
      .def_static("unrestricted", &AvailableTools::unrestricted)
      .def("is_unrestricted", &AvailableTools::is_unrestricted)
      .def("available_for", &AvailableTools::available_for, py::arg("goal"));

  py::class_<Activity>(m, "Activity")
      .def(py::init([](const GoalAtom& motive, std::vector<Formula> goals,
                       ToolMap tools) {
             return Activity{motive, std::move(goals), std::move(tools)};
           }),
           py::arg("motive"), py::arg("goals") = std::vector<Formula>{},
           py::arg("tools") = ToolMap{})
      .def_readwrite("motive", &Activity::motive)
      .def_readwrite("goals", &Activity::goals)
      .def_readwrite("tools", &Activity::tools);

  py::class_<ActivitySystem>(m, "ActivitySystem")
      .def(py::init<>())
      .def(py::init<std::set<std::string>, std::set<std::string>,
                    std::set<std::string>>(),
           py::arg("subjects"), py::arg("objects"), py::arg("artifacts"))
      .def("add_activity", &ActivitySystem::add_activity, py::arg("activity"))
      .def("subjects", &ActivitySystem::subjects)
      .def("objects", &ActivitySystem::objects)
      .def("artifacts", &ActivitySystem::artifacts)
      .def("activities", &ActivitySystem::activities)
      .def(
          "activity",
          [](const ActivitySystem& system, const GoalAtom& motive) {
            return *system.activities_for(motive).front();
          },
          py::arg("motive"))
      .def("goal_alphabet", &ActivitySystem::goal_alphabet, py::arg("motive"));

  m.def("completion", &completion, py::arg("observed"), py::arg("system"),
        py::arg("motive"));
  m.def("relevant_atoms", &relevant_atoms, py::arg("observed"),
        py::arg("system"), py::arg("motive"));
  m.def(
      "achievability",
      [](const OrderedModel& observed, const AvailableTools& available,
         const ActivitySystem& system, const GoalAtom& motive,
         bool exempt_prefix_from_tools) {
        AchieveOptions options;
        options.exempt_prefix_from_tools = exempt_prefix_from_tools;
        return achievability(observed, available, system, motive, options);
      },
      py::arg("observed"), py::arg("available"), py::arg("system"),
      py::arg("motive"), py::arg("exempt_prefix_from_tools") = false);
  m.def("predict_next", &predict_next, py::arg("observed"),
        py::arg("available"), py::arg("system"), py::arg("motive"),
        py::arg("minimal") = false);

  py::class_<Abnormality>(m, "Abnormality")
      .def_readonly("prefix_length", &Abnormality::prefix_length)
      .def_readonly("blocking_atom", &Abnormality::blocking_atom)
      .def("no_prefix_achievable", &Abnormality::no_prefix_achievable);

  m.def("abnormality", &abnormality, py::arg("observed"), py::arg("available"),
        py::arg("system"), py::arg("motive"));
  m.def("social_achievability", &social_achievability, py::arg("observed"),
        py::arg("allowed"), py::arg("system"), py::arg("motive"),
        py::arg("strict"),
        py::arg("available") = AvailableTools::unrestricted());
  m.def(
      "tool_deficit",
      [](const OrderedModel& witness, const AvailableTools& available,
         const ToolMap& tools) {
        std::map<std::string, std::vector<std::vector<std::string>>> out;
        for (const auto& [goal, missing] :
             tool_deficit(witness, available, tools)) {
          out[goal.str()] = alternatives_list(missing);
        }
        return out;
      },
      py::arg("witness"), py::arg("available"), py::arg("tools"));
  m.def("entails_activity", &entails_activity, py::arg("first"),
        py::arg("second"));
  m.def("equivalent_activities", &equivalent_activities, py::arg("first"),
        py::arg("second"));

  // File formats.
  m.def("parse_theory", &parse_theory, py::arg("text"));
  m.def(
      "load_theory", [](const std::string& path) { return load_theory(path); },
      py::arg("path"));
  m.def("parse_model", &parse_model, py::arg("text"));
  m.def(
      "load_model", [](const std::string& path) { return load_model(path); },
      py::arg("path"));
  m.def("parse_system", &parse_system, py::arg("json_text"));
  m.def(
      "load_system", [](const std::string& path) { return load_system(path); },
      py::arg("path"));
  m.def("parse_tools", &parse_tools, py::arg("json_text"));
  m.def(
      "load_tools", [](const std::string& path) { return load_tools(path); },
      py::arg("path"));

  // Answer-set bridge.
  py::class_<AspTask>(m, "AspTask")
      .def_static("completion", &AspTask::completion)
      .def_static("achievability", &AspTask::achievability, py::arg("motive"))
      .def_static("social", &AspTask::social, py::arg("motive"),
                  py::arg("subjects"))
      .def_static("prediction", &AspTask::prediction, py::arg("motive"))
      .def_static("minimize", &AspTask::minimize)
      .def_static("entailment", &AspTask::entailment, py::arg("motive1"),
                  py::arg("motive2"));

  py::class_<AspProgram>(m, "AspProgram")
      .def_readonly("facts", &AspProgram::facts)
      .def_readonly("guess", &AspProgram::guess)
      .def_readonly("define", &AspProgram::define)
      .def_readonly("task_rules", &AspProgram::task_rules)
      .def("text", &AspProgram::text);

  py::class_<AnswerSet>(m, "AnswerSet").def("atoms", [](const AnswerSet& set) {
    std::vector<std::string> out;
    for (const AspAtom& atom : set.atoms) out.push_back(atom.str());
    return out;
  });

  py::class_<CrossCheckReport>(m, "CrossCheckReport")
      .def_readonly("skipped", &CrossCheckReport::skipped)
      .def_readonly("skip_reason", &CrossCheckReport::skip_reason)
      .def_readonly("native_count", &CrossCheckReport::native_count)
      .def_readonly("solver_count", &CrossCheckReport::solver_count)
      .def_readonly("mismatches", &CrossCheckReport::mismatches)
      .def("ok", &CrossCheckReport::ok)
      .def("summary", &CrossCheckReport::summary);

  m.def("emit_facts", &emit_facts, py::arg("system"));
  m.def("emit_prefix", &emit_prefix, py::arg("prefix"));
  m.def("emit_fixed_encoding", &emit_fixed_encoding);
  m.def("emit_task", &emit_task, py::arg("task"), py::arg("system"));
  m.def("assemble_program", &assemble_program, py::arg("system"),
        py::arg("prefix"), py::arg("tasks"));
  m.def("formula_to_term", &formula_to_term, py::arg("formula"));
  m.def("parse_formula_term", &parse_formula_term, py::arg("text"));
  m.def("parse_answer_set", &parse_answer_set, py::arg("line"));
  m.def("parse_solver_output", &parse_solver_output, py::arg("output"));
  m.def("extract_model", &extract_model, py::arg("answer_set"));
  m.def("cross_check", &cross_check, py::arg("system"), py::arg("prefix"),
        py::arg("solver_command"));
}
