#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orla/activity.hpp"
#include "orla/asp.hpp"
#include "orla/eval.hpp"
#include "orla/io.hpp"
#include "orla/parser.hpp"
#include "orla/persistence.hpp"
#include "orla/solver.hpp"

namespace {

using nlohmann::json;
using namespace orla;

// Exit codes: 0 affirmative/success, 1 negative answer, 2 usage or input
// error, 3 cross-check skipped (no solver).
constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;
constexpr int kSkipped = 3;

struct Report {
  std::string task;
  json inputs = json::object();
  json result;
  std::optional<json> witness;
  std::string human;
  int exit_code = kYes;
};

bool g_json_mode = false;

int finish(Report report, std::chrono::steady_clock::time_point started) {
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                started)
          .count();
  if (g_json_mode) {
    json out = {{"task", report.task},
                {"inputs", report.inputs},
                {"result", report.result},
                {"elapsed_ms", elapsed}};
    if (report.witness) out["witness"] = *report.witness;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << report.human;
  }
  return report.exit_code;
}

json atoms_json(const std::vector<GoalAtom>& atoms) {
  json out = json::array();
  for (const GoalAtom& atom : atoms) out.push_back(atom.str());
  return out;
}

std::string atoms_lines(const std::vector<GoalAtom>& atoms) {
  std::string out;
  for (const GoalAtom& atom : atoms) out += atom.str() + "\n";
  return out;
}

std::set<std::string> split_names(const std::string& csv) {
  std::set<std::string> names;
  std::stringstream stream(csv);
  std::string piece;
  while (std::getline(stream, piece, ',')) {
    if (!piece.empty()) names.insert(piece);
  }
  return names;
}

std::string format_table(const EvalTable& table) {
  std::vector<std::string> labels;
  std::size_t width = 0;
  for (const Formula& row : table.rows()) {
    labels.push_back(render(row));
    width = std::max(width, labels.back().size());
  }
  std::vector<std::string> headers;
  for (std::size_t k = 0; k < table.columns(); ++k) {
    headers.push_back(table.model().prefix(k).str());
  }
  std::ostringstream out;
  out << std::string(width, ' ');
  for (const std::string& header : headers) out << "  " << header;
  out << "\n";
  for (std::size_t r = 0; r < table.rows().size(); ++r) {
    out << labels[r] << std::string(width - labels[r].size(), ' ');
    for (std::size_t k = 0; k < table.columns(); ++k) {
      out << "  " << (table.value(r, k) ? 't' : 'f')
          << std::string(headers[k].size() - 1, ' ');
    }
    out << "\n";
  }
  return out.str();
}

struct CommonPaths {
  std::string system_path;
  std::string model_path;
  std::string tools_path;
  std::string motive_text;
};

AvailableTools tools_or_unrestricted(const std::string& path) {
  if (path.empty()) return AvailableTools::unrestricted();
  return load_tools(path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reasoning about ordered goal models and activities"};
  app.require_subcommand(1);
  std::string format = "human";
  app.add_option("--format", format, "output format: human or json")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();

  // ---- logic-level subcommands -------------------------------------------

  auto* check = app.add_subcommand("check", "evaluate a model against a theory");
  CommonPaths check_in;
  std::string check_formula;
  bool check_table = false;
  check->add_option("--model", check_in.model_path, "model file")->required();
  auto* check_theory_opt =
      check->add_option("--theory", check_in.system_path, "theory file");
  check->add_option("--formula", check_formula, "inline formula text")
      ->excludes(check_theory_opt);
  check->add_flag("--table", check_table,
                  "print the truth table per subformula and prefix");

  auto* sat = app.add_subcommand("sat", "search for a satisfying ordered model");
  CommonPaths sat_in;
  std::string sat_formula, sat_prefix, sat_alphabet;
  sat->add_option("--theory", sat_in.system_path, "theory file");
  sat->add_option("--formula", sat_formula, "inline formula text");
  sat->add_option("--prefix", sat_prefix, "required prefix model file");
  sat->add_option("--alphabet", sat_alphabet,
                  "comma-separated atoms (default: atoms of the input)");

  auto* entail_cmd = app.add_subcommand("entail", "decide theory |= formula");
  CommonPaths entail_in;
  std::string entail_formula;
  entail_cmd->add_option("--theory", entail_in.system_path, "theory file")
      ->required();
  entail_cmd->add_option("--formula", entail_formula, "formula text")->required();

  auto* classify = app.add_subcommand("classify", "persistence classification");
  std::string classify_formula;
  bool classify_semantic = false;
  std::size_t classify_bound = kDefaultPersistenceAlphabetBound;
  classify->add_option("--formula", classify_formula, "formula text")->required();
  classify->add_flag("--semantic", classify_semantic,
                     "also decide persistence over the formula's atoms");
  classify->add_option("--bound", classify_bound,
                       "alphabet bound for the semantic check");

  auto* subgoal_cmd = app.add_subcommand("subgoal", "decide a subgoal relation");
  CommonPaths subgoal_in;
  std::string subgoal_psi, subgoal_phi;
  bool subgoal_simplify = false;
  subgoal_cmd->add_option("--theory", subgoal_in.system_path, "theory file")
      ->required();
  subgoal_cmd->add_option("--psi", subgoal_psi, "candidate subgoal")->required();
  subgoal_cmd->add_option("--phi", subgoal_phi, "goal")->required();
  subgoal_cmd->add_flag("--simplify", subgoal_simplify,
                        "also print the implication form when psi is a goal "
                        "formula");

  // ---- activity-level subcommands ----------------------------------------

  auto add_activity_inputs = [](CLI::App* cmd, CommonPaths& in,
                                bool model_required = true) {
    cmd->add_option("--system", in.system_path, "activity system JSON file")
        ->required();
    auto* model =
        cmd->add_option("--model", in.model_path, "observed model file");
    if (model_required) model->required();
    cmd->add_option("--motive", in.motive_text, "motive atom, e.g. \"(ebba,fika)\"")
        ->required();
  };

  auto* complete = app.add_subcommand("complete", "has the activity completed");
  CommonPaths complete_in;
  add_activity_inputs(complete, complete_in);

  auto* relevant = app.add_subcommand("relevant", "atoms needed for completion");
  CommonPaths relevant_in;
  add_activity_inputs(relevant, relevant_in);

  auto* achieve = app.add_subcommand("achieve", "can the activity complete");
  CommonPaths achieve_in;
  bool achieve_exempt = false;
  add_activity_inputs(achieve, achieve_in);
  achieve->add_option("--tools", achieve_in.tools_path,
                      "available tools JSON file (default unrestricted)");
  achieve->add_flag("--exempt-prefix-tools", achieve_exempt,
                    "do not apply the tool condition to observed atoms");

  auto* predict = app.add_subcommand("predict", "potential next goals");
  CommonPaths predict_in;
  bool predict_minimal = false;
  add_activity_inputs(predict, predict_in);
  predict->add_option("--tools", predict_in.tools_path, "available tools JSON");
  predict->add_flag("--minimal", predict_minimal,
                    "only next goals of minimum-length completions");

  auto* social = app.add_subcommand("social", "achievability with allowed subjects");
  CommonPaths social_in;
  std::string social_subjects;
  bool social_strict = false;
  add_activity_inputs(social, social_in);
  social->add_option("--subjects", social_subjects, "comma-separated subjects")
      ->required();
  social->add_flag("--strict", social_strict,
                   "require observed atoms to comply as well");
  social->add_option("--tools", social_in.tools_path, "available tools JSON");

  auto* abnormal = app.add_subcommand("abnormal", "locate the blocking goal");
  CommonPaths abnormal_in;
  add_activity_inputs(abnormal, abnormal_in);
  abnormal->add_option("--tools", abnormal_in.tools_path, "available tools JSON");

  auto* deficit = app.add_subcommand("deficit", "missing tools per witness atom");
  CommonPaths deficit_in;
  add_activity_inputs(deficit, deficit_in);
  deficit->add_option("--tools", deficit_in.tools_path, "available tools JSON")
      ->required();

  auto* entail_act = app.add_subcommand("entail-activity",
                                        "does one activity entail another");
  CommonPaths entail_act_in;
  std::string entail_act_motive2;
  entail_act->add_option("--system", entail_act_in.system_path, "system JSON")
      ->required();
  entail_act->add_option("--motive", entail_act_in.motive_text, "entailing motive")
      ->required();
  entail_act->add_option("--motive2", entail_act_motive2, "entailed motive")
      ->required();

  auto* equiv_act = app.add_subcommand("equiv-activity",
                                       "are two activities equivalent");
  CommonPaths equiv_act_in;
  std::string equiv_act_motive2;
  equiv_act->add_option("--system", equiv_act_in.system_path, "system JSON")
      ->required();
  equiv_act->add_option("--motive", equiv_act_in.motive_text, "first motive")
      ->required();
  equiv_act->add_option("--motive2", equiv_act_motive2, "second motive")
      ->required();

  // ---- solver bridge subcommands -----------------------------------------

  auto* emit = app.add_subcommand("emit-asp", "emit the solver program");
  CommonPaths emit_in;
  std::vector<std::string> emit_tasks;
  std::string emit_motive2, emit_subjects, emit_out;
  emit->add_option("--system", emit_in.system_path, "system JSON")->required();
  emit->add_option("--model", emit_in.model_path, "prefix model file");
  emit->add_option("--task", emit_tasks,
                   "task block(s): complete, achieve, social, predict, "
                   "minimize, entail");
  emit->add_option("--motive", emit_in.motive_text, "motive for the task");
  emit->add_option("--motive2", emit_motive2, "entailed motive (task entail)");
  emit->add_option("--subjects", emit_subjects, "allowed subjects (task social)");
  emit->add_option("--out", emit_out, "write to file instead of stdout");

  auto* cross = app.add_subcommand("cross-check",
                                   "compare solver answer sets with native "
                                   "enumeration");
  CommonPaths cross_in;
  std::string cross_solver;
  cross->add_option("--system", cross_in.system_path, "system JSON")->required();
  cross->add_option("--model", cross_in.model_path, "prefix model file");
  cross->add_option("--solver", cross_solver,
                    "solver command with {file} placeholder (default "
                    "$ORLA_ASP_SOLVER)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  g_json_mode = format == "json";
  const auto started = std::chrono::steady_clock::now();

  try {
    if (*check) {
      std::vector<Formula> theory;
      if (!check_formula.empty()) {
        theory.push_back(parse(check_formula));
      } else if (!check_in.system_path.empty()) {
        theory = load_theory(check_in.system_path);
      } else {
        std::cerr << "error: check needs --theory or --formula\n";
        return kError;
      }
      const OrderedModel model = load_model(check_in.model_path);
      Report report;
      report.task = "check";
      report.inputs = {{"model", model.str()}};
      bool all = true;
      for (const Formula& f : theory) {
        const bool holds = eval(model, f);
        all = all && holds;
        report.human += std::string(holds ? "t" : "f") + "  " + render(f) + "\n";
        if (check_table) report.human += format_table(eval_table(model, f)) + "\n";
      }
      report.result = all;
      report.exit_code = all ? kYes : kNo;
      return finish(std::move(report), started);
    }

    if (*sat) {
      std::vector<Formula> theory;
      if (!sat_in.system_path.empty()) theory = load_theory(sat_in.system_path);
      if (!sat_formula.empty()) theory.push_back(parse(sat_formula));
      OrderedModel prefix;
      if (!sat_prefix.empty()) prefix = load_model(sat_prefix);
      std::vector<GoalAtom> alphabet;
      for (const std::string& name : split_names(sat_alphabet)) {
        alphabet.push_back(parse_atom(name));
      }
      const auto witness = satisfiable(theory, prefix, alphabet);
      Report report;
      report.task = "sat";
      report.inputs = {{"formulas", theory.size()}, {"prefix", prefix.str()}};
      report.result = witness.has_value();
      if (witness) {
        report.witness = witness->str();
        report.human = witness->str() + "\n";
        report.exit_code = kYes;
      } else {
        report.human = "UNSAT\n";
        report.exit_code = kNo;
      }
      return finish(std::move(report), started);
    }

    if (*entail_cmd) {
      const auto theory = load_theory(entail_in.system_path);
      const Formula formula = parse(entail_formula);
      const bool holds = entails(theory, formula);
      Report report;
      report.task = "entail";
      report.inputs = {{"formula", render(formula)}};
      report.result = holds;
      report.human = holds ? "entailed\n" : "not entailed\n";
      report.exit_code = holds ? kYes : kNo;
      return finish(std::move(report), started);
    }

    if (*classify) {
      const Formula formula = parse(classify_formula);
      const PersistenceClass cls = classify_persistence(formula);
      Report report;
      report.task = "classify";
      report.inputs = {{"formula", render(formula)}};
      if (classify_semantic) {
        const auto checked =
            check_persistence_semantic(formula, atoms(formula), classify_bound);
        report.result = {{"syntactic", to_string(cls)},
                         {"positive", checked.positive},
                         {"negative", checked.negative}};
        report.human = std::string("syntactic: ") + to_string(cls) +
                       "\nsemantic positive: " +
                       (checked.positive ? "yes" : "no") +
                       "\nsemantic negative: " +
                       (checked.negative ? "yes" : "no") + "\n";
      } else {
        report.result = to_string(cls);
        report.human = std::string(to_string(cls)) + "\n";
      }
      report.exit_code = kYes;
      return finish(std::move(report), started);
    }

    if (*subgoal_cmd) {
      const auto theory = load_theory(subgoal_in.system_path);
      const Formula psi = parse(subgoal_psi);
      const Formula phi = parse(subgoal_phi);
      const bool holds = is_subgoal(theory, psi, phi);
      Report report;
      report.task = "subgoal";
      report.inputs = {{"psi", render(psi)}, {"phi", render(phi)}};
      report.result = holds;
      report.human = holds ? "subgoal\n" : "not a subgoal\n";
      if (subgoal_simplify) {
        const Formula simplified = simplify_subgoal(psi, phi);
        report.human += render(simplified) + "\n";
        report.inputs["simplified"] = render(simplified);
      }
      report.exit_code = holds ? kYes : kNo;
      return finish(std::move(report), started);
    }

    if (*complete) {
      const auto system = load_system(complete_in.system_path);
      const auto model = load_model(complete_in.model_path);
      const GoalAtom motive = parse_atom(complete_in.motive_text);
      const bool done = completion(model, system, motive);
      Report report;
      report.task = "complete";
      report.inputs = {{"motive", motive.str()}, {"model", model.str()}};
      report.result = done;
      report.human = done ? "completed\n" : "not completed\n";
      report.exit_code = done ? kYes : kNo;
      return finish(std::move(report), started);
    }

    if (*relevant) {
      const auto system = load_system(relevant_in.system_path);
      const auto model = load_model(relevant_in.model_path);
      const GoalAtom motive = parse_atom(relevant_in.motive_text);
      const auto atoms = relevant_atoms(model, system, motive);
      Report report;
      report.task = "relevant";
      report.inputs = {{"motive", motive.str()}, {"model", model.str()}};
      report.result = atoms_json(atoms);
      report.human = atoms_lines(atoms);
      report.exit_code = atoms.empty() ? kNo : kYes;
      return finish(std::move(report), started);
    }

    if (*achieve) {
      const auto system = load_system(achieve_in.system_path);
      const auto model = load_model(achieve_in.model_path);
      const GoalAtom motive = parse_atom(achieve_in.motive_text);
      const auto tools = tools_or_unrestricted(achieve_in.tools_path);
      AchieveOptions options;
      options.exempt_prefix_from_tools = achieve_exempt;
      const auto witness = achievability(model, tools, system, motive, options);
      Report report;
      report.task = "achieve";
      report.inputs = {{"motive", motive.str()}, {"model", model.str()}};
      report.result = witness.has_value();
      if (witness) {
        report.witness = witness->str();
        report.human = witness->str() + "\n";
      } else {
        report.human = "not achievable\n";
      }
      report.exit_code = witness ? kYes : kNo;
      return finish(std::move(report), started);
    }

    if (*predict) {
      const auto system = load_system(predict_in.system_path);
      const auto model = load_model(predict_in.model_path);
      const GoalAtom motive = parse_atom(predict_in.motive_text);
      const auto tools = tools_or_unrestricted(predict_in.tools_path);
      const auto next = predict_next(model, tools, system, motive, predict_minimal);
      Report report;
      report.task = "predict";
      report.inputs = {{"motive", motive.str()},
                       {"model", model.str()},
                       {"minimal", predict_minimal}};
      report.result = atoms_json(next);
      report.human = atoms_lines(next);
      report.exit_code = next.empty() ? kNo : kYes;
      return finish(std::move(report), started);
    }

    if (*social) {
      const auto system = load_system(social_in.system_path);
      const auto model = load_model(social_in.model_path);
      const GoalAtom motive = parse_atom(social_in.motive_text);
      const auto tools = tools_or_unrestricted(social_in.tools_path);
      const auto witness = social_achievability(
          model, split_names(social_subjects), system, motive, social_strict,
          tools);
      Report report;
      report.task = "social";
      report.inputs = {{"motive", motive.str()},
                       {"model", model.str()},
                       {"subjects", social_subjects},
                       {"strict", social_strict}};
      report.result = witness.has_value();
      if (witness) {
        report.witness = witness->str();
        report.human = witness->str() + "\n";
      } else {
        report.human = "not socially achievable\n";
      }
      report.exit_code = witness ? kYes : kNo;
      return finish(std::move(report), started);
    }

    if (*abnormal) {
      const auto system = load_system(abnormal_in.system_path);
      const auto model = load_model(abnormal_in.model_path);
      const GoalAtom motive = parse_atom(abnormal_in.motive_text);
      const auto tools = tools_or_unrestricted(abnormal_in.tools_path);
      const auto found = abnormality(model, tools, system, motive);
      Report report;
      report.task = "abnormal";
      report.inputs = {{"motive", motive.str()}, {"model", model.str()}};
      if (!found) {
        report.result = nullptr;
        report.human = "not abnormal: the activity is still achievable\n";
        report.exit_code = kNo;
      } else if (found->no_prefix_achievable()) {
        report.result = {{"no_prefix_achievable", true}};
        report.human = "no achievable prefix: blocked structurally or by tools\n";
        report.exit_code = kYes;
      } else {
        report.result = {{"prefix_length", found->prefix_length},
                         {"blocking_atom", found->blocking_atom->str()}};
        report.human = "achievable up to length " +
                       std::to_string(found->prefix_length) +
                       "; blocked by " + found->blocking_atom->str() + "\n";
        report.exit_code = kYes;
      }
      return finish(std::move(report), started);
    }

    if (*deficit) {
      const auto system = load_system(deficit_in.system_path);
      const auto model = load_model(deficit_in.model_path);
      const GoalAtom motive = parse_atom(deficit_in.motive_text);
      const auto tools = load_tools(deficit_in.tools_path);
      const Activity* activity = system.activities_for(motive).front();
      const auto missing = tool_deficit(model, tools, activity->tools);
      Report report;
      report.task = "deficit";
      report.inputs = {{"motive", motive.str()}, {"model", model.str()}};
      json result = json::object();
      for (const auto& [goal, alternatives] : missing) {
        json sets = json::array();
        for (const ToolSet& alternative : alternatives) {
          sets.push_back(json(alternative));
        }
        result[goal.str()] = sets;
        report.human += goal.str() + ":";
        for (const ToolSet& alternative : alternatives) {
          report.human += " {";
          bool first = true;
          for (const std::string& tool : alternative) {
            report.human += (first ? "" : ", ") + tool;
            first = false;
          }
          report.human += "}";
        }
        report.human += "\n";
      }
      report.result = result;
      report.exit_code = missing.empty() ? kNo : kYes;
      if (missing.empty()) report.human = "no missing tools\n";
      return finish(std::move(report), started);
    }

    if (*entail_act || *equiv_act) {
      const bool equivalence = static_cast<bool>(*equiv_act);
      const CommonPaths& in = equivalence ? equiv_act_in : entail_act_in;
      const std::string& motive2_text =
          equivalence ? equiv_act_motive2 : entail_act_motive2;
      const auto system = load_system(in.system_path);
      const GoalAtom motive1 = parse_atom(in.motive_text);
      const GoalAtom motive2 = parse_atom(motive2_text);
      const Activity* first = system.activities_for(motive1).front();
      const Activity* second = system.activities_for(motive2).front();
      const bool holds = equivalence ? equivalent_activities(*first, *second)
                                     : entails_activity(*first, *second);
      Report report;
      report.task = equivalence ? "equiv-activity" : "entail-activity";
      report.inputs = {{"motive", motive1.str()}, {"motive2", motive2.str()}};
      report.result = holds;
      report.human = holds ? (equivalence ? "equivalent\n" : "entails\n")
                           : (equivalence ? "not equivalent\n" : "does not entail\n");
      report.exit_code = holds ? kYes : kNo;
      return finish(std::move(report), started);
    }

    if (*emit) {
      const auto system = load_system(emit_in.system_path);
      OrderedModel prefix;
      if (!emit_in.model_path.empty()) prefix = load_model(emit_in.model_path);
      std::vector<AspTask> tasks;
      for (const std::string& name : emit_tasks) {
        if (name == "complete") {
          tasks.push_back(AspTask::completion());
        } else if (name == "achieve") {
          tasks.push_back(AspTask::achievability(parse_atom(emit_in.motive_text)));
        } else if (name == "social") {
          tasks.push_back(AspTask::social(parse_atom(emit_in.motive_text),
                                          split_names(emit_subjects)));
        } else if (name == "predict") {
          tasks.push_back(AspTask::prediction(parse_atom(emit_in.motive_text)));
        } else if (name == "minimize") {
          tasks.push_back(AspTask::minimize());
        } else if (name == "entail") {
          tasks.push_back(AspTask::entailment(parse_atom(emit_in.motive_text),
                                              parse_atom(emit_motive2)));
        } else {
          std::cerr << "error: unknown task " << name << "\n";
          return kError;
        }
      }
      const AspProgram program = assemble_program(system, prefix, tasks);
      const std::string text = program.text();
      Report report;
      report.task = "emit-asp";
      report.inputs = {{"prefix", prefix.str()}};
      report.result = emit_out.empty() && g_json_mode ? json(text) : json("ok");
      if (!emit_out.empty()) {
        std::ofstream out(emit_out);
        if (!out) {
          std::cerr << "error: cannot write " << emit_out << "\n";
          return kError;
        }
        out << text;
      } else if (!g_json_mode) {
        report.human = text;
      }
      return finish(std::move(report), started);
    }

    if (*cross) {
      const auto system = load_system(cross_in.system_path);
      OrderedModel prefix;
      if (!cross_in.model_path.empty()) prefix = load_model(cross_in.model_path);
      std::string solver = cross_solver;
      if (solver.empty()) {
        if (const char* env = std::getenv("ORLA_ASP_SOLVER")) solver = env;
      }
      const CrossCheckReport checked = cross_check(system, prefix, solver);
      Report report;
      report.task = "cross-check";
      report.inputs = {{"prefix", prefix.str()}, {"solver", solver}};
      report.result = {{"skipped", checked.skipped},
                       {"native_models", checked.native_count},
                       {"solver_models", checked.solver_count},
                       {"mismatches", checked.mismatches}};
      report.human = checked.summary() + "\n";
      report.exit_code =
          checked.skipped ? kSkipped : (checked.ok() ? kYes : kNo);
      return finish(std::move(report), started);
    }
  } catch (const NotCompletedError& error) {
    std::cerr << error.what() << "\n";
    return kNo;
  } catch (const NotAchievableError& error) {
    std::cerr << error.what() << "\n";
    return kNo;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kError;
  }

  std::cerr << "error: no subcommand\n";
  return kError;
}
