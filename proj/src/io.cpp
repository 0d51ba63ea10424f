#include "orla/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "orla/parser.hpp"

namespace orla {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) throw ValidationError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

std::string strip(std::string_view line) {
  std::size_t begin = line.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return "";
  std::size_t end = line.find_last_not_of(" \t\r");
  return std::string(line.substr(begin, end - begin + 1));
}

// Drops a trailing `# comment` and surrounding whitespace.
std::string strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  return strip(line);
}

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream stream{std::string(text)};
  std::string line;
  while (std::getline(stream, line)) {
    std::string content = strip_comment(line);
    if (!content.empty()) lines.push_back(std::move(content));
  }
  return lines;
}

}  // namespace

std::vector<Formula> parse_theory(std::string_view text) {
  std::vector<Formula> theory;
  for (const std::string& line : content_lines(text)) {
    theory.push_back(parse(line));
  }
  return theory;
}

std::vector<Formula> load_theory(const std::filesystem::path& path) {
  return parse_theory(read_file(path));
}

OrderedModel parse_model(std::string_view text) {
  std::vector<std::string> lines = content_lines(text);
  std::vector<GoalAtom> atoms;
  const bool angle_form = lines.size() == 1 && lines[0].front() == '<' &&
                          lines[0].back() == '>';
  if (angle_form) {
    std::string inner = strip(lines[0].substr(1, lines[0].size() - 2));
    if (inner.empty()) return OrderedModel();
    // Split at commas that are not inside a pair atom.
    int depth = 0;
    std::string piece;
    std::vector<std::string> pieces;
    for (char c : inner) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        pieces.push_back(piece);
        piece.clear();
      } else {
        piece += c;
      }
    }
    pieces.push_back(piece);
    for (const std::string& entry : pieces) {
      atoms.push_back(parse_atom(strip(entry)));
    }
  } else {
    for (const std::string& line : lines) atoms.push_back(parse_atom(line));
  }
  return OrderedModel(std::move(atoms));
}

OrderedModel load_model(const std::filesystem::path& path) {
  return parse_model(read_file(path));
}

namespace {

std::set<std::string> name_set(const nlohmann::json& node, const char* key) {
  std::set<std::string> names;
  if (!node.contains(key)) return names;
  for (const auto& entry : node.at(key)) {
    names.insert(entry.get<std::string>());
  }
  return names;
}

GoalAtom motive_from_json(const nlohmann::json& node) {
  if (node.is_string()) return parse_atom(node.get<std::string>());
  if (node.is_array() && node.size() == 2) {
    return GoalAtom(node[0].get<std::string>(), node[1].get<std::string>());
  }
  throw ValidationError("motive must be [subject, object] or \"(s,o)\" text");
}

}  // namespace

ActivitySystem parse_system(std::string_view json_text) try {
  nlohmann::json doc = nlohmann::json::parse(json_text);

  ActivitySystem system(name_set(doc, "subjects"), name_set(doc, "objects"),
                        name_set(doc, "artifacts"));
  std::set<GoalAtom> seen_motives;
  for (const auto& entry : doc.value("activities", nlohmann::json::array())) {
    Activity activity{motive_from_json(entry.at("motive")), {}, {}};
    if (!seen_motives.insert(activity.motive).second) {
      throw ValidationError("duplicate motive in system file: " +
                            activity.motive.str());
    }
    for (const auto& goal : entry.value("goals", nlohmann::json::array())) {
      activity.goals.push_back(parse(goal.get<std::string>()));
    }
    if (entry.contains("tools")) {
      for (const auto& [key, alternatives] : entry.at("tools").items()) {
        ToolAlternatives parsed;
        for (const auto& alternative : alternatives) {
          ToolSet tools;
          for (const auto& tool : alternative) {
            tools.insert(tool.get<std::string>());
          }
          parsed.insert(std::move(tools));
        }
        activity.tools.set(parse_atom(key), std::move(parsed));
      }
    }
    system.add_activity(std::move(activity));
  }
  return system;
} catch (const nlohmann::json::exception& error) {
  throw ValidationError(std::string("invalid system JSON: ") + error.what());
}

ActivitySystem load_system(const std::filesystem::path& path) {
  return parse_system(read_file(path));
}

AvailableTools parse_tools(std::string_view json_text) try {
  nlohmann::json doc = nlohmann::json::parse(json_text);
  if (doc.is_string()) {
    if (doc.get<std::string>() == "unrestricted") {
      return AvailableTools::unrestricted();
    }
    throw ValidationError("tools file must be an object or \"unrestricted\"");
  }
  if (!doc.is_object()) {
    throw ValidationError("tools file must be an object or \"unrestricted\"");
  }
  std::map<GoalAtom, ToolSet> entries;
  for (const auto& [key, tools] : doc.items()) {
    ToolSet set;
    for (const auto& tool : tools) set.insert(tool.get<std::string>());
    entries.emplace(parse_atom(key), std::move(set));
  }
  return AvailableTools(std::move(entries));
} catch (const nlohmann::json::exception& error) {
  throw ValidationError(std::string("invalid tools JSON: ") + error.what());
}

AvailableTools load_tools(const std::filesystem::path& path) {
  return parse_tools(read_file(path));
}

}  // namespace orla
