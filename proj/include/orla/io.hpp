#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "orla/activity.hpp"
#include "orla/formula.hpp"

namespace orla {

/// Theory files: one formula per line, `#` comments, blank lines ignored.
std::vector<Formula> parse_theory(std::string_view text);
std::vector<Formula> load_theory(const std::filesystem::path& path);

/// Model files: a single line `<a1, a2, ...>` or one atom per line; `#`
/// comments and blank lines ignored either way.
OrderedModel parse_model(std::string_view text);
OrderedModel load_model(const std::filesystem::path& path);

/// Activity system files: a single JSON document
///   {"subjects": [...], "objects": [...], "artifacts": [...],
///    "activities": [{"motive": ["ebba","fika"],
///                    "goals": ["formula text", ...],
///                    "tools": {"(ebba,coffee)": [["c_machine", ...]]}}]}
/// Motives are unique within a file.
ActivitySystem parse_system(std::string_view json_text);
ActivitySystem load_system(const std::filesystem::path& path);

/// Available-tools files: {"(s,o)": ["tool", ...], ...} or the literal
/// string "unrestricted".
AvailableTools parse_tools(std::string_view json_text);
AvailableTools load_tools(const std::filesystem::path& path);

}  // namespace orla
