#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orla {

/// Identifiers are `[a-zA-Z_][a-zA-Z0-9_']*`; the apostrophe encodes primed
/// names such as `ebba'`.
bool is_identifier(std::string_view text);

/// A subject-object pair asserting that a goal has been achieved.
///
/// Single-subject theories use the reserved default subject `_`; such atoms
/// print and parse as the bare object name.
struct GoalAtom {
  std::string subject;
  std::string object;

  GoalAtom(std::string subject_name, std::string object_name);

  static GoalAtom simple(std::string object_name);
  static constexpr const char* kDefaultSubject = "_";

  bool is_simple() const { return subject == kDefaultSubject; }

  /// "(subject,object)", or just "object" for simple atoms.
  std::string str() const;

  auto operator<=>(const GoalAtom&) const = default;
};

/// A repetition-free finite sequence of goal atoms: the order in which goals
/// were achieved. The empty sequence is a prefix of every model.
class OrderedModel {
 public:
  OrderedModel() = default;
  /// Throws std::invalid_argument if an atom occurs twice.
  explicit OrderedModel(std::vector<GoalAtom> atoms);

  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  const std::vector<GoalAtom>& atoms() const { return atoms_; }
  const GoalAtom& at(std::size_t index) const { return atoms_.at(index); }

  /// 1-based position of the atom, or nullopt if absent.
  std::optional<std::size_t> position(const GoalAtom& atom) const;
  bool contains(const GoalAtom& atom) const { return position(atom).has_value(); }

  /// The first `length` atoms.
  OrderedModel prefix(std::size_t length) const;
  bool is_prefix_of(const OrderedModel& other) const;

  /// New model with `atom` appended; throws if already present.
  OrderedModel extended(const GoalAtom& atom) const;

  /// Subsequence keeping atoms for which `keep` returns true.
  OrderedModel filtered(const std::function<bool(const GoalAtom&)>& keep) const;

  /// "<a1, a2, ...>"; the empty model prints as "<>".
  std::string str() const;

  auto operator<=>(const OrderedModel&) const = default;

 private:
  std::vector<GoalAtom> atoms_;
};

}  // namespace orla
