#include "orla/atom.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace orla {

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  auto head = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9') || c == '\''; };
  if (!head(text.front())) return false;
  return std::all_of(text.begin() + 1, text.end(), tail);
}

GoalAtom::GoalAtom(std::string subject_name, std::string object_name)
    : subject(std::move(subject_name)), object(std::move(object_name)) {
  if (!is_identifier(subject) || !is_identifier(object)) {
    throw std::invalid_argument("invalid goal atom identifier: (" + subject +
                                "," + object + ")");
  }
}

GoalAtom GoalAtom::simple(std::string object_name) {
  return GoalAtom(kDefaultSubject, std::move(object_name));
}

std::string GoalAtom::str() const {
  if (is_simple()) return object;
  return "(" + subject + "," + object + ")";
}

OrderedModel::OrderedModel(std::vector<GoalAtom> atoms) : atoms_(std::move(atoms)) {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    for (std::size_t j = i + 1; j < atoms_.size(); ++j) {
      if (atoms_[i] == atoms_[j]) {
        throw std::invalid_argument("ordered model repeats atom " + atoms_[i].str());
      }
    }
  }
}

std::optional<std::size_t> OrderedModel::position(const GoalAtom& atom) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i] == atom) return i + 1;
  }
  return std::nullopt;
}

OrderedModel OrderedModel::prefix(std::size_t length) const {
  if (length > atoms_.size()) length = atoms_.size();
  OrderedModel result;
  result.atoms_.assign(atoms_.begin(), atoms_.begin() + static_cast<long>(length));
  return result;
}

bool OrderedModel::is_prefix_of(const OrderedModel& other) const {
  if (size() > other.size()) return false;
  return std::equal(atoms_.begin(), atoms_.end(), other.atoms_.begin());
}

OrderedModel OrderedModel::extended(const GoalAtom& atom) const {
  if (contains(atom)) {
    throw std::invalid_argument("ordered model already contains " + atom.str());
  }
  OrderedModel result = *this;
  result.atoms_.push_back(atom);
  return result;
}

OrderedModel OrderedModel::filtered(
    const std::function<bool(const GoalAtom&)>& keep) const {
  OrderedModel result;
  for (const GoalAtom& atom : atoms_) {
    if (keep(atom)) result.atoms_.push_back(atom);
  }
  return result;
}

std::string OrderedModel::str() const {
  std::string out = "<";
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i > 0) out += ", ";
    out += atoms_[i].str();
  }
  out += ">";
  return out;
}

}  // namespace orla
