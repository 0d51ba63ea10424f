#include "orla/eval.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace orla {

EvalTable::EvalTable(OrderedModel model, std::vector<Formula> rows,
                     std::vector<std::vector<bool>> values, std::size_t query_row)
    : model_(std::move(model)),
      rows_(std::move(rows)),
      values_(std::move(values)),
      query_row_(query_row) {}

bool EvalTable::value(const Formula& row, std::size_t prefix_length) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] == row) return value(i, prefix_length);
  }
  throw std::out_of_range("formula is not a row of this table");
}

EvalTable eval_table(const OrderedModel& model, const Formula& formula) {
  std::vector<Formula> rows = subformulas(formula);
  const std::size_t columns = model.size() + 1;

  std::unordered_map<Formula, std::size_t, FormulaHash> row_of;
  row_of.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) row_of.emplace(rows[i], i);

  std::vector<std::vector<bool>> values(rows.size(),
                                        std::vector<bool>(columns, false));

  // Rows are ordered by size, so operands are always filled first.
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Formula& f = rows[r];
    std::vector<bool>& row = values[r];
    switch (f.kind()) {
      case Connective::Atom: {
        auto pos = model.position(f.atom());
        for (std::size_t k = 0; k < columns; ++k) row[k] = pos && *pos <= k;
        break;
      }
      case Connective::Not: {
        const auto& x = values[row_of.at(f.child())];
        for (std::size_t k = 0; k < columns; ++k) row[k] = !x[k];
        break;
      }
      case Connective::And: {
        const auto& x = values[row_of.at(f.left())];
        const auto& y = values[row_of.at(f.right())];
        for (std::size_t k = 0; k < columns; ++k) row[k] = x[k] && y[k];
        break;
      }
      case Connective::Or: {
        const auto& x = values[row_of.at(f.left())];
        const auto& y = values[row_of.at(f.right())];
        for (std::size_t k = 0; k < columns; ++k) row[k] = x[k] || y[k];
        break;
      }
      case Connective::Implies: {
        const auto& x = values[row_of.at(f.left())];
        const auto& y = values[row_of.at(f.right())];
        for (std::size_t k = 0; k < columns; ++k) row[k] = !x[k] || y[k];
        break;
      }
      case Connective::Always: {
        const auto& x = values[row_of.at(f.child())];
        bool so_far = true;
        for (std::size_t k = 0; k < columns; ++k) {
          so_far = so_far && x[k];
          row[k] = so_far;
        }
        break;
      }
      case Connective::Sometime: {
        const auto& x = values[row_of.at(f.child())];
        bool so_far = false;
        for (std::size_t k = 0; k < columns; ++k) {
          so_far = so_far || x[k];
          row[k] = so_far;
        }
        break;
      }
      case Connective::Before: {
        const auto& x = values[row_of.at(f.left())];
        const auto& y = values[row_of.at(f.right())];
        bool seen_left = false;
        for (std::size_t k = 0; k < columns; ++k) {
          seen_left = seen_left || x[k];
          row[k] = !y[k] || seen_left;
        }
        break;
      }
    }
  }

  return EvalTable(model, std::move(rows), std::move(values), row_of.at(formula));
}

bool eval(const OrderedModel& model, const Formula& formula) {
  return eval_table(model, formula).result();
}

bool eval(const OrderedModel& model, const std::vector<Formula>& theory) {
  return std::all_of(theory.begin(), theory.end(),
                     [&](const Formula& f) { return eval(model, f); });
}

OrderedModel restrict(const OrderedModel& model, const Formula& formula) {
  std::vector<GoalAtom> alphabet = atoms(formula);
  return model.filtered([&](const GoalAtom& atom) {
    return std::binary_search(alphabet.begin(), alphabet.end(), atom);
  });
}

}  // namespace orla
