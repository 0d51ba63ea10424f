#pragma once

#include <cstddef>
#include <vector>

#include "orla/formula.hpp"

namespace orla {

/// Truth table of every subformula (rows) against every prefix length of the
/// model (columns 0..|m|). Row order is the `subformulas` order.
class EvalTable {
 public:
  EvalTable(OrderedModel model, std::vector<Formula> rows,
            std::vector<std::vector<bool>> values, std::size_t query_row);

  const OrderedModel& model() const { return model_; }
  const std::vector<Formula>& rows() const { return rows_; }
  std::size_t columns() const { return model_.size() + 1; }

  bool value(std::size_t row, std::size_t prefix_length) const {
    return values_.at(row).at(prefix_length);
  }
  bool value(const Formula& row, std::size_t prefix_length) const;

  /// Truth of the queried formula at the given prefix length.
  bool query_value(std::size_t prefix_length) const {
    return values_[query_row_].at(prefix_length);
  }

  /// Truth of the queried formula in the full model.
  bool result() const { return values_[query_row_].back(); }

 private:
  OrderedModel model_;
  std::vector<Formula> rows_;
  std::vector<std::vector<bool>> values_;
  std::size_t query_row_;
};

/// Fills the table bottom-up, smaller subformulas first. Each cell is
/// computed from the operand rows:
///
///   atom a       true at length k iff a is among the first k atoms
///   !x           cellwise negation
///   x & y, x | y, x -> y   cellwise on the operand rows
///   []x          true iff x holds at every length <= k
///   <>x          true iff x holds at some length <= k
///   x < y        y -> <>x
EvalTable eval_table(const OrderedModel& model, const Formula& formula);

/// Truth in the full model; the last cell of the table's query row.
/// Atoms of the formula need not occur in the model.
bool eval(const OrderedModel& model, const Formula& formula);
bool eval(const OrderedModel& model, const std::vector<Formula>& theory);

/// Subsequence of the model keeping exactly the atoms that occur in the
/// formula. Truth is invariant under this restriction.
OrderedModel restrict(const OrderedModel& model, const Formula& formula);

}  // namespace orla
