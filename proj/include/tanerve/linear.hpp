#pragma once

#include "tanerve/scalar.hpp"

#include <map>
#include <utility>
#include <vector>

namespace tanerve {

// A sparse exact matrix in triplet form. Rows are constraints, columns the
// canonical basis of the ambient space being constrained.
class LinearSystem {
 public:
  LinearSystem(Field field, int rows, int cols)
      : field_(field), rows_(rows), cols_(cols) {}

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::map<std::pair<int, int>, Scalar>& entries() const {
    return entries_;
  }

  void add(int row, int col, const Scalar& value);
  Scalar entry(int row, int col) const;
  // System * vector, exact.
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

 private:
  Field field_;
  int rows_;
  int cols_;
  std::map<std::pair<int, int>, Scalar> entries_;
};

// Exact basis of the null space via leftmost-pivot reduced row echelon
// form; deterministic in the canonical column order. One vector per free
// column, ordered by that column.
std::vector<std::vector<Scalar>> kernel_basis(const LinearSystem& system);

int rank(const LinearSystem& system);

}  // namespace tanerve
