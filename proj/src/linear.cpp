#include "tanerve/linear.hpp"

#include <stdexcept>

namespace tanerve {

void LinearSystem::add(int row, int col, const Scalar& value) {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
    throw std::invalid_argument("linear: entry out of bounds");
  if (value.is_zero()) return;
  auto [it, inserted] = entries_.emplace(std::pair{row, col}, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

Scalar LinearSystem::entry(int row, int col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? Scalar::zero(field_) : it->second;
}

std::vector<Scalar> LinearSystem::apply(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("linear: vector length mismatch");
  std::vector<Scalar> out(static_cast<size_t>(rows_), Scalar::zero(field_));
  for (const auto& [pos, value] : entries_)
    out[static_cast<size_t>(pos.first)] +=
        value * v[static_cast<size_t>(pos.second)];
  return out;
}

namespace {

// Dense reduced row echelon form; returns pivot columns. Desk-scale sizes
// only, so no effort is spent on sparsity.
std::vector<int> rref(std::vector<std::vector<Scalar>>& m, const Field& f) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (!m[static_cast<size_t>(i)][static_cast<size_t>(c)].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[static_cast<size_t>(r)], m[static_cast<size_t>(pivot)]);
    Scalar inv = m[static_cast<size_t>(r)][static_cast<size_t>(c)].inverse();
    for (int j = c; j < cols; ++j)
      m[static_cast<size_t>(r)][static_cast<size_t>(j)] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      Scalar factor = m[static_cast<size_t>(i)][static_cast<size_t>(c)];
      if (factor.is_zero()) continue;
      for (int j = c; j < cols; ++j)
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
            factor * m[static_cast<size_t>(r)][static_cast<size_t>(j)];
    }
    pivots.push_back(c);
    ++r;
  }
  (void)f;
  return pivots;
}

std::vector<std::vector<Scalar>> densify(const LinearSystem& s) {
  std::vector<std::vector<Scalar>> m(
      static_cast<size_t>(s.rows()),
      std::vector<Scalar>(static_cast<size_t>(s.cols()),
                          Scalar::zero(s.field())));
  for (const auto& [pos, value] : s.entries())
    m[static_cast<size_t>(pos.first)][static_cast<size_t>(pos.second)] = value;
  return m;
}

}  // namespace

std::vector<std::vector<Scalar>> kernel_basis(const LinearSystem& system) {
  auto m = densify(system);
  auto pivots = rref(m, system.field());
  std::vector<bool> is_pivot(static_cast<size_t>(system.cols()), false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;

  std::vector<std::vector<Scalar>> basis;
  for (int free = 0; free < system.cols(); ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    std::vector<Scalar> v(static_cast<size_t>(system.cols()),
                          Scalar::zero(system.field()));
    v[static_cast<size_t>(free)] = Scalar::one(system.field());
    for (size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<size_t>(pivots[r])] =
          -m[r][static_cast<size_t>(free)];
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(const LinearSystem& system) {
  auto m = densify(system);
  return static_cast<int>(rref(m, system.field()).size());
}

}  // namespace tanerve
