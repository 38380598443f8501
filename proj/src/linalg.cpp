#include "repstab/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace repstab {

namespace {

// a − factor·b, both sorted.
SparseVector axpy(const SparseVector& a, const Rational& factor,
                  const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -factor * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second - factor * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

const Rational* find_entry(const SparseVector& v, int col) {
  auto it = std::lower_bound(v.begin(), v.end(), col,
                             [](const auto& e, int c) { return e.first < c; });
  if (it == v.end() || it->first != col) return nullptr;
  return &it->second;
}

}  // namespace

Rational SparseMatrix::at(int r, int c) const {
  const Rational* v = find_entry(row_entries[r], c);
  return v ? *v : Rational(0);
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other) const {
  if (cols != other.rows) throw std::invalid_argument("dimension mismatch");
  SparseMatrix out(rows, other.cols);
  for (int r = 0; r < rows; ++r) {
    std::map<int, Rational> acc;
    for (const auto& [k, a] : row_entries[r])
      for (const auto& [c, b] : other.row_entries[k]) acc[c] += a * b;
    for (auto& [c, v] : acc)
      if (v != 0) out.row_entries[r].emplace_back(c, v);
  }
  return out;
}

bool SparseMatrix::is_zero() const {
  for (const auto& row : row_entries)
    if (!row.empty()) return false;
  return true;
}

RowReduction::RowReduction(const SparseMatrix& m) : cols_(m.cols) {
  // Forward elimination on the leading entry only.
  for (const auto& input : m.row_entries) {
    SparseVector v = input;
    while (!v.empty()) {
      auto it = pivots_.find(v.front().first);
      if (it == pivots_.end()) {
        Rational lead = v.front().second;
        for (auto& e : v) e.second /= lead;
        pivots_.emplace(v.front().first, std::move(v));
        break;
      }
      Rational factor = v.front().second;
      v = axpy(v, factor, it->second);
    }
  }
  // Back substitution, largest pivot column first, so every row used for
  // clearing is already reduced.
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    SparseVector& row = it->second;
    std::vector<int> to_clear;
    for (std::size_t j = 1; j < row.size(); ++j)
      if (pivots_.count(row[j].first)) to_clear.push_back(row[j].first);
    for (int c : to_clear) {
      const Rational* coeff = find_entry(row, c);
      if (!coeff) continue;
      Rational factor = *coeff;
      row = axpy(row, factor, pivots_.at(c));
    }
  }
  for (int c = 0; c < cols_; ++c)
    if (!pivots_.count(c)) free_.push_back(c);
}

Rational RowReduction::kernel_entry(int f, int col) const {
  if (col == f) return 1;
  auto it = pivots_.find(col);
  if (it == pivots_.end()) return 0;
  const Rational* v = find_entry(it->second, f);
  return v ? Rational(-*v) : Rational(0);
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational factor = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= factor * m[c][k];
    }
  }
  return det;
}

}  // namespace repstab
