#include "repstab/lr.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace repstab {

Partition LRTableau::weight() const {
  std::vector<int> counts;
  for (const auto& row : rows)
    for (int a : row) {
      if (a < 1) throw std::invalid_argument("LR entries must be positive");
      if (static_cast<std::size_t>(a) > counts.size()) counts.resize(a, 0);
      ++counts[a - 1];
    }
  return Partition::from_unsorted(std::move(counts));
}

bool is_lr_tableau(const LRTableau& t) {
  if (!t.outer.contains(t.inner)) return false;
  if (t.rows.size() > static_cast<std::size_t>(t.outer.length())) {
    for (std::size_t r = t.outer.length(); r < t.rows.size(); ++r)
      if (!t.rows[r].empty()) return false;
  }
  auto row = [&](int r) -> const std::vector<int>& {
    static const std::vector<int> empty;
    return r < static_cast<int>(t.rows.size()) ? t.rows[r] : empty;
  };
  for (int r = 0; r < t.outer.length(); ++r) {
    const auto& cells = row(r);
    if (static_cast<int>(cells.size()) != t.outer[r] - t.inner[r]) return false;
    for (std::size_t j = 0; j < cells.size(); ++j) {
      if (cells[j] < 1) return false;
      if (j + 1 < cells.size() && cells[j] > cells[j + 1]) return false;
      if (r == 0) continue;
      int col = t.inner[r] + static_cast<int>(j);
      if (col < t.inner[r - 1]) continue;
      int above = row(r - 1)[col - t.inner[r - 1]];
      if (above >= cells[j]) return false;
    }
  }
  std::vector<int> seen;
  for (int r = 0; r < t.outer.length(); ++r) {
    const auto& cells = row(r);
    for (auto it = cells.rbegin(); it != cells.rend(); ++it) {
      int a = *it;
      if (static_cast<std::size_t>(a) > seen.size()) seen.resize(a, 0);
      ++seen[a - 1];
      if (a >= 2 && seen[a - 1] > seen[a - 2]) return false;
    }
  }
  return true;
}

namespace {

// Row-by-row enumeration. A row is described by its letter counts; the
// constraints are the column-strictness bound against the row above, the
// lattice condition (letters of a row are read largest first), and the weight.
class LREnumerator {
 public:
  LREnumerator(const Partition& inner, const Partition& weight,
               const Partition* outer)
      : inner_(inner), weight_(weight), outer_(outer) {
    letters_ = weight.length();
    max_rows_ = outer ? outer->length() : inner.length() + weight.length();
    totals_.assign(letters_ + 1, 0);
  }

  template <class Emit>
  void run(Emit&& emit) {
    if (outer_ && !outer_->contains(inner_)) return;
    if (outer_ && outer_->size() != inner_.size() + weight_.size()) return;
    std::vector<std::vector<int>> counts;
    descend_row(0, counts, emit);
  }

 private:
  template <class Emit>
  void descend_row(int r, std::vector<std::vector<int>>& counts, Emit& emit) {
    bool complete = true;
    for (int a = 1; a <= letters_; ++a)
      if (totals_[a] != weight_[a - 1]) complete = false;
    if (complete) {
      if (outer_)
        for (int s = r; s < outer_->length(); ++s)
          if ((*outer_)[s] != inner_[s]) return;
      emit(counts, r);
      return;
    }
    if (r >= max_rows_) return;
    std::vector<int> row(letters_ + 1, 0);
    counts.push_back(row);
    descend_letter(r, 1, 0, counts, emit);
    counts.pop_back();
  }

  template <class Emit>
  void descend_letter(int r, int a, int used,
                      std::vector<std::vector<int>>& counts, Emit& emit) {
    int top_letter = std::min(r + 1, letters_);
    if (a > top_letter) {
      int length = inner_[r] + used;
      if (outer_ && length != (*outer_)[r]) return;
      if (r > 0 && length > row_length(r - 1, counts)) return;
      for (int b = 1; b <= letters_; ++b) totals_[b] += counts[r][b];
      descend_row(r + 1, counts, emit);
      for (int b = 1; b <= letters_; ++b) totals_[b] -= counts[r][b];
      return;
    }
    int cap = weight_[a - 1] - totals_[a];
    if (a >= 2) cap = std::min(cap, totals_[a - 1] - totals_[a]);
    if (r > 0) {
      int above = inner_[r - 1];
      for (int b = 1; b < a; ++b) above += counts[r - 1][b];
      cap = std::min(cap, above - inner_[r] - used);
    }
    if (outer_) cap = std::min(cap, (*outer_)[r] - inner_[r] - used);
    for (int c = 0; c <= cap; ++c) {
      counts[r][a] = c;
      descend_letter(r, a + 1, used + c, counts, emit);
    }
    counts[r][a] = 0;
  }

  int row_length(int r, const std::vector<std::vector<int>>& counts) const {
    int length = inner_[r];
    for (int b = 1; b <= letters_; ++b) length += counts[r][b];
    return length;
  }

  const Partition& inner_;
  const Partition& weight_;
  const Partition* outer_;
  int letters_ = 0;
  int max_rows_ = 0;
  std::vector<int> totals_;
};

Partition outer_shape(const Partition& inner,
                      const std::vector<std::vector<int>>& counts, int rows) {
  std::vector<int> parts;
  int total_rows = std::max(rows, inner.length());
  for (int r = 0; r < total_rows; ++r) {
    int length = inner[r];
    if (r < rows)
      for (std::size_t b = 1; b < counts[r].size(); ++b) length += counts[r][b];
    parts.push_back(length);
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

}  // namespace

void for_each_lr_tableau(const Partition& inner, const Partition& weight,
                         const Partition* outer,
                         const std::function<void(const LRTableau&)>& visit) {
  LREnumerator en(inner, weight, outer);
  en.run([&](const std::vector<std::vector<int>>& counts, int rows) {
    LRTableau t;
    t.inner = inner;
    t.outer = outer_shape(inner, counts, rows);
    t.rows.resize(t.outer.length());
    for (int r = 0; r < rows; ++r)
      for (std::size_t b = 1; b < counts[r].size(); ++b)
        t.rows[r].insert(t.rows[r].end(), counts[r][b], static_cast<int>(b));
    visit(t);
  });
}

void for_each_lr_product_term(
    const Partition& inner, const Partition& weight,
    const std::function<void(const Partition&, long long)>& visit) {
  std::map<Partition, long long> tally;
  LREnumerator en(inner, weight, nullptr);
  en.run([&](const std::vector<std::vector<int>>& counts, int rows) {
    ++tally[outer_shape(inner, counts, rows)];
  });
  for (const auto& [nu, c] : tally) visit(nu, c);
}

std::vector<LRTableau> lr_tableaux(const Partition& outer,
                                   const Partition& inner,
                                   const Partition& weight) {
  std::vector<LRTableau> out;
  for_each_lr_tableau(inner, weight, &outer,
                      [&](const LRTableau& t) { out.push_back(t); });
  return out;
}

long long lr_coeff(const Partition& lambda, const Partition& mu,
                   const Partition& nu) {
  if (lambda.size() + mu.size() != nu.size())
    throw std::invalid_argument("lr_coeff: |λ|+|μ| must equal |ν|");
  long long count = 0;
  LREnumerator en(lambda, mu, &nu);
  en.run([&](const std::vector<std::vector<int>>&, int) { ++count; });
  return count;
}

LRTableau phi_shift(const LRTableau& t) {
  if (t.inner.empty())
    throw std::invalid_argument("phi_shift: inner shape has no first row");
  Partition w = t.weight();
  int n = t.inner[0];
  if (n <= w[0] + t.inner[1])
    throw std::invalid_argument("phi_shift: requires n > weight_1 + alpha_1");
  auto inner = t.inner.parts();
  auto outer = t.outer.parts();
  --inner[0];
  --outer[0];
  LRTableau out{Partition::from_unsorted(std::move(outer)),
                Partition::from_unsorted(inner),
                t.rows};
  out.rows.resize(out.outer.length());
  if (!is_lr_tableau(out))
    throw std::logic_error("phi_shift produced an invalid tableau");
  return out;
}

LRTableau phi_unshift(const LRTableau& t) {
  auto inner = t.inner.parts();
  auto outer = t.outer.parts();
  if (inner.empty()) inner.push_back(0);
  if (outer.empty()) outer.push_back(0);
  ++inner[0];
  ++outer[0];
  LRTableau out{Partition(std::move(outer)), Partition(std::move(inner)),
                t.rows};
  out.rows.resize(out.outer.length());
  return out;
}

}  // namespace repstab
