#pragma once

#include <functional>
#include <vector>

#include "repstab/partition.hpp"
#include "repstab/rational.hpp"

namespace repstab {

/// Littlewood–Richardson skew tableau of shape outer/inner.
/// rows[r] lists the entries of the skew cells of row r, left to right.
struct LRTableau {
  Partition outer;
  Partition inner;
  std::vector<std::vector<int>> rows;

  Partition weight() const;
  friend bool operator==(const LRTableau&, const LRTableau&) = default;
  friend auto operator<=>(const LRTableau& a, const LRTableau& b) {
    if (auto c = a.outer <=> b.outer; c != 0) return c;
    if (auto c = a.inner <=> b.inner; c != 0) return c;
    return a.rows <=> b.rows;
  }
};

/// Checks shape, row/column monotonicity and the lattice-word condition on
/// the reverse reading word.
bool is_lr_tableau(const LRTableau& t);

/// Visits every LR tableau with the given inner shape and weight. When
/// `outer` is non-null only tableaux of that outer shape are produced.
void for_each_lr_tableau(const Partition& inner, const Partition& weight,
                         const Partition* outer,
                         const std::function<void(const LRTableau&)>& visit);

/// Visits every outer shape ν with its LR coefficient c^ν_{inner,weight}.
void for_each_lr_product_term(
    const Partition& inner, const Partition& weight,
    const std::function<void(const Partition&, long long)>& visit);

std::vector<LRTableau> lr_tableaux(const Partition& outer,
                                   const Partition& inner,
                                   const Partition& weight);

/// c^ν_{λμ}. Throws std::invalid_argument if |λ|+|μ| ≠ |ν|.
long long lr_coeff(const Partition& lambda, const Partition& mu,
                   const Partition& nu);

/// Deletes the first skew cell position of row 0 and slides the rest of row 0
/// left: inner (n,α) → (n−1,α), outer ν → (ν1−1,ν2,...). Throws
/// std::invalid_argument unless n > weight_1 + α_1.
LRTableau phi_shift(const LRTableau& t);

/// Inverse of phi_shift: shifts row 0 right and puts an inner cell in the gap.
LRTableau phi_unshift(const LRTableau& t);

}  // namespace repstab
