#pragma once

#include <random>

#include "repstab/symfunc.hpp"

namespace repstab::testing {

inline Partition random_partition_of(std::mt19937& rng, int n) {
  auto all = partitions_of(n);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

/// Random homogeneous Schur combination with small integer coefficients.
inline SymmetricFunction random_homogeneous(std::mt19937& rng, int degree,
                                            int terms = 3, bool signed_coeffs = true) {
  SymmetricFunction f(Basis::Schur);
  std::uniform_int_distribution<int> coeff(signed_coeffs ? -3 : 1, 3);
  for (int j = 0; j < terms; ++j)
    f.add(random_partition_of(rng, degree), coeff(rng));
  return f;
}

/// Random inhomogeneous function with degrees in [lo, hi] and rational
/// coefficients.
inline SymmetricFunction random_function(std::mt19937& rng, int lo, int hi,
                                         int terms = 4) {
  SymmetricFunction f(Basis::Schur);
  std::uniform_int_distribution<int> deg(lo, hi);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  for (int j = 0; j < terms; ++j)
    f.add(random_partition_of(rng, deg(rng)), make_rational(num(rng), den(rng)));
  return f;
}

}  // namespace repstab::testing
