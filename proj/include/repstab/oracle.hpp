#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "repstab/linalg.hpp"
#include "repstab/partition.hpp"
#include "repstab/symfunc.hpp"

namespace repstab {

/// Default largest n for equivariant oracle runs.
inline constexpr int kDefaultOracleLimit = 6;
/// Default largest n for lattice construction and Betti numbers only.
inline constexpr int kDefaultLatticeLimit = 7;

/// Raised when a brute-force computation is asked for n above its limit.
class OracleLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 0-based permutation of {0..n-1}: perm[x] is the image of x.
using Permutation = std::vector<int>;

Permutation inverse(const Permutation& g);
/// Cycle type of g.
Partition cycle_type(const Permutation& g);
/// g·π, relabelling each element x+1 as g[x]+1.
SetPartition act(const Permutation& g, const SetPartition& pi);
/// Finest common coarsening.
SetPartition join(const SetPartition& a, const SetPartition& b);
/// All set partitions of {1..n} in restricted-growth order.
std::vector<SetPartition> all_set_partitions(int n);

/// Join sublattice Π_Λ of Π_n ordered by refinement. Element 0 is the bottom
/// {1}|{2}|...|{n}; elements are sorted by rank.
class Poset {
 public:
  Poset(int n, std::vector<SetPartition> elements);

  int n() const { return n_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<SetPartition>& elements() const { return elements_; }
  const SetPartition& element(int idx) const { return elements_[idx]; }
  int bottom() const { return 0; }
  /// Index of π, or -1 when π is not in the poset.
  int index_of(const SetPartition& pi) const;
  bool leq(int a, int b) const { return leq_[a * size() + b]; }
  bool less(int a, int b) const { return a != b && leq(a, b); }

 private:
  int n_;
  std::vector<SetPartition> elements_;
  std::map<std::vector<int>, int> index_;
  std::vector<char> leq_;
};

/// Π_Λ for the given types of set partitions of n. Throws
/// OracleLimitExceeded when n > limit.
Poset build_pi_lambda(int n, const std::vector<Partition>& types,
                      int limit = kDefaultLatticeLimit);

/// Order complex of the open interval (0̂, π), with the empty simplex in
/// degree −1.
class ChainComplex {
 public:
  ChainComplex(const Poset& poset, int top);

  int top_degree() const { return static_cast<int>(simplices_.size()) - 2; }
  /// Number of j-simplices, j ≥ −1; zero outside the range.
  std::size_t count(int j) const;
  const std::vector<std::vector<int>>& simplices(int j) const;
  /// Index of a chain (sorted by rank) among the simplices of its degree.
  int index_of(const std::vector<int>& chain) const;
  /// ∂_j : C_j → C_{j−1}, rows indexed by C_{j−1}.
  SparseMatrix boundary(int j) const;

 private:
  std::vector<std::vector<std::vector<int>>> simplices_;
  std::vector<std::map<std::vector<int>, int>> index_;
};

/// Traces of group elements on one representation.
struct EquivariantCharacter {
  std::vector<Permutation> group;
  std::vector<Rational> values;

  Rational value_at(const Permutation& g) const;
};

struct IntervalHomology {
  /// dims[j + 1] = dim H̃_j, j = −1..top.
  std::vector<long> dims;
  /// characters[j + 1]: trace of each stabilizer element on H̃_j.
  std::vector<EquivariantCharacter> characters;

  long dim(int j) const;
};

/// Elements g of S_n with g·π = π.
std::vector<Permutation> stabilizer(const SetPartition& pi);

/// Reduced homology of Δ((0̂, π)) in every degree together with the action of
/// the stabilizer of π.
IntervalHomology interval_homology(const Poset& poset, int pi);

/// Betti numbers only, without group action.
std::vector<long> interval_betti(const Poset& poset, int pi);

/// Determinant of g acting on π^⊥ ⊆ (ℝ^d)^n, i.e. the character of g on the
/// top homology of the sphere S^{dn−1} ∩ π^⊥. Throws std::invalid_argument if
/// g does not stabilize π.
int orientation_character(const SetPartition& pi, int d, const Permutation& g);

/// Brute-force equivariant cohomology of the complement of the diagonal
/// arrangement with the given types. Results for each orbit are memoized, so
/// one instance serves many (d, i).
class ArrangementOracle {
 public:
  ArrangementOracle(int n, std::vector<Partition> types,
                    int limit = kDefaultOracleLimit);

  int n() const { return n_; }
  const Poset& poset() const { return poset_; }
  /// Types of the nonbottom orbits of Π_Λ.
  std::vector<Partition> orbit_types() const;

  /// ch H̃^i(M) as a degree-n Schur expansion.
  SymmetricFunction complement_char(int d, int i);

  /// Contribution of the orbit of type `type` to complement_char.
  SymmetricFunction orbit_contribution(int d, int i, const Partition& type);

  /// f for the orbit: the characteristic of the module induced to
  /// S_{|type without ones|} from the stabilizer part fixing every singleton.
  SymmetricFunction reduced_orbit_char(int d, int i, const Partition& type);

 private:
  struct OrbitData {
    int rep = -1;
    std::vector<Permutation> group;
    std::unique_ptr<ChainComplex> complex;
    std::map<int, std::shared_ptr<RowReduction>> reductions;
  };

  OrbitData& orbit(const Partition& type);
  long homology_dim(OrbitData& data, int j);
  /// Trace of g on H̃_j times the orientation character.
  Rational twisted_trace(OrbitData& data, int d, int j, const Permutation& g);

  int n_;
  Poset poset_;
  std::map<Partition, OrbitData> orbits_;
  std::mutex mutex_;
};

/// ch H̃^i of the complement of the arrangement with types Λ^{(n)}.
SymmetricFunction sw_complement_char(int n, int d,
                                     const std::vector<Partition>& types, int i,
                                     int limit = kDefaultOracleLimit);

}  // namespace repstab
