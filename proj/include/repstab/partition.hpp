#pragma once

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace repstab {

/// Integer partition stored as weakly decreasing positive parts.
/// The empty partition is the unique partition of 0.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless `parts` is weakly decreasing and
  /// strictly positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  /// Sorts decreasingly and drops zero parts.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Part `i` (0-based); zero past the end.
  int operator[](std::size_t i) const {
    return i < parts_.size() ? parts_[i] : 0;
  }

  /// Number of parts equal to `value`.
  int multiplicity(int value) const;

  /// Ferrers-diagram containment: this ⊇ other.
  bool contains(const Partition& other) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

int rank(const Partition& lambda);

/// (λ1+1, λ2, ...); the empty partition goes to (1).
Partition add_box(const Partition& lambda);

Partition conjugate(const Partition& lambda);

/// All partitions of n (optionally with parts ≤ max_part), lexicographically
/// decreasing.
std::vector<Partition> partitions_of(int n, int max_part = -1);

/// Pads λ with ones up to size n.
Partition pad_with_ones(const Partition& lambda, int n);

/// Removes all parts equal to 1.
Partition strip_ones(const Partition& lambda);

/// "[3,1,1]"; the empty partition prints as "[]".
std::string to_string(const Partition& lambda);

/// Accepts "[3,1,1]", "3,1,1", "[2,1^4]" and "[]".
Partition parse_partition(std::string_view text);

/// Set partition of {1..n}. Blocks are kept sorted internally, and ordered by
/// their smallest element, so equality is structural.
class SetPartition {
 public:
  SetPartition() = default;
  /// Throws std::invalid_argument if the blocks do not partition {1..n}.
  SetPartition(int n, std::vector<std::vector<int>> blocks);

  /// The discrete partition {1}|{2}|...|{n}.
  static SetPartition finest(int n);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }

  /// Block index of element `x` (1-based element).
  int block_of(int x) const { return label_[x - 1]; }

  /// True if every block of this lies inside a block of `other`.
  bool refines(const SetPartition& other) const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition& a, const SetPartition& b) {
    return a.label_ <=> b.label_;
  }

  /// Restricted growth string, 0-based block labels in order of first use.
  const std::vector<int>& labels() const { return label_; }
  static SetPartition from_labels(const std::vector<int>& labels);

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> label_;
};

Partition set_partition_type(const SetPartition& pi);

std::string to_string(const SetPartition& pi);

/// Nonempty set of partitions of a common size n0, none equal to (1^n0).
class LambdaSet {
 public:
  explicit LambdaSet(std::vector<Partition> members);

  const std::vector<Partition>& members() const { return members_; }
  int n0() const { return n0_; }
  /// Minimum rank over the members; always ≥ 1.
  int rank() const;

 private:
  std::vector<Partition> members_;
  int n0_ = 0;
};

/// Λ^{(n)}: each member padded with n − n0 ones. Throws std::invalid_argument
/// when n < n0.
std::vector<Partition> extend_lambda_set(const LambdaSet& lambda, int n);

/// Parses "[2,2];[3]". Members of smaller size are padded with ones to the
/// largest size so they share a common n0.
LambdaSet parse_lambda_set(std::string_view text);

std::string to_string(const LambdaSet& lambda);

}  // namespace repstab
