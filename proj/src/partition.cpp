#include "repstab/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace repstab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (parts_[j] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (j + 1 < parts_.size() && parts_[j] < parts_[j + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  for (int p : parts)
    if (p < 0) throw std::invalid_argument("negative part");
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int j = 0; j < other.length(); ++j)
    if (other.parts_[j] > parts_[j]) return false;
  return true;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int x : p.parts()) {
    h ^= static_cast<std::size_t>(x);
    h *= 0x100000001b3ULL;
  }
  return h;
}

int rank(const Partition& lambda) { return lambda.size() - lambda.length(); }

Partition add_box(const Partition& lambda) {
  auto parts = lambda.parts();
  if (parts.empty())
    parts.push_back(1);
  else
    ++parts.front();
  return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols;
  if (!lambda.empty()) {
    cols.assign(lambda[0], 0);
    for (int part : lambda.parts())
      for (int c = 0; c < part; ++c) ++cols[c];
  }
  return Partition(std::move(cols));
}

namespace {

void enumerate(int remaining, int max_part, std::vector<int>& prefix,
               std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    enumerate(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_part) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate(n, max_part < 0 ? n : max_part, prefix, out);
  return out;
}

Partition pad_with_ones(const Partition& lambda, int n) {
  if (n < lambda.size())
    throw std::invalid_argument("pad_with_ones: target below partition size");
  auto parts = lambda.parts();
  parts.insert(parts.end(), static_cast<std::size_t>(n - lambda.size()), 1);
  return Partition(std::move(parts));
}

Partition strip_ones(const Partition& lambda) {
  auto parts = lambda.parts();
  std::erase(parts, 1);
  return Partition(std::move(parts));
}

std::string to_string(const Partition& lambda) {
  std::ostringstream os;
  os << '[';
  for (int j = 0; j < lambda.length(); ++j) {
    if (j) os << ',';
    os << lambda.parts()[j];
  }
  os << ']';
  return os.str();
}

Partition parse_partition(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw std::invalid_argument("unbalanced brackets");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> parts;
  if (s.empty()) return Partition();
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty partition entry");
    int value = 0;
    int repeat = 1;
    auto caret = item.find('^');
    try {
      std::size_t used = 0;
      value = std::stoi(item.substr(0, caret), &used);
      if (used != (caret == std::string::npos ? item.size() : caret))
        throw std::invalid_argument("trailing characters");
      if (caret != std::string::npos) {
        auto exp = item.substr(caret + 1);
        repeat = std::stoi(exp, &used);
        if (used != exp.size() || repeat < 0)
          throw std::invalid_argument("bad exponent");
      }
    } catch (const std::logic_error&) {
      throw std::invalid_argument("cannot parse partition: " +
                                  std::string(text));
    }
    parts.insert(parts.end(), static_cast<std::size_t>(repeat), value);
  }
  return Partition(std::move(parts));
}

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks) : n_(n) {
  std::vector<int> seen(static_cast<std::size_t>(n), -1);
  for (auto& block : blocks) {
    if (block.empty()) throw std::invalid_argument("empty block");
    std::sort(block.begin(), block.end());
    for (int x : block) {
      if (x < 1 || x > n) throw std::invalid_argument("element out of range");
      if (seen[x - 1] != -1) throw std::invalid_argument("blocks overlap");
      seen[x - 1] = 0;
    }
  }
  for (int s : seen)
    if (s == -1) throw std::invalid_argument("blocks do not cover {1..n}");
  std::sort(blocks.begin(), blocks.end());
  blocks_ = std::move(blocks);
  label_.assign(static_cast<std::size_t>(n), 0);
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (int x : blocks_[b]) label_[x - 1] = static_cast<int>(b);
}

SetPartition SetPartition::finest(int n) {
  std::vector<std::vector<int>> blocks;
  for (int x = 1; x <= n; ++x) blocks.push_back({x});
  return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::from_labels(const std::vector<int>& labels) {
  int n = static_cast<int>(labels.size());
  std::vector<int> remap;
  std::vector<std::vector<int>> blocks;
  for (int x = 1; x <= n; ++x) {
    int l = labels[x - 1];
    if (l < 0) throw std::invalid_argument("negative block label");
    if (static_cast<std::size_t>(l) >= remap.size()) remap.resize(l + 1, -1);
    if (remap[l] == -1) {
      remap[l] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[remap[l]].push_back(x);
  }
  return SetPartition(n, std::move(blocks));
}

bool SetPartition::refines(const SetPartition& other) const {
  if (other.n_ != n_) return false;
  for (const auto& block : blocks_) {
    int target = other.block_of(block.front());
    for (int x : block)
      if (other.block_of(x) != target) return false;
  }
  return true;
}

Partition set_partition_type(const SetPartition& pi) {
  std::vector<int> sizes;
  for (const auto& block : pi.blocks())
    sizes.push_back(static_cast<int>(block.size()));
  return Partition::from_unsorted(std::move(sizes));
}

std::string to_string(const SetPartition& pi) {
  std::ostringstream os;
  for (std::size_t b = 0; b < pi.blocks().size(); ++b) {
    if (b) os << '|';
    os << '{';
    for (std::size_t j = 0; j < pi.blocks()[b].size(); ++j) {
      if (j) os << ',';
      os << pi.blocks()[b][j];
    }
    os << '}';
  }
  return os.str();
}

LambdaSet::LambdaSet(std::vector<Partition> members) {
  if (members.empty()) throw std::invalid_argument("LambdaSet must be nonempty");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  n0_ = members.front().size();
  for (const auto& m : members) {
    if (m.size() != n0_)
      throw std::invalid_argument("LambdaSet members must share one size");
    if (repstab::rank(m) == 0)
      throw std::invalid_argument("LambdaSet may not contain (1^n0)");
  }
  members_ = std::move(members);
}

int LambdaSet::rank() const {
  int r = repstab::rank(members_.front());
  for (const auto& m : members_) r = std::min(r, repstab::rank(m));
  return r;
}

std::vector<Partition> extend_lambda_set(const LambdaSet& lambda, int n) {
  if (n < lambda.n0())
    throw std::invalid_argument("extend_lambda_set: n below n0");
  std::vector<Partition> out;
  for (const auto& m : lambda.members()) out.push_back(pad_with_ones(m, n));
  return out;
}

LambdaSet parse_lambda_set(std::string_view text) {
  std::vector<Partition> members;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    auto piece = text.substr(start, end - start);
    bool blank = std::all_of(piece.begin(), piece.end(), [](char c) {
      return std::isspace(static_cast<unsigned char>(c));
    });
    if (!blank) members.push_back(parse_partition(piece));
    start = end + 1;
  }
  int n0 = 0;
  for (const auto& m : members) n0 = std::max(n0, m.size());
  for (auto& m : members) m = pad_with_ones(m, n0);
  return LambdaSet(std::move(members));
}

std::string to_string(const LambdaSet& lambda) {
  std::string out;
  for (const auto& m : lambda.members()) {
    if (!out.empty()) out += ';';
    out += to_string(m);
  }
  return out;
}

}  // namespace repstab
