#include "repstab/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace repstab {

Permutation inverse(const Permutation& g) {
  Permutation inv(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) inv[g[x]] = static_cast<int>(x);
  return inv;
}

Partition cycle_type(const Permutation& g) {
  std::vector<char> seen(g.size(), 0);
  std::vector<int> lengths;
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (std::size_t y = x; !seen[y]; y = g[y]) {
      seen[y] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition::from_unsorted(std::move(lengths));
}

SetPartition act(const Permutation& g, const SetPartition& pi) {
  std::vector<int> labels(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) labels[g[x]] = pi.labels()[x];
  return SetPartition::from_labels(labels);
}

SetPartition join(const SetPartition& a, const SetPartition& b) {
  int n = a.n();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto* pi : {&a, &b})
    for (const auto& block : pi->blocks())
      for (int x : block) parent[find(x - 1)] = find(block.front() - 1);
  std::vector<int> labels(n);
  for (int x = 0; x < n; ++x) labels[x] = find(x);
  return SetPartition::from_labels(labels);
}

std::vector<SetPartition> all_set_partitions(int n) {
  std::vector<SetPartition> out;
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int x, int used) -> void {
    if (x == n) {
      out.push_back(SetPartition::from_labels(labels));
      return;
    }
    for (int l = 0; l <= used; ++l) {
      labels[x] = l;
      self(self, x + 1, std::max(used, l + 1));
    }
  };
  if (n == 0) return {SetPartition(0, {})};
  labels[0] = 0;
  rec(rec, 1, 1);
  return out;
}

Poset::Poset(int n, std::vector<SetPartition> elements) : n_(n) {
  std::sort(elements.begin(), elements.end(),
            [](const SetPartition& a, const SetPartition& b) {
              if (a.num_blocks() != b.num_blocks())
                return a.num_blocks() > b.num_blocks();
              return a < b;
            });
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements.front() != SetPartition::finest(n))
    throw std::invalid_argument("poset must contain the finest partition");
  elements_ = std::move(elements);
  int size = this->size();
  leq_.assign(static_cast<std::size_t>(size) * size, 0);
  for (int a = 0; a < size; ++a) {
    index_.emplace(elements_[a].labels(), a);
    for (int b = 0; b < size; ++b)
      leq_[a * size + b] = elements_[a].refines(elements_[b]);
  }
}

int Poset::index_of(const SetPartition& pi) const {
  auto it = index_.find(pi.labels());
  return it == index_.end() ? -1 : it->second;
}

Poset build_pi_lambda(int n, const std::vector<Partition>& types, int limit) {
  if (n > limit)
    throw OracleLimitExceeded("build_pi_lambda: n=" + std::to_string(n) +
                              " exceeds the lattice limit " +
                              std::to_string(limit));
  std::set<Partition> wanted(types.begin(), types.end());
  for (const auto& t : wanted)
    if (t.size() != n)
      throw std::invalid_argument("build_pi_lambda: type size differs from n");
  std::vector<SetPartition> members;
  std::set<SetPartition> seen;
  for (const auto& pi : all_set_partitions(n))
    if (wanted.count(set_partition_type(pi)) && seen.insert(pi).second)
      members.push_back(pi);
  for (std::size_t next = 0; next < members.size(); ++next)
    for (std::size_t other = 0; other < next; ++other) {
      SetPartition z = join(members[next], members[other]);
      if (seen.insert(z).second) members.push_back(z);
    }
  members.push_back(SetPartition::finest(n));
  return Poset(n, std::move(members));
}

ChainComplex::ChainComplex(const Poset& poset, int top) {
  std::vector<int> interval;
  for (int x = 0; x < poset.size(); ++x)
    if (poset.less(poset.bottom(), x) && poset.less(x, top)) interval.push_back(x);
  simplices_.push_back({{}});
  while (true) {
    std::vector<std::vector<int>> next;
    for (const auto& chain : simplices_.back()) {
      for (int y : interval) {
        if (!chain.empty() && !poset.less(chain.back(), y)) continue;
        auto longer = chain;
        longer.push_back(y);
        next.push_back(std::move(longer));
      }
    }
    if (next.empty()) break;
    simplices_.push_back(std::move(next));
  }
  index_.resize(simplices_.size());
  for (std::size_t d = 0; d < simplices_.size(); ++d)
    for (std::size_t s = 0; s < simplices_[d].size(); ++s)
      index_[d].emplace(simplices_[d][s], static_cast<int>(s));
}

std::size_t ChainComplex::count(int j) const {
  if (j < -1 || j > top_degree()) return 0;
  return simplices_[j + 1].size();
}

const std::vector<std::vector<int>>& ChainComplex::simplices(int j) const {
  static const std::vector<std::vector<int>> empty;
  if (j < -1 || j > top_degree()) return empty;
  return simplices_[j + 1];
}

int ChainComplex::index_of(const std::vector<int>& chain) const {
  std::size_t d = chain.size();
  if (d >= index_.size()) return -1;
  auto it = index_[d].find(chain);
  return it == index_[d].end() ? -1 : it->second;
}

SparseMatrix ChainComplex::boundary(int j) const {
  SparseMatrix m(static_cast<int>(count(j - 1)), static_cast<int>(count(j)));
  if (j < 0 || j > top_degree()) return m;
  std::vector<std::vector<std::pair<int, int>>> rows(m.rows);
  const auto& cells = simplices(j);
  for (std::size_t s = 0; s < cells.size(); ++s) {
    for (std::size_t l = 0; l < cells[s].size(); ++l) {
      auto face = cells[s];
      face.erase(face.begin() + static_cast<long>(l));
      rows[index_of(face)].emplace_back(static_cast<int>(s), l % 2 ? -1 : 1);
    }
  }
  for (int r = 0; r < m.rows; ++r) {
    std::sort(rows[r].begin(), rows[r].end());
    for (auto [c, v] : rows[r]) m.row_entries[r].emplace_back(c, Rational(v));
  }
  return m;
}

Rational EquivariantCharacter::value_at(const Permutation& g) const {
  auto it = std::find(group.begin(), group.end(), g);
  if (it == group.end())
    throw std::invalid_argument("permutation not in the character's group");
  return values[it - group.begin()];
}

long IntervalHomology::dim(int j) const {
  if (j < -1 || j + 1 >= static_cast<int>(dims.size())) return 0;
  return dims[j + 1];
}

std::vector<Permutation> stabilizer(const SetPartition& pi) {
  Permutation g(static_cast<std::size_t>(pi.n()));
  std::iota(g.begin(), g.end(), 0);
  std::vector<Permutation> out;
  do {
    if (act(g, pi) == pi) out.push_back(g);
  } while (std::next_permutation(g.begin(), g.end()));
  return out;
}

namespace {

// Homology of one order complex, with reductions cached per degree.
class HomologyWorker {
 public:
  HomologyWorker(const Poset& poset, const ChainComplex& complex,
                 std::map<int, std::shared_ptr<RowReduction>>& cache)
      : poset_(poset), complex_(complex), cache_(cache) {}

  const RowReduction& reduction(int j) {
    auto it = cache_.find(j);
    if (it == cache_.end())
      it = cache_.emplace(j, std::make_shared<RowReduction>(complex_.boundary(j)))
               .first;
    return *it->second;
  }

  long dim(int j) {
    if (j < -1 || j > complex_.top_degree()) return 0;
    return static_cast<long>(complex_.count(j)) - reduction(j).rank() -
           reduction(j + 1).rank();
  }

  // tr(g|H_j) = tr(g|Z_j) − tr(g|C_{j+1}) + tr(g|Z_{j+1}).
  Rational trace(int j, const Permutation& g) {
    std::vector<int> moved_by_inverse = element_action(inverse(g));
    return cycle_trace(j, moved_by_inverse) - fixed_count(j + 1, moved_by_inverse) +
           cycle_trace(j + 1, moved_by_inverse);
  }

 private:
  std::vector<int> element_action(const Permutation& g) const {
    std::vector<int> image(poset_.size());
    for (int x = 0; x < poset_.size(); ++x)
      image[x] = poset_.index_of(act(g, poset_.element(x)));
    return image;
  }

  // Trace on Z_j: coordinate of g·z_f at f equals z_f at g^{-1}(f).
  Rational cycle_trace(int j, const std::vector<int>& inv_action) {
    if (complex_.count(j) == 0) return 0;
    const RowReduction& red = reduction(j);
    const auto& cells = complex_.simplices(j);
    Rational total = 0;
    for (int f : red.free_columns()) {
      std::vector<int> pre = cells[f];
      for (int& x : pre) x = inv_action[x];
      total += red.kernel_entry(f, complex_.index_of(pre));
    }
    return total;
  }

  long fixed_count(int j, const std::vector<int>& action) const {
    long fixed = 0;
    for (const auto& chain : complex_.simplices(j))
      if (std::all_of(chain.begin(), chain.end(),
                      [&](int x) { return action[x] == x; }))
        ++fixed;
    return fixed;
  }

  const Poset& poset_;
  const ChainComplex& complex_;
  std::map<int, std::shared_ptr<RowReduction>>& cache_;
};

}  // namespace

IntervalHomology interval_homology(const Poset& poset, int pi) {
  ChainComplex complex(poset, pi);
  std::map<int, std::shared_ptr<RowReduction>> cache;
  HomologyWorker worker(poset, complex, cache);
  auto group = stabilizer(poset.element(pi));
  IntervalHomology out;
  for (int j = -1; j <= complex.top_degree(); ++j) {
    out.dims.push_back(worker.dim(j));
    EquivariantCharacter chi;
    chi.group = group;
    for (const auto& g : group)
      chi.values.push_back(out.dims.back() == 0 ? Rational(0) : worker.trace(j, g));
    out.characters.push_back(std::move(chi));
  }
  return out;
}

std::vector<long> interval_betti(const Poset& poset, int pi) {
  ChainComplex complex(poset, pi);
  std::map<int, std::shared_ptr<RowReduction>> cache;
  HomologyWorker worker(poset, complex, cache);
  std::vector<long> dims;
  for (int j = -1; j <= complex.top_degree(); ++j) dims.push_back(worker.dim(j));
  return dims;
}

int orientation_character(const SetPartition& pi, int d, const Permutation& g) {
  if (act(g, pi) != pi)
    throw std::invalid_argument("orientation_character: g does not stabilize pi");
  // Basis of the block-sum-zero subspace: e_{b_a} − e_{b_0} for a ≥ 1.
  std::vector<std::pair<int, int>> basis;  // (b_a, b_0), 0-based
  for (const auto& block : pi.blocks())
    for (std::size_t a = 1; a < block.size(); ++a)
      basis.emplace_back(block[a] - 1, block[0] - 1);
  std::size_t dim = basis.size();
  if (dim == 0) return 1;
  std::vector<int> coordinate_of(static_cast<std::size_t>(pi.n()), -1);
  for (std::size_t r = 0; r < dim; ++r) coordinate_of[basis[r].first] = static_cast<int>(r);
  std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(dim, 0));
  for (std::size_t c = 0; c < dim; ++c) {
    int plus = g[basis[c].first];
    int minus = g[basis[c].second];
    if (coordinate_of[plus] >= 0) m[coordinate_of[plus]][c] += 1;
    if (coordinate_of[minus] >= 0) m[coordinate_of[minus]][c] -= 1;
  }
  Rational det = determinant(std::move(m));
  if (det != 1 && det != -1)
    throw std::logic_error("orientation determinant is not a sign");
  int sign = det == 1 ? 1 : -1;
  return d % 2 == 0 ? 1 : sign;
}

ArrangementOracle::ArrangementOracle(int n, std::vector<Partition> types, int limit)
    : n_(n),
      poset_((n > limit ? throw OracleLimitExceeded(
                              "oracle: n=" + std::to_string(n) +
                              " exceeds the oracle limit " + std::to_string(limit))
                        : build_pi_lambda(n, types, std::max(limit, n)))) {}

std::vector<Partition> ArrangementOracle::orbit_types() const {
  std::set<Partition> types;
  for (int x = 1; x < poset_.size(); ++x)
    types.insert(set_partition_type(poset_.element(x)));
  return {types.begin(), types.end()};
}

ArrangementOracle::OrbitData& ArrangementOracle::orbit(const Partition& type) {
  auto it = orbits_.find(type);
  if (it != orbits_.end()) return it->second;
  OrbitData data;
  for (int x = 1; x < poset_.size(); ++x)
    if (set_partition_type(poset_.element(x)) == type) {
      data.rep = x;
      break;
    }
  if (data.rep >= 0) {
    data.group = stabilizer(poset_.element(data.rep));
    data.complex = std::make_unique<ChainComplex>(poset_, data.rep);
  }
  return orbits_.emplace(type, std::move(data)).first->second;
}

long ArrangementOracle::homology_dim(OrbitData& data, int j) {
  HomologyWorker worker(poset_, *data.complex, data.reductions);
  return worker.dim(j);
}

Rational ArrangementOracle::twisted_trace(OrbitData& data, int d, int j,
                                          const Permutation& g) {
  HomologyWorker worker(poset_, *data.complex, data.reductions);
  return worker.trace(j, g) *
         orientation_character(poset_.element(data.rep), d, g);
}

SymmetricFunction ArrangementOracle::orbit_contribution(int d, int i,
                                                        const Partition& type) {
  std::lock_guard lock(mutex_);
  OrbitData& data = orbit(type);
  SymmetricFunction acc(Basis::Power);
  if (data.rep < 0) return to_schur(acc);
  int j = d * rank(type) - i - 2;
  if (j < -1 || j > data.complex->top_degree()) return to_schur(acc);
  if (homology_dim(data, j) == 0) return to_schur(acc);
  Rational weight(1, static_cast<long>(data.group.size()));
  for (const auto& g : data.group)
    acc.add(cycle_type(g), twisted_trace(data, d, j, g) * weight);
  return to_schur(acc);
}

SymmetricFunction ArrangementOracle::reduced_orbit_char(int d, int i,
                                                        const Partition& type) {
  std::lock_guard lock(mutex_);
  OrbitData& data = orbit(type);
  SymmetricFunction acc(Basis::Power);
  if (data.rep < 0) return to_schur(acc);
  int j = d * rank(type) - i - 2;
  if (j < -1 || j > data.complex->top_degree()) return to_schur(acc);
  if (homology_dim(data, j) == 0) return to_schur(acc);
  const SetPartition& rep = poset_.element(data.rep);
  std::vector<int> singletons;
  for (const auto& block : rep.blocks())
    if (block.size() == 1) singletons.push_back(block.front() - 1);
  std::vector<const Permutation*> fixing;
  for (const auto& g : data.group)
    if (std::all_of(singletons.begin(), singletons.end(),
                    [&](int x) { return g[x] == x; }))
      fixing.push_back(&g);
  Rational weight(1, static_cast<long>(fixing.size()));
  for (const auto* g : fixing) {
    auto parts = cycle_type(*g).parts();
    parts.resize(parts.size() - singletons.size());
    acc.add(Partition(std::move(parts)), twisted_trace(data, d, j, *g) * weight);
  }
  return to_schur(acc);
}

SymmetricFunction ArrangementOracle::complement_char(int d, int i) {
  SymmetricFunction total(Basis::Schur);
  for (const auto& type : orbit_types()) total += orbit_contribution(d, i, type);
  return total;
}

SymmetricFunction sw_complement_char(int n, int d,
                                     const std::vector<Partition>& types, int i,
                                     int limit) {
  ArrangementOracle oracle(n, types, limit);
  return oracle.complement_char(d, i);
}

}  // namespace repstab
