#include "hca/circular_ones.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "hca/error.hpp"

namespace hca {

BinaryMatrix::BinaryMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw InputError("matrix dimensions must be non-negative");
  bits_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

std::vector<int> BinaryMatrix::column(int c) const {
  std::vector<int> out;
  for (int r = 0; r < rows_; ++r) {
    if (at(r, c)) out.push_back(r);
  }
  return out;
}

bool is_consecutive_under(const BinaryMatrix& m, const RowOrder& order) {
  if (static_cast<int>(order.size()) != m.rows()) return false;
  std::vector<int> pos(m.rows(), -1);
  for (int i = 0; i < m.rows(); ++i) {
    if (order[i] < 0 || order[i] >= m.rows() || pos[order[i]] != -1) return false;
    pos[order[i]] = i;
  }
  for (int c = 0; c < m.cols(); ++c) {
    int lo = m.rows();
    int hi = -1;
    int count = 0;
    for (int r = 0; r < m.rows(); ++r) {
      if (!m.at(r, c)) continue;
      lo = std::min(lo, pos[r]);
      hi = std::max(hi, pos[r]);
      ++count;
    }
    if (count > 0 && hi - lo + 1 != count) return false;
  }
  return true;
}

bool is_circular_under(const BinaryMatrix& m, const RowOrder& order) {
  if (static_cast<int>(order.size()) != m.rows()) return false;
  std::vector<bool> placed(m.rows(), false);
  for (int r : order) {
    if (r < 0 || r >= m.rows() || placed[r]) return false;
    placed[r] = true;
  }
  int n = m.rows();
  for (int c = 0; c < m.cols(); ++c) {
    // A circular run has exactly one position whose successor is a 0.
    int count = 0;
    int run_ends = 0;
    for (int i = 0; i < n; ++i) {
      bool here = m.at(order[i], c);
      bool next = m.at(order[(i + 1) % n], c);
      count += here ? 1 : 0;
      if (here && !next) ++run_ends;
    }
    if (count > 0 && count < n && run_ends != 1) return false;
  }
  return true;
}

namespace {

// Dynamic bitset over the element universe of one arrangement problem.
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(int n) : w_((n + 63) / 64, 0) {}

  void insert(int e) { w_[e / 64] |= Bits1 << (e % 64); }
  bool contains(int e) const { return (w_[e / 64] >> (e % 64)) & 1U; }
  int count() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }
  bool empty() const {
    return std::all_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x == 0; });
  }
  bool subset_of(const ElemSet& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (w_[i] & ~o.w_[i]) return false;
    }
    return true;
  }
  bool intersects(const ElemSet& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (w_[i] & o.w_[i]) return true;
    }
    return false;
  }
  ElemSet operator&(const ElemSet& o) const {
    ElemSet r = *this;
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
    return r;
  }
  ElemSet operator-(const ElemSet& o) const {
    ElemSet r = *this;
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~o.w_[i];
    return r;
  }
  ElemSet& operator|=(const ElemSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  int first() const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (w_[i]) return static_cast<int>(i * 64) + std::countr_zero(w_[i]);
    }
    return -1;
  }
  void append_members(std::vector<int>& out) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      for (std::uint64_t x = w_[i]; x; x &= x - 1) {
        out.push_back(static_cast<int>(i * 64) + std::countr_zero(x));
      }
    }
  }
  auto operator<=>(const ElemSet&) const = default;

 private:
  static constexpr std::uint64_t Bits1 = 1;
  std::vector<std::uint64_t> w_;
};

bool overlap(const ElemSet& a, const ElemSet& b) {
  return a.intersects(b) && !a.subset_of(b) && !b.subset_of(a);
}

// Places the sets of one connected overlap component as a sequence of
// blocks so that every set is a contiguous union of blocks. Each step is
// forced up to the initial reflection, so failure means no arrangement.
bool place_component(const std::vector<ElemSet>& sets, std::vector<ElemSet>& blocks) {
  std::size_t s = sets.size();
  std::vector<bool> visited(s, false);
  std::vector<std::size_t> queue{0};
  visited[0] = true;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (std::size_t j = 0; j < s; ++j) {
      if (!visited[j] && overlap(sets[queue[qi]], sets[j])) {
        visited[j] = true;
        queue.push_back(j);
      }
    }
  }
  blocks = {sets[queue[0]]};
  ElemSet placed = sets[queue[0]];
  for (std::size_t qi = 1; qi < queue.size(); ++qi) {
    const ElemSet& set = sets[queue[qi]];
    int a = -1;
    int b = -1;
    for (int i = 0; i < static_cast<int>(blocks.size()); ++i) {
      if (blocks[i].intersects(set)) {
        if (a < 0) a = i;
        b = i;
      }
    }
    if (a < 0) return false;
    for (int i = a + 1; i < b; ++i) {
      if (!blocks[i].subset_of(set)) return false;
    }
    auto full = [&](int i) { return blocks[i].subset_of(set); };
    ElemSet fresh = set - placed;
    int last = static_cast<int>(blocks.size()) - 1;
    if (fresh.empty()) {
      if (a == b) {
        if (!full(a)) return false;
        continue;
      }
      if (!full(b)) {
        ElemSet in = blocks[b] & set;
        ElemSet out = blocks[b] - set;
        blocks[b] = in;
        blocks.insert(blocks.begin() + b + 1, out);
      }
      if (!full(a)) {
        ElemSet in = blocks[a] & set;
        ElemSet out = blocks[a] - set;
        blocks[a] = out;
        blocks.insert(blocks.begin() + a + 1, in);
      }
      continue;
    }
    bool right_ok = b == last;
    for (int i = a + 1; right_ok && i <= b; ++i) right_ok = full(i);
    bool left_ok = a == 0;
    for (int i = a; left_ok && i < b; ++i) left_ok = full(i);
    if (right_ok) {
      if (!full(a)) {
        ElemSet in = blocks[a] & set;
        ElemSet out = blocks[a] - set;
        blocks[a] = out;
        blocks.insert(blocks.begin() + a + 1, in);
      }
      blocks.push_back(fresh);
    } else if (left_ok) {
      if (!full(b)) {
        ElemSet in = blocks[b] & set;
        ElemSet out = blocks[b] - set;
        blocks[b] = in;
        blocks.insert(blocks.begin() + b + 1, out);
      }
      blocks.insert(blocks.begin(), fresh);
    } else {
      return false;
    }
    placed |= fresh;
  }
  return true;
}

bool arrange(const ElemSet& ground, const std::vector<ElemSet>& sets, std::vector<int>& out) {
  int gsize = ground.count();
  std::vector<ElemSet> kept;
  for (const auto& s : sets) {
    int c = s.count();
    if (c > 1 && c < gsize) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  if (kept.empty()) {
    ground.append_members(out);
    return true;
  }

  std::size_t s = kept.size();
  std::vector<std::size_t> comp(s);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&comp](std::size_t x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i + 1; j < s; ++j) {
      if (overlap(kept[i], kept[j])) comp[find(i)] = find(j);
    }
  }
  std::vector<std::vector<ElemSet>> components;
  std::vector<std::size_t> comp_index(s, s);
  for (std::size_t i = 0; i < s; ++i) {
    std::size_t root = find(i);
    if (comp_index[root] == s) {
      comp_index[root] = components.size();
      components.emplace_back();
    }
    components[comp_index[root]].push_back(kept[i]);
  }
  std::vector<ElemSet> unions;
  for (const auto& c : components) {
    ElemSet u = c.front();
    for (const auto& x : c) u |= x;
    unions.push_back(u);
  }

  for (std::size_t c = 0; c < components.size(); ++c) {
    if (unions[c] != ground) continue;
    std::vector<ElemSet> blocks;
    if (!place_component(components[c], blocks)) return false;
    for (const auto& block : blocks) {
      std::vector<ElemSet> inside;
      for (const auto& x : kept) {
        if (x.subset_of(block)) inside.push_back(x);
      }
      if (!arrange(block, inside, out)) return false;
    }
    return true;
  }

  // Component unions are laminar; the maximal ones are disjoint and each
  // is solved independently, free elements go anywhere.
  std::vector<ElemSet> maximal;
  for (std::size_t c = 0; c < unions.size(); ++c) {
    bool dominated = false;
    for (std::size_t d = 0; d < unions.size() && !dominated; ++d) {
      if (d == c) continue;
      bool strict = unions[c].subset_of(unions[d]) && unions[c] != unions[d];
      dominated = strict || (unions[c] == unions[d] && d < c);
    }
    if (!dominated) maximal.push_back(unions[c]);
  }
  std::sort(maximal.begin(), maximal.end(),
            [](const ElemSet& x, const ElemSet& y) { return x.first() < y.first(); });
  ElemSet covered = ground - ground;
  for (const auto& u : maximal) covered |= u;
  std::vector<int> free_elems;
  (ground - covered).append_members(free_elems);
  for (const auto& u : maximal) {
    std::vector<ElemSet> inside;
    for (const auto& x : kept) {
      if (x.subset_of(u)) inside.push_back(x);
    }
    if (!arrange(u, inside, out)) return false;
  }
  out.insert(out.end(), free_elems.begin(), free_elems.end());
  return true;
}

std::vector<std::vector<int>> columns_of(const BinaryMatrix& m) {
  std::vector<std::vector<int>> cols;
  cols.reserve(m.cols());
  for (int c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return cols;
}

}  // namespace

std::optional<std::vector<int>> consecutive_arrangement(int n,
                                                        const std::vector<std::vector<int>>& sets) {
  ElemSet ground(n);
  for (int e = 0; e < n; ++e) ground.insert(e);
  std::vector<ElemSet> es;
  es.reserve(sets.size());
  for (const auto& s : sets) {
    ElemSet x(n);
    for (int e : s) {
      if (e < 0 || e >= n) throw InputError("set element out of range");
      x.insert(e);
    }
    es.push_back(std::move(x));
  }
  std::vector<int> order;
  order.reserve(n);
  if (!arrange(ground, es, order)) return std::nullopt;
  return order;
}

std::optional<RowOrder> consecutive_ones_row_order(const BinaryMatrix& m) {
  auto order = consecutive_arrangement(m.rows(), columns_of(m));
  if (order && !is_consecutive_under(m, *order)) {
    throw InternalError("consecutive-ones arrangement failed its own check");
  }
  return order;
}

std::optional<RowOrder> circular_ones_row_order(const BinaryMatrix& m) {
  if (m.rows() == 0) return RowOrder{};
  BinaryMatrix t = m;
  for (int c = 0; c < m.cols(); ++c) {
    if (!m.at(0, c)) continue;
    for (int r = 0; r < m.rows(); ++r) t.set(r, c, !m.at(r, c));
  }
  auto order = consecutive_ones_row_order(t);
  if (order && !is_circular_under(m, *order)) {
    throw InternalError("circular-ones order failed its own check");
  }
  return order;
}

namespace {

constexpr int kBruteForceRows = 10;

}  // namespace

std::optional<RowOrder> consecutive_ones_brute_force(const BinaryMatrix& m) {
  if (m.rows() > kBruteForceRows) throw BoundExceeded("brute-force consecutive ones limited to 10 rows");
  RowOrder order(m.rows());
  std::iota(order.begin(), order.end(), 0);
  do {
    if (is_consecutive_under(m, order)) return order;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

std::optional<RowOrder> circular_ones_brute_force(const BinaryMatrix& m) {
  if (m.rows() > kBruteForceRows) throw BoundExceeded("brute-force circular ones limited to 10 rows");
  if (m.rows() == 0) return RowOrder{};
  RowOrder order(m.rows());
  std::iota(order.begin(), order.end(), 0);
  do {
    if (is_circular_under(m, order)) return order;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return std::nullopt;
}

}  // namespace hca
