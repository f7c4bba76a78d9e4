#include "qtab/poset.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "qtab/errors.hpp"

namespace qtab {

Poset::Poset(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& relations,
             Origin origin)
    : n_(n), origin_(std::move(origin)), lower_(n), upper_(n), below_(n), above_(n) {
  if (n > 64) throw InvalidPoset("at most 64 elements are supported");
  if (origin_.has_cells() && origin_.cells.size() != n)
    throw InvalidPoset("cell list does not match element count");
  std::vector<Mask> direct(n);
  for (auto [i, j] : relations) {
    if (i >= n || j >= n) throw InvalidPoset("relation index out of range");
    if (i >= j) throw InvalidPoset("relation must go from a smaller to a larger index");
    direct[j] |= bit(i);
  }
  for (std::size_t j = 0; j < n; ++j) {
    Mask b = direct[j];
    for (Mask m = direct[j]; m; m &= m - 1) b |= below_[__builtin_ctzll(m)];
    below_[j] = b;
  }
  for (std::size_t j = 0; j < n; ++j) {
    Mask redundant = 0;
    for (Mask m = below_[j]; m; m &= m - 1) redundant |= below_[__builtin_ctzll(m)];
    lower_[j] = below_[j] & ~redundant;
    for (Mask m = lower_[j]; m; m &= m - 1) upper_[__builtin_ctzll(m)] |= bit(j);
    for (Mask m = below_[j]; m; m &= m - 1) above_[__builtin_ctzll(m)] |= bit(j);
  }
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (Mask m = upper_[i]; m; m &= m - 1) out.emplace_back(i, __builtin_ctzll(m));
  return out;
}

bool Poset::is_ideal(Mask m) const {
  if (m & ~all()) return false;
  for (Mask r = m; r; r &= r - 1)
    if ((lower_[__builtin_ctzll(r)] & ~m) != 0) return false;
  return true;
}

Mask Poset::maximal_in(Mask ideal) const {
  Mask out = 0;
  for (Mask r = ideal; r; r &= r - 1) {
    std::size_t p = __builtin_ctzll(r);
    if ((upper_[p] & ideal) == 0) out |= bit(p);
  }
  return out;
}

Mask Poset::minimal_outside(Mask ideal) const {
  Mask out = 0;
  for (Mask r = all() & ~ideal; r; r &= r - 1) {
    std::size_t p = __builtin_ctzll(r);
    if ((lower_[p] & ~ideal) == 0) out |= bit(p);
  }
  return out;
}

void Poset::for_each_ideal(const std::function<void(Mask)>& visit) const {
  // Decide elements in index order; lower covers are always decided first,
  // so every branch ends in an ideal.
  std::function<void(std::size_t, Mask)> rec = [&](std::size_t i, Mask cur) {
    if (i == n_) {
      visit(cur);
      return;
    }
    rec(i + 1, cur);
    if ((lower_[i] & ~cur) == 0) rec(i + 1, cur | bit(i));
  };
  rec(0, 0);
}

std::vector<Mask> Poset::order_ideals() const {
  std::vector<Mask> out;
  for_each_ideal([&](Mask m) { out.push_back(m); });
  std::sort(out.begin(), out.end());
  return out;
}

Poset Poset::dual() const {
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (auto [i, j] : covers()) rel.emplace_back(n_ - 1 - j, n_ - 1 - i);
  Origin o;
  o.name = "dual(" + origin_.name + ")";
  return Poset(n_, rel, o);
}

namespace {

std::vector<unsigned> longest_chain_rank(const Poset& p) {
  std::vector<unsigned> rk(p.size(), 0);
  for (std::size_t j = 0; j < p.size(); ++j)
    for (Mask m = p.lower_covers(j); m; m &= m - 1)
      rk[j] = std::max(rk[j], rk[__builtin_ctzll(m)] + 1);
  return rk;
}

}  // namespace

bool Poset::is_graded() const {
  auto rk = longest_chain_rank(*this);
  long top = -1;
  for (std::size_t j = 0; j < n_; ++j) {
    for (Mask m = lower_[j]; m; m &= m - 1)
      if (rk[__builtin_ctzll(m)] + 1 != rk[j]) return false;
    if (upper_[j] == 0) {
      if (top >= 0 && static_cast<unsigned>(top) != rk[j]) return false;
      top = rk[j];
    }
  }
  return true;
}

RankData Poset::rank_data() const {
  if (!is_graded()) throw NotGraded("poset '" + origin_.name + "' is not graded");
  RankData d;
  d.rk = longest_chain_rank(*this);
  for (unsigned r : d.rk) d.rank_of_poset = std::max(d.rank_of_poset, r);
  return d;
}

std::size_t Poset::element_at(Cell c) const {
  for (std::size_t i = 0; i < origin_.cells.size(); ++i)
    if (origin_.cells[i] == c) return i;
  return n_;
}

bool is_partition(const Partition& lambda) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] == 0) return false;
    if (i && lambda[i] > lambda[i - 1]) return false;
  }
  return true;
}

bool is_strict_partition(const Partition& lambda) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] == 0) return false;
    if (i && lambda[i] >= lambda[i - 1]) return false;
  }
  return true;
}

std::string partition_to_string(const Partition& lambda) {
  std::string s;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(lambda[i]);
  }
  return s;
}

namespace {

Poset build_from_cells(std::vector<Cell> cells, Origin origin) {
  std::map<std::pair<unsigned, unsigned>, std::size_t> index;
  for (std::size_t i = 0; i < cells.size(); ++i) index[{cells[i].row, cells[i].col}] = i;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto east = index.find({cells[i].row, cells[i].col + 1});
    if (east != index.end()) rel.emplace_back(i, east->second);
    auto south = index.find({cells[i].row + 1, cells[i].col});
    if (south != index.end()) rel.emplace_back(i, south->second);
  }
  const std::size_t n = cells.size();
  origin.cells = std::move(cells);
  return Poset(n, rel, std::move(origin));
}

}  // namespace

Poset build_shape(const Partition& lambda) {
  if (!is_partition(lambda))
    throw InvalidPartition("not a partition: " + partition_to_string(lambda));
  std::vector<Cell> cells;
  for (unsigned r = 0; r < lambda.size(); ++r)
    for (unsigned c = 0; c < lambda[r]; ++c) cells.push_back({r + 1, c + 1});
  Origin o;
  o.kind = OriginKind::shape;
  o.name = "shape:" + partition_to_string(lambda);
  o.partition = lambda;
  return build_from_cells(std::move(cells), std::move(o));
}

Poset build_rectangle(unsigned a, unsigned b) {
  Poset p = build_shape(Partition(a, b));
  Origin o = p.origin();
  o.name = "rect:" + std::to_string(a) + "x" + std::to_string(b);
  return Poset(p.size(), p.covers(), std::move(o));
}

Poset build_shifted(const Partition& lambda) {
  if (!is_strict_partition(lambda))
    throw InvalidPartition("not a strict partition: " + partition_to_string(lambda));
  std::vector<Cell> cells;
  for (unsigned r = 0; r < lambda.size(); ++r)
    for (unsigned c = 0; c < lambda[r]; ++c) cells.push_back({r + 1, r + c + 1});
  Origin o;
  o.kind = OriginKind::shifted;
  o.name = "shifted:" + partition_to_string(lambda);
  o.partition = lambda;
  return build_from_cells(std::move(cells), std::move(o));
}

Poset build_chain(unsigned n) {
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (unsigned i = 1; i < n; ++i) rel.emplace_back(i - 1, i);
  Origin o;
  o.kind = OriginKind::chain;
  o.name = "chain:" + std::to_string(n);
  return Poset(n, rel, o);
}

Poset build_propeller(unsigned k) {
  if (k < 2) throw UnknownFamily("propeller needs k >= 2");
  // 0..k-2 lower chain, k-1 and k the incomparable pair, k+1..2k-1 upper chain.
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (unsigned i = 1; i + 1 < k; ++i) rel.emplace_back(i - 1, i);
  rel.emplace_back(k - 2, k - 1);
  rel.emplace_back(k - 2, k);
  rel.emplace_back(k - 1, k + 1);
  rel.emplace_back(k, k + 1);
  for (unsigned i = k + 2; i < 2 * k; ++i) rel.emplace_back(i - 1, i);
  Origin o;
  o.kind = OriginKind::minuscule;
  o.name = "minuscule:propeller:" + std::to_string(k);
  return Poset(2 * k, rel, o);
}

namespace {

// Hasse diagrams with the node names used in the usual pictures; elements are
// reindexed by (rank, name) so that indices form a linear extension.
Poset poset_from_named_covers(const std::vector<std::pair<int, int>>& named, std::string name) {
  std::map<int, std::vector<int>> down;
  std::vector<int> nodes;
  for (auto [a, b] : named) {
    nodes.push_back(a);
    nodes.push_back(b);
    down[b].push_back(a);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  std::map<int, unsigned> rank;
  std::function<unsigned(int)> rk = [&](int v) -> unsigned {
    auto it = rank.find(v);
    if (it != rank.end()) return it->second;
    unsigned r = 0;
    for (int u : down[v]) r = std::max(r, rk(u) + 1);
    return rank[v] = r;
  };
  std::sort(nodes.begin(), nodes.end(), [&](int a, int b) {
    return std::pair(rk(a), a) < std::pair(rk(b), b);
  });
  std::map<int, std::size_t> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) index[nodes[i]] = i;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (auto [a, b] : named) rel.emplace_back(index[a], index[b]);
  Origin o;
  o.kind = OriginKind::minuscule;
  o.name = std::move(name);
  return Poset(nodes.size(), rel, o);
}

}  // namespace

Poset build_e6() {
  return poset_from_named_covers(
      {{-4, -3}, {-3, -2}, {-2, -1}, {-2, 1}, {-1, 2}, {1, 0}, {1, 2}, {0, 6}, {2, 6}, {2, 3},
       {3, 4}, {3, 7}, {6, 7}, {4, 8}, {7, 8}, {7, 11}, {8, 12}, {11, 12}, {12, 13}, {13, 14}},
      "minuscule:E6");
}

Poset build_e7() {
  return poset_from_named_covers(
      {{1, 4},     {2, 4},     {2, 5},     {3, 5},     {4, 6},     {5, 6},     {5, 7},
       {6, 8},     {7, 8},     {7, 9},     {8, 10},    {8, 11},    {9, 11},    {10, 12},
       {11, 12},   {12, 13},   {13, 14},   {14, 15},   {-4, 1},    {-4, 2},    {-5, 2},
       {-5, 3},    {-6, -4},   {-6, -5},   {-7, -5},   {-8, -6},   {-8, -7},   {-9, -7},
       {-10, -8},  {-11, -8},  {-11, -9},  {-12, -10}, {-12, -11}, {-13, -12}, {-14, -13},
       {-15, -14}},
      "minuscule:E7");
}

Poset build_minuscule(const std::string& family) {
  auto number_after = [&](const std::string& prefix) -> unsigned {
    try {
      std::size_t used = 0;
      unsigned long v = std::stoul(family.substr(prefix.size()), &used);
      if (used + prefix.size() != family.size()) throw UnknownFamily(family);
      return static_cast<unsigned>(v);
    } catch (const std::logic_error&) {
      throw UnknownFamily("unknown minuscule family '" + family + "'");
    }
  };
  if (family == "E6") return build_e6();
  if (family == "E7") return build_e7();
  if (family.rfind("propeller:", 0) == 0) return build_propeller(number_after("propeller:"));
  if (family.rfind("staircase:", 0) == 0) {
    unsigned k = number_after("staircase:");
    Partition lambda;
    for (unsigned i = k; i >= 1; --i) lambda.push_back(i);
    return build_shifted(lambda);
  }
  if (family.rfind("rect:", 0) == 0) {
    auto x = family.find('x');
    if (x == std::string::npos) throw UnknownFamily("unknown minuscule family '" + family + "'");
    try {
      return build_rectangle(static_cast<unsigned>(std::stoul(family.substr(5, x - 5))),
                             static_cast<unsigned>(std::stoul(family.substr(x + 1))));
    } catch (const std::logic_error&) {
      throw UnknownFamily("unknown minuscule family '" + family + "'");
    }
  }
  throw UnknownFamily("unknown minuscule family '" + family + "'");
}

bool isomorphic(const Poset& a, const Poset& b) {
  const std::size_t n = a.size();
  if (b.size() != n || a.covers().size() != b.covers().size()) return false;
  auto signature = [](const Poset& p, std::size_t i) {
    return std::tuple(popcount(p.lower_covers(i)), popcount(p.upper_covers(i)),
                      popcount(p.below(i)), popcount(p.above(i)));
  };
  std::vector<std::size_t> image(n, n);
  std::vector<bool> used(n, false);
  // a is assigned in index order, which is a linear extension, so lower
  // covers of i are already mapped when i is reached.
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || signature(a, i) != signature(b, c)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = a.covered_by(j, i) == b.covered_by(image[j], c) &&
             a.covered_by(i, j) == b.covered_by(c, image[j]);
      if (!ok) continue;
      used[c] = true;
      image[i] = c;
      if (rec(i + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  return rec(0);
}

bool is_self_dual(const Poset& p) { return isomorphic(p, p.dual()); }

std::vector<Partition> partitions_of(unsigned n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned max_part) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned k = std::min(left, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> strict_partitions_of(unsigned n) {
  std::vector<Partition> out;
  for (auto& p : partitions_of(n))
    if (is_strict_partition(p)) out.push_back(p);
  return out;
}

std::vector<unsigned> hook_lengths(const Partition& lambda) {
  if (!is_partition(lambda))
    throw InvalidPartition("not a partition: " + partition_to_string(lambda));
  std::vector<unsigned> out;
  for (unsigned r = 0; r < lambda.size(); ++r) {
    for (unsigned c = 0; c < lambda[r]; ++c) {
      unsigned leg = 0;
      while (r + leg + 1 < lambda.size() && lambda[r + leg + 1] > c) ++leg;
      out.push_back(lambda[r] - c + leg);
    }
  }
  return out;
}

std::vector<unsigned> shifted_hook_lengths(const Partition& lambda) {
  if (!is_strict_partition(lambda))
    throw InvalidPartition("not a strict partition: " + partition_to_string(lambda));
  const unsigned rows = static_cast<unsigned>(lambda.size());
  auto has_cell = [&](unsigned r, unsigned c) {  // 1-based shifted coordinates
    return r >= 1 && r <= rows && c >= r && c < r + lambda[r - 1];
  };
  std::vector<unsigned> out;
  for (unsigned r = 1; r <= rows; ++r) {
    for (unsigned c = r; c < r + lambda[r - 1]; ++c) {
      unsigned h = r + lambda[r - 1] - c;
      for (unsigned rr = r + 1; has_cell(rr, c); ++rr) ++h;
      if (c + 1 <= rows) h += lambda[c];
      out.push_back(h);
    }
  }
  return out;
}

}  // namespace qtab
