#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace qtab {

using Mask = std::uint64_t;
using Partition = std::vector<unsigned>;

inline Mask bit(std::size_t i) { return Mask(1) << i; }
inline unsigned popcount(Mask m) { return static_cast<unsigned>(__builtin_popcountll(m)); }

struct Cell {
  unsigned row = 0;  // 1-based
  unsigned col = 0;  // 1-based; shifted shapes start row i at column i
  friend bool operator==(const Cell& a, const Cell& b) { return a.row == b.row && a.col == b.col; }
};

enum class OriginKind { none, shape, shifted, minuscule, chain };

struct Origin {
  OriginKind kind = OriginKind::none;
  std::string name;                 // "rect:2x3", "shape:2,1", "minuscule:E6", ...
  Partition partition;              // shapes and shifted shapes
  std::vector<Cell> cells;          // per element, when the poset comes from a diagram
  bool has_cells() const { return !cells.empty(); }
};

struct RankData {
  std::vector<unsigned> rk;
  unsigned rank_of_poset = 0;
};

/// Finite poset on elements 0..n-1. Indices are the natural labeling minus
/// one: every cover i < j goes from a smaller index to a larger one, so
/// omega(i) = i + 1 is order-preserving by construction.
class Poset {
 public:
  Poset() = default;
  /// covers may contain redundant (transitive) pairs; they are reduced away.
  /// Throws InvalidPoset if a pair is not index-increasing, out of range, or n > 64.
  Poset(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& relations,
        Origin origin = {});

  std::size_t size() const { return n_; }
  Mask all() const { return n_ == 64 ? ~Mask(0) : bit(n_) - 1; }
  const Origin& origin() const { return origin_; }
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  Mask lower_covers(std::size_t p) const { return lower_[p]; }
  Mask upper_covers(std::size_t p) const { return upper_[p]; }
  /// Strictly below / strictly above.
  Mask below(std::size_t p) const { return below_[p]; }
  Mask above(std::size_t p) const { return above_[p]; }
  bool less(std::size_t a, std::size_t b) const { return (below_[b] >> a) & 1U; }
  bool covered_by(std::size_t a, std::size_t b) const { return (lower_[b] >> a) & 1U; }

  bool is_ideal(Mask m) const;
  /// max(I): elements of I with no upper cover in I.
  Mask maximal_in(Mask ideal) const;
  /// min(P \ I): elements outside I all of whose lower covers lie in I.
  Mask minimal_outside(Mask ideal) const;

  /// Every order ideal, ascending as an unsigned mask.
  std::vector<Mask> order_ideals() const;
  void for_each_ideal(const std::function<void(Mask)>& visit) const;

  /// Reversed order, element i becomes n-1-i. The result carries no origin
  /// cells.
  Poset dual() const;

  bool is_graded() const;
  /// Throws NotGraded.
  RankData rank_data() const;

  /// Element with the given cell, or size() if absent.
  std::size_t element_at(Cell c) const;

 private:
  std::size_t n_ = 0;
  Origin origin_;
  std::vector<Mask> lower_, upper_, below_, above_;
};

/// Young diagram, boxes in row-major order. Throws InvalidPartition.
Poset build_shape(const Partition& lambda);
/// Rectangle with a rows and b columns.
Poset build_rectangle(unsigned a, unsigned b);
/// Shifted diagram of a strict partition. Throws InvalidPartition.
Poset build_shifted(const Partition& lambda);
Poset build_chain(unsigned n);
Poset build_propeller(unsigned k);
Poset build_e6();
Poset build_e7();
/// "E6", "E7", "propeller:k", "staircase:k", "rect:axb". Throws UnknownFamily.
Poset build_minuscule(const std::string& family);

/// Cover-preserving bijection search, pruned by up/down degree signatures.
bool isomorphic(const Poset& a, const Poset& b);
bool is_self_dual(const Poset& p);

/// Partitions of n in reverse lexicographic order.
std::vector<Partition> partitions_of(unsigned n);
std::vector<Partition> strict_partitions_of(unsigned n);
bool is_partition(const Partition& lambda);
bool is_strict_partition(const Partition& lambda);

/// Hook lengths, row-major over the boxes.
std::vector<unsigned> hook_lengths(const Partition& lambda);
/// Shifted hook: arm + leg + 1, plus the whole of row j+1 for the box (i, j).
std::vector<unsigned> shifted_hook_lengths(const Partition& lambda);

std::string partition_to_string(const Partition& lambda);

}  // namespace qtab
