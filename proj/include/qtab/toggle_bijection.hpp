#pragma once

#include <string>
#include <vector>

#include "qtab/linext.hpp"

namespace qtab {

enum class LeftCase { L0, L1, L2, L3a, L3b };
enum class RightCase { R0, R1, R2, R3a, R3b };
std::string to_string(LeftCase c);
std::string to_string(RightCase c);

/// Maximal run of positions in [x, y] of one kind. Position l < y is up when
/// l goes after l+1 in the natural order; position y is up unless it goes
/// strictly before x.
struct Block {
  bool up = false;
  unsigned lo = 0, hi = 0;
};

struct IntervalDecomposition {
  unsigned x = 0, y = 0;
  std::vector<Block> blocks;
  unsigned d0 = 0;  // length of the leading down block (0 if [x,y] starts up)
  unsigned f = 0;   // F = [x-f, x-1]
  unsigned e = 0;   // run y+1, ..., y+e used by R1/R2
  unsigned g = 0, h = 0;  // split of the last up block in R3b
};

struct Classification {
  LeftCase left = LeftCase::L0;
  RightCase right = RightCase::R0;
  IntervalDecomposition intervals;
  unsigned y_prime = 0;
  unsigned z = 0;
};

struct PositionedExtension {
  LinearExtension t;
  unsigned y = 0;
  friend bool operator==(const PositionedExtension&, const PositionedExtension&) = default;
};

/// Requires p maximal in T^{-1}({1..y}); throws PNotTogglableOut.
Classification classify(const Poset& poset, const LinearExtension& t, unsigned p, unsigned y);
/// Moves the element at position x to position z (x <= z), shifting the
/// values in between down by one. Throws InvalidEscalation if the result is
/// not a linear extension.
LinearExtension escalate(const Poset& poset, const LinearExtension& t, unsigned x, unsigned z);

/// (T, y) with p togglable out of I_y  ->  (T', y') with p togglable into I'_{y'}.
PositionedExtension toggle_bijection(const Poset& poset, unsigned p, const LinearExtension& t, unsigned y);
/// Same map on the dual poset. Throws PNotTogglableIn.
PositionedExtension inverse_toggle_bijection(const Poset& poset, unsigned p, const LinearExtension& t,
                                             unsigned y);

/// T* on the dual poset (element e becomes n-1-e, value v becomes n+1-v).
LinearExtension dual_extension(const LinearExtension& t);

}  // namespace qtab
