#include "qtab/toggle_bijection.hpp"

#include "qtab/errors.hpp"

namespace qtab {

std::string to_string(LeftCase c) {
  switch (c) {
    case LeftCase::L0: return "L0";
    case LeftCase::L1: return "L1";
    case LeftCase::L2: return "L2";
    case LeftCase::L3a: return "L3a";
    case LeftCase::L3b: return "L3b";
  }
  return "?";
}

std::string to_string(RightCase c) {
  switch (c) {
    case RightCase::R0: return "R0";
    case RightCase::R1: return "R1";
    case RightCase::R2: return "R2";
    case RightCase::R3a: return "R3a";
    case RightCase::R3b: return "R3b";
  }
  return "?";
}

namespace {

// Positions are 1-based; anything outside [1, n] compares as "before".
struct Comparator {
  const LinearExtension& t;
  unsigned n() const { return static_cast<unsigned>(t.size()); }
  bool in_range(unsigned l) const { return l >= 1 && l <= n(); }
  /// l goes after k in the natural order.
  bool up(unsigned l, unsigned k) const {
    return in_range(l) && in_range(k) && t.word[l - 1] > t.word[k - 1];
  }
  bool down(unsigned l, unsigned k) const { return !up(l, k); }
};

}  // namespace

Classification classify(const Poset& poset, const LinearExtension& t, unsigned p, unsigned y) {
  const unsigned n = static_cast<unsigned>(t.size());
  if (p >= n || y > n || !((poset.maximal_in(t.prefix_ideal(y)) >> p) & 1U))
    throw PNotTogglableOut("element " + std::to_string(p) + " cannot be toggled out of I_" + std::to_string(y));
  Comparator c{t};
  const unsigned x = t.value[p];
  Classification out;
  IntervalDecomposition& d = out.intervals;
  d.x = x;
  d.y = y;

  auto position_up = [&](unsigned l) { return l < y ? c.up(l, l + 1) : !(t.word[y - 1] < t.word[x - 1]); };
  for (unsigned l = x; l <= y; ++l) {
    bool up = position_up(l);
    if (d.blocks.empty() || d.blocks.back().up != up)
      d.blocks.push_back({up, l, l});
    else
      d.blocks.back().hi = l;
  }
  if (!d.blocks.front().up) d.d0 = d.blocks.front().hi - d.blocks.front().lo + 1;

  if (c.up(x - 1, x)) {
    unsigned f = 1;
    while (x > f + 1 && c.up(x - f - 1, x - f)) ++f;
    d.f = f;
  }

  // Left case: comparisons around x, with x itself read through its block
  // (when x = y it counts as up).
  const bool a = c.up(x - 1, x), b = position_up(x);
  if (!a && b) {
    out.left = LeftCase::L0;
    out.y_prime = x - 1;
  } else if (!a && !b) {
    out.left = LeftCase::L1;
    out.y_prime = x + d.d0 - 1;
  } else if (a && b) {
    out.left = LeftCase::L2;
    out.y_prime = x - d.f - 1;
  } else if (c.up(x - 1, x + 1)) {
    out.left = LeftCase::L3a;
    out.y_prime = x + d.d0 - 1;
  } else {
    out.left = LeftCase::L3b;
    out.y_prime = x - d.f - 1;
  }

  // Right case: comparisons around y. y "after" x includes y = x.
  const bool y_after_x = !(t.word[y - 1] < t.word[x - 1]);
  auto run_e = [&] {
    unsigned e = 0;
    while (y + e + 1 <= n && c.down(y + e + 1, x) && (e == 0 || c.down(y + e, y + e + 1))) ++e;
    return e;
  };
  if (y_after_x && !c.up(x, y + 1)) {
    out.right = RightCase::R0;
    out.z = y;
  } else if (y_after_x) {
    out.right = RightCase::R1;
    d.e = run_e();
    out.z = y + d.e;
  } else if (c.up(y, y + 1)) {
    out.right = RightCase::R2;
    d.e = run_e();
    out.z = y + d.e;
  } else if (!c.up(y - 1, y)) {
    out.right = RightCase::R3a;
    out.z = y - 1;
  } else {
    out.right = RightCase::R3b;
    // The last up block ends at y-1; its natural labels decrease, so the
    // ones before x form a suffix of length h.
    const Block* us = nullptr;
    for (const Block& blk : d.blocks)
      if (blk.up) us = &blk;
    if (!us || us->hi + 1 != y) throw UncoveredCase("R3b without an up block ending at y-1");
    unsigned h = 0;
    for (unsigned l = us->lo; l <= us->hi; ++l)
      if (t.word[l - 1] < t.word[x - 1]) ++h;
    d.h = h;
    d.g = us->hi - us->lo + 1 - h;
    out.z = y - h - 1;
  }
  if (out.z < x || out.z > n || out.y_prime > n)
    throw UncoveredCase("case " + to_string(out.left) + "/" + to_string(out.right) + " produced an invalid range");
  return out;
}

LinearExtension escalate(const Poset& poset, const LinearExtension& t, unsigned x, unsigned z) {
  if (x < 1 || z < x || z > t.size()) throw InvalidEscalation("escalation range out of bounds");
  std::vector<unsigned> word = t.word;
  const unsigned moved = word[x - 1];
  for (unsigned i = x; i < z; ++i) word[i - 1] = word[i];
  word[z - 1] = moved;
  LinearExtension out = LinearExtension::from_word(std::move(word));
  if (!is_linear_extension(poset, out)) throw InvalidEscalation("escalation broke the order");
  return out;
}

PositionedExtension toggle_bijection(const Poset& poset, unsigned p, const LinearExtension& t, unsigned y) {
  Classification c = classify(poset, t, p, y);
  return {escalate(poset, t, c.intervals.x, c.z), c.y_prime};
}

LinearExtension dual_extension(const LinearExtension& t) {
  const std::size_t n = t.size();
  std::vector<unsigned> word(n);
  for (std::size_t k = 0; k < n; ++k) word[k] = static_cast<unsigned>(n - 1 - t.word[n - 1 - k]);
  return LinearExtension::from_word(std::move(word));
}

PositionedExtension inverse_toggle_bijection(const Poset& poset, unsigned p, const LinearExtension& t,
                                             unsigned y) {
  const unsigned n = static_cast<unsigned>(t.size());
  if (p >= n || y > n || !((poset.minimal_outside(t.prefix_ideal(y)) >> p) & 1U))
    throw PNotTogglableIn("element " + std::to_string(p) + " cannot be toggled into I_" + std::to_string(y));
  Poset dual = poset.dual();
  PositionedExtension r = toggle_bijection(dual, n - 1 - p, dual_extension(t), n - y);
  return {dual_extension(r.t), n - r.y};
}

}  // namespace qtab
