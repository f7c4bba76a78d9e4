#include "qtab/linext.hpp"

#include <algorithm>
#include <unordered_map>

#include "qtab/errors.hpp"

namespace qtab {

LinearExtension LinearExtension::from_word(std::vector<unsigned> word) {
  LinearExtension t;
  t.value.assign(word.size(), 0);
  for (std::size_t k = 0; k < word.size(); ++k) t.value.at(word[k]) = static_cast<unsigned>(k + 1);
  t.word = std::move(word);
  return t;
}

LinearExtension LinearExtension::from_values(std::vector<unsigned> value) {
  LinearExtension t;
  t.word.assign(value.size(), 0);
  for (std::size_t e = 0; e < value.size(); ++e) t.word.at(value[e] - 1) = static_cast<unsigned>(e);
  t.value = std::move(value);
  return t;
}

Mask LinearExtension::prefix_ideal(unsigned i) const {
  Mask m = 0;
  for (unsigned k = 0; k < i; ++k) m |= bit(word[k]);
  return m;
}

bool is_linear_extension(const Poset& p, const LinearExtension& t) {
  const std::size_t n = p.size();
  if (t.value.size() != n || t.word.size() != n) return false;
  std::vector<bool> seen(n + 1, false);
  for (std::size_t e = 0; e < n; ++e) {
    if (t.value[e] < 1 || t.value[e] > n || seen[t.value[e]]) return false;
    seen[t.value[e]] = true;
    if (t.word[t.value[e] - 1] != e) return false;
  }
  for (auto [a, b] : p.covers())
    if (t.value[a] >= t.value[b]) return false;
  return true;
}

void for_each_linear_extension(const Poset& p,
                               const std::function<void(const LinearExtension&)>& visit) {
  const std::size_t n = p.size();
  LinearExtension t;
  t.value.assign(n, 0);
  t.word.assign(n, 0);
  std::function<void(std::size_t, Mask)> rec = [&](std::size_t k, Mask placed) {
    if (k == n) {
      visit(t);
      return;
    }
    for (Mask avail = p.minimal_outside(placed); avail; avail &= avail - 1) {
      unsigned e = static_cast<unsigned>(__builtin_ctzll(avail));
      t.word[k] = e;
      t.value[e] = static_cast<unsigned>(k + 1);
      rec(k + 1, placed | bit(e));
    }
  };
  rec(0, 0);
}

std::vector<LinearExtension> linear_extensions(const Poset& p) {
  std::vector<LinearExtension> out;
  for_each_linear_extension(p, [&](const LinearExtension& t) { out.push_back(t); });
  return out;
}

Integer count_linear_extensions(const Poset& p) {
  std::unordered_map<Mask, Integer> ways;
  ways[0] = 1;
  for (Mask ideal : p.order_ideals()) {
    if (ideal == 0) continue;
    Integer total = 0;
    for (Mask m = p.maximal_in(ideal); m; m &= m - 1) total += ways[ideal & ~(m & -m)];
    ways[ideal] = total;
  }
  return ways[p.all()];
}

Mask descent_mask(const LinearExtension& t) {
  Mask d = 0;
  for (std::size_t i = 1; i < t.word.size(); ++i)
    if (t.word[i - 1] > t.word[i]) d |= bit(i);
  return d;
}

std::vector<unsigned> descents(const LinearExtension& t) {
  std::vector<unsigned> out;
  for (Mask d = descent_mask(t); d; d &= d - 1) out.push_back(static_cast<unsigned>(__builtin_ctzll(d)));
  return out;
}

unsigned comaj(const LinearExtension& t) {
  unsigned s = 0;
  for (unsigned i : descents(t)) s += static_cast<unsigned>(t.size()) - i;
  return s;
}

unsigned maj(const LinearExtension& t) {
  unsigned s = 0;
  for (unsigned i : descents(t)) s += i;
  return s;
}

unsigned comaj_at(const LinearExtension& t, unsigned i) {
  const unsigned n = static_cast<unsigned>(t.size());
  Mask d = descent_mask(t);
  unsigned s = comaj(t);
  if (i > n) throw InvalidTriple("comaj_at: index out of range");
  if (!((d >> i) & 1U)) s += n - i;
  return s;
}

QPoly gf_comaj(const Poset& p) {
  std::vector<Integer> c(p.size() * p.size() / 2 + 1);
  for_each_linear_extension(p, [&](const LinearExtension& t) { c[comaj(t)] += 1; });
  return QPoly(std::move(c));
}

std::vector<unsigned> f_x_permutation(unsigned n, const std::vector<unsigned>& x) {
  std::vector<unsigned> f(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    unsigned below = 0;
    bool in_x = false;
    for (unsigned j : x) {
      if (j < i) ++below;
      if (j == i) in_x = true;
    }
    f[i] = below + (in_x ? 0 : n - i);
  }
  return f;
}

std::vector<unsigned> f_x_by_rotation(unsigned n, const std::vector<unsigned>& x) {
  std::vector<unsigned> f(n + 1);
  for (unsigned i = 0; i <= n; ++i) f[i] = n - i;
  std::vector<unsigned> ks = x;
  std::sort(ks.begin(), ks.end());
  for (unsigned k : ks) std::rotate(f.begin() + k, f.end() - 1, f.end());
  return f;
}

std::vector<unsigned> BsvLinearExtension::entries(unsigned e) const {
  std::vector<unsigned> out;
  for (std::size_t v = 0; v < owner.size(); ++v)
    if (owner[v] == e) out.push_back(static_cast<unsigned>(v + 1));
  return out;
}

bool is_bsv_linear_extension(const Poset& p, const BsvLinearExtension& s) {
  const std::size_t n = p.size();
  if (s.owner.size() != n + 1 || s.p_star >= n || s.i_star < 2 || s.i_star > n + 1) return false;
  if (s.owner[s.i_star - 1] != s.p_star) return false;
  std::vector<unsigned> count(n, 0), lo(n, 0), hi(n, 0);
  for (std::size_t v = 1; v <= n + 1; ++v) {
    unsigned e = s.owner[v - 1];
    if (e >= n) return false;
    if (count[e]++ == 0) lo[e] = static_cast<unsigned>(v);
    hi[e] = static_cast<unsigned>(v);
  }
  for (std::size_t e = 0; e < n; ++e) {
    if (count[e] != (e == s.p_star ? 2U : 1U)) return false;
  }
  if (hi[s.p_star] != s.i_star) return false;
  for (auto [a, b] : p.covers())
    if (hi[a] >= lo[b]) return false;
  return true;
}

BsvLinearExtension bsv_from_triple(const Poset& poset, const LinTriple& triple) {
  const unsigned n = static_cast<unsigned>(poset.size());
  const unsigned i = triple.i;
  if (i < 1 || i > n) throw InvalidTriple("bsv_from_triple: i must lie in 1..n");
  if (triple.p >= n || !((poset.maximal_in(triple.t.prefix_ideal(i)) >> triple.p) & 1U))
    throw InvalidTriple("bsv_from_triple: p is not maximal among the first i entries");
  BsvLinearExtension s;
  s.owner.reserve(n + 1);
  s.owner.assign(triple.t.word.begin(), triple.t.word.begin() + i);
  s.owner.push_back(triple.p);
  s.owner.insert(s.owner.end(), triple.t.word.begin() + i, triple.t.word.end());
  s.p_star = triple.p;
  s.i_star = i + 1;
  return s;
}

LinTriple triple_from_bsv(const BsvLinearExtension& s) {
  LinTriple out;
  std::vector<unsigned> word = s.owner;
  word.erase(word.begin() + (s.i_star - 1));
  out.t = LinearExtension::from_word(std::move(word));
  out.i = s.i_star - 1;
  out.p = s.p_star;
  return out;
}

Mask bsv_descent_mask(const BsvLinearExtension& s) {
  const std::size_t top = s.owner.size();  // n + 1
  Mask d = 0;
  for (std::size_t i = 1; i < top; ++i) {
    if (i + 1 == s.i_star) continue;
    if (i == s.i_star || s.owner[i] < s.owner[i - 1]) d |= bit(i);
  }
  if (s.i_star == top) d |= bit(top);
  return d;
}

std::vector<unsigned> bsv_descents(const BsvLinearExtension& s) {
  std::vector<unsigned> out;
  for (Mask d = bsv_descent_mask(s); d; d &= d - 1) out.push_back(static_cast<unsigned>(__builtin_ctzll(d)));
  return out;
}

unsigned comaj_plus(const BsvLinearExtension& s) {
  const unsigned top = static_cast<unsigned>(s.owner.size());
  unsigned c = 0;
  for (unsigned i : bsv_descents(s)) c += top - i;
  return c;
}

void for_each_bsv(const Poset& p, const std::function<void(const BsvLinearExtension&)>& visit) {
  const unsigned n = static_cast<unsigned>(p.size());
  for_each_linear_extension(p, [&](const LinearExtension& t) {
    for (unsigned i = 1; i <= n; ++i) {
      Mask prefix = t.prefix_ideal(i);
      for (Mask m = p.maximal_in(prefix); m; m &= m - 1)
        visit(bsv_from_triple(p, {t, i, static_cast<unsigned>(__builtin_ctzll(m))}));
    }
  });
}

QTPoly gf_bsv(const Poset& p, Refinement refinement) {
  if (refinement != Refinement::none && !p.origin().has_cells())
    throw UnsupportedRefinement("poset '" + p.origin().name + "' has no row/column coordinates");
  QTPoly out;
  for_each_bsv(p, [&](const BsvLinearExtension& s) {
    unsigned texp = 0;
    const Cell& c = p.origin().has_cells() ? p.origin().cells[s.p_star] : Cell{};
    if (refinement == Refinement::row) texp = c.row - 1;
    if (refinement == Refinement::diagonal) texp = c.row == c.col ? 1 : 0;
    out.add_monomial(Integer(1), comaj_plus(s), texp);
  });
  return out;
}

}  // namespace qtab
