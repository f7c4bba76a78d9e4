#include "qtab/ppart.hpp"

#include <algorithm>
#include <numeric>

#include "qtab/errors.hpp"
#include "qtab/qnumbers.hpp"

namespace qtab {

bool is_rpp(const Poset& p, const Rpp& pi, unsigned m) {
  if (pi.size() != p.size()) return false;
  for (unsigned v : pi)
    if (v > m) return false;
  for (auto [a, b] : p.covers())
    if (pi[a] > pi[b]) return false;
  return true;
}

unsigned rpp_size(const Rpp& pi) { return std::accumulate(pi.begin(), pi.end(), 0U); }

Mask ideal_at_level(const Rpp& pi, unsigned k) {
  Mask m = 0;
  for (std::size_t e = 0; e < pi.size(); ++e)
    if (pi[e] <= k) m |= bit(e);
  return m;
}

namespace {

// Fills elements in index order; all lower covers are already fixed, so the
// admissible range is [max of lower covers, m]. Branches whose partial size
// exceeds size_cap are cut.
void fill_rpp(const Poset& p, unsigned m, unsigned size_cap,
              const std::function<void(const Rpp&)>& visit) {
  const std::size_t n = p.size();
  Rpp pi(n, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t e, unsigned sum) {
    if (e == n) {
      visit(pi);
      return;
    }
    unsigned lo = 0;
    for (Mask c = p.lower_covers(e); c; c &= c - 1) lo = std::max(lo, pi[__builtin_ctzll(c)]);
    for (unsigned v = lo; v <= m && sum + v <= size_cap; ++v) {
      pi[e] = v;
      rec(e + 1, sum + v);
    }
  };
  rec(0, 0);
}

}  // namespace

void for_each_rpp(const Poset& p, unsigned m, const std::function<void(const Rpp&)>& visit) {
  fill_rpp(p, m, ~0U, visit);
}

QPoly gf_rpp(const Poset& p, unsigned m) {
  QPoly out;
  for_each_rpp(p, m, [&](const Rpp& pi) { out.add_monomial(1, rpp_size(pi)); });
  return out;
}

QPoly rpp_series(const Poset& p, unsigned cap) {
  QPoly out;
  fill_rpp(p, cap, cap, [&](const Rpp& pi) { out.add_monomial(1, rpp_size(pi)); });
  return out;
}

namespace {

QPoly ratio_product(const std::vector<unsigned>& num, const std::vector<unsigned>& den) {
  QPoly a = 1, b = 1;
  for (unsigned k : num) a *= qnum(k);
  for (unsigned k : den) b *= qnum(k);
  return exact_div(a, b);
}

}  // namespace

QPoly macmahon_gf(unsigned a, unsigned b, unsigned m) {
  std::vector<unsigned> num, den;
  for (unsigned i = 1; i <= a; ++i)
    for (unsigned j = 1; j <= b; ++j) {
      num.push_back(i + j + m - 1);
      den.push_back(i + j - 1);
    }
  return ratio_product(num, den);
}

QPoly bender_knuth_gf(unsigned k, unsigned m) {
  std::vector<unsigned> num, den;
  for (unsigned i = 1; i <= k; ++i)
    for (unsigned j = i; j <= k; ++j) {
      num.push_back(i + j + m - 1);
      den.push_back(i + j - 1);
    }
  return ratio_product(num, den);
}

QPoly minuscule_gf(const Poset& p, unsigned m) {
  RankData rd = p.rank_data();
  std::vector<unsigned> num, den;
  for (unsigned r : rd.rk) {
    num.push_back(r + m + 1);
    den.push_back(r + 1);
  }
  return ratio_product(num, den);
}

QPoly gansner_series(const Partition& strict_lambda, unsigned cap) {
  QPoly out = 1;
  for (unsigned h : shifted_hook_lengths(strict_lambda)) {
    std::vector<Integer> geo(cap + 1);
    for (unsigned e = 0; e <= cap; e += h) geo[e] = 1;
    out = (out * QPoly(std::move(geo))).truncated(cap);
  }
  return out;
}

LinearExtension w_decompose(const Rpp& pi) {
  std::vector<unsigned> word(pi.size());
  std::iota(word.begin(), word.end(), 0U);
  std::stable_sort(word.begin(), word.end(), [&](unsigned a, unsigned b) { return pi[a] < pi[b]; });
  return LinearExtension::from_word(std::move(word));
}

bool is_compatible(const Rpp& pi, const LinearExtension& t) {
  for (std::size_t i = 1; i < t.word.size(); ++i) {
    unsigned a = pi[t.word[i - 1]], b = pi[t.word[i]];
    if (a > b) return false;
    if (t.word[i - 1] > t.word[i] && a == b) return false;
  }
  return true;
}

unsigned BsvRpp::size() const { return rpp_size(low) + i_star; }

bool is_bsv_rpp(const Poset& p, const BsvRpp& tau, unsigned m) {
  const std::size_t n = p.size();
  if (tau.low.size() != n || tau.p_star >= n) return false;
  if (tau.i_star <= tau.low[tau.p_star] || tau.i_star > m) return false;
  for (unsigned v : tau.low)
    if (v > m) return false;
  auto high = [&](std::size_t e) { return e == tau.p_star ? tau.i_star : tau.low[e]; };
  for (auto [a, b] : p.covers())
    if (high(a) > tau.low[b]) return false;
  return true;
}

BsvRpp bsv_rpp_from_triple(const Poset& poset, const RppTriple& triple, unsigned m) {
  if (triple.i + 1 > m) throw InvalidTriple("bsv_rpp_from_triple: need i <= m-1");
  if (triple.p >= poset.size() ||
      !((poset.maximal_in(ideal_at_level(triple.pi, triple.i)) >> triple.p) & 1U))
    throw InvalidTriple("bsv_rpp_from_triple: p is not maximal at level i");
  return BsvRpp{triple.pi, triple.p, triple.i + 1};
}

RppTriple triple_from_bsv_rpp(const BsvRpp& tau) { return {tau.low, tau.i_star - 1, tau.p_star}; }

void for_each_bsv_rpp(const Poset& p, unsigned m, const std::function<void(const BsvRpp&)>& visit) {
  for_each_rpp(p, m, [&](const Rpp& pi) {
    for (unsigned i = 0; i + 1 <= m; ++i)
      for (Mask c = p.maximal_in(ideal_at_level(pi, i)); c; c &= c - 1)
        visit(BsvRpp{pi, static_cast<unsigned>(__builtin_ctzll(c)), i + 1});
  });
}

QTPoly gf_bsv_rpp(const Poset& p, unsigned m, Refinement refinement) {
  if (refinement != Refinement::none && !p.origin().has_cells())
    throw UnsupportedRefinement("poset '" + p.origin().name + "' has no row/column coordinates");
  QTPoly out;
  for_each_bsv_rpp(p, m, [&](const BsvRpp& tau) {
    unsigned texp = 0;
    if (refinement != Refinement::none) {
      const Cell& c = p.origin().cells[tau.p_star];
      texp = refinement == Refinement::row ? c.row - 1 : (c.row == c.col ? 1U : 0U);
    }
    out.add_monomial(Integer(1), tau.size() - 1, texp);
  });
  return out;
}

}  // namespace qtab
