#include "qtab/distributions.hpp"

#include <stdexcept>

#include "qtab/errors.hpp"
#include "qtab/qnumbers.hpp"

namespace qtab {

PosetSignature signature(const Poset& p) { return {p.size(), p.covers()}; }

bool tin(const Poset& p, std::size_t e, Mask ideal) { return (p.minimal_outside(ideal) >> e) & 1U; }
bool tout(const Poset& p, std::size_t e, Mask ideal) { return (p.maximal_in(ideal) >> e) & 1U; }

QPoly tq(const Poset& p, std::size_t e, Mask ideal) {
  if (tin(p, e, ideal)) return 1;
  if (tout(p, e, ideal)) return QPoly{0, -1};
  return {};
}

unsigned ddeg(const Poset& p, Mask ideal) { return popcount(p.maximal_in(ideal)); }

QPoly WeightedEnsemble::weight(Mask ideal) const {
  auto it = weights.find(ideal);
  return it == weights.end() ? QPoly() : it->second;
}

RatFunc WeightedEnsemble::probability(Mask ideal) const { return RatFunc(weight(ideal), normalizer); }

bool WeightedEnsemble::is_consistent() const {
  QPoly total;
  for (const auto& [m, w] : weights) {
    if (!w.has_nonnegative_coeffs()) return false;
    total += w;
  }
  return total == normalizer;
}

Statistic stat_ddeg(const Poset& p) {
  return {signature(p), [p](Mask m) { return QPoly(static_cast<long>(ddeg(p, m))); }, "ddeg"};
}

Statistic stat_tq(const Poset& p, std::size_t e) {
  return {signature(p), [p, e](Mask m) { return tq(p, e, m); }, "tq:" + std::to_string(e)};
}

Statistic stat_constant(const Poset& p, const QPoly& c) {
  return {signature(p), [c](Mask) { return c; }, "constant"};
}

namespace {

Statistic masked_ddeg(const Poset& p, Mask region, std::string name) {
  return {signature(p),
          [p, region](Mask m) { return QPoly(static_cast<long>(popcount(p.maximal_in(m) & region))); },
          std::move(name)};
}

}  // namespace

Statistic stat_row_ddeg(const Poset& p, unsigned row) {
  if (!p.origin().has_cells())
    throw UnsupportedRefinement("poset '" + p.origin().name + "' has no rows");
  Mask region = 0;
  for (std::size_t e = 0; e < p.size(); ++e)
    if (p.origin().cells[e].row == row) region |= bit(e);
  return masked_ddeg(p, region, "row:" + std::to_string(row));
}

Statistic stat_diagonal_ddeg(const Poset& p) {
  if (!p.origin().has_cells())
    throw UnsupportedRefinement("poset '" + p.origin().name + "' has no diagonal");
  Mask region = 0;
  for (std::size_t e = 0; e < p.size(); ++e)
    if (p.origin().cells[e].row == p.origin().cells[e].col) region |= bit(e);
  return masked_ddeg(p, region, "diag");
}

unsigned theta_exponent(const LinearExtension& t, unsigned i) {
  unsigned before = 0;
  for (unsigned j : descents(t))
    if (j < i) ++before;
  return comaj_at(t, i) + before;
}

QPoly theta(const LinearExtension& t, unsigned i) { return QPoly::q_power(theta_exponent(t, i)); }

QPoly theta_m(const LinearExtension& t, unsigned i, unsigned m) {
  const unsigned n = static_cast<unsigned>(t.size());
  Mask d = descent_mask(t) & ~bit(i);
  return theta(t, i) * qbinom(m + n - popcount(d), n + 1);
}

Laurent theta_star(const LinearExtension& t, unsigned i) {
  long e = 0;
  Mask d = descent_mask(t);
  for (unsigned j : descents(t)) {
    e += j;
    if (j > i) ++e;
  }
  if (!((d >> i) & 1U)) e += i;
  return {-e, QPoly(1)};
}

namespace {

WeightedEnsemble finish(const Poset& p, std::map<Mask, QPoly> weights) {
  WeightedEnsemble e;
  e.poset = signature(p);
  for (auto it = weights.begin(); it != weights.end();) {
    if (it->second.is_zero())
      it = weights.erase(it);
    else
      ++it;
  }
  e.weights = std::move(weights);
  for (const auto& [m, w] : e.weights) e.normalizer += w;
  return e;
}

}  // namespace

WeightedEnsemble ensemble_uniform(const Poset& p) {
  std::map<Mask, QPoly> w;
  for (Mask m : p.order_ideals()) w[m] = QPoly::q_power(p.size() - popcount(m));
  return finish(p, std::move(w));
}

WeightedEnsemble ensemble_rpp(const Poset& p, unsigned m, RppMode mode) {
  if (m == 0) throw std::invalid_argument("ensemble_rpp needs m >= 1");
  std::map<Mask, QPoly> w;
  if (mode == RppMode::direct) {
    for_each_rpp(p, m, [&](const Rpp& pi) {
      const unsigned s = rpp_size(pi);
      for (unsigned k = 0; k < m; ++k) w[ideal_at_level(pi, k)].add_monomial(1, s + k);
    });
  } else {
    for_each_linear_extension(p, [&](const LinearExtension& t) {
      for (unsigned i = 0; i <= t.size(); ++i) w[t.prefix_ideal(i)] += theta_m(t, i, m);
    });
  }
  return finish(p, std::move(w));
}

WeightedEnsemble ensemble_lin(const Poset& p) {
  std::map<Mask, QPoly> w;
  for_each_linear_extension(p, [&](const LinearExtension& t) {
    for (unsigned i = 0; i <= t.size(); ++i) w[t.prefix_ideal(i)].add_monomial(1, theta_exponent(t, i));
  });
  return finish(p, std::move(w));
}

WeightedEnsemble ensemble_rank(const Poset& p) {
  RankData rd = p.rank_data();
  std::map<Mask, QPoly> w;
  w[0] = QPoly::q_power(rd.rank_of_poset + 1);
  if (p.size() > 0) {
    for (unsigned i = 0; i <= rd.rank_of_poset; ++i) {
      Mask m = 0;
      for (std::size_t e = 0; e < p.size(); ++e)
        if (rd.rk[e] <= i) m |= bit(e);
      w[m] = QPoly::q_power(rd.rank_of_poset - i);
    }
  } else {
    w[0] = 1;
  }
  return finish(p, std::move(w));
}

WeightedEnsemble ensemble_point_mass(const Poset& p, Mask ideal) {
  if (!p.is_ideal(ideal)) throw InvalidPoset("point mass on a non-ideal");
  return finish(p, {{ideal, QPoly(1)}});
}

RatFunc expectation(const WeightedEnsemble& e, const Statistic& f) {
  if (!(e.poset == f.poset)) throw PosetMismatch("statistic '" + f.name + "' belongs to another poset");
  QPoly total;
  for (const auto& [m, w] : e.weights) {
    QPoly v = f.eval(m);
    if (!v.is_zero()) total += v * w;
  }
  return RatFunc(total, e.normalizer);
}

ToggleSymmetryReport check_toggle_symmetry(const WeightedEnsemble& e, const Poset& p) {
  ToggleSymmetryReport r;
  r.symmetric = true;
  for (std::size_t x = 0; x < p.size(); ++x) {
    r.expectation.push_back(expectation(e, stat_tq(p, x)));
    if (!r.expectation.back().is_zero()) r.symmetric = false;
  }
  return r;
}

std::pair<Rpp, unsigned> involution_rpp(const Poset& p, std::size_t e, const Rpp& pi, unsigned k,
                                        unsigned m) {
  unsigned x = 0, y = m;
  for (Mask c = p.lower_covers(e); c; c &= c - 1) x = std::max(x, pi[__builtin_ctzll(c)]);
  for (Mask c = p.upper_covers(e); c; c &= c - 1) y = std::min(y, pi[__builtin_ctzll(c)]);
  Rpp out = pi;
  if (x <= k && k < pi[e]) {
    out[e] = k;
    return {out, pi[e] - 1};
  }
  if (pi[e] <= k && k < y) {
    out[e] = k + 1;
    return {out, pi[e]};
  }
  return {out, k};
}

}  // namespace qtab
