#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qtab/ppart.hpp"
#include "qtab/ratfunc.hpp"

namespace qtab {

/// Cheap identity of a poset, used to refuse mixing ensembles and statistics.
struct PosetSignature {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  friend bool operator==(const PosetSignature&, const PosetSignature&) = default;
};
PosetSignature signature(const Poset& p);

bool tin(const Poset& p, std::size_t e, Mask ideal);
bool tout(const Poset& p, std::size_t e, Mask ideal);
/// tin - q * tout.
QPoly tq(const Poset& p, std::size_t e, Mask ideal);
unsigned ddeg(const Poset& p, Mask ideal);

/// Unnormalized weights on order ideals; probability of I is weights[I] / normalizer.
/// Ideals absent from the map have weight zero.
struct WeightedEnsemble {
  PosetSignature poset;
  std::map<Mask, QPoly> weights;
  QPoly normalizer;

  QPoly weight(Mask ideal) const;
  RatFunc probability(Mask ideal) const;
  /// normalizer == sum of weights and every weight has nonnegative coefficients.
  bool is_consistent() const;
};

struct Statistic {
  PosetSignature poset;
  std::function<QPoly(Mask)> eval;
  std::string name;
};

Statistic stat_ddeg(const Poset& p);
Statistic stat_tq(const Poset& p, std::size_t e);
Statistic stat_constant(const Poset& p, const QPoly& c);
/// Number of maximal elements of I lying in row i (1-based). Needs cells.
Statistic stat_row_ddeg(const Poset& p, unsigned row);
/// Number of maximal elements of I on the main diagonal. Needs cells.
Statistic stat_diagonal_ddeg(const Poset& p);

/// Exponent of theta(T, i) = q^{comaj(T,i) + #{j in Des(T): j < i}}.
unsigned theta_exponent(const LinearExtension& t, unsigned i);
QPoly theta(const LinearExtension& t, unsigned i);
/// theta(T,i) * qbinom(m + n - #(Des(T) \ {i}), n + 1).
QPoly theta_m(const LinearExtension& t, unsigned i, unsigned m);

/// q^shift * poly, for weights with negative exponents.
struct Laurent {
  long shift = 0;
  QPoly poly;
  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.shift == b.shift && a.poly == b.poly;
  }
};
/// Weight of (T, i) in the q > 1 limit:
/// q^{-(sum_{j in Des(T) u {i}} j + #{j in Des(T) : j > i})}.
Laurent theta_star(const LinearExtension& t, unsigned i);

enum class RppMode { direct, via_theta_m };

WeightedEnsemble ensemble_uniform(const Poset& p);
/// Throws std::invalid_argument for m = 0.
WeightedEnsemble ensemble_rpp(const Poset& p, unsigned m, RppMode mode);
WeightedEnsemble ensemble_lin(const Poset& p);
/// Throws NotGraded.
WeightedEnsemble ensemble_rank(const Poset& p);
WeightedEnsemble ensemble_point_mass(const Poset& p, Mask ideal);

/// Throws PosetMismatch.
RatFunc expectation(const WeightedEnsemble& e, const Statistic& f);

struct ToggleSymmetryReport {
  std::vector<RatFunc> expectation;  // E(T^q_p) per element
  bool symmetric = false;
};
ToggleSymmetryReport check_toggle_symmetry(const WeightedEnsemble& e, const Poset& p);

/// The sign-reversing pairing on (pi, k) used for mu_rpp; identity when
/// p can be toggled neither in nor out of pi^{-1}({0..k}).
std::pair<Rpp, unsigned> involution_rpp(const Poset& p, std::size_t e, const Rpp& pi, unsigned k,
                                        unsigned m);

}  // namespace qtab
