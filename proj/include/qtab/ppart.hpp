#pragma once

#include <functional>
#include <vector>

#include "qtab/linext.hpp"

namespace qtab {

/// Reverse P-partition: value[p] in N with p <= p' implying value[p] <= value[p'].
using Rpp = std::vector<unsigned>;

bool is_rpp(const Poset& p, const Rpp& pi, unsigned m);
unsigned rpp_size(const Rpp& pi);
/// pi^{-1}({0..k}).
Mask ideal_at_level(const Rpp& pi, unsigned k);

/// Every reverse P-partition with entries <= m, lexicographic in element order.
void for_each_rpp(const Poset& p, unsigned m, const std::function<void(const Rpp&)>& visit);
/// Sum of q^{|pi|} over RPP_m(P).
QPoly gf_rpp(const Poset& p, unsigned m);
/// Unbounded size series of RPP(P), modulo q^{cap+1}.
QPoly rpp_series(const Poset& p, unsigned cap);

/// Product over the a x b box of [i+j+m-1]/[i+j-1].
QPoly macmahon_gf(unsigned a, unsigned b, unsigned m);
/// Product over 1 <= i <= j <= k of [i+j+m-1]/[i+j-1].
QPoly bender_knuth_gf(unsigned k, unsigned m);
/// Product over p of [rk(p)+m+1]/[rk(p)+1]. Throws NotGraded.
QPoly minuscule_gf(const Poset& p, unsigned m);
/// Product over the shifted diagram of 1/(1-q^{h*(u)}), modulo q^{cap+1}.
QPoly gansner_series(const Partition& strict_lambda, unsigned cap);

/// The unique T whose word w_T pi is compatible with: pi weakly increasing
/// along w_T, strictly at each descent.
LinearExtension w_decompose(const Rpp& pi);
bool is_compatible(const Rpp& pi, const LinearExtension& t);

/// Barely set-valued reverse P-partition: low[p] is the smaller entry;
/// p_star additionally holds i_star > low[p_star].
struct BsvRpp {
  std::vector<unsigned> low;
  unsigned p_star = 0;
  unsigned i_star = 0;

  unsigned size() const;
  friend bool operator==(const BsvRpp& a, const BsvRpp& b) {
    return a.low == b.low && a.p_star == b.p_star && a.i_star == b.i_star;
  }
};

struct RppTriple {
  Rpp pi;
  unsigned i = 0;
  unsigned p = 0;
};

bool is_bsv_rpp(const Poset& p, const BsvRpp& tau, unsigned m);
/// Requires 0 <= i <= m-1 and p maximal in pi^{-1}({0..i}); throws InvalidTriple.
BsvRpp bsv_rpp_from_triple(const Poset& poset, const RppTriple& triple, unsigned m);
RppTriple triple_from_bsv_rpp(const BsvRpp& tau);

void for_each_bsv_rpp(const Poset& p, unsigned m, const std::function<void(const BsvRpp&)>& visit);
/// Sum of q^{|tau|-1} t^{r} with r as in gf_bsv.
QTPoly gf_bsv_rpp(const Poset& p, unsigned m, Refinement refinement = Refinement::none);

}  // namespace qtab
