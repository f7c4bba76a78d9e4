#pragma once

#include <functional>
#include <vector>

#include "qtab/poset.hpp"
#include "qtab/qtpoly.hpp"

namespace qtab {

/// Order-preserving bijection T: P -> [n]. value[p] = T(p); word[k] is the
/// element holding k+1, so word is w_T shifted down by one.
struct LinearExtension {
  std::vector<unsigned> value;
  std::vector<unsigned> word;

  static LinearExtension from_word(std::vector<unsigned> word);
  static LinearExtension from_values(std::vector<unsigned> value);
  std::size_t size() const { return word.size(); }
  /// Elements with values 1..i.
  Mask prefix_ideal(unsigned i) const;
  friend bool operator==(const LinearExtension& a, const LinearExtension& b) {
    return a.word == b.word;
  }
};

bool is_linear_extension(const Poset& p, const LinearExtension& t);

/// Lexicographic in w_T.
void for_each_linear_extension(const Poset& p, const std::function<void(const LinearExtension&)>& visit);
std::vector<LinearExtension> linear_extensions(const Poset& p);
/// e(P) by dynamic programming over order ideals.
Integer count_linear_extensions(const Poset& p);

/// Descents i in 1..n-1, bit i set.
Mask descent_mask(const LinearExtension& t);
std::vector<unsigned> descents(const LinearExtension& t);
unsigned comaj(const LinearExtension& t);
unsigned maj(const LinearExtension& t);
/// Sum over Des(T) u {i} of n - j, for 0 <= i <= n.
unsigned comaj_at(const LinearExtension& t, unsigned i);

QPoly gf_comaj(const Poset& p);

/// f_X(i) = #{j in X : j < i} + (n - i if i not in X), i = 0..n.
std::vector<unsigned> f_x_permutation(unsigned n, const std::vector<unsigned>& x);
/// Same sequence built from n n-1 ... 0 by right-rotating positions k..n for each k in X.
std::vector<unsigned> f_x_by_rotation(unsigned n, const std::vector<unsigned>& x);

/// Barely set-valued linear extension: values 1..n+1, with i_star and one
/// smaller value sharing the element p_star. owner[v-1] is the element holding v.
struct BsvLinearExtension {
  std::vector<unsigned> owner;
  unsigned p_star = 0;
  unsigned i_star = 0;

  std::size_t poset_size() const { return owner.size() - 1; }
  /// Entries of element e in increasing order.
  std::vector<unsigned> entries(unsigned e) const;
  friend bool operator==(const BsvLinearExtension& a, const BsvLinearExtension& b) {
    return a.owner == b.owner && a.p_star == b.p_star && a.i_star == b.i_star;
  }
};

struct LinTriple {
  LinearExtension t;
  unsigned i = 0;
  unsigned p = 0;
};

bool is_bsv_linear_extension(const Poset& p, const BsvLinearExtension& s);
/// Throws InvalidTriple unless 1 <= i <= n and p is maximal in T^{-1}({1..i}).
BsvLinearExtension bsv_from_triple(const Poset& poset, const LinTriple& triple);
LinTriple triple_from_bsv(const BsvLinearExtension& s);

/// Bit i for i in 1..n+1.
Mask bsv_descent_mask(const BsvLinearExtension& s);
std::vector<unsigned> bsv_descents(const BsvLinearExtension& s);
/// Sum over Des^{+1}(S) of n + 1 - i.
unsigned comaj_plus(const BsvLinearExtension& s);

void for_each_bsv(const Poset& p, const std::function<void(const BsvLinearExtension&)>& visit);

/// What the t variable records in a BSV generating function.
enum class Refinement { none, row, diagonal };

/// Sum over BSV extensions of q^{comaj+1} t^{r}; r = row(p_star) - 1 for
/// Refinement::row, 1 when p_star is on the main diagonal for
/// Refinement::diagonal. Throws UnsupportedRefinement when the poset has no cells.
QTPoly gf_bsv(const Poset& p, Refinement refinement = Refinement::none);

}  // namespace qtab
