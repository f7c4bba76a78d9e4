#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qtab/linext.hpp"

namespace qtab {

enum class Step { U, D, Hr, Hb };
using Path = std::vector<Step>;

/// "UUDHrD..."; Hr/Hb for red and blue horizontal steps.
std::string path_to_string(const Path& path);
/// Throws ParseError.
Path parse_path(const std::string& text);

/// Motzkin condition: never below the axis, ends at height 0.
bool is_motzkin(const Path& path);
bool is_dyck(const Path& path);
/// Red steps off height zero and blue steps only after the first D.
bool is_rbmotz(const Path& path);

/// 1-based indices i with step i = D and step i+1 = U.
std::vector<unsigned> valleys(const Path& path);
/// 1-based indices of horizontal steps.
std::vector<unsigned> horizontals(const Path& path);
/// Sum over valleys of 2b - i.
unsigned comaj_dyck(const Path& path);
/// Sum over valleys and horizontals of len - i.
unsigned comaj_plus_path(const Path& path);

void for_each_dyck(unsigned b, const std::function<void(const Path&)>& visit);
QPoly gf_comaj_dyck(unsigned b);
/// Restricted bicolored Motzkin paths of length len, with exactly k
/// horizontal steps when k is given.
void for_each_rbmotz(unsigned len, std::optional<unsigned> k, const std::function<void(const Path&)>& visit);
Integer count_rbmotz(unsigned len, std::optional<unsigned> k = std::nullopt);

/// Two-rowed set-valued tableau: top[j] and bottom[j] are the entry sets of
/// column j+1, each sorted.
struct TwoRowTableau {
  std::vector<std::vector<unsigned>> top, bottom;
  unsigned entry_count() const;
  friend bool operator==(const TwoRowTableau&, const TwoRowTableau&) = default;
};

bool is_standard_set_valued(const TwoRowTableau& s);
/// Standard set-valued 2 x b tableaux with entries 1..2b+k.
void for_each_set_valued_2row(unsigned b, unsigned k, const std::function<void(const TwoRowTableau&)>& visit);

Path motzkin_from_tableau(const TwoRowTableau& s);
/// Throws ParseError when the path is not a restricted bicolored Motzkin path.
TwoRowTableau tableau_from_motzkin(const Path& path);

/// Requires p to be a 2 x b rectangle; throws WrongShape.
TwoRowTableau two_row_from_linext(const Poset& p, const LinearExtension& t);
TwoRowTableau two_row_from_bsv(const Poset& p, const BsvLinearExtension& s);
Path dyck_from_syt(const Poset& p, const LinearExtension& t);
/// Extension of build_rectangle(2, b).
LinearExtension syt_from_dyck(const Path& path);

/// Sum over RBMotz(2b+1; 1) of q^{comaj+1} t^{[blue]}.
QTPoly gf_rbmotz_one_horizontal(unsigned b);
/// (t + q) [b]/[b+2] [2b+1] Cat_q(b).
QTPoly dyck_gen_fun_formula(unsigned b);

/// Number of 2 x b set-valued tableaux with k extra entries, over 2b + k = len,
/// bucketed by the number of top-row entries (index j).
std::vector<Integer> top_entry_distribution(unsigned len);

}  // namespace qtab
