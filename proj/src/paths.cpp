#include "qtab/paths.hpp"

#include <algorithm>

#include "qtab/errors.hpp"
#include "qtab/qnumbers.hpp"
#include "qtab/toggle_solver.hpp"

namespace qtab {

std::string path_to_string(const Path& path) {
  std::string s;
  for (Step st : path) {
    switch (st) {
      case Step::U: s += "U"; break;
      case Step::D: s += "D"; break;
      case Step::Hr: s += "Hr"; break;
      case Step::Hb: s += "Hb"; break;
    }
  }
  return s;
}

Path parse_path(const std::string& text) {
  Path p;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == 'U') {
      p.push_back(Step::U);
    } else if (c == 'D') {
      p.push_back(Step::D);
    } else if (c == 'H' && i + 1 < text.size() && (text[i + 1] == 'r' || text[i + 1] == 'b')) {
      p.push_back(text[++i] == 'r' ? Step::Hr : Step::Hb);
    } else {
      throw ParseError("bad path '" + text + "'");
    }
  }
  return p;
}

bool is_motzkin(const Path& path) {
  long h = 0;
  for (Step s : path) {
    if (s == Step::U) ++h;
    if (s == Step::D && --h < 0) return false;
  }
  return h == 0;
}

bool is_dyck(const Path& path) {
  return is_motzkin(path) &&
         std::none_of(path.begin(), path.end(), [](Step s) { return s == Step::Hr || s == Step::Hb; });
}

bool is_rbmotz(const Path& path) {
  if (!is_motzkin(path)) return false;
  long h = 0;
  bool seen_down = false;
  for (Step s : path) {
    if (s == Step::Hr && h == 0) return false;
    if (s == Step::Hb && !seen_down) return false;
    if (s == Step::U) ++h;
    if (s == Step::D) {
      --h;
      seen_down = true;
    }
  }
  return true;
}

std::vector<unsigned> valleys(const Path& path) {
  std::vector<unsigned> out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (path[i] == Step::D && path[i + 1] == Step::U) out.push_back(static_cast<unsigned>(i + 1));
  return out;
}

std::vector<unsigned> horizontals(const Path& path) {
  std::vector<unsigned> out;
  for (std::size_t i = 0; i < path.size(); ++i)
    if (path[i] == Step::Hr || path[i] == Step::Hb) out.push_back(static_cast<unsigned>(i + 1));
  return out;
}

unsigned comaj_dyck(const Path& path) {
  unsigned s = 0;
  for (unsigned i : valleys(path)) s += static_cast<unsigned>(path.size()) - i;
  return s;
}

unsigned comaj_plus_path(const Path& path) {
  unsigned s = comaj_dyck(path);
  for (unsigned i : horizontals(path)) s += static_cast<unsigned>(path.size()) - i;
  return s;
}

void for_each_dyck(unsigned b, const std::function<void(const Path&)>& visit) {
  for_each_rbmotz(2 * b, 0U, visit);
}

QPoly gf_comaj_dyck(unsigned b) {
  QPoly out;
  for_each_dyck(b, [&](const Path& p) { out.add_monomial(1, comaj_dyck(p)); });
  return out;
}

void for_each_rbmotz(unsigned len, std::optional<unsigned> k, const std::function<void(const Path&)>& visit) {
  Path path;
  path.reserve(len);
  std::function<void(unsigned, unsigned, bool)> rec = [&](unsigned height, unsigned hor, bool seen_down) {
    const unsigned left = len - static_cast<unsigned>(path.size());
    if (height > left) return;
    if (k && hor > *k) return;
    if (left == 0) {
      if (!k || hor == *k) visit(path);
      return;
    }
    path.push_back(Step::U);
    rec(height + 1, hor, seen_down);
    path.back() = Step::D;
    if (height > 0) rec(height - 1, hor, true);
    path.back() = Step::Hr;
    if (height > 0) rec(height, hor + 1, seen_down);
    path.back() = Step::Hb;
    if (seen_down) rec(height, hor + 1, seen_down);
    path.pop_back();
  };
  rec(0, 0, false);
}

Integer count_rbmotz(unsigned len, std::optional<unsigned> k) {
  Integer c = 0;
  for_each_rbmotz(len, k, [&](const Path&) { ++c; });
  return c;
}

unsigned TwoRowTableau::entry_count() const {
  unsigned c = 0;
  for (const auto& cell : top) c += static_cast<unsigned>(cell.size());
  for (const auto& cell : bottom) c += static_cast<unsigned>(cell.size());
  return c;
}

bool is_standard_set_valued(const TwoRowTableau& s) {
  const std::size_t b = s.top.size();
  if (s.bottom.size() != b) return false;
  std::vector<unsigned> all;
  auto check_row = [&](const std::vector<std::vector<unsigned>>& row) {
    for (std::size_t j = 0; j < b; ++j) {
      if (row[j].empty() || !std::is_sorted(row[j].begin(), row[j].end())) return false;
      if (j && row[j - 1].back() >= row[j].front()) return false;
      all.insert(all.end(), row[j].begin(), row[j].end());
    }
    return true;
  };
  if (!check_row(s.top) || !check_row(s.bottom)) return false;
  for (std::size_t j = 0; j < b; ++j)
    if (s.top[j].back() >= s.bottom[j].front()) return false;
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] != i + 1) return false;
  return true;
}

void for_each_set_valued_2row(unsigned b, unsigned k, const std::function<void(const TwoRowTableau&)>& visit) {
  const unsigned total = 2 * b + k;
  TwoRowTableau s;
  // Insert 1, 2, ... in turn: open a new box in a row, or append to that
  // row's last box. Appending on top is allowed only while the box below is
  // still unopened.
  std::function<void(unsigned)> rec = [&](unsigned v) {
    if (v > total) {
      if (s.top.size() == b && s.bottom.size() == b) visit(s);
      return;
    }
    const std::size_t t = s.top.size(), d = s.bottom.size();
    const unsigned extra_used = v - 1 - static_cast<unsigned>(t + d);
    if (t < b) {
      s.top.push_back({v});
      rec(v + 1);
      s.top.pop_back();
    }
    if (d < t) {
      s.bottom.push_back({v});
      rec(v + 1);
      s.bottom.pop_back();
    }
    if (extra_used < k) {
      if (t > d) {
        s.top.back().push_back(v);
        rec(v + 1);
        s.top.back().pop_back();
      }
      if (d > 0) {
        s.bottom.back().push_back(v);
        rec(v + 1);
        s.bottom.back().pop_back();
      }
    }
  };
  rec(1);
}

Path motzkin_from_tableau(const TwoRowTableau& s) {
  Path path(s.entry_count());
  for (const auto& cell : s.top)
    for (std::size_t i = 0; i < cell.size(); ++i) path.at(cell[i] - 1) = i == 0 ? Step::U : Step::Hr;
  for (const auto& cell : s.bottom)
    for (std::size_t i = 0; i < cell.size(); ++i) path.at(cell[i] - 1) = i == 0 ? Step::D : Step::Hb;
  return path;
}

TwoRowTableau tableau_from_motzkin(const Path& path) {
  if (!is_rbmotz(path)) throw ParseError("not a restricted bicolored Motzkin path: " + path_to_string(path));
  TwoRowTableau s;
  for (std::size_t i = 0; i < path.size(); ++i) {
    unsigned v = static_cast<unsigned>(i + 1);
    switch (path[i]) {
      case Step::U: s.top.push_back({v}); break;
      case Step::D: s.bottom.push_back({v}); break;
      case Step::Hr: s.top.back().push_back(v); break;
      case Step::Hb: s.bottom.back().push_back(v); break;
    }
  }
  return s;
}

namespace {

unsigned two_row_width(const Poset& p) {
  auto dims = rectangle_dims(p);
  if (!dims || dims->first != 2) throw WrongShape("expected a 2 x b rectangle, got '" + p.origin().name + "'");
  return dims->second;
}

}  // namespace

TwoRowTableau two_row_from_linext(const Poset& p, const LinearExtension& t) {
  const unsigned b = two_row_width(p);
  TwoRowTableau s;
  for (unsigned j = 0; j < b; ++j) {
    s.top.push_back({t.value[j]});
    s.bottom.push_back({t.value[b + j]});
  }
  return s;
}

TwoRowTableau two_row_from_bsv(const Poset& p, const BsvLinearExtension& bsv) {
  const unsigned b = two_row_width(p);
  TwoRowTableau s;
  for (unsigned j = 0; j < b; ++j) {
    s.top.push_back(bsv.entries(j));
    s.bottom.push_back(bsv.entries(b + j));
  }
  return s;
}

Path dyck_from_syt(const Poset& p, const LinearExtension& t) {
  return motzkin_from_tableau(two_row_from_linext(p, t));
}

LinearExtension syt_from_dyck(const Path& path) {
  if (!is_dyck(path)) throw ParseError("not a Dyck path: " + path_to_string(path));
  TwoRowTableau s = tableau_from_motzkin(path);
  const std::size_t b = s.top.size();
  std::vector<unsigned> value(2 * b);
  for (std::size_t j = 0; j < b; ++j) {
    value[j] = s.top[j][0];
    value[b + j] = s.bottom[j][0];
  }
  return LinearExtension::from_values(std::move(value));
}

QTPoly gf_rbmotz_one_horizontal(unsigned b) {
  QTPoly out;
  for_each_rbmotz(2 * b + 1, 1U, [&](const Path& p) {
    bool blue = std::find(p.begin(), p.end(), Step::Hb) != p.end();
    out.add_monomial(Integer(1), comaj_plus_path(p), blue ? 1 : 0);
  });
  return out;
}

QTPoly dyck_gen_fun_formula(unsigned b) {
  QPoly rest = exact_div(qnum(b) * qnum(2 * b + 1) * q_catalan(b), qnum(b + 2));
  return qt_num(2) * QTPoly(rest);
}

std::vector<Integer> top_entry_distribution(unsigned len) {
  std::vector<Integer> out(len + 1);
  for (unsigned b = 1; 2 * b <= len; ++b) {
    for_each_set_valued_2row(b, len - 2 * b, [&](const TwoRowTableau& s) {
      unsigned top = 0;
      for (const auto& cell : s.top) top += static_cast<unsigned>(cell.size());
      out[top] += 1;
    });
  }
  return out;
}

}  // namespace qtab
