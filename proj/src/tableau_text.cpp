#include "qtab/tableau_text.hpp"

#include <algorithm>
#include <sstream>

#include "qtab/errors.hpp"

namespace qtab {

TableauRows parse_tableau(const std::string& text) {
  TableauRows rows;
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), '\n', '/');
  std::stringstream ss(normalized);
  std::string row;
  while (std::getline(ss, row, '/')) {
    if (row.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::vector<unsigned>> cells;
    std::stringstream rs(row);
    std::string cell;
    while (std::getline(rs, cell, ',')) {
      std::vector<unsigned> entries;
      std::stringstream cs(cell);
      std::string item;
      while (std::getline(cs, item, '|')) {
        auto a = item.find_first_not_of(" \t\r"), b = item.find_last_not_of(" \t\r");
        if (a == std::string::npos) throw ParseError("empty entry in tableau '" + text + "'");
        item = item.substr(a, b - a + 1);
        if (item.find_first_not_of("0123456789") != std::string::npos)
          throw ParseError("bad entry '" + item + "' in tableau");
        entries.push_back(static_cast<unsigned>(std::stoul(item)));
      }
      if (entries.empty()) throw ParseError("empty cell in tableau '" + text + "'");
      cells.push_back(std::move(entries));
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

std::string format_tableau(const TableauRows& rows, const std::string& row_sep) {
  std::string s;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) s += row_sep;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) s += ",";
      for (std::size_t k = 0; k < rows[r][c].size(); ++k) {
        if (k) s += "|";
        s += std::to_string(rows[r][c][k]);
      }
    }
  }
  return s;
}

std::vector<std::vector<unsigned>> row_elements(const Poset& p) {
  if (!p.origin().has_cells()) throw WrongShape("poset '" + p.origin().name + "' has no cells");
  std::vector<std::vector<unsigned>> rows;
  for (unsigned e = 0; e < p.size(); ++e) {
    const Cell& c = p.origin().cells[e];
    if (rows.size() < c.row) rows.resize(c.row);
    rows[c.row - 1].push_back(e);
  }
  for (auto& r : rows)
    std::sort(r.begin(), r.end(), [&](unsigned a, unsigned b) {
      return p.origin().cells[a].col < p.origin().cells[b].col;
    });
  return rows;
}

namespace {

// Entry sets per element, checked against the row lengths of p.
std::vector<std::vector<unsigned>> cell_entries(const Poset& p, const std::string& text) {
  TableauRows rows = parse_tableau(text);
  auto layout = row_elements(p);
  if (rows.size() != layout.size()) throw WrongShape("row count differs from the poset");
  std::vector<std::vector<unsigned>> out(p.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != layout[r].size()) throw WrongShape("row length differs from the poset");
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      out[layout[r][c]] = rows[r][c];
      std::sort(out[layout[r][c]].begin(), out[layout[r][c]].end());
    }
  }
  return out;
}

}  // namespace

LinearExtension linext_from_text(const Poset& p, const std::string& text) {
  auto entries = cell_entries(p, text);
  std::vector<unsigned> value(p.size());
  std::vector<bool> seen(p.size() + 1, false);
  for (std::size_t e = 0; e < p.size(); ++e) {
    if (entries[e].size() != 1) throw ParseError("doubled cell in a standard filling");
    unsigned v = entries[e][0];
    if (v < 1 || v > p.size() || seen[v]) throw ParseError("entries are not 1..n");
    seen[v] = true;
    value[e] = v;
  }
  LinearExtension t = LinearExtension::from_values(std::move(value));
  if (!is_linear_extension(p, t)) throw ParseError("filling is not order-preserving");
  return t;
}

BsvLinearExtension bsv_from_text(const Poset& p, const std::string& text) {
  auto entries = cell_entries(p, text);
  BsvLinearExtension s;
  s.owner.assign(p.size() + 1, static_cast<unsigned>(p.size()));
  unsigned doubled = 0;
  for (unsigned e = 0; e < p.size(); ++e) {
    if (entries[e].size() == 2) {
      ++doubled;
      s.p_star = e;
      s.i_star = entries[e][1];
    } else if (entries[e].size() != 1) {
      throw ParseError("cells hold one or two entries");
    }
    for (unsigned v : entries[e]) {
      if (v < 1 || v > p.size() + 1 || s.owner[v - 1] != p.size()) throw ParseError("entries are not 1..n+1");
      s.owner[v - 1] = e;
    }
  }
  if (doubled != 1 || !is_bsv_linear_extension(p, s))
    throw ParseError("not a barely set-valued linear extension");
  return s;
}

namespace {

std::string format_by_element(const Poset& p, const std::function<std::vector<unsigned>(unsigned)>& entries,
                              const std::string& row_sep) {
  TableauRows rows;
  for (const auto& r : row_elements(p)) {
    rows.emplace_back();
    for (unsigned e : r) rows.back().push_back(entries(e));
  }
  return format_tableau(rows, row_sep);
}

}  // namespace

std::string format_linext(const Poset& p, const LinearExtension& t, const std::string& row_sep) {
  return format_by_element(p, [&](unsigned e) { return std::vector<unsigned>{t.value[e]}; }, row_sep);
}

std::string format_bsv(const Poset& p, const BsvLinearExtension& s, const std::string& row_sep) {
  return format_by_element(p, [&](unsigned e) { return s.entries(e); }, row_sep);
}

std::string format_rpp(const Poset& p, const Rpp& pi, const std::string& row_sep) {
  return format_by_element(p, [&](unsigned e) { return std::vector<unsigned>{pi[e]}; }, row_sep);
}

}  // namespace qtab
