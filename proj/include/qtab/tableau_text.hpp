#pragma once

#include <string>
#include <vector>

#include "qtab/linext.hpp"
#include "qtab/ppart.hpp"

namespace qtab {

/// Rows separated by '/' or newlines, entries by commas, a doubled cell as
/// "a|b". Rows list the cells left to right (shifted rows start at their
/// diagonal cell).
using TableauRows = std::vector<std::vector<std::vector<unsigned>>>;

TableauRows parse_tableau(const std::string& text);
std::string format_tableau(const TableauRows& rows, const std::string& row_sep = "/");

/// Cells of the poset grouped by row, each row sorted by column. Throws
/// WrongShape when the poset has no cells.
std::vector<std::vector<unsigned>> row_elements(const Poset& p);

/// Throws WrongShape if the row lengths differ from the poset, ParseError if
/// the filling is not a linear extension.
LinearExtension linext_from_text(const Poset& p, const std::string& text);
BsvLinearExtension bsv_from_text(const Poset& p, const std::string& text);

std::string format_linext(const Poset& p, const LinearExtension& t, const std::string& row_sep = "/");
std::string format_bsv(const Poset& p, const BsvLinearExtension& s, const std::string& row_sep = "/");
std::string format_rpp(const Poset& p, const Rpp& pi, const std::string& row_sep = "/");

}  // namespace qtab
