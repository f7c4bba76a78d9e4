#include "qtab/poset_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "qtab/errors.hpp"

namespace qtab {
namespace {

using nlohmann::json;

Partition parse_parts(const std::string& text) {
  Partition out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad partition '" + text + "'");
    out.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  return out;
}

unsigned parse_count(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("expected a number, got '" + text + "'");
  return static_cast<unsigned>(std::stoul(text));
}

const char* kind_name(OriginKind k) {
  switch (k) {
    case OriginKind::shape: return "shape";
    case OriginKind::shifted: return "shifted";
    case OriginKind::minuscule: return "minuscule";
    case OriginKind::chain: return "chain";
    case OriginKind::none: break;
  }
  return "none";
}

OriginKind kind_from_name(const std::string& s) {
  if (s == "shape") return OriginKind::shape;
  if (s == "shifted") return OriginKind::shifted;
  if (s == "minuscule") return OriginKind::minuscule;
  if (s == "chain") return OriginKind::chain;
  return OriginKind::none;
}

}  // namespace

Poset parse_poset_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    std::string head = spec.substr(0, colon), rest = spec.substr(colon + 1);
    if (head == "rect") {
      auto x = rest.find('x');
      if (x == std::string::npos) throw ParseError("expected rect:AxB, got '" + spec + "'");
      return build_rectangle(parse_count(rest.substr(0, x)), parse_count(rest.substr(x + 1)));
    }
    if (head == "shape") return build_shape(parse_parts(rest));
    if (head == "shifted") return build_shifted(parse_parts(rest));
    if (head == "chain") return build_chain(parse_count(rest));
    if (head == "minuscule") return build_minuscule(rest);
  }
  std::ifstream in(spec);
  if (!in) throw ParseError("unknown poset spec '" + spec + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return poset_from_json(buf.str());
}

std::string poset_to_json(const Poset& p) {
  json j;
  j["n"] = p.size();
  j["covers"] = json::array();
  for (auto [a, b] : p.covers()) j["covers"].push_back({a, b});
  j["labeling"] = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) j["labeling"].push_back(i + 1);
  json o;
  o["kind"] = kind_name(p.origin().kind);
  o["name"] = p.origin().name;
  if (!p.origin().partition.empty()) o["partition"] = p.origin().partition;
  if (p.origin().has_cells()) {
    o["cells"] = json::array();
    for (const Cell& c : p.origin().cells) o["cells"].push_back({c.row, c.col});
  }
  j["origin"] = o;
  return j.dump();
}

Poset poset_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("poset JSON: ") + e.what());
  }
  try {
    const std::size_t n = j.at("n").get<std::size_t>();
    std::vector<std::size_t> label(n);
    for (std::size_t i = 0; i < n; ++i) label[i] = i;
    if (j.contains("labeling")) {
      auto l = j["labeling"].get<std::vector<std::size_t>>();
      if (l.size() != n) throw InvalidPoset("labeling length differs from n");
      std::vector<bool> seen(n, false);
      for (std::size_t i = 0; i < n; ++i) {
        if (l[i] < 1 || l[i] > n || seen[l[i] - 1]) throw InvalidPoset("labeling is not a bijection onto 1..n");
        seen[l[i] - 1] = true;
        label[i] = l[i] - 1;
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (const auto& c : j.at("covers")) {
      auto a = c.at(0).get<std::size_t>(), b = c.at(1).get<std::size_t>();
      if (a >= n || b >= n) throw InvalidPoset("cover index out of range");
      if (label[a] >= label[b]) throw InvalidPoset("labeling is not natural");
      rel.emplace_back(label[a], label[b]);
    }
    Origin o;
    if (j.contains("origin")) {
      const auto& jo = j["origin"];
      o.kind = kind_from_name(jo.value("kind", "none"));
      o.name = jo.value("name", "");
      if (jo.contains("partition")) o.partition = jo["partition"].get<Partition>();
      if (jo.contains("cells")) {
        o.cells.resize(n);
        const auto& cells = jo["cells"];
        if (cells.size() != n) throw InvalidPoset("cell list does not match n");
        for (std::size_t i = 0; i < n; ++i)
          o.cells[label[i]] = {cells[i].at(0).get<unsigned>(), cells[i].at(1).get<unsigned>()};
      }
    }
    if (o.name.empty()) o.name = "file";
    return Poset(n, rel, o);
  } catch (const json::exception& e) {
    throw ParseError(std::string("poset JSON: ") + e.what());
  }
}

}  // namespace qtab
