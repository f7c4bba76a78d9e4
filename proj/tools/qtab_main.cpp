#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <json.hpp>

#include "qtab/errors.hpp"
#include "qtab/polytext.hpp"
#include "qtab/poset_io.hpp"
#include "qtab/tableau_text.hpp"
#include "qtab/toggle_bijection.hpp"
#include "qtab/toggle_solver.hpp"
#include "qtab/verify.hpp"

using namespace qtab;

namespace {

constexpr int kFail = 1, kBadSpec = 2, kUnsupported = 3;

unsigned default_degree_cap() {
  if (const char* env = std::getenv("QTAB_DEGREE_CAP")) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      std::cerr << "ignoring QTAB_DEGREE_CAP=" << env << "\n";
    }
  }
  return 20;
}

Refinement parse_refinement(const std::string& s) {
  if (s.empty() || s == "none") return Refinement::none;
  if (s == "row") return Refinement::row;
  if (s == "diag" || s == "diagonal") return Refinement::diagonal;
  throw UnsupportedRefinement("unknown refinement '" + s + "'");
}

Statistic parse_statistic(const Poset& p, const std::string& s) {
  if (s == "ddeg") return stat_ddeg(p);
  if (s == "diag") return stat_diagonal_ddeg(p);
  if (s.rfind("row:", 0) == 0) return stat_row_ddeg(p, static_cast<unsigned>(std::stoul(s.substr(4))));
  throw ParseError("unknown statistic '" + s + "'");
}

// "5" is an element index, "2,3" a (row, column) cell.
std::size_t parse_element(const Poset& p, const std::string& s) {
  std::size_t e;
  if (auto comma = s.find(','); comma != std::string::npos) {
    Cell c{static_cast<unsigned>(std::stoul(s.substr(0, comma))),
           static_cast<unsigned>(std::stoul(s.substr(comma + 1)))};
    e = p.element_at(c);
  } else {
    e = std::stoul(s);
  }
  if (e >= p.size()) throw ParseError("no element '" + s + "'");
  return e;
}

void print_poly(const QPoly& f, bool json) {
  if (json)
    std::cout << nlohmann::json{{"poly", to_string(f)}, {"coeffs", coeff_vector(f)}}.dump() << "\n";
  else
    std::cout << to_string(f) << "\n" << coeff_vector(f) << "\n";
}

void print_qt(const QTPoly& f, bool json) {
  if (json)
    std::cout << nlohmann::json{{"poly", to_string(f)}, {"at_t_one", coeff_vector(f.at_t_one())}}.dump() << "\n";
  else
    std::cout << to_string(f) << "\n" << coeff_vector(f.at_t_one()) << "\n";
}

std::string describe(const IntervalDecomposition& d) {
  std::string s = "[" + std::to_string(d.x) + "," + std::to_string(d.y) + "] =";
  for (const Block& b : d.blocks)
    s += std::string(" ") + (b.up ? "U" : "D") + "[" + std::to_string(b.lo) + "," + std::to_string(b.hi) + "]";
  s += "  d0=" + std::to_string(d.d0) + " f=" + std::to_string(d.f) + " e=" + std::to_string(d.e) +
       " g=" + std::to_string(d.g) + " h=" + std::to_string(d.h);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-enumeration of tableaux, P-partitions and toggle statistics"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  std::string spec, kind, refined, stat;
  unsigned m = 1;
  auto* gf = app.add_subcommand("gf", "Generating function of a poset");
  gf->add_option("poset", spec, "Poset spec")->required();
  gf->add_option("kind", kind, "comaj | bsv-comaj | rpp | bsv-rpp")->required();
  gf->add_option("--m", m, "Largest part for P-partitions");
  gf->add_option("--refined", refined, "none | row | diag");

  std::string suite;
  VerifyOptions vo;
  vo.degree_cap = default_degree_cap();
  auto* verify = app.add_subcommand("verify", "Run an identity suite");
  verify->add_option("suite", suite, "Suite name or 'all'")->required();
  verify->add_option("--max-boxes", vo.max_boxes);
  verify->add_option("--max-a", vo.max_a);
  verify->add_option("--max-b", vo.max_b);
  verify->add_option("--max-m", vo.max_m);
  verify->add_option("--max-l", vo.max_l);
  verify->add_option("--degree-cap", vo.degree_cap);
  verify->add_option("--jobs", vo.jobs);
  verify->add_option("--filter", vo.filter, "Only checks whose id contains this");

  bool expect_consistent = false;
  auto* solve_cmd = app.add_subcommand("solve", "Solve the toggle system for a statistic");
  solve_cmd->add_option("poset", spec)->required();
  solve_cmd->add_option("statistic", stat, "ddeg | row:i | diag")->required();
  solve_cmd->add_flag("--expect-consistent", expect_consistent);

  std::string filling, element;
  unsigned y = 0;
  auto* bij = app.add_subcommand("bijection", "Explicit toggle bijection");
  bij->require_subcommand(1);
  auto* trace = bij->add_subcommand("trace", "Show each step of the bijection on one input");
  trace->add_option("poset", spec)->required();
  trace->add_option("tableau", filling, "Rows split by '/', entries by ','")->required();
  trace->add_option("--p", element, "Element index or 'row,col'")->required();
  trace->add_option("--y", y, "Cut position")->required();

  CLI11_PARSE(app, argc, argv);

  Poset p;
  if (!verify->parsed()) {
    try {
      p = parse_poset_spec(spec);
    } catch (const Error& e) {
      std::cerr << "bad poset spec: " << e.what() << "\n";
      return kBadSpec;
    }
  }

  try {
    if (gf->parsed()) {
      Refinement r = parse_refinement(refined);
      if (kind == "comaj" || kind == "rpp") {
        if (r != Refinement::none) throw UnsupportedRefinement(kind + " has no refinement");
        print_poly(kind == "comaj" ? gf_comaj(p) : gf_rpp(p, m), json);
      } else if (kind == "bsv-comaj" || kind == "bsv-rpp") {
        QTPoly f = kind == "bsv-comaj" ? gf_bsv(p, r) : gf_bsv_rpp(p, m, r);
        if (r == Refinement::none)
          print_poly(f.at_t_one(), json);
        else
          print_qt(f, json);
      } else {
        std::cerr << "unknown kind '" << kind << "'\n";
        return kBadSpec;
      }
      return 0;
    }

    if (verify->parsed()) {
      std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
      std::vector<VerificationReport> reports;
      for (const auto& name : names) {
        reports.push_back(run_suite(name, vo));
        if (!json) std::cout << report_to_text(reports.back());
      }
      if (json) std::cout << report_to_json(reports) << "\n";
      for (const auto& r : reports)
        if (!r.passed()) return kFail;
      return 0;
    }

    if (solve_cmd->parsed()) {
      ToggleSolution s = solve(build_system(p, parse_statistic(p, stat)));
      if (json) {
        nlohmann::json j{{"consistent", s.consistent}};
        j["c"] = s.consistent ? nlohmann::json{{"num", to_string(s.c.num())}, {"den", to_string(s.c.den())}}
                              : nlohmann::json(nullptr);
        j["witness"] = s.witness ? nlohmann::json(*s.witness) : nlohmann::json(nullptr);
        std::cout << j.dump() << "\n";
      } else if (s.consistent) {
        std::cout << "consistent\nc = " << to_string(s.c) << "\n";
      } else {
        std::cout << "inconsistent\n";
        if (s.witness) std::cout << "witness ideal mask " << *s.witness << "\n";
      }
      return expect_consistent && !s.consistent ? kFail : 0;
    }

    if (trace->parsed()) {
      LinearExtension t = linext_from_text(p, filling);
      const unsigned x = static_cast<unsigned>(parse_element(p, element));
      Classification c = classify(p, t, x, y);
      PositionedExtension out = toggle_bijection(p, x, t, y);
      if (json) {
        std::cout << nlohmann::json{{"left", to_string(c.left)},   {"right", to_string(c.right)},
                                    {"intervals", describe(c.intervals)},
                                    {"y_prime", c.y_prime},        {"z", c.z},
                                    {"before", format_linext(p, t)}, {"y", y},
                                    {"after", format_linext(p, out.t)}, {"y_after", out.y}}
                         .dump()
                  << "\n";
      } else {
        std::cout << "case " << to_string(c.left) << " " << to_string(c.right) << "\n"
                  << "intervals " << describe(c.intervals) << "\n"
                  << "y' = " << c.y_prime << ", z = " << c.z << "\n"
                  << "before " << format_linext(p, t) << "  y = " << y << "\n"
                  << "after  " << format_linext(p, out.t) << "  y = " << out.y << "\n";
      }
      return 0;
    }
  } catch (const UnsupportedRefinement& e) {
    std::cerr << e.what() << "\n";
    return kUnsupported;
  } catch (const UnknownFamily& e) {
    std::cerr << e.what() << "\n";
    return kBadSpec;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kBadSpec;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kFail;
  }
  return 0;
}
