#include "qtab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <json.hpp>
#include <map>
#include <sstream>
#include <thread>

#include "qtab/distributions.hpp"
#include "qtab/errors.hpp"
#include "qtab/paths.hpp"
#include "qtab/polytext.hpp"
#include "qtab/qnumbers.hpp"
#include "qtab/toggle_bijection.hpp"
#include "qtab/toggle_solver.hpp"

namespace qtab {

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::vector<Poset> standard_corpus(unsigned max_boxes) {
  std::vector<Poset> out;
  for (unsigned n = 1; n <= max_boxes; ++n)
    for (const auto& lambda : partitions_of(n)) out.push_back(build_shape(lambda));
  out.push_back(build_shifted({2, 1}));
  out.push_back(build_shifted({3, 2, 1}));
  out.push_back(build_propeller(2));
  out.push_back(build_propeller(3));
  return out;
}

namespace {

CheckResult equal_poly(const QPoly& lhs, const QPoly& rhs) {
  CheckResult r;
  r.pass = lhs == rhs;
  if (!r.pass) {
    r.lhs = coeff_vector(lhs);
    r.rhs = coeff_vector(rhs);
  }
  return r;
}

CheckResult equal_qt(const QTPoly& lhs, const QTPoly& rhs) {
  CheckResult r;
  r.pass = lhs == rhs;
  if (!r.pass) {
    r.lhs = to_string(lhs);
    r.rhs = to_string(rhs);
  }
  return r;
}

CheckResult equal_rat(const RatFunc& lhs, const RatFunc& rhs) {
  CheckResult r;
  r.pass = lhs == rhs;
  if (!r.pass) {
    r.lhs = to_string(lhs);
    r.rhs = to_string(rhs);
  }
  return r;
}

CheckResult verdict(bool pass, std::string detail = {}) {
  CheckResult r;
  r.pass = pass;
  if (!pass) r.detail = std::move(detail);
  return r;
}

unsigned opt(const std::optional<unsigned>& v, unsigned fallback) { return v ? *v : fallback; }

QPoly q_sum_of_ranks(const Poset& p) {
  QPoly s;
  for (unsigned r : p.rank_data().rk) s.add_monomial(1, r);
  return s;
}

// ---------------------------------------------------------------- goldens

std::vector<Check> goldens_suite(const VerifyOptions&) {
  std::vector<Check> c;
  c.push_back({"goldens/comaj/rect:2x2", "gf_comaj(2x2)", [] {
                 return equal_poly(gf_comaj(build_rectangle(2, 2)), QPoly{1, 0, 1});
               }});
  c.push_back({"goldens/bsv-comaj/rect:2x2", "gf_bsv(2x2) at t=1", [] {
                 return equal_poly(gf_bsv(build_rectangle(2, 2)).at_t_one(), QPoly{1, 2, 2, 2, 2, 1});
               }});
  c.push_back({"goldens/rpp/rect:2x2", "RPP_1(2x2) size gf", [] {
                 return equal_poly(gf_rpp(build_rectangle(2, 2), 1), QPoly{1, 1, 2, 1, 1});
               }});
  c.push_back({"goldens/bsv-rpp/rect:2x2", "BSV RPP_1(2x2) gf at t=1", [] {
                 return equal_poly(gf_bsv_rpp(build_rectangle(2, 2), 1).at_t_one(), QPoly{1, 2, 2, 1});
               }});
  c.push_back({"goldens/comaj/shifted:3,2,1", "gf_comaj(staircase 3)", [] {
                 return equal_poly(gf_comaj(build_shifted({3, 2, 1})), QPoly{1, 0, 0, 1});
               }});
  c.push_back({"goldens/bsv-comaj/shifted:3,2,1", "gf_bsv(staircase 3) at t=1", [] {
                 return equal_poly(gf_bsv(build_shifted({3, 2, 1})).at_t_one(),
                                   QPoly{1, 1, 2, 2, 2, 2, 2, 1, 1});
               }});
  return c;
}

// ---------------------------------------------------------------- thm-syt

std::vector<Check> thm_syt_suite(const VerifyOptions& o) {
  std::vector<Check> c;
  const unsigned max_ab = o.max_a && o.max_b ? *o.max_a * *o.max_b : 16;
  const unsigned max_a = opt(o.max_a, 16), max_b = opt(o.max_b, 16);
  for (unsigned a = 1; a <= max_a; ++a) {
    for (unsigned b = a; b <= max_b && a * b <= max_ab; ++b) {
      c.push_back({"thm-syt/rect:" + std::to_string(a) + "x" + std::to_string(b),
                   "BSV linear extensions of a rectangle", [a, b] {
                     Poset p = build_rectangle(a, b);
                     QPoly lhs = gf_bsv(p).at_t_one() * qnum(a + b);
                     QPoly rhs = qnum(a) * qnum(b) * qnum(a * b + 1) * gf_comaj(p);
                     return equal_poly(lhs, rhs);
                   }});
    }
  }
  const unsigned ra = std::min(opt(o.max_a, 3), 3U), rb = std::min(opt(o.max_b, 3), 3U);
  for (unsigned a = 1; a <= ra; ++a) {
    for (unsigned b = 1; b <= rb; ++b) {
      c.push_back({"thm-syt/refined/rect:" + std::to_string(a) + "x" + std::to_string(b),
                   "row-refined BSV linear extensions", [a, b] {
                     Poset p = build_rectangle(a, b);
                     QTPoly lhs = gf_bsv(p, Refinement::row) * QTPoly(qnum(a + b));
                     QTPoly rhs = qt_num(a) * QTPoly(qnum(b) * qnum(a * b + 1) * gf_comaj(p));
                     return equal_qt(lhs, rhs);
                   }});
    }
  }
  return c;
}

// ---------------------------------------------------------------- thm-pp

std::vector<Check> thm_pp_suite(const VerifyOptions& o) {
  std::vector<Check> c;
  const unsigned ma = opt(o.max_a, 3), mb = opt(o.max_b, 3), mm = opt(o.max_m, 4);
  for (unsigned a = 1; a <= ma; ++a)
    for (unsigned b = 1; b <= mb; ++b)
      for (unsigned m = 1; m <= mm; ++m) {
        std::string tag = "rect:" + std::to_string(a) + "x" + std::to_string(b) + "/m=" + std::to_string(m);
        c.push_back({"thm-pp/" + tag, "BSV reverse plane partitions of a rectangle", [a, b, m] {
                       Poset p = build_rectangle(a, b);
                       QPoly lhs = gf_bsv_rpp(p, m).at_t_one() * qnum(a + b);
                       QPoly rhs = qnum(a) * qnum(b) * qnum(m) * macmahon_gf(a, b, m);
                       CheckResult r = equal_poly(lhs, rhs);
                       if (r.pass && gf_rpp(p, m) != macmahon_gf(a, b, m)) r = verdict(false, "MacMahon product");
                       return r;
                     }});
      }
  const unsigned ra = std::min(ma, 2U), rb = std::min(mb, 2U), rm = std::min(mm, 3U);
  for (unsigned a = 1; a <= ra; ++a)
    for (unsigned b = 1; b <= rb; ++b)
      for (unsigned m = 1; m <= rm; ++m) {
        std::string tag = "rect:" + std::to_string(a) + "x" + std::to_string(b) + "/m=" + std::to_string(m);
        c.push_back({"thm-pp/refined/" + tag, "row-refined BSV reverse plane partitions", [a, b, m] {
                       Poset p = build_rectangle(a, b);
                       QTPoly lhs = gf_bsv_rpp(p, m, Refinement::row) * QTPoly(qnum(a + b));
                       QTPoly rhs = qt_num(a) * QTPoly(qnum(b) * qnum(m) * macmahon_gf(a, b, m));
                       return equal_qt(lhs, rhs);
                     }});
      }
  return c;
}

// ---------------------------------------------------------------- toggle-symmetry

CheckResult symmetric(const WeightedEnsemble& e, const Poset& p, const QPoly& expected_normalizer) {
  if (!e.is_consistent()) return verdict(false, "weights do not sum to the normalizer");
  if (e.normalizer != expected_normalizer) return equal_poly(e.normalizer, expected_normalizer);
  ToggleSymmetryReport rep = check_toggle_symmetry(e, p);
  for (std::size_t x = 0; x < rep.expectation.size(); ++x)
    if (!rep.expectation[x].is_zero())
      return verdict(false, "E(T_" + std::to_string(x) + ") = " + to_string(rep.expectation[x]));
  return verdict(true);
}

std::vector<Check> toggle_symmetry_suite(const VerifyOptions& o) {
  std::vector<Check> c;
  const unsigned mm = opt(o.max_m, 3);
  for (const Poset& p : standard_corpus(opt(o.max_boxes, 7))) {
    const std::string name = p.origin().name;
    c.push_back({"toggle-symmetry/" + name + "/uni", "uniform-type distribution", [p] {
                   return symmetric(ensemble_uniform(p), p, gf_rpp(p, 1));
                 }});
    for (unsigned m = 1; m <= mm; ++m) {
      for (RppMode mode : {RppMode::direct, RppMode::via_theta_m}) {
        std::string tag = std::string(mode == RppMode::direct ? "direct" : "theta") + "/m=" + std::to_string(m);
        c.push_back({"toggle-symmetry/" + name + "/rpp/" + tag, "bounded RPP distribution", [p, m, mode] {
                       return symmetric(ensemble_rpp(p, m, mode), p, qnum(m) * gf_rpp(p, m));
                     }});
      }
    }
    c.push_back({"toggle-symmetry/" + name + "/lin", "linear-extension distribution", [p] {
                   return symmetric(ensemble_lin(p), p, qnum(static_cast<unsigned>(p.size()) + 1) * gf_comaj(p));
                 }});
    if (p.is_graded()) {
      c.push_back({"toggle-symmetry/" + name + "/rk", "rank distribution", [p] {
                     return symmetric(ensemble_rank(p), p, qnum(p.rank_data().rank_of_poset + 2));
                   }});
    }
  }
  return c;
}

// ---------------------------------------------------------------- m-weight

std::vector<Check> m_weight_suite(const VerifyOptions& o) {
  std::vector<Check> c;
  const unsigned mm = opt(o.max_m, 3);
  for (const Poset& p : standard_corpus(opt(o.max_boxes, 7))) {
    for (unsigned m = 1; m <= mm; ++m) {
      c.push_back({"m-weight/ensembles/" + p.origin().name + "/m=" + std::to_string(m),
                   "RPP weights through theta_m", [p, m] {
                     WeightedEnsemble d = ensemble_rpp(p, m, RppMode::direct);
                     WeightedEnsemble t = ensemble_rpp(p, m, RppMode::via_theta_m);
                     return verdict(d.weights == t.weights && d.normalizer == t.normalizer,
                                    "weight maps differ");
                   }});
    }
  }
  // Per (T, i): the RPPs compatible with w_T, cut at a level whose ideal is the
  // prefix of length i, sum to theta_m(T, i).
  const unsigned max_n = std::min(opt(o.max_boxes, 6), 6U), fm = opt(o.max_m, 4) + (o.max_m ? 0 : 0);
  std::vector<Poset> small;
  for (unsigned n = 1; n <= max_n; ++n) {
    for (const auto& l : partitions_of(n)) small.push_back(build_shape(l));
    for (const auto& l : strict_partitions_of(n))
      if (l.size() > 1) small.push_back(build_shifted(l));
  }
  small.push_back(build_propeller(2));
  small.push_back(build_propeller(3));
  for (const Poset& p : small) {
    c.push_back({"m-weight/factorization/" + p.origin().name, "theta_m = qbinom * theta", [p, fm] {
                   for (unsigned m = 1; m <= std::max(fm, 4U); ++m) {
                     std::map<std::pair<std::vector<unsigned>, unsigned>, QPoly> brute;
                     for_each_rpp(p, m, [&](const Rpp& pi) {
                       LinearExtension t = w_decompose(pi);
                       for (unsigned k = 0; k < m; ++k)
                         brute[{t.word, popcount(ideal_at_level(pi, k))}].add_monomial(1, rpp_size(pi) + k);
                     });
                     bool ok = true;
                     std::string where;
                     for_each_linear_extension(p, [&](const LinearExtension& t) {
                       for (unsigned i = 0; i <= t.size() && ok; ++i) {
                         QPoly want = theta_m(t, i, m);
                         auto it = brute.find({t.word, i});
                         QPoly got = it == brute.end() ? QPoly() : it->second;
                         if (got != want) {
                           ok = false;
                           where = "m=" + std::to_string(m) + " i=" + std::to_string(i);
                         }
                       }
                     });
                     if (!ok) return verdict(false, where);
                   }
                   return verdict(true);
                 }});
  }
  return c;
}

// ---------------------------------------------------------------- solver

CheckResult expect_constant(const Poset& p, const Statistic& f, const RatFunc& expected) {
  ToggleSolution s = solve(build_system(p, f));
  if (!s.consistent) return verdict(false, "system is inconsistent");
  CheckResult r = equal_rat(s.c, expected);
  if (r.pass && p.is_graded() && predict_constant(p, f) != expected)
    return verdict(false, "rank-distribution prediction differs");
  return r;
}

std::vector<Check> solver_suite(const VerifyOptions& o) {
  std::vector<Check> c;
  const unsigned ma = opt(o.max_a, 3), mb = opt(o.max_b, 3);
  for (unsigned a = 1; a <= ma; ++a)
    for (unsigned b = 1; b <= mb; ++b) {
      std::string name = "rect:" + std::to_string(a) + "x" + std::to_string(b);
      c.push_back({"solver/" + name + "/ddeg", "down-degree constant of a rectangle", [a, b] {
                     Poset p = build_rectangle(a, b);
                     return expect_constant(p, stat_ddeg(p), RatFunc(qnum(a) * qnum(b), qnum(a + b)));
                   }});
      c.push_back({"solver/" + name + "/rows", "row-refined constants", [a, b] {
                     for (const auto& rc : verify_refinements(build_rectangle(a, b)))
                       if (!rc.ok()) return verdict(false, rc.statistic);
                     return verdict(true);
                   }});
    }
  for (unsigned k = 1; k <= 3; ++k) {
    c.push_back({"solver/staircase:" + std::to_string(k) + "/ddeg", "down-degree constant of a staircase", [k] {
                   Poset p = build_minuscule("staircase:" + std::to_string(k));
                   return expect_constant(p, stat_ddeg(p), RatFunc(qbinom(k + 1, 2), qnum(2 * k)));
                 }});
    c.push_back({"solver/staircase:" + std::to_string(k) + "/diag", "diagonal-refined constant", [k] {
                   for (const auto& rc : verify_refinements(build_minuscule("staircase:" + std::to_string(k))))
                     if (!rc.ok()) return verdict(false, rc.statistic);
                   return verdict(true);
                 }});
  }
  for (std::string fam : {"propeller:2", "propeller:3", "E6"}) {
    c.push_back({"solver/minuscule:" + fam + "/ddeg", "minuscule down-degree constant", [fam] {
                   Poset p = build_minuscule(fam);
                   RatFunc expected(q_sum_of_ranks(p), qnum(p.rank_data().rank_of_poset + 2));
                   return expect_constant(p, stat_ddeg(p), expected);
                 }});
  }
  const unsigned max_boxes = opt(o.max_boxes, 9);
  for (unsigned n = 1; n <= max_boxes; ++n) {
    c.push_back({"solver/non-rectangles/n=" + std::to_string(n), "no constant beyond rectangles", [n] {
                   for (const auto& l : partitions_of(n)) {
                     Poset p = build_shape(l);
                     bool rect = rectangle_dims(p).has_value();
                     ToggleSolution s = solve(build_system(p, stat_ddeg(p)));
                     if (s.consistent == rect) continue;
                     return verdict(false, p.origin().name + (rect ? " inconsistent" : " consistent"));
                   }
                   return verdict(true);
                 }});
  }
  c.push_back({"solver/shape:2,1/q=1", "q=1 specialization of shape (2,1)", [] {
                 Poset p = build_shape({2, 1});
                 ToggleSystem sys = build_system(p, stat_ddeg(p));
                 ToggleSolution generic = solve(sys), at_one = solve(specialize_q_one(sys));
                 if (generic.consistent) return verdict(false, "consistent at generic q");
                 if (!at_one.consistent) return verdict(false, "inconsistent at q=1");
                 return equal_rat(at_one.c, RatFunc(1));
               }});
  return c;
}

// ---------------------------------------------------------------- paths

std::vector<Check> paths_suite(const VerifyOptions& o) {
  std::vector<Check> c;
  const unsigned max_l = opt(o.max_l, 10);
  for (unsigned l = 2; l <= max_l; ++l) {
    c.push_back({"paths/rbmotz-count/l=" + std::to_string(l), "#RBMotz(l) = Cat(l-1)", [l] {
                   Integer got = count_rbmotz(l), want = catalan(l - 1);
                   return verdict(got == want, got.get_str() + " != " + want.get_str());
                 }});
  }
  const unsigned max_b = opt(o.max_b, 5);
  for (unsigned b = 1; b <= max_b; ++b) {
    c.push_back({"paths/one-horizontal/b=" + std::to_string(b), "RBMotz(2b+1;1) generating function", [b] {
                   CheckResult r = equal_qt(gf_rbmotz_one_horizontal(b), dyck_gen_fun_formula(b));
                   if (r.pass && b <= 4 && gf_bsv(build_rectangle(2, b), Refinement::row) != gf_rbmotz_one_horizontal(b))
                     return verdict(false, "differs from the row-refined tableau side");
                   return r;
                 }});
  }
  const unsigned sum_l = std::min(max_l, 8U);
  for (unsigned l = 2; l <= sum_l; ++l) {
    c.push_back({"paths/set-valued-catalan/l=" + std::to_string(l), "sum of #SYT^{+k}(2 x b) = Cat(l-1)", [l] {
                   Integer total = 0;
                   for (unsigned b = 1; 2 * b <= l; ++b) {
                     Integer count = 0;
                     for_each_set_valued_2row(b, l - 2 * b, [&](const TwoRowTableau&) { ++count; });
                     if (count != count_rbmotz(l, l - 2 * b))
                       return verdict(false, "bijection count mismatch at b=" + std::to_string(b));
                     total += count;
                   }
                   return verdict(total == catalan(l - 1), total.get_str());
                 }});
    c.push_back({"paths/narayana/l=" + std::to_string(l), "top-row entries give Narayana numbers", [l] {
                   std::vector<Integer> dist = top_entry_distribution(l);
                   for (unsigned j = 0; j <= l; ++j)
                     if (dist[j] != narayana(l - 1, j))
                       return verdict(false, "j=" + std::to_string(j) + ": " + dist[j].get_str());
                   return verdict(true);
                 }});
  }
  return c;
}

// ---------------------------------------------------------------- appendix

CheckResult appendix_check(const Poset& p) {
  const unsigned n = static_cast<unsigned>(p.size());
  std::vector<QPoly> out_side(n), in_side(n);
  std::string failure;
  std::size_t pairs = 0;
  for_each_linear_extension(p, [&](const LinearExtension& t) {
    for (unsigned y = 0; y <= n; ++y) {
      const Mask ideal = t.prefix_ideal(y);
      for (unsigned x = 0; x < n; ++x) {
        if (tin(p, x, ideal)) in_side[x].add_monomial(1, theta_exponent(t, y));
        if (!tout(p, x, ideal)) continue;
        out_side[x].add_monomial(1, theta_exponent(t, y) + 1);
        ++pairs;
        if (!failure.empty()) continue;
        try {
          PositionedExtension r = toggle_bijection(p, x, t, y);
          Mask d = descent_mask(t) & ~bit(y), dr = descent_mask(r.t) & ~bit(r.y);
          if (!tin(p, x, r.t.prefix_ideal(r.y)))
            failure = "target not togglable in";
          else if (theta_exponent(t, y) + 1 != theta_exponent(r.t, r.y))
            failure = "weight not multiplied by q";
          else if (popcount(d) != popcount(dr))
            failure = "descent count changed";
          else if (!(inverse_toggle_bijection(p, x, r.t, r.y) == PositionedExtension{t, y}))
            failure = "inverse does not round-trip";
          if (!failure.empty()) failure += " (p=" + std::to_string(x) + ", y=" + std::to_string(y) + ")";
        } catch (const Error& e) {
          failure = e.what();
        }
      }
    }
  });
  if (!failure.empty()) return verdict(false, failure);
  WeightedEnsemble lin = ensemble_lin(p);
  for (unsigned x = 0; x < n; ++x) {
    if (out_side[x] != in_side[x]) return verdict(false, "summed identity fails at p=" + std::to_string(x));
    if (!expectation(lin, stat_tq(p, x)).is_zero())
      return verdict(false, "distribution expectation nonzero at p=" + std::to_string(x));
  }
  CheckResult r = verdict(true);
  r.detail = std::to_string(pairs) + " pairs";
  return r;
}

std::vector<Check> appendix_suite(const VerifyOptions& o) {
  std::vector<Check> c;
  std::vector<Poset> corpus;
  for (unsigned n = 1; n <= opt(o.max_boxes, 7); ++n)
    for (const auto& l : partitions_of(n)) corpus.push_back(build_shape(l));
  corpus.push_back(build_shifted({3, 2, 1}));
  for (const Poset& p : corpus)
    c.push_back({"appendix/" + p.origin().name, "explicit toggle bijection", [p] { return appendix_check(p); }});
  return c;
}

// ---------------------------------------------------------------- hooks

CheckResult hook_check(const Poset& p, const std::vector<unsigned>& hooks) {
  const unsigned n = static_cast<unsigned>(p.size());
  Integer prod = 1;
  QPoly qprod = 1;
  for (unsigned h : hooks) {
    prod *= h;
    qprod *= qnum(h);
  }
  Integer brute = static_cast<unsigned long>(linear_extensions(p).size());
  if (factorial(n) / prod != brute || factorial(n) % prod != 0)
    return verdict(false, "count " + brute.get_str());
  return equal_poly(gf_comaj(p) * qprod, qfact(n));
}

std::vector<Check> hooks_suite(const VerifyOptions& o) {
  std::vector<Check> c;
  const unsigned max_boxes = opt(o.max_boxes, 8);
  for (unsigned n = 1; n <= max_boxes; ++n) {
    c.push_back({"hooks/shapes/n=" + std::to_string(n), "hook length formula and its q-analog", [n] {
                   for (const auto& l : partitions_of(n)) {
                     CheckResult r = hook_check(build_shape(l), hook_lengths(l));
                     if (!r.pass) {
                       r.detail = "shape " + partition_to_string(l) + " " + r.detail;
                       return r;
                     }
                   }
                   return verdict(true);
                 }});
    c.push_back({"hooks/shifted/n=" + std::to_string(n), "shifted hook length formula and its q-analog", [n] {
                   for (const auto& l : strict_partitions_of(n)) {
                     CheckResult r = hook_check(build_shifted(l), shifted_hook_lengths(l));
                     if (!r.pass) {
                       r.detail = "shifted " + partition_to_string(l) + " " + r.detail;
                       return r;
                     }
                   }
                   return verdict(true);
                 }});
  }
  return c;
}

// ---------------------------------------------------------------- shifted

std::vector<Check> shifted_suite(const VerifyOptions& o) {
  std::vector<Check> c;
  const unsigned mm = opt(o.max_m, 3);
  for (unsigned k = 1; k <= 3; ++k) {
    const std::string name = "staircase:" + std::to_string(k);
    c.push_back({"shifted/" + name + "/bsv-comaj", "BSV linear extensions of a staircase", [k, name] {
                   Poset p = build_minuscule(name);
                   const unsigned n = k * (k + 1) / 2;
                   return equal_poly(gf_bsv(p).at_t_one() * qnum(2 * k),
                                     qbinom(k + 1, 2) * qnum(n + 1) * gf_comaj(p));
                 }});
    c.push_back({"shifted/" + name + "/diagonal", "diagonal-refined BSV linear extensions", [k, name] {
                   Poset p = build_minuscule(name);
                   const unsigned n = k * (k + 1) / 2;
                   QTPoly factor = QTPoly(QPoly::q_power(1) * qbinom(k, 2)) +
                                   QTPoly::t_power(1) * QTPoly(qnum(k).substitute_power(2));
                   return equal_qt(gf_bsv(p, Refinement::diagonal) * QTPoly(qnum(2 * k)),
                                   factor * QTPoly(qnum(n + 1) * gf_comaj(p)));
                 }});
    for (unsigned m = 1; m <= mm; ++m) {
      c.push_back({"shifted/" + name + "/bsv-rpp/m=" + std::to_string(m), "BSV RPPs of a staircase", [k, m, name] {
                     Poset p = build_minuscule(name);
                     if (gf_rpp(p, m) != bender_knuth_gf(k, m)) return verdict(false, "Bender-Knuth product");
                     return equal_poly(gf_bsv_rpp(p, m).at_t_one() * qnum(2 * k),
                                       qbinom(k + 1, 2) * qnum(m) * bender_knuth_gf(k, m));
                   }});
    }
  }
  const unsigned cap = std::min(o.degree_cap, 15U);
  for (unsigned n = 1; n <= std::min(opt(o.max_boxes, 6), 6U); ++n) {
    c.push_back({"shifted/gansner/n=" + std::to_string(n), "unbounded RPP series of shifted shapes", [n, cap] {
                   for (const auto& l : strict_partitions_of(n)) {
                     Poset p = build_shifted(l);
                     if (rpp_series(p, cap) != gansner_series(l, cap))
                       return verdict(false, "shifted " + partition_to_string(l));
                     QPoly via_comaj = (gf_comaj(p) * series_inverse(one_minus_q_powers(n), cap)).truncated(cap);
                     if (via_comaj != rpp_series(p, cap))
                       return verdict(false, "comaj series, shifted " + partition_to_string(l));
                   }
                   return verdict(true);
                 }});
  }
  return c;
}

// ---------------------------------------------------------------- minuscule

std::vector<Check> minuscule_suite(const VerifyOptions& o) {
  std::vector<Check> c;
  struct Guard {
    const char* family;
    std::size_t elements, ideals;
    unsigned rank;
  };
  for (Guard g : {Guard{"E6", 16, 27, 10}, Guard{"E7", 27, 56, 16}}) {
    c.push_back({std::string("minuscule/") + g.family + "/structure", "exceptional minuscule poset", [g] {
                   Poset p = build_minuscule(g.family);
                   if (p.size() != g.elements) return verdict(false, "element count");
                   if (!p.is_graded() || p.rank_data().rank_of_poset != g.rank) return verdict(false, "rank");
                   if (p.order_ideals().size() != g.ideals) return verdict(false, "ideal count");
                   if (!q_sum_of_ranks(p).is_palindromic()) return verdict(false, "rank gf not symmetric");
                   if (!is_self_dual(p)) return verdict(false, "not self-dual");
                   return verdict(true);
                 }});
  }
  const unsigned mm = opt(o.max_m, 3);
  for (std::string fam : {"propeller:2", "propeller:3", "E6"}) {
    c.push_back({"minuscule/" + fam + "/bsv-comaj", "BSV linear extensions of a minuscule poset", [fam] {
                   Poset p = build_minuscule(fam);
                   const unsigned n = static_cast<unsigned>(p.size());
                   return equal_poly(gf_bsv(p).at_t_one() * qnum(p.rank_data().rank_of_poset + 2),
                                     q_sum_of_ranks(p) * qnum(n + 1) * gf_comaj(p));
                 }});
    for (unsigned m = 1; m <= mm; ++m) {
      if (fam == "E6" && m > 2) continue;
      c.push_back({"minuscule/" + fam + "/bsv-rpp/m=" + std::to_string(m), "BSV RPPs of a minuscule poset", [fam, m] {
                     Poset p = build_minuscule(fam);
                     if (gf_rpp(p, m) != minuscule_gf(p, m)) return verdict(false, "RPP product formula");
                     return equal_poly(gf_bsv_rpp(p, m).at_t_one() * qnum(p.rank_data().rank_of_poset + 2),
                                       q_sum_of_ranks(p) * qnum(m) * minuscule_gf(p, m));
                   }});
    }
  }
  for (unsigned a = 1; a <= 3; ++a)
    for (unsigned b = 1; b <= 3; ++b)
      c.push_back({"minuscule/rect:" + std::to_string(a) + "x" + std::to_string(b) + "/product",
                   "rank product formula agrees with MacMahon", [a, b, mm] {
                     Poset p = build_rectangle(a, b);
                     for (unsigned m = 0; m <= mm; ++m)
                       if (minuscule_gf(p, m) != macmahon_gf(a, b, m)) return verdict(false, "m=" + std::to_string(m));
                     return verdict(true);
                   }});
  return c;
}

using SuiteBuilder = std::vector<Check> (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteBuilder>>& registry() {
  static const std::vector<std::pair<std::string, SuiteBuilder>> r = {
      {"goldens", goldens_suite},       {"thm-syt", thm_syt_suite},
      {"thm-pp", thm_pp_suite},         {"toggle-symmetry", toggle_symmetry_suite},
      {"m-weight", m_weight_suite},     {"shifted", shifted_suite},
      {"minuscule", minuscule_suite},   {"solver", solver_suite},
      {"paths", paths_suite},           {"appendix", appendix_suite},
      {"hooks", hooks_suite},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

std::vector<Check> build_suite(const std::string& suite, const VerifyOptions& options) {
  for (const auto& [name, fn] : registry()) {
    if (name != suite) continue;
    std::vector<Check> checks = fn(options);
    if (!options.filter.empty())
      checks.erase(std::remove_if(checks.begin(), checks.end(),
                                  [&](const Check& c) { return c.id.find(options.filter) == std::string::npos; }),
                   checks.end());
    return checks;
  }
  throw UnknownFamily("unknown suite '" + suite + "'");
}

VerificationReport run_suite(const std::string& suite, const VerifyOptions& options) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  std::vector<Check> checks = build_suite(suite, options);
  VerificationReport report;
  report.suite = suite;
  report.checks.resize(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < checks.size();) {
      const auto t0 = clock::now();
      CheckResult r;
      try {
        r = checks[i].run();
      } catch (const std::exception& e) {
        r = CheckResult{};
        r.detail = std::string("exception: ") + e.what();
      }
      r.id = checks[i].id;
      r.anchor = checks[i].anchor;
      r.seconds = std::chrono::duration<double>(clock::now() - t0).count();
      report.checks[i] = std::move(r);
    }
  };
  const unsigned jobs = std::max(1U, options.jobs);
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  report.seconds = std::chrono::duration<double>(clock::now() - start).count();
  return report;
}

std::string report_to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json j;
  j["report_version"] = 1;
  j["suites"] = nlohmann::json::array();
  bool all = true;
  for (const auto& rep : reports) {
    nlohmann::json s;
    s["suite"] = rep.suite;
    s["passed"] = rep.passed();
    s["seconds"] = rep.seconds;
    s["checks"] = nlohmann::json::array();
    for (const auto& c : rep.checks) {
      nlohmann::json cj{{"id", c.id}, {"anchor", c.anchor}, {"status", c.pass ? "pass" : "fail"}, {"seconds", c.seconds}};
      if (!c.lhs.empty()) cj["lhs"] = c.lhs;
      if (!c.rhs.empty()) cj["rhs"] = c.rhs;
      if (!c.detail.empty()) cj["detail"] = c.detail;
      s["checks"].push_back(cj);
    }
    all = all && rep.passed();
    j["suites"].push_back(s);
  }
  j["passed"] = all;
  return j.dump(2);
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& c : report.checks) {
    if (c.pass) ++passed;
    out << (c.pass ? "PASS " : "FAIL ") << c.id;
    if (!c.pass) {
      if (!c.detail.empty()) out << "  " << c.detail;
      if (!c.lhs.empty()) out << "  lhs=" << c.lhs << " rhs=" << c.rhs;
    }
    out << "\n";
  }
  out << report.suite << ": " << passed << "/" << report.checks.size() << " checks passed in "
      << report.seconds << " s\n";
  return out.str();
}

}  // namespace qtab
