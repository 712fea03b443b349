// End-to-end acceptance run: twelve worked checks against hand-computed
// regions, point memberships, and the randomized suites, each printed as one
// PASS/FAIL line with its runtime.  Exits with the number of failures.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "tropdual/tropdual.hpp"

namespace {

using namespace tropdual;

TropValue tv(long v) { return TropValue(Rat(v)); }
TropValue tv(const Rat& v) { return TropValue(v); }
const TropValue oo = TropValue::infinity();

LinearConstraint con(std::vector<Rat> coeffs, Rat rhs, Rel rel = Rel::Le) {
  LinearConstraint c;
  c.coeffs = std::move(coeffs);
  c.rhs = std::move(rhs);
  c.rel = rel;
  return c;
}

Polyhedron make_poly(int dim, std::vector<LinearConstraint> cs) {
  Polyhedron p = Polyhedron::whole(dim);
  for (LinearConstraint& c : cs) p.add(normalize(std::move(c)));
  return p;
}

std::string probe(const Region& r, const std::vector<TropValue>& a, bool want) {
  if (region_contains(r, a) == want) return {};
  return std::string(want ? "missing " : "unexpected ") + point_to_string(a);
}

std::string expect_equal(const Region& got, const Region& want, const std::string& what) {
  RegionEqualResult eq = region_equal(got, want);
  if (eq.verdict == Verdict::True) return {};
  std::string msg = what + (eq.verdict == Verdict::Undecided ? " undecided" : " differs");
  if (eq.witness)
    msg += " at " + point_to_string(*eq.witness) +
           (eq.witness_in_left ? " (computed only)" : " (expected only)");
  return msg;
}

std::string expect_suite(const verify::SuiteResult& r, int want_checked) {
  if (!r.passed) return r.name + " failed: " + r.message;
  if (r.undecided) return r.name + " undecided: " + r.message;
  if (r.checked != want_checked)
    return r.name + " checked " + std::to_string(r.checked) + ", wanted " +
           std::to_string(want_checked);
  return {};
}

// --- criterion bodies; empty string = pass ---------------------------------

std::string quadratic_segment() {
  Region r = bend_region(parse_polynomial("(3+1e)*x^2 + (1+1e)*x + 2e"));
  if (r.strata.size() != 1 || !r.strata.count({}))
    return "expected exactly the finite stratum";
  const std::vector<Polyhedron>& pieces = r.strata.at({});
  if (pieces.size() != 1) return "expected one piece, got " + std::to_string(pieces.size());
  Polyhedron want = make_poly(1, {con({-1}, 0), con({1}, 1)});
  std::sort(want.constraints.begin(), want.constraints.end());
  Polyhedron got = pieces.front();
  std::sort(got.constraints.begin(), got.constraints.end());
  if (!(got == want)) return "piece is not literally {0 <= a <= 1}";
  Region expected = Region::empty(1);
  expected.add_piece({}, want);
  if (auto m = expect_equal(r, expected, "segment region"); !m.empty()) return m;
  for (const auto& [a, in] : std::vector<std::pair<TropValue, bool>>{
           {tv(0), true}, {tv(Rat(1, 2)), true}, {tv(1), true},
           {tv(Rat(-1, 8)), false}, {tv(Rat(9, 8)), false}, {oo, false}})
    if (auto m = probe(r, {a}, in); !m.empty()) return m;
  return {};
}

std::string ray_without_infinity() {
  Region r = bend_region(parse_polynomial("1 + x + e*x"));
  if (r.strata.count({0})) return "the point at infinity must be excluded";
  Region expected = Region::empty(1);
  expected.add_piece({}, make_poly(1, {con({1}, 1)}));
  if (auto m = expect_equal(r, expected, "ray region"); !m.empty()) return m;
  for (const auto& [a, in] : std::vector<std::pair<TropValue, bool>>{
           {tv(-100), true}, {tv(1), true}, {tv(Rat(9, 8)), false}, {oo, false}})
    if (auto m = probe(r, {a}, in); !m.empty()) return m;
  return {};
}

std::string interval_complement_product() {
  DualPolynomial f =
      poly_mul(parse_polynomial("x + e*x + 0"), parse_polynomial("x + 1 + 1*e"));
  Region r = bend_region(f);
  Region expected = Region::empty(1);
  expected.add_piece({}, make_poly(1, {con({1}, 0)}));
  expected.add_piece({}, make_poly(1, {con({-1}, -1)}));
  expected.add_piece({0}, Polyhedron::whole(0));
  if (auto m = expect_equal(r, expected, "complement region"); !m.empty()) return m;
  for (const auto& [a, in] : std::vector<std::pair<TropValue, bool>>{
           {tv(-5), true}, {tv(0), true}, {tv(Rat(1, 2)), false},
           {tv(1), true}, {tv(5), true}, {oo, true}})
    if (auto m = probe(r, {a}, in); !m.empty()) return m;
  return {};
}

std::string embedded_slice() {
  Region r = variety_region(parse_polynomial_list("x1^2 + x1*x2 + x1 + 1; x2 + 0"));
  if (r.strata.size() != 1 || !r.strata.count({}))
    return "expected exactly the finite stratum";
  Region expected = Region::empty(2);
  expected.add_piece({}, make_poly(2, {con({-1, 0}, 0), con({1, 0}, 1), con({0, 1}, 0, Rel::Eq)}));
  if (auto m = expect_equal(r, expected, "slice region"); !m.empty()) return m;
  for (const auto& [a, in] : std::vector<std::pair<std::vector<TropValue>, bool>>{
           {{tv(0), tv(0)}, true}, {{tv(1), tv(0)}, true}, {{tv(Rat(1, 2)), tv(0)}, true},
           {{tv(Rat(1, 2)), tv(Rat(1, 4))}, false}, {{tv(2), tv(0)}, false},
           {{oo, tv(0)}, false}, {{tv(0), oo}, false}})
    if (auto m = probe(r, a, in); !m.empty()) return m;
  return {};
}

std::string congruence_vs_handwritten_ideal() {
  std::vector<DualPolynomial> I = parse_polynomial_list("x^2 + x*y + x + 1*y; y + 0");
  std::vector<CongruencePair> rel{
      CongruencePair(parse_polynomial("x^2 + x + 1"), parse_polynomial("x"))};
  std::vector<DualPolynomial> J = congruence_to_ideal(rel);
  Region vi = variety_region(I);
  Region vj = variety_region(J);
  if (auto m = expect_equal(vi, vj, "V(I) vs V(J)"); !m.empty()) return m;
  Region expected = Region::empty(2);
  expected.add_piece({}, make_poly(2, {con({-1, 0}, 0), con({1, 0}, 1), con({0, 1}, 0, Rel::Eq)}));
  if (auto m = expect_equal(vi, expected, "V(I)"); !m.empty()) return m;
  if (auto m = expect_equal(vj, expected, "V(J)"); !m.empty()) return m;
  return {};
}

std::string faithful_vs_naive_translation() {
  Region vi = variety_region(parse_polynomial_list("x1 + y + 0; x2 + y + 0; y + 0"));
  Region vj = variety_region(parse_polynomial_list("x1 + x2 + y + 0; y + 0"));
  Region quadrant = Region::empty(3);
  quadrant.add_piece({}, make_poly(3, {con({-1, 0, 0}, 0), con({0, -1, 0}, 0),
                                       con({0, 0, 1}, 0, Rel::Eq)}));
  quadrant.add_piece({0}, make_poly(2, {con({-1, 0}, 0), con({0, 1}, 0, Rel::Eq)}));
  quadrant.add_piece({1}, make_poly(2, {con({-1, 0}, 0), con({0, 1}, 0, Rel::Eq)}));
  quadrant.add_piece({0, 1}, make_poly(1, {con({1}, 0, Rel::Eq)}));
  if (auto m = expect_equal(vi, quadrant, "faithful variety"); !m.empty()) return m;
  RegionEqualResult eq = region_equal(vi, vj);
  if (eq.verdict != Verdict::False) return "expected the naive ideal to differ";
  if (!eq.witness) return "missing witness";
  const std::vector<TropValue>& w = *eq.witness;
  if (eq.witness_in_left) return "witness on the wrong side";
  if (w.size() != 3 || w[0].is_inf() || w[1].is_inf() || w[2].is_inf())
    return "witness should be finite: " + point_to_string(w);
  if (w[0].finite() != w[1].finite() || !(w[0].finite() < 0) || w[2].finite() != 0)
    return "witness off the diagonal: " + point_to_string(w);
  return {};
}

std::string dual_hyperbola_plot() {
  DualPolynomial fd = parse_polynomial("x1*x2 + (0+0e)*x1 + (0+0e)*x2 + 1");
  DualPolynomial fc = parse_polynomial("x1*x2 + x1 + x2 + 1");
  struct P {
    std::vector<TropValue> a;
    bool in_dual, in_classical;
  };
  for (const P& p : std::vector<P>{{{tv(-1), tv(1)}, true, false},
                                   {{tv(2), tv(2)}, false, false},
                                   {{tv(-1), tv(-1)}, false, false},
                                   {{tv(1), tv(1)}, true, true},
                                   {{tv(0), tv(0)}, true, true}}) {
    if (in_bend_locus(fd, p.a) != p.in_dual)
      return "dual membership wrong at " + point_to_string(p.a);
    if (in_bend_locus(fc, p.a) != p.in_classical)
      return "classical membership wrong at " + point_to_string(p.a);
  }
  Region r = bend_region(fd);
  std::string svg = region_to_svg(r);
  if (svg.rfind("<svg", 0) != 0 || svg.find("</svg>") == std::string::npos)
    return "malformed SVG";
  if (svg.find("<polygon") == std::string::npos)
    return "expected filled two-dimensional pieces";
  if (svg != region_to_svg(r)) return "SVG output is not deterministic";
  std::ofstream out("acceptance_plot.svg", std::ios::binary);
  out << svg;
  if (!out) return "could not write acceptance_plot.svg";
  return {};
}

std::string product_union_suite() {
  return expect_suite(verify::suite_newprop_a(20260819, 200), 200);
}

std::string oracle_suites() {
  if (auto m = expect_suite(verify::suite_newprop_b(20260819, 200), 200); !m.empty()) return m;
  if (auto m = expect_suite(verify::suite_newinc(20260819, 200), 200); !m.empty()) return m;
  return expect_suite(verify::suite_cor1(20260819, 200), 200);
}

std::string congruence_round_trips() {
  return expect_suite(verify::suite_enhanced(20260819, 100), 102);
}

std::string box_complements() {
  return expect_suite(verify::suite_etztopo(20260819, 50), 50);
}

std::string semiring_axioms() {
  if (!(dual_mul(DualValue::eps(), DualValue::eps()) == DualValue::one()))
    return "eps * eps != 1";
  return expect_suite(verify::suite_semiring(20260819, 1000), 1000);
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    double limit_s;  // 0 = no bound
    std::function<std::string()> body;
  };
  const std::vector<Criterion> criteria{
      {1, "quadratic bend region is the unit segment", 1.0, quadratic_segment},
      {2, "ray bend region excludes infinity", 0, ray_without_infinity},
      {3, "interval-complement product keeps infinity", 0, interval_complement_product},
      {4, "embedded variety is a horizontal segment", 0, embedded_slice},
      {5, "congruence ideal matches the handwritten one", 5.0, congruence_vs_handwritten_ideal},
      {6, "naive translation grows a diagonal, witnessed", 0, faithful_vs_naive_translation},
      {7, "two-variable memberships and SVG plot", 0, dual_hyperbola_plot},
      {8, "product varieties vs unions, 200 randomized", 60.0, product_union_suite},
      {9, "grid-oracle suites, 200 randomized each", 0, oracle_suites},
      {10, "congruence/dual-ideal round trips", 0, congruence_round_trips},
      {11, "box complements as bend loci, 50 randomized", 0, box_complements},
      {12, "semiring and projection axioms, 1000 randomized", 0, semiring_axioms},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string msg;
    try {
      msg = c.body();
    } catch (const std::exception& e) {
      msg = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (msg.empty() && c.limit_s > 0 && secs > c.limit_s) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "exceeded %.0fs budget", c.limit_s);
      msg = buf;
    }
    if (msg.empty()) {
      std::printf("PASS %2d: %s (%.2fs)\n", c.id, c.label, secs);
    } else {
      std::printf("FAIL %2d: %s (%.2fs): %s\n", c.id, c.label, secs, msg.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  if (failures) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  else std::printf("all %zu criteria passed\n", criteria.size());
  return failures;
}
