// Command-line front end: evaluate polynomials over the tropical dual
// numbers, compute bend/variety/congruence regions (JSON, optional SVG),
// run the generator constructions with their round-trip checks, and drive
// the randomized verification suites.
//
// Exit codes: 0 success/pass, 1 usage or parse error, 2 counterexample or
// failed round-trip, 3 undecided cover verdict.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tropdual/tropdual.hpp"

namespace {

using namespace tropdual;

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return {};
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string::npos ? pos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

ExponentVector parse_exponents(const std::string& text) {
  ExponentVector out;
  for (const std::string& item : split(text, ',')) {
    std::string t = trim(item);
    auto r = rat_from_string(t);
    if (!r || rat_den(*r) != 1 || *r < 0 || *r > 64)
      throw ParseError("exponent must be a small nonnegative integer, got '" + t + "'", 0);
    out.push_back(static_cast<int>(rat_num(*r)));
  }
  return out;
}

/// "n;m;c" with n,m comma-separated exponents and c rational, e.g. "1,0;0,0;2".
HalfspaceCongruence parse_half(const std::string& text) {
  std::vector<std::string> fields = split(text, ';');
  if (fields.size() != 3)
    throw ParseError("halfspace takes three ';'-separated fields: n;m;c", 0);
  auto c = rat_from_string(trim(fields[2]));
  if (!c) throw ParseError("bad halfspace constant '" + trim(fields[2]) + "'", 0);
  return HalfspaceCongruence(parse_exponents(fields[0]), parse_exponents(fields[1]), *c);
}

std::vector<CongruencePair> parse_pairs(const std::string& text) {
  std::vector<CongruencePair> out;
  for (auto& [lhs, rhs] : parse_relation_list(text)) out.emplace_back(lhs, rhs);
  return out;
}

SvgOptions parse_bbox(const std::string& text) {
  SvgOptions o;
  if (text.empty()) return o;
  std::vector<std::string> fields = split(text, ',');
  if (fields.size() != 4) throw ParseError("--bbox takes \"x0,y0,x1,y1\"", 0);
  std::vector<Rat> v;
  for (const std::string& f : fields) {
    auto r = rat_from_string(trim(f));
    if (!r) throw ParseError("bad bbox value '" + trim(f) + "'", 0);
    v.push_back(*r);
  }
  if (!(v[0] < v[2]) || !(v[1] < v[3]))
    throw ParseError("bbox needs x0 < x1 and y0 < y1", 0);
  o.x0 = v[0];
  o.y0 = v[1];
  o.x1 = v[2];
  o.y1 = v[3];
  return o;
}

int run_eval(const std::string& poly_text, const std::string& at_text, bool want_pi) {
  DualPolynomial f = parse_polynomial(poly_text);
  std::vector<TropValue> a = parse_point(at_text);
  if (static_cast<int>(a.size()) != f.vars()) {
    std::cerr << "error: polynomial has " << f.vars() << " variable(s) but the point has "
              << a.size() << "\n";
    return 1;
  }
  DualValue v = poly_eval(f, a);
  std::cout << (want_pi ? trop_to_string(pi(v)) : dual_to_string(v)) << "\n";
  return 0;
}

int run_region(const std::string& kind, const std::string& text, bool emit_svg,
               const std::string& svg_file, const std::string& bbox_text) {
  Region r;
  if (kind == "bend") {
    r = bend_region(parse_polynomial(text));
  } else if (kind == "variety") {
    r = variety_region(parse_polynomial_list(text));
  } else {
    r = congruence_region(parse_pairs(text));
  }
  std::cout << region_to_json(r).dump(2) << "\n";
  if (emit_svg) {
    if (r.k > 2) {
      std::cerr << "error: --svg needs k <= 2, region has k = " << r.k << "\n";
      return 1;
    }
    std::string svg = region_to_svg(r, parse_bbox(bbox_text));
    if (svg_file.empty() || svg_file == "-") {
      std::cout << svg;
    } else {
      std::ofstream out(svg_file, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write '" << svg_file << "'\n";
        return 1;
      }
      out << svg;
    }
  }
  return 0;
}

int print_check(const ConstructionCheck& check, bool embedded) {
  for (const DualPolynomial& g : check.generators)
    std::cout << "generator: "
              << (embedded ? poly_to_string_named(g, g.vars() - 1) : poly_to_string(g)) << "\n";
  std::cout << region_to_json(check.actual).dump(2) << "\n";
  switch (check.verdict.verdict) {
    case Verdict::True:
      std::cout << "round-trip: equal\n";
      return 0;
    case Verdict::Undecided:
      std::cout << "round-trip: undecided\n";
      return 3;
    case Verdict::False:
    default:
      std::cout << "round-trip: different\n";
      if (check.verdict.witness)
        std::cout << "witness: " << point_to_string(*check.verdict.witness)
                  << (check.verdict.witness_in_left ? " (in the source region, not cut out)"
                                                    : " (cut out, not in the source region)")
                  << "\n";
      return 2;
  }
}

int run_verify(const std::string& suite, std::uint64_t seed, int cases, int boxes,
               const Rat& grid_step, const Rat& grid_range) {
  std::vector<verify::SuiteResult> results;
  if (suite == "newprop") {
    results.push_back(verify::suite_newprop_a(seed, cases));
    results.push_back(verify::suite_newprop_b(seed, cases, grid_step, grid_range));
    results.push_back(verify::suite_newinc(seed, cases, grid_step, grid_range));
    results.push_back(verify::suite_cor1(seed, cases, grid_step, grid_range));
  } else if (suite == "coincide") {
    results.push_back(verify::suite_coincide(seed, cases, grid_step, grid_range));
  } else if (suite == "etztopo") {
    results.push_back(verify::suite_etztopo(seed, boxes, grid_step, grid_range));
  } else {
    results.push_back(verify::suite_congruence_axioms(seed, cases));
    results.push_back(verify::suite_semiring(seed, cases));
  }
  bool failed = false, undecided = false;
  for (const verify::SuiteResult& r : results) {
    const char* tag = r.passed ? (r.undecided ? "UNDECIDED" : "PASS") : "FAIL";
    std::cout << tag << " " << r.name << ": checked " << r.checked;
    if (!r.message.empty()) std::cout << " — " << r.message;
    std::cout << "\n";
    failed = failed || !r.passed;
    undecided = undecided || r.undecided;
  }
  if (failed) return 2;
  if (undecided) return 3;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact geometry over the tropical dual numbers"};
  app.require_subcommand(1);

  // eval
  std::string eval_poly, eval_at;
  bool eval_pi = false;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a polynomial at a point");
  eval_cmd->add_option("polynomial", eval_poly, "polynomial text, e.g. \"(3+1e)*x^2+(1+1e)*x+2e\"")
      ->required();
  eval_cmd->add_option("--at", eval_at, "comma-separated point, e.g. \"0\" or \"1,inf\"")
      ->required();
  eval_cmd->add_flag("--pi", eval_pi, "project the value to T via min(a,b)");

  // region
  std::string region_kind, region_text, region_bbox;
  std::vector<std::string> region_svg;
  CLI::App* region_cmd = app.add_subcommand("region", "compute a region as JSON");
  region_cmd->add_option("kind", region_kind, "bend | variety | congruence")
      ->required()
      ->check(CLI::IsMember({"bend", "variety", "congruence"}));
  region_cmd
      ->add_option("input", region_text,
                   "polynomial, ';'-separated list, or \"f ~ g; ...\" relations")
      ->required();
  CLI::Option* svg_opt =
      region_cmd->add_option("--svg", region_svg, "emit an SVG plot (k <= 2) to FILE or stdout")
          ->expected(0, 1);
  region_cmd->add_option("--bbox", region_bbox, "plot window \"x0,y0,x1,y1\" (default -5,-5,5,5)");

  // construct
  CLI::App* construct_cmd =
      app.add_subcommand("construct", "build ideal generators and check the round trip");
  construct_cmd->require_subcommand(1);

  std::vector<std::string> halves;
  CLI::App* lem1_cmd = construct_cmd->add_subcommand(
      "lem1", "one halfspace congruence -> embedded ideal");
  lem1_cmd->add_option("--half", halves, "halfspace as \"n;m;c\", e.g. \"1,0;0,0;2\"")
      ->required();

  CLI::App* convex_cmd = construct_cmd->add_subcommand(
      "convex", "intersection of halfspaces -> embedded ideal");
  convex_cmd->add_option("--half", halves, "repeatable halfspace \"n;m;c\"")->required();

  std::vector<std::string> union_parts;
  CLI::App* union_cmd =
      construct_cmd->add_subcommand("union", "union of varieties via generator products");
  union_cmd->add_option("--part", union_parts, "generator list \"f; g; ...\" for one part")
      ->required();

  std::string polypro_rels;
  bool polypro_naive = false;
  CLI::App* polypro_cmd = construct_cmd->add_subcommand(
      "polypro", "polynomial congruence -> embedded ideal");
  polypro_cmd->add_option("relations", polypro_rels, "relations \"f ~ g; ...\"")->required();
  polypro_cmd->add_flag("--naive", polypro_naive,
                        "use the one-generator f + y*g form (can overshoot)");

  std::string dual_rels;
  CLI::App* dual_cmd = construct_cmd->add_subcommand(
      "dual", "polynomial congruence -> dual-coefficient ideal, no extra variable");
  dual_cmd->add_option("relations", dual_rels, "relations \"f ~ g; ...\"")->required();

  std::string classical_gens;
  CLI::App* classical_cmd = construct_cmd->add_subcommand(
      "classical", "dual-coefficient ideal -> embedded classical ideal");
  classical_cmd->add_option("generators", classical_gens, "';'-separated generators")->required();

  std::vector<std::string> box_intervals;
  CLI::App* box_cmd = construct_cmd->add_subcommand(
      "box", "open box -> generators whose bend loci cover its complement");
  box_cmd->add_option("--interval", box_intervals,
                      "per-coordinate \"(lo,hi)\" or ray \"(lo,inf]\", in order")
      ->required();

  // verify
  std::string verify_suite;
  std::uint64_t seed_flag = 0;
  int verify_cases = 200, verify_boxes = 50;
  std::string step_text = "1/8", range_text = "5";
  CLI::App* verify_cmd = app.add_subcommand("verify", "run a randomized verification suite");
  verify_cmd->add_option("suite", verify_suite, "newprop | coincide | etztopo | congruence-axioms")
      ->required()
      ->check(CLI::IsMember({"newprop", "coincide", "etztopo", "congruence-axioms"}));
  CLI::Option* seed_opt = verify_cmd->add_option("--seed", seed_flag, "RNG seed");
  verify_cmd->add_option("--cases", verify_cases, "instances per suite (default 200)");
  verify_cmd->add_option("--boxes", verify_boxes, "boxes for etztopo (default 50)");
  verify_cmd->add_option("--grid-step", step_text, "oracle grid step (default 1/8)");
  verify_cmd->add_option("--grid-range", range_text, "oracle grid range (default 5)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(eval_cmd)) return run_eval(eval_poly, eval_at, eval_pi);

    if (app.got_subcommand(region_cmd))
      return run_region(region_kind, region_text, static_cast<bool>(*svg_opt),
                        region_svg.empty() ? std::string() : region_svg.front(), region_bbox);

    if (app.got_subcommand(construct_cmd)) {
      if (construct_cmd->got_subcommand(lem1_cmd)) {
        if (halves.size() != 1) {
          std::cerr << "error: lem1 takes exactly one --half\n";
          return 1;
        }
        return print_check(checked_halfspace_ideal(parse_half(halves[0])), true);
      }
      if (construct_cmd->got_subcommand(convex_cmd)) {
        std::vector<HalfspaceCongruence> hs;
        for (const std::string& h : halves) hs.push_back(parse_half(h));
        return print_check(checked_convex_ideal(hs), true);
      }
      if (construct_cmd->got_subcommand(union_cmd)) {
        std::string joined;
        for (const std::string& p : union_parts) {
          if (trim(p).empty()) continue;
          if (!joined.empty()) joined += "; ";
          joined += p;
        }
        if (joined.empty()) {
          std::cerr << "error: union needs at least one nonempty part\n";
          return 1;
        }
        VarSpec spec = infer_vars(joined);
        std::vector<std::vector<DualPolynomial>> parts;
        for (const std::string& p : union_parts) {
          if (trim(p).empty()) parts.push_back({});
          else parts.push_back(parse_polynomial_list(p, spec));
        }
        return print_check(checked_union_ideal(parts), spec.embed_index >= 0);
      }
      if (construct_cmd->got_subcommand(polypro_cmd)) {
        std::vector<CongruencePair> pairs = parse_pairs(polypro_rels);
        return print_check(
            polypro_naive ? checked_naive_ideal(pairs) : checked_congruence_to_ideal(pairs), true);
      }
      if (construct_cmd->got_subcommand(dual_cmd))
        return print_check(checked_congruence_to_dual_ideal(parse_pairs(dual_rels)), false);
      if (construct_cmd->got_subcommand(classical_cmd)) {
        VarSpec spec = infer_vars(classical_gens);
        if (spec.embed_index >= 0) {
          std::cerr << "error: classical takes generators without the embedding variable y\n";
          return 1;
        }
        return print_check(checked_dual_to_classical(parse_polynomial_list(classical_gens, spec)),
                           true);
      }
      // box
      std::vector<CoordInterval> coords;
      for (const std::string& t : box_intervals) {
        IntervalText it = parse_interval(t);
        coords.push_back({it.lo, it.hi});
      }
      return print_check(checked_box_ideal(IntervalSpec(std::move(coords))), false);
    }

    // verify
    std::uint64_t seed = 20260819;
    if (const char* env = std::getenv("TROPDUAL_SEED")) {
      char* end = nullptr;
      std::uint64_t v = std::strtoull(env, &end, 10);
      if (end == env || *end != '\0') {
        std::cerr << "error: TROPDUAL_SEED must be an unsigned integer\n";
        return 1;
      }
      seed = v;
    }
    if (seed_opt->count()) seed = seed_flag;
    auto step = rat_from_string(step_text);
    auto range = rat_from_string(range_text);
    if (!step || *step <= 0 || !range || *range <= 0) {
      std::cerr << "error: --grid-step and --grid-range must be positive rationals\n";
      return 1;
    }
    if (verify_cases < 1 || verify_boxes < 1) {
      std::cerr << "error: --cases and --boxes must be positive\n";
      return 1;
    }
    std::cout << "suite " << verify_suite << ", seed " << seed << "\n";
    return run_verify(verify_suite, seed, verify_cases, verify_boxes, *step, *range);
  } catch (const ParseError& e) {
    std::cerr << "parse error at position " << e.position() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
