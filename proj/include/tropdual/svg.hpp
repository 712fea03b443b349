#pragma once

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tropdual/polynomial.hpp"
#include "tropdual/region.hpp"

namespace tropdual {

struct SvgOptions {
  Rat x0 = -5, y0 = -5, x1 = 5, y1 = 5;
  int width = 560, height = 560;
  int margin = 44;
};

namespace detail {

inline double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

struct Vec2 {
  Rat x, y;
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Vec2& a, const Vec2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

/// All intersection points of constraint boundaries (plus bbox edges) that
/// satisfy the closed form of every constraint; exact rational arithmetic, so
/// the vertex set is deterministic.
inline std::vector<Vec2> clipped_vertices(const Polyhedron& p, const SvgOptions& o) {
  std::vector<LinearConstraint> cs = p.constraints;
  auto edge = [](Rat cx, Rat cy, Rat rhs) {
    LinearConstraint c;
    c.coeffs = {std::move(cx), std::move(cy)};
    c.rhs = std::move(rhs);
    c.rel = Rel::Le;
    return c;
  };
  cs.push_back(edge(1, 0, o.x1));
  cs.push_back(edge(-1, 0, -o.x0));
  cs.push_back(edge(0, 1, o.y1));
  cs.push_back(edge(0, -1, -o.y0));
  auto closed_ok = [&cs](const Vec2& v) {
    for (const LinearConstraint& c : cs) {
      Rat lhs = c.coeffs[0] * v.x + c.coeffs[1] * v.y;
      if (c.rel == Rel::Eq ? lhs != c.rhs : lhs > c.rhs) return false;
    }
    return true;
  };
  std::vector<Vec2> out;
  for (size_t i = 0; i < cs.size(); ++i) {
    for (size_t j = i + 1; j < cs.size(); ++j) {
      Rat det = cs[i].coeffs[0] * cs[j].coeffs[1] - cs[i].coeffs[1] * cs[j].coeffs[0];
      if (det == 0) continue;
      Vec2 v{(cs[i].rhs * cs[j].coeffs[1] - cs[i].coeffs[1] * cs[j].rhs) / det,
             (cs[i].coeffs[0] * cs[j].rhs - cs[i].rhs * cs[j].coeffs[0]) / det};
      if (closed_ok(v)) out.push_back(std::move(v));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool collinear(const std::vector<Vec2>& vs) {
  if (vs.size() < 3) return true;
  const Vec2& a = vs.front();
  Rat dx = vs[1].x - a.x, dy = vs[1].y - a.y;
  for (size_t i = 2; i < vs.size(); ++i) {
    Rat cross = dx * (vs[i].y - a.y) - dy * (vs[i].x - a.x);
    if (cross != 0) return false;
  }
  return true;
}

inline std::string fmt(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << v;
  std::string s = os.str();
  if (s == "-0.00") s = "0.00";
  return s;
}

struct Mapper {
  const SvgOptions& o;
  double px(const Rat& x) const {
    double span = rat_to_double(o.x1 - o.x0);
    return o.margin + rat_to_double(x - o.x0) / span * o.width;
  }
  double py(const Rat& y) const {
    double span = rat_to_double(o.y1 - o.y0);
    return o.margin + o.height - rat_to_double(y - o.y0) / span * o.height;
  }
};

inline void svg_header(std::ostringstream& svg, const SvgOptions& o, int extra_below) {
  int W = o.width + 2 * o.margin;
  int H = o.height + 2 * o.margin + extra_below;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << W << "\" height=\"" << H << "\" fill=\"#ffffff\"/>\n";
}

inline void svg_frame_2d(std::ostringstream& svg, const SvgOptions& o) {
  Mapper m{o};
  svg << "<rect x=\"" << o.margin << "\" y=\"" << o.margin << "\" width=\"" << o.width
      << "\" height=\"" << o.height << "\" fill=\"none\" stroke=\"#444444\"/>\n";
  if (o.x0 < 0 && o.x1 > 0)
    svg << "<line x1=\"" << fmt(m.px(0)) << "\" y1=\"" << o.margin << "\" x2=\"" << fmt(m.px(0))
        << "\" y2=\"" << o.margin + o.height << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\"/>\n";
  if (o.y0 < 0 && o.y1 > 0)
    svg << "<line x1=\"" << o.margin << "\" y1=\"" << fmt(m.py(0)) << "\" x2=\""
        << o.margin + o.width << "\" y2=\"" << fmt(m.py(0))
        << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\"/>\n";
  svg << "<text x=\"" << o.margin << "\" y=\"" << o.margin + o.height + 16
      << "\" font-size=\"11\" fill=\"#444444\">" << rat_to_string(o.x0) << "</text>\n";
  svg << "<text x=\"" << o.margin + o.width - 10 << "\" y=\"" << o.margin + o.height + 16
      << "\" font-size=\"11\" fill=\"#444444\">" << rat_to_string(o.x1) << "</text>\n";
}

inline std::string stratum_label(const std::vector<int>& s, int k) {
  std::string out;
  for (int i : s) {
    if (!out.empty()) out += ", ";
    out += detail::variable_name(i, k, -1) + "=inf";
  }
  return out;
}

}  // namespace detail

/// Deterministic SVG plot of a Region with k ≤ 2: two-dimensional pieces are
/// filled, one-dimensional pieces are thick strokes, points are dots.
/// Infinity strata are summarized as captions under the plot.
inline std::string region_to_svg(const Region& r, const SvgOptions& options = {}) {
  if (r.k > 2) throw std::invalid_argument("svg rendering is limited to k <= 2");
  if (!(options.x0 < options.x1) || !(options.y0 < options.y1))
    throw std::invalid_argument("svg bounding box is degenerate");
  const SvgOptions& o = options;
  detail::Mapper m{o};
  std::ostringstream svg;

  std::vector<std::string> captions;
  for (const auto& [s, pieces] : r.strata) {
    if (s.empty()) continue;
    std::string label = detail::stratum_label(s, r.k);
    if (static_cast<int>(s.size()) == r.k) {
      captions.push_back(label + ": in region");
      continue;
    }
    captions.push_back(label + ": " + std::to_string(pieces.size()) + " piece(s) on the rest");
  }

  int caption_space = static_cast<int>(captions.size()) * 16 + (captions.empty() ? 0 : 8);
  detail::svg_header(svg, o, caption_space);

  if (r.k == 2) {
    detail::svg_frame_2d(svg, o);
    auto it = r.strata.find({});
    if (it != r.strata.end()) {
      std::vector<std::string> fills, strokes, dots;
      for (const Polyhedron& piece : it->second) {
        std::vector<detail::Vec2> vs = detail::clipped_vertices(reduce(piece), o);
        if (vs.empty()) continue;
        if (vs.size() == 1) {
          std::ostringstream el;
          el << "<circle cx=\"" << detail::fmt(m.px(vs[0].x)) << "\" cy=\""
             << detail::fmt(m.py(vs[0].y)) << "\" r=\"4\" fill=\"#111111\"/>\n";
          dots.push_back(el.str());
          continue;
        }
        if (detail::collinear(vs)) {
          const detail::Vec2& a = vs.front();
          const detail::Vec2& b = vs.back();
          std::ostringstream el;
          el << "<line x1=\"" << detail::fmt(m.px(a.x)) << "\" y1=\"" << detail::fmt(m.py(a.y))
             << "\" x2=\"" << detail::fmt(m.px(b.x)) << "\" y2=\"" << detail::fmt(m.py(b.y))
             << "\" stroke=\"#111111\" stroke-width=\"3.5\" stroke-linecap=\"round\"/>\n";
          strokes.push_back(el.str());
          continue;
        }
        // convex polygon: order vertices around the centroid
        Rat cx = 0, cy = 0;
        for (const detail::Vec2& v : vs) {
          cx += v.x;
          cy += v.y;
        }
        cx /= static_cast<int>(vs.size());
        cy /= static_cast<int>(vs.size());
        std::vector<std::pair<double, detail::Vec2>> ordered;
        for (const detail::Vec2& v : vs)
          ordered.push_back({std::atan2(detail::rat_to_double(v.y - cy),
                                        detail::rat_to_double(v.x - cx)),
                             v});
        std::sort(ordered.begin(), ordered.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::ostringstream el;
        el << "<polygon points=\"";
        for (size_t i = 0; i < ordered.size(); ++i) {
          if (i) el << " ";
          el << detail::fmt(m.px(ordered[i].second.x)) << ","
             << detail::fmt(m.py(ordered[i].second.y));
        }
        el << "\" fill=\"#9dbede\" fill-opacity=\"0.55\" stroke=\"#3c6ea5\" stroke-width=\"1\"/>\n";
        fills.push_back(el.str());
      }
      for (const std::string& e : fills) svg << e;
      for (const std::string& e : strokes) svg << e;
      for (const std::string& e : dots) svg << e;
    }
  } else {
    // k <= 1: a number line
    double axis_y = o.margin + o.height / 2.0;
    svg << "<line x1=\"" << o.margin << "\" y1=\"" << detail::fmt(axis_y) << "\" x2=\""
        << o.margin + o.width << "\" y2=\"" << detail::fmt(axis_y)
        << "\" stroke=\"#444444\"/>\n";
    svg << "<text x=\"" << o.margin << "\" y=\"" << detail::fmt(axis_y + 20)
        << "\" font-size=\"11\" fill=\"#444444\">" << rat_to_string(o.x0) << "</text>\n";
    svg << "<text x=\"" << o.margin + o.width - 10 << "\" y=\"" << detail::fmt(axis_y + 20)
        << "\" font-size=\"11\" fill=\"#444444\">" << rat_to_string(o.x1) << "</text>\n";
    auto it = r.k == 0 ? r.strata.end() : r.strata.find({});
    if (it != r.strata.end()) {
      for (const Polyhedron& piece : it->second) {
        Polyhedron q = reduce(piece);
        std::optional<Rat> lo, hi, eq;
        bool feasible = true;
        for (const LinearConstraint& c : q.constraints) {
          if (c.is_ground()) {
            if (!c.ground_holds()) feasible = false;
            continue;
          }
          Rat bound = c.rhs / c.coeffs[0];
          if (c.rel == Rel::Eq) eq = bound;
          else if (c.coeffs[0] > 0) hi = hi ? std::min(*hi, bound) : bound;
          else lo = lo ? std::max(*lo, bound) : bound;
        }
        if (!feasible) continue;
        if (eq) {
          lo = eq;
          hi = eq;
        }
        Rat a = lo ? std::max(*lo, o.x0) : o.x0;
        Rat b = hi ? std::min(*hi, o.x1) : o.x1;
        if (a > b) continue;
        if (a == b) {
          svg << "<circle cx=\"" << detail::fmt(m.px(a)) << "\" cy=\"" << detail::fmt(axis_y)
              << "\" r=\"4.5\" fill=\"#111111\"/>\n";
        } else {
          svg << "<line x1=\"" << detail::fmt(m.px(a)) << "\" y1=\"" << detail::fmt(axis_y)
              << "\" x2=\"" << detail::fmt(m.px(b)) << "\" y2=\"" << detail::fmt(axis_y)
              << "\" stroke=\"#3c6ea5\" stroke-width=\"6\" stroke-linecap=\"round\"/>\n";
        }
      }
    }
  }

  int ty = o.height + 2 * o.margin;
  for (const std::string& caption : captions) {
    svg << "<text x=\"" << o.margin << "\" y=\"" << ty
        << "\" font-size=\"12\" fill=\"#222222\">" << caption << "</text>\n";
    ty += 16;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace tropdual
