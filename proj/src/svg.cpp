#include "riders/svg.hpp"

#include <cstdio>
#include <optional>
#include <sstream>

#include "riders/arrangement.hpp"
#include "riders/errors.hpp"

namespace riders {

namespace {

constexpr const char* kPalette[] = {"#1f4e9c", "#b3261e", "#1b7a3d", "#8a4fbf", "#c26a00", "#00838f", "#6d4c41"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Canvas {
  Viewport view;
  double scale;

  double px(const Rational& x) const { return Rational(x - view.xmin).get_d() * scale; }
  double py(const Rational& y) const { return Rational(view.ymax - y).get_d() * scale; }
};

// Portion of the line anchor + t d inside the viewport (Liang-Barsky, exact).
std::optional<std::pair<Point, Point>> clip_line(const Point& anchor, const Direction& d, const Viewport& v) {
  std::optional<Rational> lo, hi;
  auto clamp_axis = [&](long delta, const Rational& start, const Rational& min, const Rational& max) {
    if (delta == 0) return start >= min && start <= max;
    Rational t0 = (min - start) / delta;
    Rational t1 = (max - start) / delta;
    if (t0 > t1) std::swap(t0, t1);
    if (!lo || t0 > *lo) lo = t0;
    if (!hi || t1 < *hi) hi = t1;
    return true;
  };
  if (!clamp_axis(d.dx(), anchor.x, v.xmin, v.xmax)) return std::nullopt;
  if (!clamp_axis(d.dy(), anchor.y, v.ymin, v.ymax)) return std::nullopt;
  if (*lo > *hi) return std::nullopt;
  Point a{anchor.x + *lo * d.dx(), anchor.y + *lo * d.dy()};
  Point b{anchor.x + *hi * d.dx(), anchor.y + *hi * d.dy()};
  return std::make_pair(a, b);
}

}  // namespace

std::string roman_numeral(int value) {
  static const std::pair<int, const char*> kDigits[] = {{1000, "M"}, {900, "CM"}, {500, "D"}, {400, "CD"}, {100, "C"},
                                                        {90, "XC"},  {50, "L"},   {40, "XL"},  {10, "X"},   {9, "IX"},
                                                        {5, "V"},    {4, "IV"},   {1, "I"}};
  std::string out;
  for (const auto& [v, s] : kDigits)
    while (value >= v) {
      out += s;
      value -= v;
    }
  return out;
}

Viewport compute_viewport(const Placement& placement, const MoveSet& moves, const Rational& margin) {
  if (placement.empty()) throw InvalidArgument("cannot compute a viewport for an empty placement");
  Viewport v{placement[0].x, placement[0].y, placement[0].x, placement[0].y};
  auto include = [&](const Rational& x, const Rational& y) {
    if (x < v.xmin) v.xmin = x;
    if (x > v.xmax) v.xmax = x;
    if (y < v.ymin) v.ymin = y;
    if (y > v.ymax) v.ymax = y;
  };
  for (const Point& p : placement) include(p.x, p.y);
  for (const auto& [p, through] : intersection_points(build_lines(placement, moves))) include(p.first, p.second);
  Rational span = std::max(Rational(v.xmax - v.xmin), Rational(v.ymax - v.ymin));
  if (sgn(span) == 0) span = 1;
  const Rational grow = margin * span + span / 10;
  v.xmin -= grow;
  v.ymin -= grow;
  v.xmax += grow;
  v.ymax += grow;
  return v;
}

std::vector<Point> cell_polygon(const Placement& placement, const MoveSet& moves, const Point& inside,
                                const Viewport& view) {
  std::vector<Point> poly{{view.xmin, view.ymin}, {view.xmax, view.ymin}, {view.xmax, view.ymax}, {view.xmin, view.ymax}};
  for (const Line& line : build_lines(placement, moves)) {
    const int side = sign(line_value(line, inside));
    if (side == 0) throw InvalidArgument("shaded point lies on a move line");
    std::vector<Point> next;
    for (std::size_t k = 0; k < poly.size(); ++k) {
      const Point& a = poly[k];
      const Point& b = poly[(k + 1) % poly.size()];
      const Rational va = side * line_value(line, a);
      const Rational vb = side * line_value(line, b);
      if (sgn(va) >= 0) next.push_back(a);
      if ((sgn(va) > 0 && sgn(vb) < 0) || (sgn(va) < 0 && sgn(vb) > 0)) {
        const Rational t = va / (va - vb);
        next.push_back(a + t * (b - a));
      }
    }
    poly = std::move(next);
    if (poly.empty()) break;
  }
  return poly;
}

std::string render_svg(const RenderSpec& spec) {
  if (spec.placement.empty()) throw InvalidArgument("nothing to render: the placement is empty");
  if (!(spec.canvas > 0)) throw InvalidArgument("canvas size must be positive");
  require_non_attacking(spec.placement, spec.moves);

  const Viewport view = compute_viewport(spec.placement, spec.moves, spec.margin);
  const Rational span = std::max(Rational(view.xmax - view.xmin), Rational(view.ymax - view.ymin));
  const Canvas canvas{view, spec.canvas / span.get_d()};
  const double width = Rational(view.xmax - view.xmin).get_d() * canvas.scale;
  const double height = Rational(view.ymax - view.ymin).get_d() * canvas.scale;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
      << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
  if (!spec.title.empty()) out << "  <title>" << escape(spec.title) << "</title>\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"" << fmt(width) << "\" height=\"" << fmt(height) << "\" fill=\"#ffffff\"/>\n";

  out << "  <g id=\"cells\" fill=\"#222222\" fill-opacity=\"0.8\" stroke=\"none\">\n";
  for (const Point& inside : spec.shaded_cells) {
    auto poly = cell_polygon(spec.placement, spec.moves, inside, view);
    if (poly.empty()) continue;
    out << "    <polygon points=\"";
    for (std::size_t k = 0; k < poly.size(); ++k) out << (k ? " " : "") << fmt(canvas.px(poly[k].x)) << ',' << fmt(canvas.py(poly[k].y));
    out << "\"/>\n";
  }
  out << "  </g>\n";

  out << "  <g id=\"moves\" stroke-width=\"1.4\">\n";
  for (std::size_t i = 0; i < spec.placement.size(); ++i) {
    const char* colour = kPalette[i % std::size(kPalette)];
    for (const Direction& d : spec.moves.directions()) {
      auto seg = clip_line(spec.placement[i], d, view);
      if (!seg) continue;
      out << "    <line x1=\"" << fmt(canvas.px(seg->first.x)) << "\" y1=\"" << fmt(canvas.py(seg->first.y)) << "\" x2=\""
          << fmt(canvas.px(seg->second.x)) << "\" y2=\"" << fmt(canvas.py(seg->second.y)) << "\" stroke=\"" << colour
          << "\"/>\n";
    }
  }
  out << "  </g>\n";

  if (spec.region_labels) {
    const Rational radius = span / 16;
    out << "  <g id=\"regions\" font-family=\"serif\" font-size=\"12\" text-anchor=\"middle\" "
           "dominant-baseline=\"central\">\n";
    for (std::size_t i = 0; i < spec.placement.size(); ++i) {
      const Point& rider = spec.placement[i];
      for (int k = 1; k <= static_cast<int>(2 * spec.moves.size()); ++k) {
        const Ray s = spec.moves.sector_sample(k);
        const Rational scale = radius / Rational(std::abs(s.dx) + std::abs(s.dy));
        const Point at{rider.x + scale * s.dx, rider.y + scale * s.dy};
        const int label = region_of(rider, at, spec.moves);
        out << "    <text x=\"" << fmt(canvas.px(at.x)) << "\" y=\"" << fmt(canvas.py(at.y)) << "\" fill=\""
            << kPalette[i % std::size(kPalette)] << "\">"
            << (spec.roman_labels ? roman_numeral(label) : std::to_string(label)) << "</text>\n";
      }
    }
    out << "  </g>\n";
  }

  out << "  <g id=\"riders\" font-family=\"sans-serif\" font-size=\"14\">\n";
  for (std::size_t i = 0; i < spec.placement.size(); ++i) {
    const double x = canvas.px(spec.placement[i].x);
    const double y = canvas.py(spec.placement[i].y);
    out << "    <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"5\" fill=\""
        << kPalette[i % std::size(kPalette)] << "\"/>\n";
    if (spec.piece_labels)
      out << "    <text x=\"" << fmt(x + 7) << "\" y=\"" << fmt(y - 7) << "\">P" << (i + 1) << "</text>\n";
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

}  // namespace riders
