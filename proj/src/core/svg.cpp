#include "core/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace semitoric {

namespace {

constexpr double kSize = 400;
constexpr double kMargin = 32;

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.4f", v == 0 ? 0.0 : v);
  return buf;
}

std::string header() {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize
     << "\" height=\"" << kSize << "\" viewBox=\"0 0 " << kSize << " "
     << kSize << "\">\n"
     << "<rect width=\"" << kSize << "\" height=\"" << kSize
     << "\" fill=\"white\"/>\n";
  return os.str();
}

const char* label_color(CornerLabel l) {
  switch (l) {
    case CornerLabel::Delzant: return "#222222";
    case CornerLabel::Fake: return "#d07000";
    case CornerLabel::Hidden: return "#7030b0";
  }
  return "#222222";
}

std::string fan_body(const std::vector<Vec2>& rays,
                     const std::vector<CornerLabel>* labels) {
  std::ostringstream os;
  const double cx = kSize / 2, cy = kSize / 2;
  double ext = 1;
  for (const Vec2& v : rays) {
    ext = std::max(ext, std::fabs(static_cast<double>(v.x)));
    ext = std::max(ext, std::fabs(static_cast<double>(v.y)));
  }
  const double s = (kSize / 2 - kMargin) / ext;
  os << "<line x1=\"" << num(kMargin) << "\" y1=\"" << num(cy) << "\" x2=\""
     << num(kSize - kMargin) << "\" y2=\"" << num(cy)
     << "\" stroke=\"#cccccc\"/>\n";
  os << "<line x1=\"" << num(cx) << "\" y1=\"" << num(kMargin) << "\" x2=\""
     << num(cx) << "\" y2=\"" << num(kSize - kMargin)
     << "\" stroke=\"#cccccc\"/>\n";
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const double x = cx + s * rays[i].x;
    const double y = cy - s * rays[i].y;
    os << "<line x1=\"" << num(cx) << "\" y1=\"" << num(cy) << "\" x2=\""
       << num(x) << "\" y2=\"" << num(y)
       << "\" stroke=\"#204080\" stroke-width=\"2\"/>\n";
    os << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y)
       << "\" r=\"4\" fill=\"#204080\"/>\n";
    os << "<text x=\"" << num(x + 6) << "\" y=\"" << num(y - 6)
       << "\" font-size=\"12\" font-family=\"monospace\">v" << i << " ("
       << rays[i].x << "," << rays[i].y << ")</text>\n";
  }
  if (labels) {
    const int d = static_cast<int>(rays.size());
    for (int i = 0; i < d; ++i) {
      const Vec2& a = rays[i];
      const Vec2& b = rays[(i + 1) % d];
      double t0 = std::atan2(static_cast<double>(a.y),
                             static_cast<double>(a.x));
      double t1 = std::atan2(static_cast<double>(b.y),
                             static_cast<double>(b.x));
      if (t1 <= t0) t1 += 8 * std::atan(1.0);
      const double mid = (t0 + t1) / 2;
      const double r = kSize / 2 - kMargin / 2;
      const double x = cx + r * std::cos(mid);
      const double y = cy - r * std::sin(mid);
      os << "<text x=\"" << num(x) << "\" y=\"" << num(y)
         << "\" font-size=\"13\" font-family=\"monospace\" fill=\""
         << label_color((*labels)[i]) << "\" text-anchor=\"middle\">"
         << to_string((*labels)[i])[0] << "</text>\n";
    }
  }
  return os.str();
}

std::string polygon_body(const PrimitiveSemitoricPolygon& p) {
  std::ostringstream os;
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  bool first = true;
  for (const Pt& v : p.polygon.vertices) {
    const double x = to_double(v.x), y = to_double(v.y);
    if (first) {
      x0 = x1 = x;
      y0 = y1 = y;
      first = false;
    }
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
  const double span = std::max(std::max(x1 - x0, y1 - y0), 1e-9);
  const double s = (kSize - 2 * kMargin) / span;
  auto px = [&](double x) { return kMargin + s * (x - x0); };
  auto py = [&](double y) { return kSize - kMargin - s * (y - y0); };

  os << "<path d=\"";
  for (std::size_t i = 0; i < p.polygon.vertices.size(); ++i) {
    const Pt& v = p.polygon.vertices[i];
    os << (i ? "L" : "M") << num(px(to_double(v.x))) << ","
       << num(py(to_double(v.y)));
  }
  os << "Z\" fill=\"#dce8f8\" stroke=\"#204080\" stroke-width=\"2\"/>\n";
  for (const Pt& v : p.polygon.vertices)
    os << "<circle cx=\"" << num(px(to_double(v.x))) << "\" cy=\""
       << num(py(to_double(v.y))) << "\" r=\"3\" fill=\"#204080\"/>\n";
  for (const Marker& m : p.markers) {
    const double lx = px(to_double(m.lambda));
    os << "<line x1=\"" << num(lx) << "\" y1=\"" << num(kMargin / 2)
       << "\" x2=\"" << num(lx) << "\" y2=\"" << num(kSize - kMargin / 2)
       << "\" stroke=\"#d07000\" stroke-dasharray=\"5,4\"/>\n";
    os << "<text x=\"" << num(lx + 4) << "\" y=\"" << num(kMargin)
       << "\" font-size=\"12\" font-family=\"monospace\" fill=\"#d07000\">"
       << "l=" << rat_to_string(m.lambda) << " k=" << m.k << "</text>\n";
  }
  return os.str();
}

}  // namespace

std::string render_svg(const ToricFan& f) {
  return header() + fan_body(f.rays, nullptr) + "</svg>\n";
}

std::string render_svg(const SemitoricFan& f) {
  return header() + fan_body(f.rays, &f.labels) + "</svg>\n";
}

std::string render_svg(const PrimitiveSemitoricPolygon& p) {
  if (p.polygon.vertices.empty()) return render_svg_empty();
  return header() + polygon_body(p) + "</svg>\n";
}

std::string render_svg(const IngredientList& m) {
  return render_svg(m.polygon);
}

std::string render_svg_empty() { return header() + "</svg>\n"; }

}  // namespace semitoric
