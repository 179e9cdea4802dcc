#include "fusionkit/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "fusionkit/weight_system.hpp"

namespace fusionkit {

namespace {

constexpr long double kScale = 50.0L;  // pixels per unit length, (theta, theta) = 2
constexpr long double kPad = 1.25L;

struct Point {
  long double x, y;
};

std::string num(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6Lf", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

// Screen embedding of the fundamental weights from a Cholesky factor of their
// Gram matrix; exact label arithmetic stops here.
class Projection {
 public:
  explicit Projection(const RootSystem& rs) {
    const RatMatrix& g = rs.form_fw();
    const long double g11 = g(0, 0).get_d(), g12 = g(0, 1).get_d(), g22 = g(1, 1).get_d();
    const long double l11 = std::sqrt(g11);
    const long double l21 = g12 / l11;
    w1_ = {l11, 0};
    w2_ = {l21, std::sqrt(g22 - l21 * l21)};
  }
  Point operator()(long double a, long double b) const {
    return {kScale * (a * w1_.x + b * w2_.x), -kScale * (a * w1_.y + b * w2_.y)};
  }
  Point operator()(const Weight& w) const { return (*this)(static_cast<long double>(w[0]), static_cast<long double>(w[1])); }

 private:
  Point w1_{}, w2_{};
};

struct Box {
  long double x0, y0, x1, y1;
  bool contains(Point p) const { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }
};

// Clips the infinite line through p with direction d to the box.
std::optional<std::pair<Point, Point>> clip_line(Point p, Point d, const Box& b) {
  long double lo = -1e30L, hi = 1e30L;
  auto axis = [&](long double p0, long double dd, long double mn, long double mx) {
    if (std::fabs(dd) < 1e-15L) return p0 >= mn && p0 <= mx;
    long double t0 = (mn - p0) / dd, t1 = (mx - p0) / dd;
    if (t0 > t1) std::swap(t0, t1);
    lo = std::max(lo, t0);
    hi = std::min(hi, t1);
    return true;
  };
  if (!axis(p.x, d.x, b.x0, b.x1) || !axis(p.y, d.y, b.y0, b.y1) || lo > hi) return std::nullopt;
  return std::make_pair(Point{p.x + lo * d.x, p.y + lo * d.y}, Point{p.x + hi * d.x, p.y + hi * d.y});
}

std::string polygon(const char* cls, const char* fill, const std::vector<Point>& pts) {
  std::string s = std::string("  <polygon class=\"") + cls + "\" fill=\"" + fill + "\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + num(pts[i].x) + "," + num(pts[i].y);
  return s + "\"/>\n";
}

std::string line(const std::string& attrs, const std::pair<Point, Point>& seg) {
  return "  <line " + attrs + " x1=\"" + num(seg.first.x) + "\" y1=\"" + num(seg.first.y) + "\" x2=\"" +
         num(seg.second.x) + "\" y2=\"" + num(seg.second.y) + "\"/>\n";
}

}  // namespace

std::string render_svg(const DiagramSpec& spec) {
  if (spec.algebra.rank() != 2) throw std::invalid_argument("diagrams need a rank-2 algebra, got " + spec.algebra.to_string());
  if (spec.level && *spec.level < 1) throw std::invalid_argument("diagram level must be >= 1");
  const RootSystem rs = build_root_system(spec.algebra);
  const Weight shift = spec.shift.value_or(Weight(2));
  rs.check_rank(shift);
  const Projection proj(rs);

  std::map<Weight, Label> plotted;
  if (spec.highest) {
    const auto ws = default_weight_cache().get(rs, *spec.highest);
    for (const auto& [beta, m] : ws->mults()) plotted.emplace(beta + shift, m);
  }

  // Affine wall through its intercepts with the fundamental-weight axes.
  const std::vector<Label>& comarks = rs.integer_comarks();
  const Label K = spec.level ? *spec.level + rs.dual_coxeter() : 0;
  const long double a_int = spec.level ? static_cast<long double>(K) / comarks[0] : 0;
  const long double b_int = spec.level ? static_cast<long double>(K) / comarks[1] : 0;

  std::vector<Point> extent{proj(0, 0)};
  for (const auto& [w, m] : plotted) extent.push_back(proj(w));
  if (spec.level) {
    extent.push_back(proj(a_int, 0));
    extent.push_back(proj(0, b_int));
  }
  if (extent.size() == 1)
    for (const Root& r : rs.positive_roots()) {
      extent.push_back(proj(2 * r.labels));
      extent.push_back(proj(-2 * r.labels));
    }
  Box box{extent[0].x, extent[0].y, extent[0].x, extent[0].y};
  for (Point p : extent) {
    box.x0 = std::min(box.x0, p.x), box.x1 = std::max(box.x1, p.x);
    box.y0 = std::min(box.y0, p.y), box.y1 = std::max(box.y1, p.y);
  }
  const long double pad = kPad * kScale;
  box = {box.x0 - pad, box.y0 - pad, box.x1 + pad, box.y1 + pad};

  std::ostringstream svg;
  const long double w = box.x1 - box.x0, h = box.y1 - box.y0;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\"" << num(h) << "\" viewBox=\""
      << num(box.x0) << " " << num(box.y0) << " " << num(w) << " " << num(h) << "\">\n";
  svg << "  <title>" << spec.algebra.to_string();
  if (spec.highest) svg << " V(" << spec.highest->to_string() << ")";
  if (spec.shift) svg << " shifted by (" << spec.shift->to_string() << ")";
  if (spec.level) svg << " level " << *spec.level;
  svg << "</title>\n";
  svg << "  <defs><clipPath id=\"frame\"><rect x=\"" << num(box.x0) << "\" y=\"" << num(box.y0) << "\" width=\"" << num(w)
      << "\" height=\"" << num(h) << "\"/></clipPath></defs>\n";
  svg << "  <rect class=\"frame\" x=\"" << num(box.x0) << "\" y=\"" << num(box.y0) << "\" width=\"" << num(w)
      << "\" height=\"" << num(h) << "\" fill=\"white\" stroke=\"black\"/>\n";
  svg << "  <g clip-path=\"url(#frame)\">\n";

  // Large enough that the chamber parallelogram and the lattice cover the frame.
  Label reach = 4;
  for (Point p : {Point{box.x0, box.y0}, Point{box.x1, box.y1}, Point{box.x0, box.y1}, Point{box.x1, box.y0}})
    reach = std::max(reach, static_cast<Label>(std::ceil((std::fabs(p.x) + std::fabs(p.y)) / kScale * 4)) + 2);

  if (spec.show_axes) {
    const long double f = static_cast<long double>(reach);
    svg << polygon("chamber", "#e8eef8", {proj(0, 0), proj(f, 0), proj(f, f), proj(0, f)});
  }
  if (spec.level) svg << polygon("alcove", "#c9d8f0", {proj(0, 0), proj(a_int, 0), proj(0, b_int)});

  for (Label a = -reach; a <= reach; ++a)
    for (Label b = -reach; b <= reach; ++b) {
      const Point p = proj(static_cast<long double>(a), static_cast<long double>(b));
      if (!box.contains(p)) continue;
      svg << "    <circle class=\"lattice\" cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"1.500000\" fill=\"#999999\"/>\n";
    }

  if (spec.show_axes)
    for (const Root& r : rs.positive_roots()) {
      // <x, alpha^vee> = c_1 x_1 + c_2 x_2 = 0 along the label direction (c_2, -c_1).
      const Point o = proj(0, 0);
      const Point d = proj(static_cast<long double>(r.coroot_coords[1]), static_cast<long double>(-r.coroot_coords[0]));
      if (auto seg = clip_line(o, {d.x - o.x, d.y - o.y}, box))
        svg << line("class=\"weyl\" data-root=\"" + r.labels.to_string() + "\" stroke=\"#404040\" stroke-width=\"1\"", *seg);
    }
  if (spec.level) {
    const Point p = proj(a_int, 0), q = proj(0, b_int);
    if (auto seg = clip_line(p, {q.x - p.x, q.y - p.y}, box))
      svg << line("class=\"affine\" data-level=\"" + std::to_string(*spec.level) +
                      "\" stroke=\"#b03030\" stroke-width=\"1.5\" stroke-dasharray=\"6,3\"",
                  *seg);
  }

  for (const auto& [x, m] : plotted) {
    const Point p = proj(x);
    std::string wall;
    for (const Root& r : rs.positive_roots())
      if (r.pair(x) == 0) wall = "finite";
    if (spec.level && rs.level_of(x) == K) wall = wall.empty() ? "affine" : wall + " affine";
    svg << "    <circle class=\"weight\" data-weight=\"" << x.to_string() << "\" data-mult=\"" << m << "\"";
    if (!wall.empty()) svg << " data-wall=\"" << wall << "\"";
    svg << " cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"3.500000\" fill=\"black\"/>\n";
    if (spec.show_mults)
      svg << "    <text class=\"mult\" x=\"" << num(p.x + 4) << "\" y=\"" << num(p.y - 4)
          << "\" font-size=\"10\" font-family=\"sans-serif\">" << m << "</text>\n";
  }
  svg << "  </g>\n</svg>\n";
  return svg.str();
}

}  // namespace fusionkit
