#include "sixsplit/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sixsplit::cli {

namespace {

using cp1::Complex;
using cp1::Vec3;

constexpr double kCanvas = 1000.0;
constexpr double kHalf = 500.0;
constexpr double kReach = 480.0;
constexpr std::array<const char*, 3> kPairColors{"#d62728", "#1f77b4", "#2ca02c"};
constexpr const char* kUnpaired = "#444444";

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x == 0.0 ? 0.0 : x);
  return buf;
}

struct Px {
  double x;
  double y;
};

std::string points_attr(const std::vector<Px>& pts) {
  std::string s;
  for (const Px& p : pts) {
    if (!s.empty()) s += ' ';
    s += num(p.x) + "," + num(p.y);
  }
  return s;
}

int pair_of(const Scene& scene, int i) {
  if (!scene.pairing) return -1;
  for (int j = 0; j < 3; ++j) {
    if ((*scene.pairing)[j][0] == i || (*scene.pairing)[j][1] == i) return j;
  }
  return -1;
}

const char* point_color(const Scene& scene, int i) {
  const int j = pair_of(scene, i);
  return j < 0 ? kUnpaired : kPairColors[j];
}

std::string header() {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" "
         "height=\"1000\" viewBox=\"0 0 1000 1000\">\n"
         "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"#ffffff\"/>\n";
}

// --- plane view -------------------------------------------------------------

class PlaneFrame {
 public:
  explicit PlaneFrame(double extent) : extent_(extent), scale_(kReach / extent) {}
  Px operator()(Complex z) const { return {kHalf + scale_ * z.real(), kHalf - scale_ * z.imag()}; }
  double length(double r) const { return scale_ * r; }
  double extent() const { return extent_; }

 private:
  double extent_;
  double scale_;
};

std::vector<Px> circle_polyline(const PlaneFrame& f, Complex c, double r, double from_deg,
                                double to_deg) {
  std::vector<Px> pts;
  const int steps = 240;
  for (int k = 0; k <= steps; ++k) {
    const double t = (from_deg + (to_deg - from_deg) * k / steps) * std::numbers::pi / 180.0;
    pts.push_back(f(c + std::polar(r, t)));
  }
  return pts;
}

// Square [-R, R]^2 clipped to { Re(conj(n) z) >= offset }.
std::vector<Complex> clip_square(double R, Complex n, double offset) {
  const std::vector<Complex> square{{-R, -R}, {R, -R}, {R, R}, {-R, R}};
  auto side = [&](Complex z) { return (std::conj(n) * z).real() - offset; };
  std::vector<Complex> out;
  for (std::size_t i = 0; i < square.size(); ++i) {
    const Complex a = square[i];
    const Complex b = square[(i + 1) % square.size()];
    const double sa = side(a);
    const double sb = side(b);
    if (sa >= 0.0) out.push_back(a);
    if ((sa >= 0.0) != (sb >= 0.0)) out.push_back(a + (b - a) * (sa / (sa - sb)));
  }
  return out;
}

void draw_plane_disc(std::ostringstream& s, const PlaneFrame& f, const cp1::GeneralizedDisc& d,
                     const char* color) {
  const std::string style = std::string(" fill=\"") + color + "\" fill-opacity=\"0.18\" stroke=\"" +
                            color + "\" stroke-width=\"2\"";
  switch (d.kind(1e-12)) {
    case cp1::DiscKind::Disk: {
      const Px c = f(d.center());
      s << "<circle cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\""
        << num(f.length(d.radius())) << "\"" << style << "/>\n";
      break;
    }
    case cp1::DiscKind::Codisk: {
      const Px c = f(d.center());
      const double r = f.length(d.radius());
      // Outer box must enclose the hole; the frame clip trims the rest.
      const double x0 = std::min(0.0, c.x - r - 10.0);
      const double y0 = std::min(0.0, c.y - r - 10.0);
      const double x1 = std::max(kCanvas, c.x + r + 10.0);
      const double y1 = std::max(kCanvas, c.y + r + 10.0);
      s << "<path fill-rule=\"evenodd\" d=\"M " << num(x0) << " " << num(y0) << " H " << num(x1)
        << " V " << num(y1) << " H " << num(x0) << " Z M " << num(c.x - r) << " "
        << num(c.y) << " A " << num(r) << " " << num(r) << " 0 1 0 " << num(c.x + r) << " "
        << num(c.y) << " A " << num(r) << " " << num(r) << " 0 1 0 " << num(c.x - r) << " "
        << num(c.y) << " Z\"" << style << "/>\n";
      break;
    }
    case cp1::DiscKind::HalfPlane: {
      std::vector<Px> poly;
      for (const Complex z : clip_square(f.extent(), d.normal(), d.offset())) poly.push_back(f(z));
      if (poly.size() >= 3) s << "<polygon points=\"" << points_attr(poly) << "\"" << style << "/>\n";
      break;
    }
  }
}

std::string render_plane(const Scene& scene) {
  double reach = 0.0;
  for (const auto& p : scene.points) {
    if (p.is_finite()) reach = std::max(reach, std::abs(p.value()));
  }
  const PlaneFrame f(std::max(4.0, 1.15 * reach));
  std::ostringstream s;
  s << header();
  const Px o = f({0.0, 0.0});
  const Px lo = f({-f.extent(), -f.extent()});
  const Px hi = f({f.extent(), f.extent()});
  s << "<line x1=\"" << num(lo.x) << "\" y1=\"" << num(o.y) << "\" x2=\"" << num(hi.x) << "\" y2=\""
    << num(o.y) << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  s << "<line x1=\"" << num(o.x) << "\" y1=\"" << num(lo.y) << "\" x2=\"" << num(o.x) << "\" y2=\""
    << num(hi.y) << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  // Outline of the two radius-2 discs about -1 and 1.
  s << "<polyline points=\"" << points_attr(circle_polyline(f, 1.0, 2.0, -120.0, 120.0))
    << "\" fill=\"none\" stroke=\"#555555\" stroke-width=\"1.5\" stroke-dasharray=\"8 5\"/>\n";
  s << "<polyline points=\"" << points_attr(circle_polyline(f, -1.0, 2.0, 60.0, 300.0))
    << "\" fill=\"none\" stroke=\"#555555\" stroke-width=\"1.5\" stroke-dasharray=\"8 5\"/>\n";
  s << "<circle cx=\"" << num(o.x) << "\" cy=\"" << num(o.y) << "\" r=\"" << num(f.length(1.0))
    << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"4 4\"/>\n";
  if (scene.discs) {
    s << "<clipPath id=\"frame\"><rect x=\"" << num(lo.x) << "\" y=\"" << num(hi.y)
      << "\" width=\"" << num(hi.x - lo.x) << "\" height=\"" << num(lo.y - hi.y)
      << "\"/></clipPath>\n<g clip-path=\"url(#frame)\">\n";
    for (int j = 0; j < 3; ++j) {
      draw_plane_disc(s, f, (*scene.discs)[j], scene.pairing ? kPairColors[j] : kUnpaired);
    }
    s << "</g>\n";
  }
  double legend_y = 30.0;
  for (int i = 0; i < 6; ++i) {
    const auto& p = scene.points[i];
    if (p.is_infinity()) {
      s << "<text x=\"20\" y=\"" << num(legend_y) << "\" font-family=\"sans-serif\" font-size=\"18\" fill=\""
        << point_color(scene, i) << "\">point " << i << " at infinity</text>\n";
      legend_y += 24.0;
      continue;
    }
    const Px c = f(p.value());
    s << "<circle cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\"5\" fill=\""
      << point_color(scene, i) << "\"/>\n";
    s << "<text x=\"" << num(c.x + 8.0) << "\" y=\"" << num(c.y - 8.0)
      << "\" font-family=\"sans-serif\" font-size=\"16\" fill=\"#000000\">" << i << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

// --- sphere view ------------------------------------------------------------

struct Camera {
  Vec3 toward;  // unit vector from the origin to the viewer
  Vec3 right;
  Vec3 up;
};

Camera fixed_camera() {
  const Vec3 toward = cp1::normalized({0.55, -0.75, 0.45});
  const Vec3 right = cp1::normalized(cp1::cross({0.0, 0.0, 1.0}, toward));
  return {toward, right, cp1::cross(toward, right)};
}

Px project(const Camera& cam, const Vec3& p) {
  return {kHalf + 450.0 * cp1::dot(p, cam.right), kHalf - 450.0 * cp1::dot(p, cam.up)};
}

void draw_cap(std::ostringstream& s, const Camera& cam, const cp1::SphericalCap& cap,
              const char* color) {
  const Vec3 u = cap.center;
  const Vec3 axis = std::abs(u[0]) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
  const Vec3 e1 = cp1::normalized(cp1::cross(u, axis));
  const Vec3 e2 = cp1::cross(u, e1);
  const double c = std::cos(cap.angular_radius);
  const double r = std::sin(cap.angular_radius);
  // Front and back runs of the boundary circle, drawn solid and dashed.
  std::vector<std::pair<bool, std::vector<Px>>> runs;
  const int steps = 240;
  for (int k = 0; k <= steps; ++k) {
    const double t = 2.0 * std::numbers::pi * k / steps;
    Vec3 p{};
    for (int a = 0; a < 3; ++a) p[a] = c * u[a] + r * (std::cos(t) * e1[a] + std::sin(t) * e2[a]);
    const bool front = cp1::dot(p, cam.toward) >= 0.0;
    if (runs.empty() || runs.back().first != front) {
      if (!runs.empty()) runs.back().second.push_back(project(cam, p));
      runs.push_back({front, {}});
    }
    runs.back().second.push_back(project(cam, p));
  }
  for (const auto& [front, pts] : runs) {
    if (pts.size() < 2) continue;
    s << "<polyline points=\"" << points_attr(pts) << "\" fill=\"none\" stroke=\"" << color
      << "\" stroke-width=\"2\"" << (front ? "" : " stroke-opacity=\"0.4\" stroke-dasharray=\"6 4\"")
      << "/>\n";
  }
  const Px cc = project(cam, u);
  s << "<circle cx=\"" << num(cc.x) << "\" cy=\"" << num(cc.y) << "\" r=\"3\" fill=\"" << color
    << "\" fill-opacity=\"" << (cp1::dot(u, cam.toward) >= 0.0 ? "0.8" : "0.3") << "\"/>\n";
}

std::string render_sphere(const Scene& scene) {
  const Camera cam = fixed_camera();
  std::ostringstream s;
  s << header();
  s << "<circle cx=\"500.000\" cy=\"500.000\" r=\"450.000\" fill=\"#f7f7f7\" stroke=\"#333333\" "
       "stroke-width=\"1.5\"/>\n";
  // Equator, the image of the unit circle.
  draw_cap(s, cam, {{0.0, 0.0, -1.0}, std::numbers::pi / 2.0}, "#888888");
  if (scene.discs) {
    for (int j = 0; j < 3; ++j) {
      draw_cap(s, cam, cp1::disc_to_cap((*scene.discs)[j]), scene.pairing ? kPairColors[j] : kUnpaired);
    }
  }
  for (int i = 0; i < 6; ++i) {
    const Vec3 p = scene.points[i].to_sphere();
    const Px c = project(cam, p);
    const bool front = cp1::dot(p, cam.toward) >= 0.0;
    s << "<circle cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\"6\" fill=\""
      << (front ? point_color(scene, i) : "none") << "\" stroke=\"" << point_color(scene, i)
      << "\" stroke-width=\"2\"/>\n";
    s << "<text x=\"" << num(c.x + 9.0) << "\" y=\"" << num(c.y - 9.0)
      << "\" font-family=\"sans-serif\" font-size=\"16\" fill=\"#000000\">" << i << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace

View parse_view(const std::string& name) {
  if (name == "plane") return View::Plane;
  if (name == "sphere") return View::Sphere;
  throw std::invalid_argument("unknown view: " + name);
}

std::string render_svg(const Scene& scene, View view) {
  return view == View::Plane ? render_plane(scene) : render_sphere(scene);
}

}  // namespace sixsplit::cli
