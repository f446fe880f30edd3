#include "mvkit/export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace mvkit {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::abs(x) < 5e-4 ? 0.0 : x);
  return buf;
}

}  // namespace

std::vector<std::pair<double, double>> face_layout(const Face2& f) {
  const double angle = f.classification == "A2" ? 2.0 * M_PI / 3.0 : M_PI / 2.0;
  std::vector<std::pair<double, double>> out;
  if (f.cycle.empty()) return out;
  RootVector origin = f.cycle.front();
  for (const auto& v : f.cycle)
    if (height(v) < height(origin)) origin = v;
  for (const auto& v : f.cycle) {
    auto c = plane_coords(sub(v, origin), f.beta1, f.beta2);
    if (!c) throw Error("face point " + to_string(v) + " is not in the plane of its roots");
    double a = c->first.get_d(), b = c->second.get_d();
    out.emplace_back(a + b * std::cos(angle), b * std::sin(angle));
  }
  return out;
}

std::string face_to_svg(const Face2& f) {
  constexpr double unit = 40, margin = 20;
  auto pts = face_layout(f);
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  for (auto [x, y] : pts) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  // svg y grows downwards
  auto X = [&](double x) { return margin + unit * (x - xmin); };
  auto Y = [&](double y) { return margin + unit * (ymax - y); };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(2 * margin + unit * (xmax - xmin))
     << "\" height=\"" << fmt(2 * margin + unit * (ymax - ymin)) << "\">\n";
  os << "<!-- face " << to_string(f.theta) << " type " << f.classification << " -->\n";
  os << "<polygon fill=\"#dde6f0\" stroke=\"black\" points=\"";
  for (std::size_t k = 0; k < pts.size(); ++k) os << (k ? " " : "") << fmt(X(pts[k].first)) << "," << fmt(Y(pts[k].second));
  os << "\"/>\n";
  for (std::size_t k = 0; k < pts.size(); ++k)
    os << "<circle cx=\"" << fmt(X(pts[k].first)) << "\" cy=\"" << fmt(Y(pts[k].second))
       << "\" r=\"2.5\"><title>" << to_string(f.cycle[k]) << "</title></circle>\n";
  os << "</svg>\n";
  return os.str();
}

std::string face_to_tikz(const Face2& f) {
  auto pts = face_layout(f);
  std::ostringstream os;
  os << "% face " << to_string(f.theta) << " type " << f.classification << "\n";
  os << "\\begin{tikzpicture}\n";
  if (!pts.empty()) {
    os << "  \\draw ";
    for (auto [x, y] : pts) os << "(" << fmt(x) << "," << fmt(y) << ") -- ";
    os << "cycle;\n";
  }
  for (std::size_t k = 0; k < pts.size(); ++k)
    os << "  \\fill (" << fmt(pts[k].first) << "," << fmt(pts[k].second) << ") circle (1.5pt) node[above right] {\\tiny $"
       << to_string(f.cycle[k]) << "$};\n";
  os << "\\end{tikzpicture}\n";
  return os.str();
}

}  // namespace mvkit
