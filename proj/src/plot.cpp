// Copyright 2026 The wignerlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "wignerlab/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "wignerlab/errors.hpp"

namespace wignerlab {

namespace {

constexpr double kSize = 800;
constexpr double kMargin = 70;

// Adds d to the orthogonal family when it is independent of it.
bool extend_basis(std::vector<Vector>& axes, Vector d) {
  for (const auto& u : axes) d = d - (dot(d, u) / dot(u, u)) * u;
  if (is_zero(d)) return false;
  axes.push_back(std::move(d));
  return true;
}

PlotPoint project(const PlotData& data, const Vector& y) {
  Vector d = y - data.origin;
  PlotPoint p{0, 0};
  if (data.axes.size() > 0) p.u = dot(d, data.axes[0]) / dot(data.axes[0], data.axes[0]);
  if (data.axes.size() > 1) p.v = dot(d, data.axes[1]) / dot(data.axes[1], data.axes[1]);
  return p;
}

Rational cross(const PlotPoint& o, const PlotPoint& a, const PlotPoint& b) {
  return (a.u - o.u) * (b.v - o.v) - (a.v - o.v) * (b.u - o.u);
}

bool lex_less(const PlotPoint& a, const PlotPoint& b) {
  return a.u < b.u || (a.u == b.u && a.v < b.v);
}

// Monotone chain; counterclockwise from the lexicographically least point,
// collinear points dropped. Returns indices.
std::vector<std::size_t> hull(const std::vector<PlotPoint>& pts) {
  std::vector<std::size_t> idx(pts.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return lex_less(pts[a], pts[b]) || (pts[a] == pts[b] && a < b);
  });
  idx.erase(std::unique(idx.begin(), idx.end(),
                        [&](std::size_t a, std::size_t b) { return pts[a] == pts[b]; }),
            idx.end());
  if (idx.size() < 3) return idx;
  std::vector<std::size_t> out(2 * idx.size());
  std::size_t k = 0;
  for (std::size_t i : idx) {
    while (k >= 2 && cross(pts[out[k - 2]], pts[out[k - 1]], pts[i]) <= 0) --k;
    out[k++] = i;
  }
  for (std::size_t j = idx.size() - 1, t = k + 1; j-- > 0;) {
    std::size_t i = idx[j];
    while (k >= t && cross(pts[out[k - 2]], pts[out[k - 1]], pts[i]) <= 0) --k;
    out[k++] = i;
  }
  out.resize(k - 1);
  return out;
}

std::vector<PlotPoint> hull_points(const std::vector<PlotPoint>& pts) {
  std::vector<PlotPoint> out;
  for (std::size_t i : hull(pts)) out.push_back(pts[i]);
  return out;
}

// Prob cut by the plane origin + s a0 + t a1: vertices of {y_i >= 0}.
std::vector<PlotPoint> section(const PlotData& data) {
  const Vector& o = data.origin;
  const Vector& a0 = data.axes[0];
  const Vector& a1 = data.axes[1];
  std::vector<PlotPoint> corners;
  for (std::size_t i = 0; i < o.size(); ++i)
    for (std::size_t j = i + 1; j < o.size(); ++j) {
      Rational det = a0[i] * a1[j] - a1[i] * a0[j];
      if (det == 0) continue;
      // s a0 + t a1 = -o on rows i, j.
      PlotPoint p{(-o[i] * a1[j] + a1[i] * o[j]) / det, (-a0[i] * o[j] + o[i] * a0[j]) / det};
      bool ok = true;
      for (std::size_t r = 0; r < o.size() && ok; ++r) ok = o[r] + p.u * a0[r] + p.v * a1[r] >= 0;
      if (ok) corners.push_back(p);
    }
  return hull_points(corners);
}

struct Frame {
  double scale_u, scale_v;  // axis lengths
  double zoom = 1, shift_x = 0, shift_y = 0;

  std::pair<double, double> raw(const PlotPoint& p) const {
    return {p.u.get_d() * scale_u, p.v.get_d() * scale_v};
  }
  std::pair<double, double> screen(double x, double y) const {
    return {shift_x + zoom * x, kSize - (shift_y + zoom * y)};
  }
  std::pair<double, double> operator()(const PlotPoint& p) const {
    auto [x, y] = raw(p);
    return screen(x, y);
  }
};

std::string num(double x) {
  if (std::fabs(x) < 5e-5) x = 0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '&') out += "&amp;";
    else if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '"') out += "&quot;";
    else out += c;
  }
  return out;
}

std::string points_attr(const Frame& f, const std::vector<PlotPoint>& pts) {
  std::string out;
  for (const auto& p : pts) {
    auto [x, y] = f(p);
    if (!out.empty()) out += ' ';
    out += num(x) + "," + num(y);
  }
  return out;
}

// Principal axes of the 2x2 form [[a, b], [b, c]].
struct EllipseAxes {
  double rx, ry, angle_deg;
};

EllipseAxes principal(double a, double b, double c) {
  const double mean = (a + c) / 2, diff = (a - c) / 2;
  const double root = std::sqrt(diff * diff + b * b);
  const double l1 = std::max(mean + root, 0.0), l2 = std::max(mean - root, 0.0);
  const double angle = 0.5 * std::atan2(2 * b, a - c);
  return {std::sqrt(l1), std::sqrt(l2), angle * 180.0 / M_PI};
}

}  // namespace

bool inside_polygon(const std::vector<PlotPoint>& polygon, const PlotPoint& p) {
  if (polygon.empty()) return false;
  if (polygon.size() == 1) return polygon[0] == p;
  for (std::size_t i = 0; i < polygon.size(); ++i)
    if (cross(polygon[i], polygon[(i + 1) % polygon.size()], p) < 0) return false;
  if (polygon.size() == 2) return cross(polygon[0], polygon[1], p) == 0;
  return true;
}

PlotData plot_data(const WignerRep& w, const StateSpace& k) {
  PlotData data;
  const std::size_t n = w.phase_points();
  Matrix linear(n, k.ambient_dimension());
  for (std::size_t e = 0; e < n; ++e)
    for (std::size_t c = 0; c < k.ambient_dimension(); ++c) linear(e, c) = w.entry(e).linear[c];

  std::vector<Vector> image_points;
  if (k.is_polytope()) {
    for (const auto& v : k.vertices()) image_points.push_back(evaluate_flat(w, v));
    data.origin = image_points.front();
    for (std::size_t i = 1; i < image_points.size(); ++i)
      extend_basis(data.axes, image_points[i] - data.origin);
  } else {
    const Ball& b = k.as_ball();
    data.origin = evaluate_flat(w, b.center);
    for (std::size_t c = 0; c < k.ambient_dimension(); ++c) {
      Vector col(n);
      for (std::size_t e = 0; e < n; ++e) col[e] = linear(e, c);
      extend_basis(data.axes, col);
    }
  }
  data.image_dimension = data.axes.size();
  if (data.image_dimension > 2)
    throw UnsupportedGeometry("cannot plot: W(K) spans " + std::to_string(data.image_dimension) +
                              " dimensions, at most 2 can be drawn");
  for (std::size_t e = 0; e < n && data.axes.size() < 2; ++e)
    extend_basis(data.axes, unit_vector(n, e) - data.origin);

  for (std::size_t e = 0; e < n; ++e) {
    data.references.push_back(project(data, unit_vector(n, e)));
    data.labels.push_back(w.a.outcomes[e / w.cols()] + "," + w.b.outcomes[e % w.cols()]);
  }
  data.simplex_hull = hull(data.references);
  if (data.image_dimension == 2) data.section = section(data);

  if (k.is_polytope()) {
    std::vector<PlotPoint> pts;
    for (const auto& y : image_points) pts.push_back(project(data, y));
    data.image = hull_points(pts);
  } else {
    data.ellipse = true;
    data.ellipse_center = project(data, data.origin);
    // Rows of A: radius * (axis . column_c) / |axis|^2.
    const Rational r = k.as_ball().radius;
    std::array<Vector, 2> a{zeros(k.ambient_dimension()), zeros(k.ambient_dimension())};
    for (std::size_t i = 0; i < 2 && i < data.axes.size(); ++i)
      for (std::size_t c = 0; c < k.ambient_dimension(); ++c) {
        Rational s = 0;
        for (std::size_t e = 0; e < n; ++e) s += data.axes[i][e] * linear(e, c);
        a[i][c] = r * s / dot(data.axes[i], data.axes[i]);
      }
    data.ellipse_shape = {dot(a[0], a[0]), dot(a[0], a[1]), dot(a[1], a[1])};
  }
  return data;
}

std::string render_svg(const PlotData& data, const std::string& title) {
  Frame f{data.axes.size() > 0 ? std::sqrt(dot(data.axes[0], data.axes[0]).get_d()) : 1.0,
          data.axes.size() > 1 ? std::sqrt(dot(data.axes[1], data.axes[1]).get_d()) : 1.0};

  EllipseAxes ell{0, 0, 0};
  if (data.ellipse) {
    // Display coordinates scale each axis by its length.
    const double a = data.ellipse_shape[0].get_d() * f.scale_u * f.scale_u;
    const double b = data.ellipse_shape[1].get_d() * f.scale_u * f.scale_v;
    const double c = data.ellipse_shape[2].get_d() * f.scale_v * f.scale_v;
    ell = principal(a, b, c);
  }

  double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
  auto grow = [&](double x, double y) {
    lo_x = std::min(lo_x, x), hi_x = std::max(hi_x, x);
    lo_y = std::min(lo_y, y), hi_y = std::max(hi_y, y);
  };
  for (const auto& p : data.references) grow(f.raw(p).first, f.raw(p).second);
  for (const auto& p : data.image) grow(f.raw(p).first, f.raw(p).second);
  if (data.ellipse) {
    auto [cx, cy] = f.raw(data.ellipse_center);
    const double ext = std::max(ell.rx, ell.ry);
    grow(cx - ext, cy - ext);
    grow(cx + ext, cy + ext);
  }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  f.zoom = (kSize - 2 * kMargin) / span;
  f.shift_x = kMargin + ((kSize - 2 * kMargin) - f.zoom * (hi_x - lo_x)) / 2 - f.zoom * lo_x;
  f.shift_y = kMargin + ((kSize - 2 * kMargin) - f.zoom * (hi_y - lo_y)) / 2 - f.zoom * lo_y;

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  s += "<title>" + escape(title) + "</title>\n";
  s += "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";

  std::vector<PlotPoint> outline;
  for (std::size_t i : data.simplex_hull) outline.push_back(data.references[i]);
  s += "<polygon class=\"simplex\" points=\"" + points_attr(f, outline) +
       "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1.5\"/>\n";
  if (!data.section.empty())
    s += "<polygon class=\"probability-section\" points=\"" + points_attr(f, data.section) +
         "\" fill=\"#eeeeee\" stroke=\"#555555\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";

  if (data.ellipse) {
    auto [cx, cy] = f(data.ellipse_center);
    if (ell.ry * f.zoom < 1e-9) {
      const double t = ell.angle_deg * M_PI / 180, len = ell.rx * f.zoom;
      s += "<line class=\"image\" x1=\"" + num(cx - len * std::cos(t)) + "\" y1=\"" +
           num(cy + len * std::sin(t)) + "\" x2=\"" + num(cx + len * std::cos(t)) + "\" y2=\"" +
           num(cy - len * std::sin(t)) + "\" stroke=\"#2255aa\" stroke-width=\"3\"/>\n";
    } else {
      s += "<ellipse class=\"image\" cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" rx=\"" +
           num(ell.rx * f.zoom) + "\" ry=\"" + num(ell.ry * f.zoom) + "\" transform=\"rotate(" +
           num(-ell.angle_deg) + " " + num(cx) + " " + num(cy) +
           ")\" fill=\"#2255aa\" fill-opacity=\"0.25\" stroke=\"#2255aa\" stroke-width=\"2\"/>\n";
    }
  } else if (data.image.size() == 1) {
    auto [x, y] = f(data.image.front());
    s += "<circle class=\"image\" cx=\"" + num(x) + "\" cy=\"" + num(y) +
         "\" r=\"7\" fill=\"#2255aa\"/>\n";
  } else if (data.image.size() == 2) {
    auto [x1, y1] = f(data.image[0]);
    auto [x2, y2] = f(data.image[1]);
    s += "<line class=\"image\" x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) +
         "\" y2=\"" + num(y2) + "\" stroke=\"#2255aa\" stroke-width=\"3\"/>\n";
  } else {
    s += "<polygon class=\"image\" points=\"" + points_attr(f, data.image) +
         "\" fill=\"#2255aa\" fill-opacity=\"0.25\" stroke=\"#2255aa\" stroke-width=\"2\"/>\n";
  }
  if (data.image.size() > 1)
    for (const auto& p : data.image) {
      auto [x, y] = f(p);
      s += "<circle class=\"image-vertex\" cx=\"" + num(x) + "\" cy=\"" + num(y) +
           "\" r=\"3.5\" fill=\"#2255aa\"/>\n";
    }

  for (std::size_t i = 0; i < data.references.size(); ++i) {
    auto [x, y] = f(data.references[i]);
    s += "<circle class=\"reference\" cx=\"" + num(x) + "\" cy=\"" + num(y) +
         "\" r=\"4\" fill=\"black\"/>\n";
    s += "<text x=\"" + num(x + 8) + "\" y=\"" + num(y - 8) +
         "\" font-family=\"sans-serif\" font-size=\"16\">&#948;(" + escape(data.labels[i]) +
         ")</text>\n";
  }
  s += "</svg>\n";
  return s;
}

std::string plot_svg(const TheoryDocument& doc, const std::string& rep) {
  const WignerRep& w = doc.rep(rep);
  return render_svg(plot_data(w, doc.theory.state_space), doc.name.empty() ? w.name : doc.name + ": " + w.name);
}

}  // namespace wignerlab
