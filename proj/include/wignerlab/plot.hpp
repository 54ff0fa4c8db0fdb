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


#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "wignerlab/io.hpp"
#include "wignerlab/wigner.hpp"

namespace wignerlab {

// Coordinates along the (orthogonal, unnormalized) plot axes.
struct PlotPoint {
  Rational u;
  Rational v;
  friend bool operator==(const PlotPoint&, const PlotPoint&) = default;
};

struct PlotData {
  std::size_t image_dimension = 0;
  Vector origin;
  /// Orthogonal axes in grid space: first from edges of W(K) in vertex order,
  /// then completed from the delta distributions in phase-point order.
  std::vector<Vector> axes;
  std::vector<PlotPoint> references;  // delta_ab, phase-point order
  std::vector<std::string> labels;
  std::vector<std::size_t> simplex_hull;  // indices into references, counterclockwise
  /// Prob cut by the plane of W(K); set only for two-dimensional images.
  std::vector<PlotPoint> section;
  /// Polytopes: hull of the vertex images, counterclockwise.
  std::vector<PlotPoint> image;
  /// Balls: the image is center + {A d : |d| <= 1}; shape = A A^T as (a, b, c).
  bool ellipse = false;
  PlotPoint ellipse_center;
  std::array<Rational, 3> ellipse_shape;
};

/// Throws UnsupportedGeometry when aff W(K) has dimension above two.
PlotData plot_data(const WignerRep& w, const StateSpace& k);

/// 800x800 SVG, coordinates printed with four decimals.
std::string render_svg(const PlotData& data, const std::string& title);

std::string plot_svg(const TheoryDocument& doc, const std::string& rep = {});

/// Exact point-in-convex-polygon test (boundary counts as inside).
bool inside_polygon(const std::vector<PlotPoint>& polygon, const PlotPoint& p);

}  // namespace wignerlab
