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

#include "wignerlab/theory.hpp"

#include "wignerlab/errors.hpp"

namespace wignerlab {

const Observable& Theory::observable(const std::string& name) const {
  for (const auto& o : observables)
    if (o.name == name) return o;
  throw PreconditionError("no observable named '" + name + "'");
}

Channel Channel::certify(const StateSpace& k1, const AffineMap& map, const StateSpace& k2) {
  ContainmentResult r = map_into(k1, map, k2);
  if (!r.contained) throw PreconditionError("map does not send the source into the target");
  return Channel(map);
}

bool equal_on(const StateSpace& k, const AffineFunctional& f, const AffineFunctional& g) {
  AffineChart chart(k);
  return chart.coordinates(f) == chart.coordinates(g);
}

// ---------------------------------------------------------------------------

std::vector<Violation> validate(const StateSpace& k, const Observable& obs) {
  std::vector<Violation> out;
  const std::size_t dim = k.ambient_dimension();
  if (obs.effects.empty()) {
    out.push_back({Violation::Kind::no_outcomes, obs.name, std::nullopt, std::nullopt, false, Rational(0),
                   "observable has no outcomes"});
    return out;
  }
  for (std::size_t a = 0; a < obs.effects.size(); ++a)
    if (obs.effects[a].dimension() != dim) {
      out.push_back({Violation::Kind::wrong_dimension, obs.name, a, std::nullopt, false, Rational(0),
                     "effect has " + std::to_string(obs.effects[a].dimension()) +
                         " coefficients, state space dimension is " + std::to_string(dim)});
    }
  if (!out.empty()) return out;

  auto witness_of = [&](const Extremizer& e) -> std::pair<Vector, bool> {
    if (e.vertex) return {k.vertices()[*e.vertex], false};
    return {e.ball_direction, true};
  };

  for (std::size_t a = 0; a < obs.effects.size(); ++a) {
    const AffineFunctional& f = obs.effects[a];
    ExtremalRange range = extremal_range(k, f);
    if (range.min.compare(0) < 0) {
      auto [w, dir] = witness_of(minimizer(k, f));
      out.push_back({Violation::Kind::below_zero, obs.name, a, w, dir, range.min,
                     "effect takes value " + range.min.to_string() + " < 0"});
    }
    if (range.max.compare(1) > 0) {
      auto [w, dir] = witness_of(maximizer(k, f));
      out.push_back({Violation::Kind::above_one, obs.name, a, w, dir, range.max,
                     "effect takes value " + range.max.to_string() + " > 1"});
    }
  }

  AffineFunctional sum = AffineFunctional::constant_function(dim, 0);
  for (const auto& f : obs.effects) sum = sum + f;
  AffineChart chart(k);
  for (const auto& p : chart.points()) {
    Rational v = sum(p);
    if (v != 1) {
      out.push_back({Violation::Kind::not_normalized, obs.name, std::nullopt, p, false, v,
                     "effects sum to " + to_string(v) + " instead of 1"});
      break;
    }
  }
  return out;
}

std::vector<Violation> validate(const Theory& theory) {
  std::vector<Violation> out;
  for (const auto& obs : theory.observables) {
    auto v = validate(theory.state_space, obs);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

Distribution measure(const Observable& obs, const StateSpace& k, const Vector& x) {
  if (x.size() != k.ambient_dimension() || !contains(k, x))
    throw DomainError("measure: point is not in the state space");
  Distribution d;
  d.reserve(obs.effects.size());
  for (const auto& f : obs.effects) d.push_back(f(x));
  return d;
}

// ---------------------------------------------------------------------------

namespace {

void require_polytope(const StateSpace& k, const char* what) {
  if (!k.is_polytope()) throw UnsupportedGeometry(std::string("unsupported geometry: ") + what +
                                                  " needs a polytope state space");
}

std::vector<Vector> vertex_barycentrics(const AffineChart& chart, const StateSpace& k) {
  std::vector<Vector> out;
  for (const auto& v : k.vertices()) out.push_back(*chart.barycentric(v));
  return out;
}

}  // namespace

LinearProgram compatibility_program(const Observable& a, const Observable& b,
                                    const StateSpace& k) {
  require_polytope(k, "compatibility");
  AffineChart chart(k);
  const std::size_t na = a.size(), nb = b.size(), m = chart.size();
  const auto bary = vertex_barycentrics(chart, k);
  auto var = [&](std::size_t i, std::size_t j, std::size_t p) { return (i * nb + j) * m + p; };

  LinearProgram lp;
  lp.variables = na * nb * m;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t p = 0; p < m; ++p) {
      Vector row = zeros(lp.variables);
      for (std::size_t j = 0; j < nb; ++j) row[var(i, j, p)] = 1;
      lp.add_equality(std::move(row), a.effects[i](chart.points()[p]));
    }
  for (std::size_t j = 0; j < nb; ++j)
    for (std::size_t p = 0; p < m; ++p) {
      Vector row = zeros(lp.variables);
      for (std::size_t i = 0; i < na; ++i) row[var(i, j, p)] = 1;
      lp.add_equality(std::move(row), b.effects[j](chart.points()[p]));
    }
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (const auto& beta : bary) {
        Vector row = zeros(lp.variables);
        for (std::size_t p = 0; p < m; ++p) row[var(i, j, p)] = beta[p];
        lp.add_inequality(std::move(row), 0);
      }

  return lp;
}

CompatibilityResult are_compatible(const Observable& a, const Observable& b, const StateSpace& k) {
  CompatibilityResult out;
  out.program = compatibility_program(a, b, k);
  const LinearProgram& lp = out.program;
  AffineChart chart(k);
  const std::size_t na = a.size(), nb = b.size(), m = chart.size();
  auto var = [&](std::size_t i, std::size_t j, std::size_t p) { return (i * nb + j) * m + p; };

  FeasibilityResult r = lp_feasible(lp);
  if (!r.feasible()) {
    out.certificate = r.certificate();
    return out;
  }
  FunctionalGrid grid(na, std::vector<AffineFunctional>(nb));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      Vector values(m);
      for (std::size_t p = 0; p < m; ++p) values[p] = r.witness()[var(i, j, p)];
      grid[i][j] = chart.functional(values);
    }
  out.joint = std::move(grid);
  return out;
}

std::size_t effect_span_rank(const Observable& a, const Observable& b, const StateSpace& k) {
  AffineChart chart(k);
  std::vector<Vector> rows;
  for (const auto& f : a.effects) rows.push_back(chart.coordinates(f));
  for (const auto& f : b.effects) rows.push_back(chart.coordinates(f));
  return rank(Matrix::from_rows(rows, chart.size()));
}

bool jointly_info_complete(const Observable& a, const Observable& b, const StateSpace& k) {
  return effect_span_rank(a, b, k) == dimension(k) + 1;
}

namespace {

// Whenever an outcome of `x` is certain, `y` must be uniform.
bool certain_forces_uniform(const Observable& x, const Observable& y, const StateSpace& k) {
  const Rational uniform = frac(1, static_cast<long>(y.size()));
  if (k.is_polytope()) {
    for (const auto& f : x.effects)
      for (const auto& v : k.vertices()) {
        if (f(v) != 1) continue;
        for (const auto& g : y.effects)
          if (g(v) != uniform) return false;
      }
    return true;
  }
  const Ball& ball = k.as_ball();
  for (const auto& f : x.effects) {
    ExtremalValue top = extremal_range(k, f).max;
    if (top.compare(1) < 0) continue;
    if (is_zero(f.linear))
      throw UnsupportedGeometry("unsupported degenerate face: effect is constantly 1 on the ball");
    // Unique maximiser c + r l/|l|; g there equals g(c) + r (l_g . l)/L * sqrt(L).
    const Rational norm2 = dot(f.linear, f.linear);
    for (const auto& g : y.effects) {
      ExtremalValue at_face(g(ball.center), ball.radius * dot(g.linear, f.linear) / norm2, norm2);
      if (at_face.compare(uniform) != 0) return false;
    }
  }
  return true;
}

}  // namespace

bool are_complementary(const Observable& a, const Observable& b, const StateSpace& k) {
  return certain_forces_uniform(a, b, k) && certain_forces_uniform(b, a, k);
}

bool is_surjective(const Observable& obs, const StateSpace& k) {
  // mu(K) is convex and contains delta_i exactly when effect i reaches 1 on K.
  for (const auto& f : obs.effects)
    if (extremal_range(k, f).max.compare(1) < 0) return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace {

struct ChannelLayout {
  std::size_t m, n2, image_vars, v2;
  std::size_t image(std::size_t p, std::size_t c) const { return p * n2 + c; }
  std::size_t weight(std::size_t v, std::size_t w) const { return image_vars + v * v2 + w; }
};

ChannelLayout channel_layout(const AffineChart& chart, const StateSpace& k2) {
  const std::size_t n2 = k2.ambient_dimension();
  return {chart.size(), n2, chart.size() * n2, k2.vertices().size()};
}

void check_equations(const StateSpace& k1, const StateSpace& k2,
                     const std::vector<ChannelEquation>& equations) {
  for (const auto& e : equations)
    if (e.on_target.dimension() != k2.ambient_dimension() ||
        e.on_source.dimension() != k1.ambient_dimension())
      throw PreconditionError("find_channel: equation dimension mismatch");
}

}  // namespace

LinearProgram channel_program(const StateSpace& k1, const StateSpace& k2,
                              const std::vector<ChannelEquation>& equations) {
  require_polytope(k1, "channel search");
  require_polytope(k2, "channel search");
  check_equations(k1, k2, equations);
  AffineChart chart(k1);
  const ChannelLayout at = channel_layout(chart, k2);
  const auto& v1 = k1.vertices();
  const auto& v2 = k2.vertices();
  const auto bary = vertex_barycentrics(chart, k1);

  // Image coordinates of the chart points, then per-vertex convex weights.
  LinearProgram lp;
  lp.variables = at.image_vars + v1.size() * v2.size();
  for (const auto& e : equations)
    for (std::size_t p = 0; p < at.m; ++p) {
      Vector row = zeros(lp.variables);
      for (std::size_t c = 0; c < at.n2; ++c) row[at.image(p, c)] = e.on_target.linear[c];
      lp.add_equality(std::move(row), e.on_source(chart.points()[p]) - e.on_target.constant);
    }
  for (std::size_t v = 0; v < v1.size(); ++v) {
    for (std::size_t c = 0; c < at.n2; ++c) {
      Vector row = zeros(lp.variables);
      for (std::size_t p = 0; p < at.m; ++p) row[at.image(p, c)] = bary[v][p];
      for (std::size_t w = 0; w < v2.size(); ++w) row[at.weight(v, w)] = -v2[w][c];
      lp.add_equality(std::move(row), 0);
    }
    Vector row = zeros(lp.variables);
    for (std::size_t w = 0; w < v2.size(); ++w) row[at.weight(v, w)] = 1;
    lp.add_equality(std::move(row), 1);
    for (std::size_t w = 0; w < v2.size(); ++w)
      lp.add_inequality(unit_vector(lp.variables, at.weight(v, w)), 0);
  }
  return lp;
}

ChannelSearch find_channel(const StateSpace& k1, const StateSpace& k2,
                           const std::vector<ChannelEquation>& equations) {
  require_polytope(k1, "channel search");
  require_polytope(k2, "channel search");
  check_equations(k1, k2, equations);

  ChannelSearch out;
  // The identity is preferred whenever it already qualifies.
  if (k1.ambient_dimension() == k2.ambient_dimension()) {
    AffineMap id = AffineMap::identity(k1.ambient_dimension());
    if (verify_channel(k1, k2, id, equations)) {
      out.channel = Channel::trusted(std::move(id));
      return out;
    }
  }

  AffineChart chart(k1);
  const ChannelLayout at = channel_layout(chart, k2);
  auto images_from = [&](const Vector& x) {
    std::vector<Vector> images(at.m, zeros(at.n2));
    for (std::size_t p = 0; p < at.m; ++p)
      for (std::size_t c = 0; c < at.n2; ++c) images[p][c] = x[at.image(p, c)];
    return chart.map_from_images(images);
  };

  // Equations alone often pin the map down; then containment is a vertex check.
  Matrix eq(equations.size() * at.m, at.image_vars);
  Vector eq_rhs;
  for (std::size_t e = 0; e < equations.size(); ++e)
    for (std::size_t p = 0; p < at.m; ++p) {
      for (std::size_t c = 0; c < at.n2; ++c)
        eq(e * at.m + p, at.image(p, c)) = equations[e].on_target.linear[c];
      eq_rhs.push_back(equations[e].on_source(chart.points()[p]) - equations[e].on_target.constant);
    }
  auto sol = solve_affine(eq, eq_rhs);
  if (sol && sol->nullspace.empty()) {
    AffineMap forced = images_from(sol->particular);
    ContainmentResult cr = map_into(k1, forced, k2);
    if (cr.contained) {
      out.channel = Channel::trusted(std::move(forced));
      return out;
    }
    out.escaping_vertex = cr.witness;
    out.escaping_image = cr.image;
    out.forced_map = std::move(forced);
  }

  out.program = channel_program(k1, k2, equations);
  FeasibilityResult r = lp_feasible(out.program);
  if (r.feasible()) {
    out.channel = Channel::certify(k1, images_from(r.witness()), k2);
    return out;
  }
  out.certificate = r.certificate();
  return out;
}

bool verify_channel(const StateSpace& k1, const StateSpace& k2, const AffineMap& map,
                    const std::vector<ChannelEquation>& equations) {
  for (const auto& e : equations)
    if (!equal_on(k1, compose(e.on_target, map), e.on_source)) return false;
  return map_into(k1, map, k2).contained;
}

}  // namespace wignerlab
