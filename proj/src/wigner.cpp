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

#include "wignerlab/wigner.hpp"

#include "wignerlab/errors.hpp"

namespace wignerlab {

Vector flatten(const SignedGrid& g) {
  Vector out;
  for (const auto& row : g) out.insert(out.end(), row.begin(), row.end());
  return out;
}

SignedGrid unflatten(const Vector& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw PreconditionError("unflatten: size mismatch");
  SignedGrid g(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) g[i][j] = v[i * cols + j];
  return g;
}

Vector evaluate_flat(const WignerRep& w, const Vector& x) {
  Vector out;
  out.reserve(w.phase_points());
  for (const auto& row : w.grid)
    for (const auto& q : row) out.push_back(q(x));
  return out;
}

SignedGrid evaluate(const WignerRep& w, const StateSpace& k, const Vector& x) {
  if (x.size() != k.ambient_dimension()) throw DomainError("evaluate: point has wrong dimension");
  if (!contains(k, x)) throw DomainError("evaluate: point is not in the state space");
  return unflatten(evaluate_flat(w, x), w.rows(), w.cols());
}

namespace {

void check_shape(const WignerRep& w, std::size_t dim) {
  if (w.grid.size() != w.a.size()) throw PreconditionError("grid rows do not match |A|");
  for (const auto& row : w.grid) {
    if (row.size() != w.b.size()) throw PreconditionError("grid columns do not match |B|");
    for (const auto& q : row)
      if (q.dimension() != dim) throw PreconditionError("grid entry has wrong dimension");
  }
}

AffineFunctional sum(const std::vector<AffineFunctional>& fs, std::size_t dim) {
  AffineFunctional s = AffineFunctional::constant_function(dim, 0);
  for (const auto& f : fs) s = s + f;
  return s;
}

std::size_t observable_dimension(const Observable& a, const Observable& b) {
  if (a.effects.empty() || b.effects.empty()) throw PreconditionError("observable has no outcomes");
  const std::size_t d = a.effects.front().dimension();
  for (const auto* o : {&a, &b})
    for (const auto& f : o->effects)
      if (f.dimension() != d) throw PreconditionError("effects have mixed dimensions");
  return d;
}

std::vector<Vector> vertex_barycentrics(const AffineChart& chart, const StateSpace& k) {
  std::vector<Vector> out;
  for (const auto& v : k.vertices()) out.push_back(*chart.barycentric(v));
  return out;
}

}  // namespace

std::optional<MarginalViolation> check_marginals(const WignerRep& w, const StateSpace& k) {
  const std::size_t dim = k.ambient_dimension();
  if (w.grid.size() != w.a.size() || w.a.size() == 0)
    return MarginalViolation{MarginalViolation::Kind::shape, 0, "grid rows do not match |A|"};
  for (std::size_t i = 0; i < w.grid.size(); ++i) {
    if (w.grid[i].size() != w.b.size())
      return MarginalViolation{MarginalViolation::Kind::shape, i, "grid columns do not match |B|"};
    for (const auto& q : w.grid[i])
      if (q.dimension() != dim)
        return MarginalViolation{MarginalViolation::Kind::shape, i, "grid entry has wrong dimension"};
  }
  for (std::size_t i = 0; i < w.rows(); ++i)
    if (!equal_on(k, sum(w.grid[i], dim), w.a.effects[i]))
      return MarginalViolation{MarginalViolation::Kind::row, i,
                               "row " + std::to_string(i) + " does not sum to " + w.a.name + "[" +
                                   w.a.outcomes[i] + "]"};
  for (std::size_t j = 0; j < w.cols(); ++j) {
    std::vector<AffineFunctional> col;
    for (const auto& row : w.grid) col.push_back(row[j]);
    if (!equal_on(k, sum(col, dim), w.b.effects[j]))
      return MarginalViolation{MarginalViolation::Kind::column, j,
                               "column " + std::to_string(j) + " does not sum to " + w.b.name +
                                   "[" + w.b.outcomes[j] + "]"};
  }
  return std::nullopt;
}

Anchor default_anchor(const Observable& a, const Observable& b) {
  if (a.size() == 0 || b.size() == 0) throw PreconditionError("observable has no outcomes");
  return {a.size() - 1, b.size() - 1};
}

std::size_t free_parameter_count(const Observable& a, const Observable& b) {
  if (a.size() == 0 || b.size() == 0) return 0;
  return (a.size() - 1) * (b.size() - 1);
}

WignerRep construct_family(const Observable& a, const Observable& b, Anchor anchor,
                           const std::vector<AffineFunctional>& free, std::string name) {
  const std::size_t dim = observable_dimension(a, b);
  const std::size_t na = a.size(), nb = b.size();
  if (anchor.a >= na || anchor.b >= nb) throw PreconditionError("anchor out of range");
  if (free.size() != free_parameter_count(a, b))
    throw PreconditionError("expected " + std::to_string(free_parameter_count(a, b)) +
                            " free entries, got " + std::to_string(free.size()));
  for (const auto& f : free)
    if (f.dimension() != dim) throw PreconditionError("free entry has wrong dimension");

  WignerRep w{std::move(name), a, b,
              FunctionalGrid(na, std::vector<AffineFunctional>(nb, AffineFunctional::constant_function(dim, 0)))};
  std::size_t next = 0;
  for (std::size_t i = 0; i < na; ++i) {
    if (i == anchor.a) continue;
    for (std::size_t j = 0; j < nb; ++j) {
      if (j == anchor.b) continue;
      w.grid[i][j] = free[next++];
    }
  }
  AffineFunctional corner = AffineFunctional::constant_function(dim, 1);
  for (std::size_t i = 0; i < na; ++i) {
    if (i == anchor.a) continue;
    AffineFunctional q = a.effects[i];
    for (std::size_t j = 0; j < nb; ++j)
      if (j != anchor.b) q = q - w.grid[i][j];
    w.grid[i][anchor.b] = q;
    corner = corner - a.effects[i];
  }
  for (std::size_t j = 0; j < nb; ++j) {
    if (j == anchor.b) continue;
    AffineFunctional q = b.effects[j];
    for (std::size_t i = 0; i < na; ++i)
      if (i != anchor.a) q = q - w.grid[i][j];
    w.grid[anchor.a][j] = q;
    corner = corner - b.effects[j];
  }
  for (const auto& f : free) corner = corner + f;
  w.grid[anchor.a][anchor.b] = corner;
  return w;
}

WignerRep perturb(const WignerRep& w, std::size_t a1, std::size_t a2, std::size_t b1,
                  std::size_t b2, const Rational& t) {
  if (a1 >= w.rows() || a2 >= w.rows() || b1 >= w.cols() || b2 >= w.cols())
    throw PreconditionError("perturb: index out of range");
  if (a1 == a2 || b1 == b2) throw PreconditionError("perturb: indices must differ");
  WignerRep out = w;
  const std::size_t dim = w.grid[0][0].dimension();
  const AffineFunctional c = AffineFunctional::constant_function(dim, t);
  out.grid[a1][b1] = out.grid[a1][b1] + c;
  out.grid[a2][b2] = out.grid[a2][b2] + c;
  out.grid[a1][b2] = out.grid[a1][b2] - c;
  out.grid[a2][b1] = out.grid[a2][b1] - c;
  return out;
}

PositivityResult is_positive(const WignerRep& w, const StateSpace& k) {
  check_shape(w, k.ambient_dimension());
  PositivityResult out;
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (std::size_t j = 0; j < w.cols(); ++j) {
      const AffineFunctional& q = w.grid[i][j];
      ExtremalValue lo = extremal_range(k, q).min;
      if (lo.compare(0) >= 0) continue;
      out.positive = false;
      out.entry = {i, j};
      out.value = lo;
      Extremizer e = minimizer(k, q);
      if (k.is_polytope()) {
        out.vertex = e.vertex;
        out.witness = k.vertices()[*e.vertex];
      } else {
        out.witness = e.ball_direction;
        out.witness_is_direction = true;
      }
      return out;
    }
  return out;
}

FaithfulnessResult is_faithful(const WignerRep& w, const StateSpace& k) {
  check_shape(w, k.ambient_dimension());
  AffineChart chart(k);
  std::vector<Vector> rows;
  for (const auto& row : w.grid)
    for (const auto& q : row) rows.push_back(chart.coordinates(q));
  FaithfulnessResult out;
  out.required = chart.size();
  out.rank = rank(Matrix::from_rows(rows, chart.size()));
  out.faithful = out.rank == out.required;
  return out;
}

FaithfulChoice faithful_choice_possible(const Observable& a, const Observable& b,
                                        const StateSpace& k) {
  FaithfulChoice out;
  out.free_parameters = static_cast<long>(free_parameter_count(a, b));
  out.deficit = static_cast<long>(dimension(k) + 1) - static_cast<long>(effect_span_rank(a, b, k));
  out.possible = out.free_parameters >= out.deficit;
  return out;
}

WignerRep degenerate_rep(const Observable& a, const Observable& b, Anchor anchor,
                         std::string name) {
  const std::size_t dim = observable_dimension(a, b);
  std::vector<AffineFunctional> free(free_parameter_count(a, b),
                                     AffineFunctional::constant_function(dim, 0));
  return construct_family(a, b, anchor, free, std::move(name));
}

WignerRep faithful_completion(const Observable& a, const Observable& b, const StateSpace& k,
                              Anchor anchor, std::string name) {
  const std::size_t dim = k.ambient_dimension();
  if (observable_dimension(a, b) != dim) throw PreconditionError("effects have wrong dimension");
  AffineChart chart(k);
  std::vector<Vector> span;
  for (const auto& f : a.effects) span.push_back(chart.coordinates(f));
  for (const auto& f : b.effects) span.push_back(chart.coordinates(f));
  std::size_t current = rank(Matrix::from_rows(span, chart.size()));

  // Each free entry q'_ab enters the span independently of the effects, so a
  // coordinate functional that raises rank(effects + chosen) is kept.
  std::vector<AffineFunctional> candidates;
  for (std::size_t i = 0; i < dim; ++i) candidates.push_back(AffineFunctional::coordinate(dim, i));
  std::vector<AffineFunctional> free;
  const std::size_t slots = free_parameter_count(a, b);
  for (const auto& c : candidates) {
    if (free.size() == slots || current == chart.size()) break;
    span.push_back(chart.coordinates(c));
    const std::size_t r = rank(Matrix::from_rows(span, chart.size()));
    if (r > current) {
      current = r;
      free.push_back(c);
    } else {
      span.pop_back();
    }
  }
  while (free.size() < slots) free.push_back(AffineFunctional::constant_function(dim, 0));
  return construct_family(a, b, anchor, free, std::move(name));
}

LinearProgram positive_member_program(const Observable& a, const Observable& b,
                                      const StateSpace& k, Anchor anchor) {
  if (!k.is_polytope()) throw UnsupportedGeometry("positive member search needs a polytope");
  const std::size_t dim = k.ambient_dimension();
  if (observable_dimension(a, b) != dim) throw PreconditionError("effects have wrong dimension");
  AffineChart chart(k);
  const std::size_t m = chart.size();
  const std::size_t slots = free_parameter_count(a, b);
  const auto bary = vertex_barycentrics(chart, k);

  // Every grid entry is affine in the free block: entry = base + sum_s c_s q'_s,
  // with c_s in {-1, 0, 1}. Read the coefficients off unit choices.
  const WignerRep base = degenerate_rep(a, b, anchor);
  std::vector<std::vector<int>> coeff(slots);
  for (std::size_t s = 0; s < slots; ++s) {
    std::vector<AffineFunctional> unit(slots, AffineFunctional::constant_function(dim, 0));
    unit[s] = AffineFunctional::constant_function(dim, 1);
    WignerRep probe = construct_family(a, b, anchor, unit);
    for (std::size_t e = 0; e < base.phase_points(); ++e) {
      Rational d = probe.entry(e).constant - base.entry(e).constant;
      coeff[s].push_back(static_cast<int>(d.get_num().get_si()));
    }
  }

  LinearProgram lp;
  lp.variables = slots * m;
  for (std::size_t e = 0; e < base.phase_points(); ++e) {
    const Vector base_values = chart.coordinates(base.entry(e));
    for (const auto& beta : bary) {
      Vector row = zeros(lp.variables);
      for (std::size_t s = 0; s < slots; ++s)
        for (std::size_t p = 0; p < m; ++p) row[s * m + p] = coeff[s][e] * beta[p];
      lp.add_inequality(std::move(row), -dot(beta, base_values));
    }
  }
  return lp;
}

PositiveMemberSearch find_positive_member(const Observable& a, const Observable& b,
                                          const StateSpace& k, Anchor anchor) {
  PositiveMemberSearch out;
  out.program = positive_member_program(a, b, k, anchor);
  const LinearProgram& lp = out.program;
  AffineChart chart(k);
  const std::size_t m = chart.size();
  const std::size_t slots = free_parameter_count(a, b);
  FeasibilityResult r = lp_feasible(lp);
  if (!r.feasible()) {
    out.certificate = r.certificate();
    return out;
  }
  std::vector<AffineFunctional> free;
  for (std::size_t s = 0; s < slots; ++s) {
    Vector values(r.witness().begin() + static_cast<long>(s * m),
                  r.witness().begin() + static_cast<long>((s + 1) * m));
    free.push_back(chart.functional(values));
  }
  out.rep = construct_family(a, b, anchor, free, "positive");
  return out;
}

std::optional<Vector> preimage(const WignerRep& w, const StateSpace& k, const Vector& grid) {
  AffineChart chart(k);
  const std::size_t m = chart.size(), n = w.phase_points();
  if (grid.size() != n) throw PreconditionError("preimage: grid has wrong size");
  // sum_i beta_i W(p_i) = grid, sum_i beta_i = 1
  Matrix sys(n + 1, m);
  Vector rhs(n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    Vector img = evaluate_flat(w, chart.points()[i]);
    for (std::size_t e = 0; e < n; ++e) sys(e, i) = img[e];
    sys(n, i) = 1;
  }
  for (std::size_t e = 0; e < n; ++e) rhs[e] = grid[e];
  rhs[n] = 1;
  auto sol = solve_affine(sys, rhs);
  if (!sol) return std::nullopt;
  Vector x = zeros(k.ambient_dimension());
  for (std::size_t i = 0; i < m; ++i) x = x + sol->particular[i] * chart.points()[i];
  return x;
}

std::optional<AffineMap> extend_affine(const std::vector<Vector>& src,
                                       const std::vector<Vector>& dst, std::size_t n1,
                                       std::size_t n2) {
  if (src.empty() || src.size() != dst.size())
    throw PreconditionError("extend_affine: need matching nonempty point lists");
  // Independent directions s_j - s_0, chosen greedily.
  std::vector<Vector> dirs, images;
  for (std::size_t j = 1; j < src.size(); ++j) {
    dirs.push_back(src[j] - src[0]);
    if (rank(Matrix::from_rows(dirs, n1)) < dirs.size()) {
      dirs.pop_back();
      continue;
    }
    images.push_back(dst[j] - dst[0]);
  }
  const std::size_t r = dirs.size();
  Matrix lin(n2, n1);
  for (std::size_t i = 0; i < std::min(n1, n2); ++i) lin(i, i) = 1;
  if (r > 0) {
    Matrix d = Matrix::from_rows(dirs, n1).transpose();     // n1 x r
    Matrix e = Matrix::from_rows(images, n2).transpose();   // n2 x r
    Matrix gram_inv = *inverse(d.transpose() * d);
    Matrix pinv = gram_inv * d.transpose();                  // r x n1
    Matrix proj = d * pinv;                                  // n1 x n1
    lin = e * pinv + lin * (Matrix::identity(n1) - proj);
  }
  AffineMap map{lin, dst[0] - lin * src[0]};
  for (std::size_t j = 0; j < src.size(); ++j)
    if (map(src[j]) != dst[j]) return std::nullopt;
  return map;
}

AffineMap isomorphism(const WignerRep& w1, const WignerRep& w2, const StateSpace& k) {
  if (!is_faithful(w1, k).faithful || !is_faithful(w2, k).faithful)
    throw PreconditionError("isomorphism needs two faithful representations");
  if (w1.phase_points() != w2.phase_points())
    throw PreconditionError("isomorphism needs equal phase spaces");
  AffineChart chart(k);
  std::vector<Vector> src, dst;
  for (const auto& p : chart.points()) {
    src.push_back(evaluate_flat(w1, p));
    dst.push_back(evaluate_flat(w2, p));
  }
  auto map = extend_affine(src, dst, w1.phase_points(), w2.phase_points());
  if (!map) throw Error("isomorphism: images are not affinely related");
  return *map;
}

}  // namespace wignerlab
