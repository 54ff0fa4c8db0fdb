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

#include "wignerlab/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "wignerlab/errors.hpp"

namespace wignerlab {

namespace {

constexpr std::size_t kMaxEnumeratedPoints = 8;
constexpr std::size_t kMaxGroupSize = 10000;

std::string key(const Vector& v) {
  std::string s;
  for (const auto& x : v) s += to_string(x) + ",";
  return s;
}

Vector centroid(const StateSpace& k) {
  if (k.is_ball()) return k.as_ball().center;
  Vector c = zeros(k.ambient_dimension());
  for (const auto& v : k.vertices()) c = c + v;
  return frac(1, static_cast<long>(k.vertices().size())) * c;
}

// Membership of grids in W(K) = conv{W(v)} for a polytope K, memoized.
class ImageHull {
 public:
  ImageHull(const WignerRep& w, const StateSpace& k) {
    for (const auto& v : k.vertices()) images_.push_back(evaluate_flat(w, v));
  }
  const std::vector<Vector>& images() const { return images_; }

  // Returns nullopt when y is inside, else the failing program and certificate.
  std::optional<std::pair<LinearProgram, InfeasibilityCertificate>> outside(const Vector& y) {
    const std::string k = key(y);
    auto it = inside_.find(k);
    if (it != inside_.end() && it->second) return std::nullopt;
    LinearProgram lp = hull_membership_program(images_, y);
    FeasibilityResult r = lp_feasible(lp);
    inside_[k] = r.feasible();
    if (r.feasible()) return std::nullopt;
    return std::make_pair(std::move(lp), r.certificate());
  }

 private:
  std::vector<Vector> images_;
  std::map<std::string, bool> inside_;
};

SymmetryCheck polytope_symmetry(ImageHull& hull, const StateSpace& k, const AffineMap& lambda) {
  SymmetryCheck out;
  for (std::size_t v = 0; v < k.vertices().size(); ++v) {
    Vector y = lambda(hull.images()[v]);
    auto miss = hull.outside(y);
    if (!miss) continue;
    out.symmetric = false;
    out.witness = k.vertices()[v];
    out.witness_vertex = v;
    out.image = std::move(y);
    out.program = std::move(miss->first);
    out.certificate = std::move(miss->second);
    return out;
  }
  return out;
}

SymmetryCheck ball_symmetry(const WignerRep& w, const StateSpace& k, const AffineMap& lambda) {
  if (!is_faithful(w, k).faithful)
    throw UnsupportedGeometry("unsupported: ball symmetry needs faithful W");
  AffineChart chart(k);
  std::vector<Vector> pulled;
  SymmetryCheck out;
  for (const auto& p : chart.points()) {
    Vector y = lambda(evaluate_flat(w, p));
    auto x = preimage(w, k, y);
    if (!x) {
      out.symmetric = false;
      out.witness = p;
      out.image = std::move(y);
      return out;
    }
    pulled.push_back(std::move(*x));
  }
  ContainmentResult r = map_into(k, chart.map_from_images(pulled), k);
  if (r.contained) return out;
  out.symmetric = false;
  out.witness = r.witness;
  out.image = lambda(evaluate_flat(w, *r.witness));
  return out;
}

void check_lambda(const WignerRep& w, const AffineMap& lambda) {
  if (lambda.source_dimension() != w.phase_points() || lambda.target_dimension() != w.phase_points())
    throw PreconditionError("grid map has wrong dimensions");
}

}  // namespace

PhasePointMap PhasePointMap::identity(std::size_t rows, std::size_t cols) {
  PhasePointMap m{rows, cols, std::vector<std::size_t>(rows * cols)};
  std::iota(m.table.begin(), m.table.end(), std::size_t{0});
  return m;
}

PhasePointMap PhasePointMap::swap(std::size_t rows, std::size_t cols, std::size_t p,
                                  std::size_t q) {
  PhasePointMap m = identity(rows, cols);
  if (p >= m.size() || q >= m.size()) throw PreconditionError("phase point out of range");
  std::swap(m.table[p], m.table[q]);
  return m;
}

bool PhasePointMap::is_permutation() const {
  std::vector<bool> hit(table.size(), false);
  for (std::size_t t : table) {
    if (t >= table.size() || hit[t]) return false;
    hit[t] = true;
  }
  return true;
}

PhasePointMap compose(const PhasePointMap& phi, const PhasePointMap& psi) {
  if (phi.size() != psi.size()) throw PreconditionError("phase maps have different sizes");
  PhasePointMap out = psi;
  for (std::size_t j = 0; j < psi.size(); ++j) out.table[j] = phi(psi(j));
  return out;
}

AffineMap lift(const PhasePointMap& phi) {
  const std::size_t n = phi.size();
  AffineMap m{Matrix(n, n), zeros(n)};
  for (std::size_t j = 0; j < n; ++j) {
    if (phi(j) >= n) throw PreconditionError("phase map is not total");
    m.matrix(phi(j), j) = 1;
  }
  return m;
}

SymmetryCheck is_symmetry(const WignerRep& w, const StateSpace& k, const AffineMap& lambda) {
  check_lambda(w, lambda);
  if (k.is_ball()) return ball_symmetry(w, k, lambda);
  ImageHull hull(w, k);
  return polytope_symmetry(hull, k, lambda);
}

std::vector<PhasePointMap> enumerate_lifted_symmetries(const WignerRep& w, const StateSpace& k) {
  const std::size_t n = w.phase_points();
  if (n > kMaxEnumeratedPoints)
    throw PreconditionError("refusing to enumerate permutations of " + std::to_string(n) +
                            " phase points (limit " + std::to_string(kMaxEnumeratedPoints) + ")");
  std::vector<PhasePointMap> out;
  PhasePointMap phi = PhasePointMap::identity(w.rows(), w.cols());
  std::optional<ImageHull> hull;
  if (k.is_polytope()) hull.emplace(w, k);
  do {
    AffineMap lambda = lift(phi);
    bool ok = hull ? polytope_symmetry(*hull, k, lambda).symmetric
                   : ball_symmetry(w, k, lambda).symmetric;
    if (ok) out.push_back(phi);
  } while (std::next_permutation(phi.table.begin(), phi.table.end()));
  return out;
}

std::vector<ChannelEquation> transported_equations(const WignerRep& w, const StateSpace& k,
                                                   const AffineMap& psi) {
  check_lambda(w, psi);
  std::vector<ChannelEquation> eqs;
  for (std::size_t i = 0; i < w.phase_points(); ++i) {
    AffineFunctional rhs = AffineFunctional::constant_function(k.ambient_dimension(), psi.offset[i]);
    for (std::size_t j = 0; j < w.phase_points(); ++j)
      rhs = rhs + psi.matrix(i, j) * w.entry(j);
    eqs.push_back({w.entry(i), rhs});
  }
  return eqs;
}

ChannelSearch find_transported_channel(const WignerRep& w, const StateSpace& k,
                                       const AffineMap& psi) {
  return find_channel(k, k, transported_equations(w, k, psi));
}

SymmetryForChannel find_symmetry_for_channel(const WignerRep& w, const StateSpace& k,
                                             const Channel& phi) {
  AffineChart chart(k);
  const std::size_t n = w.phase_points();
  std::vector<Vector> src, dst;
  for (const auto& p : chart.points()) {
    src.push_back(evaluate_flat(w, p));
    dst.push_back(evaluate_flat(w, phi.map()(p)));
  }
  SymmetryForChannel out;
  out.map = extend_affine(src, dst, n, n);
  if (out.map) return out;

  if (k.is_polytope()) {
    const auto& vs = k.vertices();
    for (std::size_t u = 0; u < vs.size(); ++u)
      for (std::size_t v = u + 1; v < vs.size(); ++v) {
        if (evaluate_flat(w, vs[u]) != evaluate_flat(w, vs[v])) continue;
        if (evaluate_flat(w, phi.map()(vs[u])) == evaluate_flat(w, phi.map()(vs[v]))) continue;
        out.witness = {vs[u], vs[v]};
        out.witness_vertices = {u, v};
        return out;
      }
  }
  // An affine dependency sum beta_i W(p_i) = 0 (sum beta = 0) that the images
  // break; move from the centroid along sum beta_i p_i.
  const std::size_t m = chart.size();
  Matrix hom(n + 1, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t e = 0; e < n; ++e) hom(e, i) = src[i][e];
    hom(n, i) = 1;
  }
  for (const auto& beta : nullspace(hom)) {
    Vector moved = zeros(n);
    Vector delta = zeros(k.ambient_dimension());
    for (std::size_t i = 0; i < m; ++i) {
      moved = moved + beta[i] * dst[i];
      delta = delta + beta[i] * chart.points()[i];
    }
    if (is_zero(moved)) continue;
    const Vector c = centroid(k);
    Rational eps = 1;
    Vector y = c + delta;
    while (!contains(k, y)) {
      eps /= 2;
      y = c + eps * delta;
    }
    out.witness = {c, y};
    return out;
  }
  throw Error("find_symmetry_for_channel: inconsistent images without a witness");
}

Channel induced_action(const WignerRep& w, const StateSpace& k, const PhasePointMap& phi) {
  if (!is_faithful(w, k).faithful) throw PreconditionError("induced action needs a faithful W");
  if (phi.size() != w.phase_points()) throw PreconditionError("phase map has wrong size");
  const AffineMap lambda = lift(phi);
  if (!is_symmetry(w, k, lambda).symmetric)
    throw PreconditionError("phase map does not lift to a symmetry");
  AffineChart chart(k);
  std::vector<Vector> images;
  for (const auto& p : chart.points()) images.push_back(*preimage(w, k, lambda(evaluate_flat(w, p))));
  return Channel::certify(k, chart.map_from_images(images), k);
}

// ---------------------------------------------------------------------------

ProductPermutation ProductPermutation::identity(std::size_t na, std::size_t nb) {
  ProductPermutation g{std::vector<std::size_t>(na), std::vector<std::size_t>(nb)};
  std::iota(g.g1.begin(), g.g1.end(), std::size_t{0});
  std::iota(g.g2.begin(), g.g2.end(), std::size_t{0});
  return g;
}

ProductPermutation ProductPermutation::inverse() const {
  ProductPermutation inv = *this;
  for (std::size_t a = 0; a < g1.size(); ++a) inv.g1[g1[a]] = a;
  for (std::size_t b = 0; b < g2.size(); ++b) inv.g2[g2[b]] = b;
  return inv;
}

ProductPermutation compose(const ProductPermutation& g, const ProductPermutation& h) {
  ProductPermutation out = h;
  for (std::size_t a = 0; a < h.g1.size(); ++a) out.g1[a] = g.g1[h.g1[a]];
  for (std::size_t b = 0; b < h.g2.size(); ++b) out.g2[b] = g.g2[h.g2[b]];
  return out;
}

std::vector<ProductPermutation> product_generators(std::size_t na, std::size_t nb) {
  std::vector<ProductPermutation> gens;
  for (std::size_t a = 0; a + 1 < na; ++a) {
    auto g = ProductPermutation::identity(na, nb);
    std::swap(g.g1[a], g.g1[a + 1]);
    gens.push_back(g);
  }
  for (std::size_t b = 0; b + 1 < nb; ++b) {
    auto g = ProductPermutation::identity(na, nb);
    std::swap(g.g2[b], g.g2[b + 1]);
    gens.push_back(g);
  }
  return gens;
}

PhasePointMap phase_map(const ProductPermutation& g) {
  const std::size_t na = g.g1.size(), nb = g.g2.size();
  PhasePointMap m = PhasePointMap::identity(na, nb);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < nb; ++b) m.table[a * nb + b] = g.g1[a] * nb + g.g2[b];
  return m;
}

GroupSymmetry is_group_symmetric(const WignerRep& w, const StateSpace& k,
                                 const std::vector<PhasePointMap>& generators) {
  for (const auto& g : generators)
    if (g.size() != w.phase_points() || !g.is_permutation())
      throw PreconditionError("generators must be permutations of the phase space");
  std::vector<PhasePointMap> group{PhasePointMap::identity(w.rows(), w.cols())};
  std::set<std::vector<std::size_t>> seen{group.front().table};
  for (std::size_t i = 0; i < group.size(); ++i)
    for (const auto& s : generators) {
      PhasePointMap next = compose(s, group[i]);
      if (!seen.insert(next.table).second) continue;
      if (group.size() == kMaxGroupSize)
        throw PreconditionError("generated group exceeds " + std::to_string(kMaxGroupSize) +
                                " elements");
      group.push_back(std::move(next));
    }

  GroupSymmetry out;
  out.group_size = group.size();
  std::optional<ImageHull> hull;
  if (k.is_polytope()) hull.emplace(w, k);
  for (const auto& g : group) {
    SymmetryCheck c = hull ? polytope_symmetry(*hull, k, lift(g)) : ball_symmetry(w, k, lift(g));
    if (c.symmetric) continue;
    out.symmetric = false;
    out.failing = g;
    out.detail = std::move(c);
    return out;
  }
  return out;
}

std::vector<ChannelEquation> permutation_equations(const Observable& a, const Observable& b,
                                                   const ProductPermutation& g) {
  const ProductPermutation inv = g.inverse();
  std::vector<ChannelEquation> eqs;
  for (std::size_t i = 0; i < a.size(); ++i) eqs.push_back({a.effects[i], a.effects[inv.g1[i]]});
  for (std::size_t j = 0; j < b.size(); ++j) eqs.push_back({b.effects[j], b.effects[inv.g2[j]]});
  return eqs;
}

PermutationChannels find_permutation_channels(const Observable& a, const Observable& b,
                                              const StateSpace& k,
                                              const std::vector<GroupChannel>& supplied) {
  const std::size_t na = a.size(), nb = b.size();
  PermutationChannels out;
  std::vector<GroupChannel> gens;
  for (const auto& g : product_generators(na, nb)) {
    const auto eqs = permutation_equations(a, b, g);
    auto given = std::find_if(supplied.begin(), supplied.end(),
                              [&](const GroupChannel& c) { return c.element == g; });
    if (given != supplied.end()) {
      if (!verify_channel(k, k, given->map, eqs)) {
        out.failing = g;
        return out;
      }
      gens.push_back({g, given->map});
      continue;
    }
    if (k.is_ball()) throw UnsupportedGeometry("channels required for ball backend");
    ChannelSearch s = find_channel(k, k, eqs);
    if (!s.found()) {
      out.failing = g;
      out.search = std::move(s);
      return out;
    }
    gens.push_back({g, s.channel->map()});
  }

  out.channels.push_back({ProductPermutation::identity(na, nb), AffineMap::identity(k.ambient_dimension())});
  std::set<ProductPermutation> seen{out.channels.front().element};
  for (std::size_t i = 0; i < out.channels.size(); ++i)
    for (const auto& s : gens) {
      ProductPermutation e = compose(s.element, out.channels[i].element);
      if (!seen.insert(e).second) continue;
      if (out.channels.size() == kMaxGroupSize)
        throw PreconditionError("permutation group exceeds " + std::to_string(kMaxGroupSize) +
                                " elements");
      out.channels.push_back({e, compose(s.map, out.channels[i].map)});
    }
  return out;
}

LinearProgram covariant_system(const Observable& a, const Observable& b, const StateSpace& k,
                               const std::vector<GroupChannel>& channels) {
  AffineChart chart(k);
  const std::size_t na = a.size(), nb = b.size(), n = na * nb, m = chart.size();
  const auto& pts = chart.points();
  auto var = [&](std::size_t e, std::size_t p) { return e * m + p; };
  LinearProgram sys;
  sys.variables = n * m;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t p = 0; p < m; ++p) {
      Vector row = zeros(sys.variables);
      for (std::size_t j = 0; j < nb; ++j) row[var(i * nb + j, p)] = 1;
      sys.add_equality(std::move(row), a.effects[i](pts[p]));
    }
  for (std::size_t j = 0; j < nb; ++j)
    for (std::size_t p = 0; p < m; ++p) {
      Vector row = zeros(sys.variables);
      for (std::size_t i = 0; i < na; ++i) row[var(i * nb + j, p)] = 1;
      sys.add_equality(std::move(row), b.effects[j](pts[p]));
    }
  const auto gens = product_generators(na, nb);
  for (const auto& g : gens) {
    const AffineMap* phi = nullptr;
    for (const auto& c : channels)
      if (c.element == g) phi = &c.map;
    if (!phi) throw PreconditionError("covariant_system: missing channel for a generator");
    const PhasePointMap back = phase_map(g.inverse());
    for (std::size_t p = 0; p < m; ++p) {
      const Vector beta = *chart.barycentric((*phi)(pts[p]));
      for (std::size_t e = 0; e < n; ++e) {
        Vector row = zeros(sys.variables);
        for (std::size_t q = 0; q < m; ++q) row[var(e, q)] += beta[q];
        row[var(back(e), p)] -= 1;
        sys.add_equality(std::move(row), 0);
      }
    }
  }

  return sys;
}

CovariantSolution solve_covariant(const Observable& a, const Observable& b, const StateSpace& k,
                                  const std::vector<GroupChannel>& supplied) {
  CovariantSolution out;
  auto& h = out.hypotheses;
  h.info_complete = jointly_info_complete(a, b, k);
  try {
    h.complementary = are_complementary(a, b, k);
  } catch (const UnsupportedGeometry&) {
  }
  h.surjective_a = is_surjective(a, k);
  h.surjective_b = is_surjective(b, k);

  if (!h.info_complete && supplied.empty()) {
    out.status = CovariantSolution::Status::hypothesis_failure;
    out.message = "observables are not jointly info-complete; supply channels to proceed";
    return out;
  }

  out.channels = find_permutation_channels(a, b, k, supplied);
  if (!out.channels.found()) {
    out.status = CovariantSolution::Status::none;
    out.message = "no channel realises an outcome permutation";
    if (out.channels.search) out.certificate = out.channels.search->certificate;
    return out;
  }

  out.system = covariant_system(a, b, k, out.channels.channels);
  const LinearProgram& sys = out.system;
  AffineChart chart(k);
  const std::size_t na = a.size(), nb = b.size(), n = na * nb, m = chart.size();
  const auto gens = product_generators(na, nb);

  Matrix coeffs(sys.equalities.size(), sys.variables);
  Vector rhs;
  for (std::size_t r = 0; r < sys.equalities.size(); ++r) {
    for (std::size_t c = 0; c < sys.variables; ++c) coeffs(r, c) = sys.equalities[r].row[c];
    rhs.push_back(sys.equalities[r].rhs);
  }
  auto sol = solve_affine(coeffs, rhs);
  if (!sol) {
    out.status = CovariantSolution::Status::none;
    out.message = "covariance and marginal conditions are inconsistent";
    out.certificate = lp_feasible(sys).certificate();
    return out;
  }

  auto to_grid = [&](const Vector& x) {
    FunctionalGrid grid(na, std::vector<AffineFunctional>(nb));
    for (std::size_t e = 0; e < n; ++e) {
      Vector values(x.begin() + static_cast<long>(e * m), x.begin() + static_cast<long>((e + 1) * m));
      grid[e / nb][e % nb] = chart.functional(values);
    }
    return grid;
  };
  out.rep = WignerRep{"covariant", a, b, to_grid(sol->particular)};
  for (const auto& d : sol->nullspace) out.directions.push_back(to_grid(d));
  out.status = out.directions.empty() ? CovariantSolution::Status::unique
                                      : CovariantSolution::Status::family;

  out.verified = true;
  for (const auto& g : gens) {
    try {
      if (!is_symmetry(*out.rep, k, lift(phase_map(g))).symmetric) out.verified = false;
    } catch (const UnsupportedGeometry&) {
      out.verified = false;
    }
  }
  return out;
}

}  // namespace wignerlab
