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

#include "wignerlab/catalog.hpp"

#include <map>

#include "wignerlab/errors.hpp"

namespace wignerlab {

namespace {

using Source = Expectation::Source;

Rational q(long n, long d = 1) { return frac(n, d); }

AffineFunctional fn(Vector linear, Rational constant) { return {std::move(linear), std::move(constant)}; }

Observable binary(std::string name, const AffineFunctional& f) {
  const std::size_t dim = f.dimension();
  return {std::move(name), {"0", "1"}, {f, AffineFunctional::constant_function(dim, 1) - f}};
}

SignedGrid grid(std::vector<std::vector<long>> num, long den = 1) {
  SignedGrid g;
  for (const auto& row : num) {
    std::vector<Rational> r;
    for (long v : row) r.push_back(q(v, den));
    g.push_back(std::move(r));
  }
  return g;
}

bool grid_at(const CatalogEntry& e, const std::string& rep, const Vector& x, const SignedGrid& want) {
  return evaluate(e.rep(rep), e.theory.state_space, x) == want;
}

ProductPermutation perm(std::vector<std::size_t> g1, std::vector<std::size_t> g2) {
  return {std::move(g1), std::move(g2)};
}

// Planar qubit-style effects in coordinates (x, z): A = (1 +- z)/2, B = (1 +- x)/2.
Observable planar_a() { return binary("A", fn({0, q(1, 2)}, q(1, 2))); }
Observable planar_b() { return binary("B", fn({q(1, 2), 0}, q(1, 2))); }

FunctionalGrid planar_grid() {
  const Rational h = q(1, 4);
  return {{fn({h, h}, h), fn({-h, h}, h)}, {fn({h, -h}, h), fn({-h, -h}, h)}};
}

bool grids_equal_on(const StateSpace& k, const FunctionalGrid& g1, const FunctionalGrid& g2) {
  if (g1.size() != g2.size()) return false;
  for (std::size_t i = 0; i < g1.size(); ++i) {
    if (g1[i].size() != g2[i].size()) return false;
    for (std::size_t j = 0; j < g1[i].size(); ++j)
      if (!equal_on(k, g1[i][j], g2[i][j])) return false;
  }
  return true;
}

CatalogEntry cube() {
  std::vector<Vector> vs;
  for (long i = 0; i < 2; ++i)
    for (long j = 0; j < 2; ++j)
      for (long k = 0; k < 2; ++k) vs.push_back({i, j, k});
  CatalogEntry e{"cube", "unit cube with the x and y bit observables", Theory{StateSpace::polytope(vs),
              {binary("A", AffineFunctional::coordinate(3, 0)),
               binary("B", AffineFunctional::coordinate(3, 1))}}, {}, {}, {}};
  const auto& [a, b] = std::tie(e.theory.observables[0], e.theory.observables[1]);
  e.representations.push_back(degenerate_rep(a, b, default_anchor(a, b), "W_0"));
  e.representations.push_back(
      construct_family(a, b, default_anchor(a, b), {AffineFunctional::coordinate(3, 2)}, "W_z"));
  e.expected = {
      {"W_0 has rank 3 and is not faithful", Source::published,
       [](const CatalogEntry& c) {
         auto r = is_faithful(c.rep("W_0"), c.theory.state_space);
         return r.rank == 3 && !r.faithful;
       }},
      {"W_0(s_ij0) = W_0(s_ij1)", Source::published,
       [](const CatalogEntry& c) {
         for (long i = 0; i < 2; ++i)
           for (long j = 0; j < 2; ++j)
             if (evaluate_flat(c.rep("W_0"), {i, j, 0}) != evaluate_flat(c.rep("W_0"), {i, j, 1}))
               return false;
         return true;
       }},
      {"W_z has rank 4 and is faithful", Source::published,
       [](const CatalogEntry& c) {
         auto r = is_faithful(c.rep("W_z"), c.theory.state_space);
         return r.rank == 4 && r.faithful;
       }},
  };
  return e;
}

CatalogEntry trit() {
  const AffineFunctional f = fn({-1, -1}, 1);
  Observable unit{"B", {"*"}, {AffineFunctional::constant_function(2, 1)}};
  CatalogEntry e{"trit", "2-simplex s_0=(0,0), s_1=(1,0), s_2=(0,1) seen through one bit; B is trivial", Theory{StateSpace::polytope({{0, 0}, {1, 0}, {0, 1}}), {binary("A", f), unit}}, {}, {}, {}};
  const auto& a = e.theory.observables[0];
  const auto& b = e.theory.observables[1];
  e.representations.push_back(degenerate_rep(a, b, default_anchor(a, b), "W"));
  e.channels.push_back({"rotation", {Matrix::from_rows({{-1, -1}, {1, 0}}), {1, 0}}, std::nullopt});
  e.expected = {
      {"rotation s_0 -> s_1 -> s_2 -> s_0 admits no transported symmetry; witness (s_1, s_2)",
       Source::published,
       [](const CatalogEntry& c) {
         auto ch = Channel::certify(c.theory.state_space, c.channel("rotation").map, c.theory.state_space);
         auto r = find_symmetry_for_channel(c.rep("W"), c.theory.state_space, ch);
         return !r.found() && r.witness_vertices == std::make_pair<std::size_t, std::size_t>(1, 2);
       }},
      {"W is the unique representation (no free parameters)", Source::published,
       [](const CatalogEntry& c) {
         return free_parameter_count(c.theory.observables[0], c.theory.observables[1]) == 0;
       }},
  };
  return e;
}

CatalogEntry boxworld() {
  const auto fx = AffineFunctional::coordinate(2, 0), fy = AffineFunctional::coordinate(2, 1);
  CatalogEntry e{"boxworld", "square with s_ij = (i, j); A, B read the coordinates, C, D are their halved versions", Theory{StateSpace::polytope({{0, 0}, {0, 1}, {1, 0}, {1, 1}}),
              {binary("A", fx), binary("B", fy), binary("C", q(1, 2) * fx), binary("D", q(1, 2) * fy)}}, {}, {}, {}};
  const auto& obs = e.theory.observables;
  const Anchor anchor = default_anchor(obs[0], obs[1]);
  e.representations.push_back(degenerate_rep(obs[0], obs[1], anchor, "W_0"));
  e.representations.push_back(
      construct_family(obs[0], obs[1], anchor, {q(1, 2) * (fx + fy)}, "W_1/2"));
  e.representations.push_back(degenerate_rep(obs[2], obs[3], anchor, "W_+"));

  const Vector s00{0, 0}, s01{0, 1}, s10{1, 0}, s11{1, 1};
  auto at = [](std::string rep, Vector x, SignedGrid g) {
    return [=](const CatalogEntry& c) { return grid_at(c, rep, x, g); };
  };
  e.expected = {
      {"W_0(s_00)", Source::published, at("W_0", s00, grid({{0, 0}, {0, 1}}))},
      {"W_0(s_01)", Source::published, at("W_0", s01, grid({{0, 0}, {1, 0}}))},
      {"W_0(s_10)", Source::published, at("W_0", s10, grid({{0, 1}, {0, 0}}))},
      {"W_0(s_11)", Source::published, at("W_0", s11, grid({{0, 1}, {1, -1}}))},
      {"W_1/2(s_00)", Source::published, at("W_1/2", s00, grid({{0, 0}, {0, 1}}))},
      {"W_1/2(s_01)", Source::published, at("W_1/2", s01, grid({{1, -1}, {1, 1}}, 2))},
      {"W_1/2(s_10)", Source::published, at("W_1/2", s10, grid({{1, 1}, {-1, 1}}, 2))},
      {"W_1/2(s_11)", Source::published, at("W_1/2", s11, grid({{1, 0}, {0, 0}}))},
      {"W_+(s_00)", Source::published, at("W_+", s00, grid({{0, 0}, {0, 1}}))},
      {"W_+(s_01)", Source::published, at("W_+", s01, grid({{0, 0}, {1, 1}}, 2))},
      {"W_+(s_10)", Source::published, at("W_+", s10, grid({{0, 1}, {0, 1}}, 2))},
      {"W_+(s_11)", Source::published, at("W_+", s11, grid({{0, 1}, {1, 0}}, 2))},
      {"A and B are incompatible", Source::published,
       [](const CatalogEntry& c) {
         return !are_compatible(c.theory.observables[0], c.theory.observables[1], c.theory.state_space)
                     .compatible();
       }},
      {"C and D are compatible and W_+ is positive", Source::published,
       [](const CatalogEntry& c) {
         return are_compatible(c.theory.observables[2], c.theory.observables[3], c.theory.state_space)
                    .compatible() &&
                is_positive(c.rep("W_+"), c.theory.state_space).positive;
       }},
      {"A, B jointly info-complete, not complementary, both surjective", Source::published,
       [](const CatalogEntry& c) {
         const auto& [k, a, b] = std::tie(c.theory.state_space, c.theory.observables[0], c.theory.observables[1]);
         return jointly_info_complete(a, b, k) && !are_complementary(a, b, k) &&
                is_surjective(a, k) && is_surjective(b, k);
       }},
      {"the only lifted symmetries of W_0 are id and the 01/10 swap", Source::published,
       [](const CatalogEntry& c) {
         auto syms = enumerate_lifted_symmetries(c.rep("W_0"), c.theory.state_space);
         return syms == std::vector<PhasePointMap>{PhasePointMap::identity(2, 2),
                                                   PhasePointMap::swap(2, 2, 1, 2)};
       }},
      {"W_1/2: 01/10 and 00/11 swaps are symmetries, 00/01 is not", Source::published,
       [](const CatalogEntry& c) {
         const auto& [w, k] = std::tie(c.rep("W_1/2"), c.theory.state_space);
         auto bad = is_symmetry(w, k, lift(PhasePointMap::swap(2, 2, 0, 1)));
         return is_symmetry(w, k, lift(PhasePointMap::swap(2, 2, 1, 2))).symmetric &&
                is_symmetry(w, k, lift(PhasePointMap::swap(2, 2, 0, 3))).symmetric &&
                !bad.symmetric && bad.witness_vertex == 1u &&
                bad.image == flatten(grid({{-1, 1}, {1, 1}}, 2));
       }},
      {"covariant solution is q = (2x + 2y - 1)/4", Source::derived,
       [](const CatalogEntry& c) {
         auto r = solve_covariant(c.theory.observables[0], c.theory.observables[1], c.theory.state_space);
         return r.status == CovariantSolution::Status::unique &&
                equal_on(c.theory.state_space, r.rep->grid[0][0], fn({q(1, 2), q(1, 2)}, q(-1, 4)));
       }},
  };
  return e;
}

CatalogEntry qubit_ball() {
  CatalogEntry e{"qubit_ball", "Bloch ball in (x, y, z); A measures sigma_z, B measures sigma_x", Theory{StateSpace::ball({0, 0, 0}, 1),
              {binary("A", fn({0, 0, q(1, 2)}, q(1, 2))), binary("B", fn({q(1, 2), 0, 0}, q(1, 2)))}}, {}, {}, {}};
  const Rational h = q(1, 4);
  e.representations.push_back({"W", e.theory.observables[0], e.theory.observables[1],
                               {{fn({h, h, h}, h), fn({-h, -h, h}, h)},
                                {fn({h, -h, -h}, h), fn({-h, h, -h}, h)}}});
  // Induced actions of the transpositions of 00 with 01, 10, 11.
  e.channels = {
      {"phi_01", {Matrix::from_rows({{0, -1, 0}, {-1, 0, 0}, {0, 0, 1}}), {0, 0, 0}}, std::nullopt},
      {"phi_10", {Matrix::from_rows({{1, 0, 0}, {0, 0, -1}, {0, -1, 0}}), {0, 0, 0}}, std::nullopt},
      {"phi_11", {Matrix::from_rows({{0, 0, -1}, {0, 1, 0}, {-1, 0, 0}}), {0, 0, 0}}, std::nullopt},
  };
  e.expected = {
      {"A, B complementary but not jointly info-complete", Source::published,
       [](const CatalogEntry& c) {
         const auto& [k, a, b] = std::tie(c.theory.state_space, c.theory.observables[0], c.theory.observables[1]);
         return are_complementary(a, b, k) && !jointly_info_complete(a, b, k);
       }},
      {"W is faithful", Source::published,
       [](const CatalogEntry& c) { return is_faithful(c.rep("W"), c.theory.state_space).faithful; }},
      {"W is not positive; entry 00 has minimum 1/4 - 1/4*sqrt(3)", Source::derived,
       [](const CatalogEntry& c) {
         auto r = is_positive(c.rep("W"), c.theory.state_space);
         return !r.positive && r.entry == std::make_pair<std::size_t, std::size_t>(0, 0) &&
                r.value == ExtremalValue(q(1, 4), q(-1, 4), 3);
       }},
      {"transpositions with 00 induce the listed signed permutations", Source::published,
       [](const CatalogEntry& c) {
         const std::size_t partner[] = {1, 2, 3};
         for (std::size_t i = 0; i < 3; ++i) {
           auto ch = induced_action(c.rep("W"), c.theory.state_space,
                                    PhasePointMap::swap(2, 2, 0, partner[i]));
           if (!(ch.map() == c.channels[i].map)) return false;
         }
         return true;
       }},
      {"W is G_4-symmetric", Source::published,
       [](const CatalogEntry& c) {
         return is_group_symmetric(c.rep("W"), c.theory.state_space,
                                   {PhasePointMap::swap(2, 2, 0, 1), PhasePointMap::swap(2, 2, 0, 2),
                                    PhasePointMap::swap(2, 2, 0, 3)})
             .symmetric;
       }},
  };
  return e;
}

std::vector<NamedChannel> planar_reflections() {
  return {
      {"identity", AffineMap::identity(2), perm({0, 1}, {0, 1})},
      {"flip_z", {Matrix::from_rows({{1, 0}, {0, -1}}), {0, 0}}, perm({1, 0}, {0, 1})},
      {"flip_x", {Matrix::from_rows({{-1, 0}, {0, 1}}), {0, 0}}, perm({0, 1}, {1, 0})},
      {"flip_both", {Matrix::from_rows({{-1, 0}, {0, -1}}), {0, 0}}, perm({1, 0}, {1, 0})},
  };
}

CatalogEntry qubit_xz() {
  CatalogEntry e{"qubit_xz", "real qubit: unit disk in (x, z); A measures sigma_z, B measures sigma_x", Theory{StateSpace::ball({0, 0}, 1), {planar_a(), planar_b()}}, {}, {}, {}};
  e.representations.push_back({"W", e.theory.observables[0], e.theory.observables[1], planar_grid()});
  e.channels = planar_reflections();
  e.expected = {
      {"grid entry 00 is (x + z + 1)/4", Source::published,
       [](const CatalogEntry& c) { return c.rep("W").grid[0][0] == fn({q(1, 4), q(1, 4)}, q(1, 4)); }},
      {"all three uniqueness hypotheses hold", Source::published,
       [](const CatalogEntry& c) {
         const auto& [k, a, b] = std::tie(c.theory.state_space, c.theory.observables[0], c.theory.observables[1]);
         return jointly_info_complete(a, b, k) && are_complementary(a, b, k) &&
                is_surjective(a, k) && is_surjective(b, k);
       }},
      {"W is the unique covariant representation", Source::published,
       [](const CatalogEntry& c) {
         auto r = solve_covariant(c.theory.observables[0], c.theory.observables[1],
                                  c.theory.state_space, c.group_channels());
         return r.status == CovariantSolution::Status::unique &&
                r.rep->grid == c.rep("W").grid;
       }},
  };
  return e;
}

CatalogEntry rebit_diamond() {
  CatalogEntry e{"rebit_diamond", "square |x| + |z| <= 1 with the real-qubit effects", Theory{StateSpace::polytope({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}), {planar_a(), planar_b()}}, {}, {}, {}};
  e.representations.push_back({"W", e.theory.observables[0], e.theory.observables[1], planar_grid()});
  e.channels = planar_reflections();
  e.expected = {
      {"all three uniqueness hypotheses hold", Source::derived,
       [](const CatalogEntry& c) {
         const auto& [k, a, b] = std::tie(c.theory.state_space, c.theory.observables[0], c.theory.observables[1]);
         return jointly_info_complete(a, b, k) && are_complementary(a, b, k) &&
                is_surjective(a, k) && is_surjective(b, k);
       }},
      {"covariant representation is unique and equals W", Source::derived,
       [](const CatalogEntry& c) {
         auto r = solve_covariant(c.theory.observables[0], c.theory.observables[1], c.theory.state_space);
         return r.status == CovariantSolution::Status::unique && r.directions.empty() &&
                grids_equal_on(c.theory.state_space, r.rep->grid, c.rep("W").grid);
       }},
  };
  return e;
}

CatalogEntry deformed_12gon() {
  CatalogEntry e{"deformed_12gon",
      "real-qubit disk with the upper region z + |x| > 1 cut away, as a polygon on "
      "Pythagorean points; the listed vertices are the extreme points", Theory{StateSpace::polytope({{0, 1},
                                    {0, -1},
                                    {1, 0},
                                    {-1, 0},
                                    {q(3, 5), q(-4, 5)},
                                    {q(-3, 5), q(-4, 5)},
                                    {q(4, 5), q(-3, 5)},
                                    {q(-4, 5), q(-3, 5)}}),
              {planar_a(), planar_b()}}, {}, {}, {}};
  e.representations.push_back({"W", e.theory.observables[0], e.theory.observables[1], planar_grid()});
  e.expected = {
      {"(3/5, 4/5) is not a state", Source::derived,
       [](const CatalogEntry& c) { return !contains(c.theory.state_space, {q(3, 5), q(4, 5)}); }},
      {"all three uniqueness hypotheses still hold", Source::published,
       [](const CatalogEntry& c) {
         const auto& [k, a, b] = std::tie(c.theory.state_space, c.theory.observables[0], c.theory.observables[1]);
         return jointly_info_complete(a, b, k) && are_complementary(a, b, k) &&
                is_surjective(a, k) && is_surjective(b, k);
       }},
      {"the A swap has no channel; (3/5, -4/5) escapes", Source::derived,
       [](const CatalogEntry& c) {
         auto r = find_permutation_channels(c.theory.observables[0], c.theory.observables[1],
                                            c.theory.state_space);
         return !r.found() && r.failing == perm({1, 0}, {0, 1}) && r.search &&
                r.search->escaping_vertex == Vector{q(3, 5), q(-4, 5)};
       }},
      {"no covariant representation; certificate verifies", Source::derived,
       [](const CatalogEntry& c) {
         auto r = solve_covariant(c.theory.observables[0], c.theory.observables[1], c.theory.state_space);
         return r.status == CovariantSolution::Status::none && r.certificate &&
                verifies(r.channels.search->program, *r.certificate);
       }},
  };
  return e;
}

using Builder = CatalogEntry (*)();

const std::map<std::string, Builder>& builders() {
  static const std::map<std::string, Builder> table{
      {"boxworld", boxworld},     {"cube", cube},         {"deformed_12gon", deformed_12gon},
      {"qubit_ball", qubit_ball}, {"qubit_xz", qubit_xz}, {"rebit_diamond", rebit_diamond},
      {"trit", trit},
  };
  return table;
}

}  // namespace

const WignerRep& CatalogEntry::rep(const std::string& rep_name) const {
  for (const auto& w : representations)
    if (w.name == rep_name) return w;
  throw PreconditionError(name + ": no representation named '" + rep_name + "'");
}

const NamedChannel& CatalogEntry::channel(const std::string& channel_name) const {
  for (const auto& c : channels)
    if (c.name == channel_name) return c;
  throw PreconditionError(name + ": no channel named '" + channel_name + "'");
}

std::vector<GroupChannel> CatalogEntry::group_channels() const {
  std::vector<GroupChannel> out;
  for (const auto& c : channels)
    if (c.action) out.push_back({*c.action, c.map});
  return out;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& [n, _] : builders()) names.push_back(n);
  return names;
}

CatalogEntry load_catalog(const std::string& name) {
  auto it = builders().find(name);
  if (it == builders().end()) throw PreconditionError("unknown catalog entry '" + name + "'");
  CatalogEntry e = it->second();
  if (!validate(e.theory).empty()) throw Error(name + ": catalog theory failed validation");
  for (const auto& w : e.representations)
    if (auto v = check_marginals(w, e.theory.state_space))
      throw Error(name + ": representation " + w.name + ": " + v->message);
  for (const auto& c : e.channels)
    Channel::certify(e.theory.state_space, c.map, e.theory.state_space);
  return e;
}

std::string to_string(Expectation::Source s) {
  switch (s) {
    case Expectation::Source::published: return "published";
    case Expectation::Source::derived: return "derived";
    case Expectation::Source::trivial: return "trivial";
  }
  return "?";
}

}  // namespace wignerlab
