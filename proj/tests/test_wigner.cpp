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

#include <doctest.h>

#include <random>

#include "support.hpp"
#include "wignerlab/catalog.hpp"
#include "wignerlab/errors.hpp"
#include "wignerlab/wigner.hpp"

using namespace wignerlab;
using testsupport::pick;

namespace {

SignedGrid grid(std::vector<std::vector<long>> num, long den = 1) {
  SignedGrid g;
  for (const auto& row : num) {
    g.emplace_back();
    for (long v : row) g.back().push_back(frac(v, den));
  }
  return g;
}

// Row and column sums agree with the effects as functionals, coefficient by
// coefficient (not only on K).
bool marginals_exact(const WignerRep& w) {
  const std::size_t d = w.a.effects[0].dimension();
  for (std::size_t i = 0; i < w.rows(); ++i) {
    AffineFunctional s = AffineFunctional::constant_function(d, 0);
    for (std::size_t j = 0; j < w.cols(); ++j) s = s + w.grid[i][j];
    if (!(s == w.a.effects[i])) return false;
  }
  for (std::size_t j = 0; j < w.cols(); ++j) {
    AffineFunctional s = AffineFunctional::constant_function(d, 0);
    for (std::size_t i = 0; i < w.rows(); ++i) s = s + w.grid[i][j];
    if (!(s == w.b.effects[j])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("evaluation") {
  CatalogEntry box = load_catalog("boxworld");
  const auto& k = box.theory.state_space;
  CHECK(evaluate(box.rep("W_0"), k, {1, 1}) == grid({{0, 1}, {1, -1}}));
  CHECK(evaluate(box.rep("W_1/2"), k, {0, 1}) == grid({{1, -1}, {1, 1}}, 2));
  CHECK_THROWS_AS(evaluate(box.rep("W_0"), k, {2, 2}), DomainError);
  Rational total = 0;
  for (const auto& row : evaluate(box.rep("W_1/2"), k, {frac(1, 3), frac(2, 7)}))
    for (const auto& x : row) total += x;
  CHECK(total == 1);
}

TEST_CASE("marginal checks") {
  CatalogEntry box = load_catalog("boxworld");
  const auto& k = box.theory.state_space;
  CHECK_FALSE(check_marginals(box.rep("W_+"), k).has_value());
  WignerRep bumped = box.rep("W_0");
  bumped.grid[1][0] = bumped.grid[1][0] + AffineFunctional::constant_function(2, 1);
  auto v = check_marginals(bumped, k);
  REQUIRE(v);
  CHECK(v->kind == MarginalViolation::Kind::row);
  CHECK(v->index == 1);
  const auto& o = box.theory.observables;
  WignerRep any = construct_family(o[0], o[1], {1, 1}, {AffineFunctional{{frac(3, 7), -5}, 2}});
  CHECK_FALSE(check_marginals(any, k).has_value());
}

TEST_CASE("family construction reproduces the named representations") {
  CatalogEntry box = load_catalog("boxworld");
  const auto& o = box.theory.observables;
  const auto fx = AffineFunctional::coordinate(2, 0), fy = AffineFunctional::coordinate(2, 1);
  WignerRep w0 = construct_family(o[0], o[1], {1, 1}, {AffineFunctional::constant_function(2, 0)});
  CHECK(w0.grid == box.rep("W_0").grid);
  // The grid form: [[q, f_x - q], [f_y - q, 1 + q - f_x - f_y]].
  const AffineFunctional qh = frac(1, 2) * (fx + fy);
  WignerRep wh = construct_family(o[0], o[1], {1, 1}, {qh});
  CHECK(wh.grid[0][0] == qh);
  CHECK(wh.grid[0][1] == fx - qh);
  CHECK(wh.grid[1][0] == fy - qh);
  CHECK(wh.grid[1][1] == AffineFunctional::constant_function(2, 1) + qh - fx - fy);
  CHECK_THROWS_AS(construct_family(o[0], o[1], {1, 1}, {}), PreconditionError);

  CatalogEntry cube = load_catalog("cube");
  const auto& c = cube.theory.observables;
  CHECK(construct_family(c[0], c[1], {1, 1}, {AffineFunctional::coordinate(3, 2)}).grid ==
        cube.rep("W_z").grid);
}

TEST_CASE("perturbation") {
  CatalogEntry box = load_catalog("boxworld");
  const WignerRep& w = box.rep("W_0");
  CHECK(perturb(w, 0, 1, 0, 1, 0).grid == w.grid);
  WignerRep p = perturb(w, 0, 1, 0, 1, 1);
  CHECK(p.grid[0][0] == w.grid[0][0] + AffineFunctional::constant_function(2, 1));
  CHECK(marginals_exact(p));
  CHECK(perturb(p, 0, 1, 0, 1, -1).grid == w.grid);
  CHECK_THROWS_AS(perturb(w, 0, 0, 0, 1, 1), PreconditionError);
}

TEST_CASE("positivity") {
  CatalogEntry box = load_catalog("boxworld");
  const auto& k = box.theory.state_space;
  CHECK(is_positive(box.rep("W_+"), k).positive);
  auto r = is_positive(box.rep("W_0"), k);
  CHECK_FALSE(r.positive);
  CHECK(r.entry == std::make_pair<std::size_t, std::size_t>(1, 1));
  CHECK(*r.witness == Vector{1, 1});
  CHECK(r.value == ExtremalValue(-1));

  CatalogEntry ball = load_catalog("qubit_ball");
  auto b = is_positive(ball.rep("W"), ball.theory.state_space);
  CHECK_FALSE(b.positive);
  CHECK(b.witness_is_direction);
  CHECK(*b.witness == Vector{frac(-1, 4), frac(-1, 4), frac(-1, 4)});
  CHECK(b.value.to_string() == "1/4 - 1/4*sqrt(3)");
}

TEST_CASE("faithfulness") {
  CatalogEntry cube = load_catalog("cube");
  const auto& k = cube.theory.state_space;
  CHECK(is_faithful(cube.rep("W_z"), k).faithful);
  auto r0 = is_faithful(cube.rep("W_0"), k);
  CHECK_FALSE(r0.faithful);
  CHECK(r0.rank == 3);
  CHECK(r0.required == 4);

  CatalogEntry box = load_catalog("boxworld");
  const auto& o = box.theory.observables;
  for (long c = -2; c <= 2; ++c)
    CHECK(is_faithful(construct_family(o[0], o[1], {1, 1}, {AffineFunctional{{c, 1 - c}, frac(c, 3)}}),
                      box.theory.state_space)
              .faithful);

  auto fb = faithful_choice_possible(o[0], o[1], box.theory.state_space);
  CHECK(fb.free_parameters == 1);
  CHECK(fb.deficit == 0);
  CHECK(fb.possible);
  auto fc = faithful_choice_possible(cube.theory.observables[0], cube.theory.observables[1], k);
  CHECK(fc.free_parameters == 1);
  CHECK(fc.deficit == 1);
  CHECK(fc.possible);
  CatalogEntry trit = load_catalog("trit");
  const auto& ta = trit.theory.observables[0];
  auto ft = faithful_choice_possible(ta, ta, trit.theory.state_space);
  CHECK(ft.free_parameters == 1);
  CHECK(ft.deficit == 1);
  CHECK(ft.possible);

  const auto& ca = cube.theory.observables[0];
  const auto& cb = cube.theory.observables[1];
  WignerRep completed = faithful_completion(ca, cb, k, default_anchor(ca, cb));
  CHECK(is_faithful(completed, k).faithful);
  CHECK(completed.grid == cube.rep("W_z").grid);
}

TEST_CASE("degenerate representation") {
  CatalogEntry cube = load_catalog("cube");
  const auto& k = cube.theory.state_space;
  const auto& o = cube.theory.observables;
  WignerRep d = degenerate_rep(o[0], o[1], {1, 1});
  CHECK(evaluate(d, k, {0, 0, 0}) == evaluate(d, k, {0, 0, 1}));
  CHECK_FALSE(check_marginals(d, k).has_value());
  CatalogEntry box = load_catalog("boxworld");
  CHECK(is_faithful(degenerate_rep(box.theory.observables[0], box.theory.observables[1], {1, 1}),
                    box.theory.state_space)
            .faithful);
}

TEST_CASE("positive member search") {
  CatalogEntry box = load_catalog("boxworld");
  const auto& k = box.theory.state_space;
  const auto& o = box.theory.observables;
  auto ab = find_positive_member(o[0], o[1], k, {1, 1});
  CHECK_FALSE(ab.rep.has_value());
  REQUIRE(ab.certificate);
  CHECK(verifies(ab.program, *ab.certificate));
  auto cd = find_positive_member(o[2], o[3], k, {1, 1});
  REQUIRE(cd.rep);
  CHECK(is_positive(*cd.rep, k).positive);
  CHECK_FALSE(check_marginals(*cd.rep, k).has_value());
}

TEST_CASE("isomorphisms") {
  CatalogEntry box = load_catalog("boxworld");
  const auto& k = box.theory.state_space;
  AffineMap same = isomorphism(box.rep("W_1/2"), box.rep("W_1/2"), k);
  for (const auto& v : k.vertices()) {
    Vector y = evaluate_flat(box.rep("W_1/2"), v);
    CHECK(same(y) == y);
  }
  AffineMap l = isomorphism(box.rep("W_0"), box.rep("W_1/2"), k);
  for (const auto& v : k.vertices())
    CHECK(l(evaluate_flat(box.rep("W_0"), v)) == evaluate_flat(box.rep("W_1/2"), v));

  CatalogEntry cube = load_catalog("cube");
  const auto& ck = cube.theory.state_space;
  const auto& o = cube.theory.observables;
  WignerRep wz2 = construct_family(o[0], o[1], {1, 1},
                                   {AffineFunctional::constant_function(3, 1) - AffineFunctional::coordinate(3, 2)});
  AffineMap lc = isomorphism(cube.rep("W_z"), wz2, ck);
  for (const auto& v : ck.vertices()) CHECK(lc(evaluate_flat(cube.rep("W_z"), v)) == evaluate_flat(wz2, v));
  CHECK_THROWS_AS(isomorphism(cube.rep("W_0"), wz2, ck), PreconditionError);
}

TEST_CASE("affine extension is the identity off the source directions") {
  auto m = extend_affine({{0, 0, 0}, {1, 0, 0}}, {{0, 0, 0}, {2, 0, 0}}, 3, 3);
  REQUIRE(m);
  CHECK(m->matrix == Matrix::from_rows({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK_FALSE(extend_affine({{0}, {1}, {2}}, {{0}, {1}, {3}}, 1, 1).has_value());
}

// ---------------------------------------------------------------------------
// Properties

namespace {

struct RandomTheory {
  StateSpace k;
  Observable a, b;
};

RandomTheory random_theory(std::mt19937& rng, std::size_t max_outcomes = 3, std::size_t min_outcomes = 2) {
  StateSpace k = testsupport::random_polygon(rng, static_cast<std::size_t>(pick(rng, 3, 6)));
  auto n = [&] { return static_cast<std::size_t>(pick(rng, static_cast<long>(min_outcomes), static_cast<long>(max_outcomes))); };
  Observable a = testsupport::random_observable(rng, k, n(), "A");
  Observable b = testsupport::random_observable(rng, k, n(), "B");
  return {std::move(k), std::move(a), std::move(b)};
}

std::vector<AffineFunctional> random_free(std::mt19937& rng, const Observable& a, const Observable& b) {
  std::vector<AffineFunctional> free;
  for (std::size_t i = 0; i < free_parameter_count(a, b); ++i)
    free.push_back(testsupport::random_functional(rng, 2));
  return free;
}

}  // namespace

TEST_CASE("property: family members and perturbations keep exact marginals") {
  std::mt19937 rng(31);
  for (int c = 0; c < 200; ++c) {
    RandomTheory t = random_theory(rng, 4);
    Anchor anchor{static_cast<std::size_t>(pick(rng, 0, static_cast<long>(t.a.size()) - 1)),
                  static_cast<std::size_t>(pick(rng, 0, static_cast<long>(t.b.size()) - 1))};
    WignerRep w = construct_family(t.a, t.b, anchor, random_free(rng, t.a, t.b));
    CHECK(marginals_exact(w));
    std::size_t a1 = 0, a2 = t.a.size() - 1, b1 = 0, b2 = t.b.size() - 1;
    Rational s = frac(pick(rng, 1, 9), pick(rng, 1, 4)) * (pick(rng, 0, 1) ? 1 : -1);
    WignerRep p = perturb(w, a1, a2, b1, b2, s);
    CHECK(marginals_exact(p));
    CHECK_FALSE(p.grid == w.grid);
  }
}

TEST_CASE("property: positive member exists exactly when compatible") {
  std::mt19937 rng(32);
  int compatible = 0;
  for (int c = 0; c < 200; ++c) {
    RandomTheory t = random_theory(rng);
    auto comp = are_compatible(t.a, t.b, t.k);
    auto pos = find_positive_member(t.a, t.b, t.k, default_anchor(t.a, t.b));
    CHECK(comp.compatible() == pos.rep.has_value());
    if (pos.rep) {
      ++compatible;
      CHECK(is_positive(*pos.rep, t.k).positive);
    } else {
      CHECK(verifies(pos.program, *pos.certificate));
    }
  }
  CHECK(compatible > 20);
  CHECK(compatible < 190);
}

TEST_CASE("property: all members faithful exactly when jointly info-complete") {
  std::mt19937 rng(33);
  int complete = 0;
  for (int c = 0; c < 200; ++c) {
    RandomTheory t = random_theory(rng);
    if (c % 3 == 0) t.b = t.a;
    const bool ic = jointly_info_complete(t.a, t.b, t.k);
    complete += ic;
    bool all = is_faithful(degenerate_rep(t.a, t.b, default_anchor(t.a, t.b)), t.k).faithful;
    for (int s = 0; s < 4; ++s)
      all = all && is_faithful(construct_family(t.a, t.b, default_anchor(t.a, t.b), random_free(rng, t.a, t.b)), t.k)
                       .faithful;
    CHECK(all == ic);
  }
  CHECK(complete > 20);
  CHECK(complete < 190);
}

TEST_CASE("property: a faithful member exists exactly when the inequality holds") {
  std::mt19937 rng(34);
  int possible = 0;
  for (int c = 0; c < 200; ++c) {
    RandomTheory t = random_theory(rng, 3, 1);
    if (c % 4 == 0) t.b = t.a;
    auto choice = faithful_choice_possible(t.a, t.b, t.k);
    WignerRep w = faithful_completion(t.a, t.b, t.k, default_anchor(t.a, t.b));
    CHECK(marginals_exact(w));
    CHECK(is_faithful(w, t.k).faithful == choice.possible);
    possible += choice.possible;
  }
  CHECK(possible > 20);
  CHECK(possible < 190);
}

TEST_CASE("property: free parameter count is the nullspace dimension of the marginal system") {
  std::mt19937 rng(35);
  for (int c = 0; c < 200; ++c) {
    RandomTheory t = random_theory(rng, 4, 1);
    AffineChart chart(t.k);
    const std::size_t na = t.a.size(), nb = t.b.size(), m = chart.size();
    // Unknowns: chart values of each q_ab. Homogeneous marginal system.
    Matrix sys((na + nb) * m, na * nb * m);
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j)
        for (std::size_t p = 0; p < m; ++p) {
          sys(i * m + p, (i * nb + j) * m + p) = 1;
          sys((na + j) * m + p, (i * nb + j) * m + p) = 1;
        }
    CHECK(nullspace(sys).size() == free_parameter_count(t.a, t.b) * m);
    CHECK(free_parameter_count(t.a, t.b) == (na - 1) * (nb - 1));
  }
}
