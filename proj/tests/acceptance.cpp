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


// Acceptance run: one PASS/FAIL line per criterion. Expected values are
// written out here, independently of the catalog's own expectation table.

#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "support.hpp"
#include "wignerlab/catalog.hpp"
#include "wignerlab/io.hpp"
#include "wignerlab/report.hpp"
#include "wignerlab/symmetry.hpp"
#include "wignerlab/wigner.hpp"

using namespace wignerlab;
using testsupport::pick;

namespace {

// Collects failed checks for one criterion.
struct Criterion {
  std::vector<std::string> failures;
  int checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

SignedGrid grid(std::vector<std::vector<long>> rows, long den = 1) {
  SignedGrid g;
  for (const auto& r : rows) {
    g.emplace_back();
    for (long x : r) g.back().push_back(frac(x, den));
  }
  return g;
}

AffineFunctional fn(Vector linear, Rational constant) { return {std::move(linear), std::move(constant)}; }

// ---------------------------------------------------------------------------

void boxworld_matrices(Criterion& c) {
  CatalogEntry e = load_catalog("boxworld");
  const StateSpace& k = e.theory.state_space;
  const Vector s00{0, 0}, s01{0, 1}, s10{1, 0}, s11{1, 1};
  struct Row {
    const char* rep;
    Vector s;
    SignedGrid want;
  };
  const std::vector<Row> table = {
      {"W_0", s00, grid({{0, 0}, {0, 1}})},       {"W_0", s01, grid({{0, 0}, {1, 0}})},
      {"W_0", s10, grid({{0, 1}, {0, 0}})},       {"W_0", s11, grid({{0, 1}, {1, -1}})},
      {"W_1/2", s00, grid({{0, 0}, {0, 1}})},     {"W_1/2", s01, grid({{1, -1}, {1, 1}}, 2)},
      {"W_1/2", s10, grid({{1, 1}, {-1, 1}}, 2)}, {"W_1/2", s11, grid({{1, 0}, {0, 0}})},
      {"W_+", s00, grid({{0, 0}, {0, 1}})},       {"W_+", s01, grid({{0, 0}, {1, 1}}, 2)},
      {"W_+", s10, grid({{0, 1}, {0, 1}}, 2)},    {"W_+", s11, grid({{0, 1}, {1, 0}}, 2)},
  };
  for (const auto& row : table) {
    std::ostringstream name;
    name << row.rep << "(s_" << row.s[0] << row.s[1] << ")";
    c.expect(evaluate(e.rep(row.rep), k, row.s) == row.want, name.str());
  }
}

void positivity_and_compatibility(Criterion& c) {
  CatalogEntry e = load_catalog("boxworld");
  const StateSpace& k = e.theory.state_space;
  const auto& o = e.theory.observables;
  auto ab = are_compatible(o[0], o[1], k);
  c.expect(!ab.compatible(), "A, B incompatible");
  c.expect(ab.certificate && verifies(ab.program, *ab.certificate), "A, B infeasibility certificate");
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      auto search = find_positive_member(o[0], o[1], k, {i, j});
      c.expect(!search.rep, "no positive member (anchor " + std::to_string(i) + std::to_string(j) + ")");
      c.expect(search.certificate && verifies(search.program, *search.certificate), "positive-member certificate");
    }
  auto cd = are_compatible(o[2], o[3], k);
  c.expect(cd.compatible(), "C, D compatible");
  c.expect(is_positive(e.rep("W_+"), k).positive, "W_+ positive");
  auto cd_member = find_positive_member(o[2], o[3], k, default_anchor(o[2], o[3]));
  c.expect(cd_member.rep && is_positive(*cd_member.rep, k).positive, "C, D positive member found");
}

void symmetry_tables(Criterion& c) {
  CatalogEntry e = load_catalog("boxworld");
  const StateSpace& k = e.theory.state_space;
  // Flat phase points: 00 -> 0, 01 -> 1, 10 -> 2, 11 -> 3.
  const PhasePointMap id{2, 2, {0, 1, 2, 3}}, swap_10_01{2, 2, {0, 2, 1, 3}}, swap_00_11{2, 2, {3, 1, 2, 0}},
      swap_00_01{2, 2, {1, 0, 2, 3}};
  c.expect(enumerate_lifted_symmetries(e.rep("W_0"), k) == std::vector<PhasePointMap>{id, swap_10_01},
           "W_0 lifted symmetries = {id, 10<->01}");
  const WignerRep& half = e.rep("W_1/2");
  c.expect(is_symmetry(half, k, lift(swap_10_01)).symmetric, "W_1/2 symmetric under 10<->01");
  c.expect(is_symmetry(half, k, lift(swap_00_11)).symmetric, "W_1/2 symmetric under 00<->11");
  auto bad = is_symmetry(half, k, lift(swap_00_01));
  c.expect(!bad.symmetric, "W_1/2 not symmetric under 00<->01");
  c.expect(bad.image == flatten(grid({{-1, 1}, {1, 1}}, 2)), "non-member grid 1/2[[-1,1],[1,1]]");
  // The non-member is the image of W_1/2(s_01); its 00 entry q = (f_x + f_y)/2
  // would be negative, impossible on the square.
  c.expect(bad.witness_vertex && k.vertices()[*bad.witness_vertex] == Vector{0, 1}, "witness state s_01");
}

void qubit_ball(Criterion& c) {
  CatalogEntry e = load_catalog("qubit_ball");
  const StateSpace& k = e.theory.state_space;
  const WignerRep& w = e.rep("W");
  const Rational h = frac(1, 4);
  // W_ij = 1/4(+-sx +-sy +-sz + I) read as functionals of (r_x, r_y, r_z).
  const FunctionalGrid want = {{fn({h, h, h}, h), fn({-h, -h, h}, h)}, {fn({h, -h, -h}, h), fn({-h, h, -h}, h)}};
  c.expect(w.grid == want, "grid equals the Pauli expansion");

  // Pauli recovery: signed sums of the entries give back each coordinate,
  // so W(x) determines x.
  auto sum = [&](std::vector<long> s) {
    AffineFunctional f = AffineFunctional::constant_function(3, 0);
    for (std::size_t i = 0; i < 4; ++i) f = f + Rational(s[i]) * w.entry(i);
    return f;
  };
  c.expect(sum({1, -1, 1, -1}) == AffineFunctional::coordinate(3, 0), "W00 + W10 - W01 - W11 = sigma_x");
  c.expect(sum({1, -1, -1, 1}) == AffineFunctional::coordinate(3, 1), "W00 + W11 - W01 - W10 = sigma_y");
  c.expect(sum({1, 1, -1, -1}) == AffineFunctional::coordinate(3, 2), "W00 + W01 - W10 - W11 = sigma_z");
  auto faithful = is_faithful(w, k);
  c.expect(faithful.faithful && faithful.rank == 4, "faithful with rank 4");

  auto pos = is_positive(w, k);
  c.expect(!pos.positive, "not positive");
  c.expect(pos.entry == std::make_pair<std::size_t, std::size_t>(0, 0), "entry 00 is the most negative");
  // min over the unit ball of (1 + x + y + z)/4 is (1 - sqrt 3)/4.
  c.expect(pos.value == ExtremalValue(frac(1, 4), frac(-1, 4), 3), "exact minimum 1/4 - 1/4*sqrt(3)");
  c.expect(pos.value.compare(frac(-1830, 10000)) < 0 && pos.value.compare(frac(-1831, 10000)) > 0,
           "minimum lies in (-0.1831, -0.1830)");

  // rho' = 1/2(I - r_y sx - r_x sy + r_z sz), 1/2(I + r_x sx - r_z sy - r_y sz),
  // 1/2(I - r_z sx + r_y sy - r_x sz).
  const std::vector<Matrix> signed_perms = {
      Matrix::from_rows({{0, -1, 0}, {-1, 0, 0}, {0, 0, 1}}),
      Matrix::from_rows({{1, 0, 0}, {0, 0, -1}, {0, -1, 0}}),
      Matrix::from_rows({{0, 0, -1}, {0, 1, 0}, {-1, 0, 0}}),
  };
  std::vector<PhasePointMap> generators;
  for (std::size_t i = 0; i < 3; ++i) {
    PhasePointMap phi = PhasePointMap::swap(2, 2, 0, i + 1);
    generators.push_back(phi);
    Channel ch = induced_action(w, k, phi);
    c.expect(ch.map().matrix == signed_perms[i] && ch.map().offset == Vector{0, 0, 0},
             "induced action of phi_" + std::string(i == 0 ? "01" : i == 1 ? "10" : "11"));
  }
  c.expect(is_group_symmetric(w, k, generators).symmetric, "G_4-symmetric");
}

// Brute force over q = a f_x + b f_y + c on a rational grid: q must satisfy
// the covariance equations of both outcome swaps at every vertex.
std::vector<AffineFunctional> boxworld_covariant_oracle() {
  std::vector<AffineFunctional> out;
  const std::vector<Vector> square = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  for (long an = -8; an <= 8; ++an)
    for (long bn = -8; bn <= 8; ++bn)
      for (long cn = -8; cn <= 8; ++cn) {
        AffineFunctional q = fn({frac(an, 4), frac(bn, 4)}, frac(cn, 8));
        bool ok = true;
        for (const auto& s : square) {
          const Rational fx = s[0], fy = s[1];
          // Swapping A's outcomes exchanges the rows, realised by f_x -> 1 - f_x.
          ok = ok && q({1 - fx, fy}) == fy - q(s);
          // Swapping B's outcomes exchanges the columns, realised by f_y -> 1 - f_y.
          ok = ok && q({fx, 1 - fy}) == fx - q(s);
        }
        if (ok) out.push_back(q);
      }
  return out;
}

void covariant_uniqueness(Criterion& c) {
  {
    CatalogEntry e = load_catalog("qubit_xz");
    const Rational h = frac(1, 4);
    // Coordinates (x, z): W = 1/4 [[x + z + 1, -x + z + 1], [x - z + 1, -x - z + 1]].
    const FunctionalGrid want = {{fn({h, h}, h), fn({-h, h}, h)}, {fn({h, -h}, h), fn({-h, -h}, h)}};
    auto r = solve_covariant(e.theory.observables[0], e.theory.observables[1], e.theory.state_space,
                             e.group_channels());
    c.expect(r.status == CovariantSolution::Status::unique && r.rep && r.rep->grid == want, "qubit_xz grid");
  }
  {
    CatalogEntry e = load_catalog("rebit_diamond");
    auto r = solve_covariant(e.theory.observables[0], e.theory.observables[1], e.theory.state_space);
    c.expect(r.status == CovariantSolution::Status::unique && r.directions.empty(), "rebit_diamond unique");
    c.expect(r.hypotheses.info_complete && r.hypotheses.complementary == true && r.hypotheses.surjective_a &&
                 r.hypotheses.surjective_b,
             "rebit_diamond hypotheses");
  }
  {
    CatalogEntry e = load_catalog("boxworld");
    const auto oracle = boxworld_covariant_oracle();
    c.expect(oracle.size() == 1 && oracle[0] == fn({frac(1, 2), frac(1, 2)}, frac(-1, 4)),
             "brute force finds only q = (2 f_x + 2 f_y - 1)/4");
    auto r = solve_covariant(e.theory.observables[0], e.theory.observables[1], e.theory.state_space);
    bool match = r.status == CovariantSolution::Status::unique && r.rep && oracle.size() == 1;
    if (match)
      for (const auto& v : e.theory.state_space.vertices()) match = match && r.rep->grid[0][0](v) == oracle[0](v);
    c.expect(match, "boxworld solution matches the brute-force oracle");
  }
  {
    CatalogEntry e = load_catalog("deformed_12gon");
    auto r = solve_covariant(e.theory.observables[0], e.theory.observables[1], e.theory.state_space);
    c.expect(r.status == CovariantSolution::Status::none && !r.rep, "deformed_12gon has none");
    c.expect(r.certificate && r.channels.search && verifies(r.channels.search->program, *r.certificate),
             "deformed_12gon Farkas certificate");
  }
}

void cube_and_trit(Criterion& c) {
  CatalogEntry cube = load_catalog("cube");
  auto wz = is_faithful(cube.rep("W_z"), cube.theory.state_space);
  auto w0 = is_faithful(cube.rep("W_0"), cube.theory.state_space);
  c.expect(wz.faithful && wz.rank == 4, "cube W_z faithful, rank 4");
  c.expect(!w0.faithful && w0.rank == 3, "cube W_0 not faithful, rank 3");

  CatalogEntry trit = load_catalog("trit");
  const StateSpace& k = trit.theory.state_space;
  const WignerRep& w = trit.rep("W");
  Channel rotation = Channel::certify(k, trit.channel("rotation").map, k);
  const auto& v = k.vertices();
  c.expect(rotation.map()(v[0]) == v[1] && rotation.map()(v[1]) == v[2] && rotation.map()(v[2]) == v[0],
           "rotation s_0 -> s_1 -> s_2 -> s_0");
  auto r = find_symmetry_for_channel(w, k, rotation);
  c.expect(!r.found(), "no transported symmetry");
  c.expect(r.witness_vertices == std::make_pair<std::size_t, std::size_t>(1, 2), "witness pair (s_1, s_2)");
  // The witness really is one: equal images before the rotation, different after.
  c.expect(evaluate_flat(w, v[1]) == evaluate_flat(w, v[2]) &&
               evaluate_flat(w, rotation.map()(v[1])) != evaluate_flat(w, rotation.map()(v[2])),
           "W(s_1) = W(s_2) but W(s_2) != W(s_0)");
}

// ---------------------------------------------------------------------------
// Criterion 7: compact property suites.

struct RandomPair {
  StateSpace k;
  Observable a, b;
};

RandomPair random_pair(std::mt19937& rng, long max_outcomes = 3) {
  StateSpace k = testsupport::random_polygon(rng, static_cast<std::size_t>(pick(rng, 3, 6)));
  Observable a = testsupport::random_observable(rng, k, static_cast<std::size_t>(pick(rng, 2, max_outcomes)), "A");
  Observable b = testsupport::random_observable(rng, k, static_cast<std::size_t>(pick(rng, 2, max_outcomes)), "B");
  return {std::move(k), std::move(a), std::move(b)};
}

std::vector<AffineFunctional> random_free(std::mt19937& rng, const Observable& a, const Observable& b) {
  std::vector<AffineFunctional> free;
  for (std::size_t i = 0; i < free_parameter_count(a, b); ++i) free.push_back(testsupport::random_functional(rng, 2));
  return free;
}

// Row and column sums, coefficient by coefficient.
bool marginals_coefficientwise(const WignerRep& w) {
  for (std::size_t i = 0; i < w.rows(); ++i) {
    AffineFunctional s = AffineFunctional::constant_function(w.grid[i][0].dimension(), 0);
    for (std::size_t j = 0; j < w.cols(); ++j) s = s + w.grid[i][j];
    if (!(s == w.a.effects[i])) return false;
  }
  for (std::size_t j = 0; j < w.cols(); ++j) {
    AffineFunctional s = AffineFunctional::constant_function(w.grid[0][j].dimension(), 0);
    for (std::size_t i = 0; i < w.rows(); ++i) s = s + w.grid[i][j];
    if (!(s == w.b.effects[j])) return false;
  }
  return true;
}

Observable planar(std::string name, std::size_t coord) {
  AffineFunctional f = frac(1, 2) * AffineFunctional::coordinate(2, coord) + AffineFunctional::constant_function(2, frac(1, 2));
  return {std::move(name), {"0", "1"}, {f, AffineFunctional::constant_function(2, 1) - f}};
}

void properties(Criterion& c) {
  const int cases = 200;
  {
    std::mt19937 rng(701);
    int ok = 0;
    for (int i = 0; i < cases; ++i) {
      RandomPair t = random_pair(rng, 4);
      WignerRep w = construct_family(t.a, t.b, default_anchor(t.a, t.b), random_free(rng, t.a, t.b));
      WignerRep p = perturb(w, 0, t.a.size() - 1, 0, t.b.size() - 1, frac(pick(rng, -9, 9), pick(rng, 1, 4)));
      ok += marginals_coefficientwise(w) && marginals_coefficientwise(p);
    }
    c.expect(ok == cases, "marginals: " + std::to_string(ok) + "/" + std::to_string(cases));
  }
  {
    std::mt19937 rng(702);
    int ok = 0, complete = 0;
    for (int i = 0; i < cases; ++i) {
      RandomPair t = random_pair(rng);
      if (i % 3 == 0) t.b = t.a;
      const bool ic = jointly_info_complete(t.a, t.b, t.k);
      complete += ic;
      bool all = is_faithful(degenerate_rep(t.a, t.b, default_anchor(t.a, t.b)), t.k).faithful;
      for (int s = 0; s < 3; ++s)
        all = all && is_faithful(construct_family(t.a, t.b, default_anchor(t.a, t.b), random_free(rng, t.a, t.b)), t.k).faithful;
      ok += all == ic;
    }
    c.expect(ok == cases && complete > 0 && complete < cases,
             "all-faithful iff info-complete: " + std::to_string(ok) + "/" + std::to_string(cases));
  }
  const Observable pa = planar("A", 1), pb = planar("B", 0);
  {
    std::mt19937 rng(703);
    int ok = 0, checked = 0;
    for (int i = 0; i < cases; ++i) {
      StateSpace k = testsupport::symmetric_octagon(rng);
      AffineFunctional q = i % 2 == 0 ? fn({frac(1, 4), frac(1, 4)}, frac(1, 4)) : testsupport::random_functional(rng, 2, 2);
      WignerRep w = construct_family(pa, pb, {1, 1}, {q});
      if (!is_faithful(w, k).faithful) continue;
      ++checked;
      bool all = true;
      for (const auto& phi : enumerate_lifted_symmetries(w, k)) all = all && find_transported_channel(w, k, lift(phi)).found();
      ok += all;
    }
    c.expect(ok == checked && checked == cases,
             "faithful => transported: " + std::to_string(ok) + "/" + std::to_string(checked));
  }
  {
    std::mt19937 rng(704);
    int ok = 0, pairs = 0;
    for (int i = 0; pairs < cases; ++i) {
      StateSpace k = testsupport::symmetric_octagon(rng);
      WignerRep w = construct_family(pa, pb, {1, 1}, {fn({frac(1, 4), frac(1, 4)}, frac(1, 4))});
      std::vector<PhasePointMap> gens;
      for (const auto& g : product_generators(2, 2)) gens.push_back(phase_map(g));
      for (const auto& g : gens)
        for (const auto& h : gens) {
          Channel both = induced_action(w, k, compose(g, h));
          AffineMap two = compose(induced_action(w, k, g).map(), induced_action(w, k, h).map());
          bool same = true;
          for (const auto& v : k.vertices()) same = same && both.map()(v) == two(v);
          ok += same;
          ++pairs;
        }
    }
    c.expect(ok == pairs, "induced-action homomorphism: " + std::to_string(ok) + "/" + std::to_string(pairs));
  }
  {
    std::mt19937 rng(705);
    int ok = 0;
    for (int i = 0; i < cases; ++i) {
      RandomPair t = random_pair(rng, 4);
      const std::size_t na = t.a.size(), nb = t.b.size();
      // Homogeneous marginal system in the na*nb grid values at one point.
      Matrix sys(na + nb, na * nb);
      for (std::size_t r = 0; r < na; ++r)
        for (std::size_t s = 0; s < nb; ++s) {
          sys(r, r * nb + s) = 1;
          sys(na + s, r * nb + s) = 1;
        }
      ok += nullspace(sys).size() == (na - 1) * (nb - 1) && free_parameter_count(t.a, t.b) == (na - 1) * (nb - 1);
    }
    c.expect(ok == cases, "free-parameter count: " + std::to_string(ok) + "/" + std::to_string(cases));
  }
}

// ---------------------------------------------------------------------------
// Criterion 8: infeasibility results re-checked through `verify`.

void certificates(Criterion& c) {
  auto check = [&](const std::string& label, const Report& r, std::vector<std::string> kinds) {
    const auto report = nlohmann::ordered_json::parse(r.text);
    const auto result = nlohmann::ordered_json::parse(verify_report(r.text).text);
    for (std::size_t i = 0; i < report["claims"].size(); ++i) {
      const auto& claim = report["claims"][i];
      if (!claim.contains("certificate")) continue;
      const std::string kind = claim["claim"];
      std::erase(kinds, kind);
      c.expect(result["claims"][i]["verified"] == true && result["claims"][i]["note"] == "certificate",
               label + " " + kind + " certificate");
    }
    for (const auto& k : kinds) c.expect(false, label + " " + k + " has no certificate");
  };
  TheoryDocument box = document_from_catalog(load_catalog("boxworld"));
  check("boxworld", analyze_report(box), {"compatibility", "positive_member"});
  TheoryDocument deformed = document_from_catalog(load_catalog("deformed_12gon"));
  check("deformed_12gon", covariant_report(deformed), {"covariant"});
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* title;
    std::function<void(Criterion&)> run;
  };
  const std::vector<Entry> entries = {
      {1, "boxworld W_0, W_1/2, W_+ at the four vertices", boxworld_matrices},
      {2, "positive member exists iff compatible (boxworld)", positivity_and_compatibility},
      {3, "boxworld symmetry tables", symmetry_tables},
      {4, "qubit ball: faithful, exact negativity, G_4 symmetry", qubit_ball},
      {5, "covariant uniqueness and non-existence", covariant_uniqueness},
      {6, "cube ranks and trit rotation witness", cube_and_trit},
      {7, "randomized property suites", properties},
      {8, "certificates re-verified by exact replay", certificates},
  };
  int failed = 0;
  for (const auto& e : entries) {
    Criterion c;
    try {
      e.run(c);
    } catch (const std::exception& ex) {
      c.failures.push_back(std::string("exception: ") + ex.what());
    }
    const bool ok = c.failures.empty();
    failed += !ok;
    std::printf("criterion %d: %s  %s (%d checks)\n", e.id, ok ? "PASS" : "FAIL", e.title, c.checks);
    for (const auto& f : c.failures) std::printf("    failed: %s\n", f.c_str());
  }
  return failed == 0 ? 0 : 1;
}
