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
#include <string>

#include "support.hpp"
#include "wignerlab/catalog.hpp"
#include "wignerlab/errors.hpp"
#include "wignerlab/io.hpp"

using namespace wignerlab;
using testsupport::pick;

namespace {

// Square [0,1]^2 with the two coordinate observables. `constant` is spliced
// into the first effect of A so error tests can vary a single field.
std::string square_doc(const std::string& constant = "\"0\"", const std::string& extra = "") {
  return R"({
  "name": "square",
  "state_space": {
    "type": "polytope",
    "vertices": [["0", "0"], ["0", "1"], ["1", "0"], ["1", "1"]]
  },
  "observables": [
    {
      "name": "A",
      "outcomes": ["0", "1"],
      "effects": [
        {"linear": ["1", "0"], "constant": )" +
         constant + R"(},
        {"linear": ["-1", "0"], "constant": "1"}
      ]
    },
    {
      "name": "B",
      "outcomes": ["0", "1"],
      "effects": [
        {"linear": ["0", "1"], "constant": "0"},
        {"linear": ["0", "-1"], "constant": "1"}
      ]
    }
  ])" + extra + "\n}\n";
}

ParseError parse_failure(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("document parsed: " << text);
  return ParseError("unreachable");
}

bool same_theory(const TheoryDocument& x, const TheoryDocument& y) {
  const StateSpace &k1 = x.theory.state_space, &k2 = y.theory.state_space;
  if (k1.is_polytope() != k2.is_polytope()) return false;
  if (k1.is_polytope() && k1.vertices() != k2.vertices()) return false;
  if (k1.is_ball() && (k1.as_ball().center != k2.as_ball().center || k1.as_ball().radius != k2.as_ball().radius))
    return false;
  if (x.theory.observables.size() != y.theory.observables.size()) return false;
  for (std::size_t i = 0; i < x.theory.observables.size(); ++i) {
    const auto &o1 = x.theory.observables[i], &o2 = y.theory.observables[i];
    if (o1.name != o2.name || o1.outcomes != o2.outcomes || o1.effects != o2.effects) return false;
  }
  if (x.representations.size() != y.representations.size()) return false;
  for (std::size_t i = 0; i < x.representations.size(); ++i) {
    const auto &w1 = x.representations[i], &w2 = y.representations[i];
    if (w1.name != w2.name || w1.a.name != w2.a.name || w1.b.name != w2.b.name || w1.grid != w2.grid) return false;
  }
  if (x.channels.size() != y.channels.size()) return false;
  for (std::size_t i = 0; i < x.channels.size(); ++i)
    if (x.channels[i].name != y.channels[i].name || !(x.channels[i].map == y.channels[i].map) ||
        x.channels[i].action != y.channels[i].action)
      return false;
  return x.name == y.name;
}

}  // namespace

TEST_CASE("catalog entries survive export and re-import unchanged") {
  for (const auto& name : catalog_names()) {
    INFO(name);
    TheoryDocument doc = document_from_catalog(load_catalog(name));
    const std::string text = export_document(doc);
    TheoryDocument back = parse_document(text);
    CHECK(same_theory(doc, back));
    CHECK(export_document(back) == text);
  }
}

TEST_CASE("a minimal file parses") {
  TheoryDocument doc = parse_document(square_doc());
  CHECK(doc.name == "square");
  CHECK(doc.theory.state_space.vertices().size() == 4);
  CHECK(doc.theory.observable("B").effects[1] == AffineFunctional{{0, -1}, 1});
  CHECK(doc.representations.empty());
  CHECK_THROWS_AS(doc.rep(), PreconditionError);
}

TEST_CASE("decimal and integer literals are exact") {
  TheoryDocument doc = parse_document(square_doc("\"0.125\""));
  CHECK(doc.theory.observable("A").effects[0].constant == frac(1, 8));
  doc = parse_document(square_doc("0"));
  CHECK(doc.theory.observable("A").effects[0].constant == 0);
  doc = parse_document(square_doc("\"-3/6\""));
  CHECK(doc.theory.observable("A").effects[0].constant == frac(-1, 2));
}

TEST_CASE("zero denominators name the line and field") {
  ParseError e = parse_failure(square_doc("\"1/0\""));
  CHECK(e.field() == "observables[0].effects[0].constant");
  CHECK(e.line() == 12);
  CHECK(std::string(e.what()).find("1/0") != std::string::npos);
}

TEST_CASE("floating-point literals are rejected") {
  ParseError e = parse_failure(square_doc("0.5"));
  CHECK(e.field() == "observables[0].effects[0].constant");
  CHECK(std::string(e.what()).find("floating-point") != std::string::npos);
}

TEST_CASE("malformed input is reported with its location") {
  SUBCASE("syntax") {
    ParseError e = parse_failure("{\n  \"name\": \"x\",\n  \"state_space\": }\n");
    CHECK(e.line() == 3);
  }
  SUBCASE("unknown top-level field") {
    ParseError e = parse_failure(square_doc("\"0\"", ",\n  \"comment\": \"hi\""));
    CHECK(e.field() == "comment");
  }
  SUBCASE("missing field") {
    ParseError e = parse_failure(R"({"name": "x", "observables": []})");
    CHECK(e.field() == "state_space");
  }
  SUBCASE("ragged vertices") {
    ParseError e = parse_failure(
        R"({"name": "x", "state_space": {"type": "polytope", "vertices": [["0", "0"], ["1"]]}, "observables": []})");
    CHECK(e.field() == "state_space.vertices[1]");
  }
  SUBCASE("non-extreme vertex") {
    ParseError e = parse_failure(
        R"({"name": "x", "state_space": {"type": "polytope", "vertices": [["0"], ["1/2"], ["1"]]}, "observables": []})");
    CHECK(e.field().rfind("state_space", 0) == 0);
  }
  SUBCASE("non-positive radius") {
    ParseError e = parse_failure(
        R"({"name": "x", "state_space": {"type": "ball", "center": ["0"], "radius": "0"}, "observables": []})");
    CHECK(e.field() == "state_space.radius");
  }
  SUBCASE("unknown state space type") {
    ParseError e = parse_failure(R"({"name": "x", "state_space": {"type": "cone"}, "observables": []})");
    CHECK(e.field() == "state_space.type");
  }
  SUBCASE("effect of the wrong dimension") {
    std::string text = square_doc();
    text.replace(text.find("\"linear\": [\"1\", \"0\"]"), 20, "\"linear\": [\"1\"]");
    ParseError e = parse_failure(text);
    CHECK(e.field().rfind("observables[0].effects[0]", 0) == 0);
  }
  SUBCASE("duplicate observable") {
    std::string text = square_doc();
    text.replace(text.find("\"name\": \"B\""), 11, "\"name\": \"A\"");
    ParseError e = parse_failure(text);
    CHECK(e.field() == "observables[1].name");
  }
  SUBCASE("representation naming an unknown observable") {
    ParseError e = parse_failure(square_doc("\"0\"", R"(,
  "wigner": {"name": "W", "observables": ["A", "Z"], "grid": []})"));
    CHECK(e.field().rfind("wigner", 0) == 0);
  }
}

TEST_CASE("functionals parse from infix text") {
  CHECK(parse_functional("1/2*x0 - x1 + 3/4", 2) == AffineFunctional{{frac(1, 2), -1}, frac(3, 4)});
  CHECK(parse_functional("-x1", 2) == AffineFunctional{{0, -1}, 0});
  CHECK(parse_functional("0", 3) == AffineFunctional::constant_function(3, 0));
  CHECK(parse_functional("x0 + x0 - 1/4", 1) == AffineFunctional{{2}, frac(-1, 4)});
  auto fs = parse_functionals("x0; 1/3", 2);
  REQUIRE(fs.size() == 2);
  CHECK(fs[1] == AffineFunctional::constant_function(2, frac(1, 3)));
  CHECK_THROWS_AS(parse_functional("x2", 2), ParseError);
  CHECK_THROWS_AS(parse_functional("1/0", 2), ParseError);
  CHECK_THROWS_AS(parse_functional("x0 +", 2), ParseError);
  CHECK(parse_functional("0.5*x0", 2) == AffineFunctional{{frac(1, 2), 0}, 0});
  try {
    parse_functional("x0 * * x1", 2);
  } catch (const ParseError& e) {
    CHECK(e.field() == "functional");
  }
}

TEST_CASE("property: formatted functionals parse back to themselves") {
  std::mt19937 rng(51);
  for (int c = 0; c < 300; ++c) {
    const std::size_t dim = static_cast<std::size_t>(pick(rng, 1, 4));
    AffineFunctional f;
    for (std::size_t i = 0; i < dim; ++i)
      f.linear.push_back(pick(rng, 0, 2) == 0 ? Rational(0) : frac(pick(rng, -30, 30), pick(rng, 1, 12)));
    f.constant = pick(rng, 0, 3) == 0 ? Rational(0) : frac(pick(rng, -30, 30), pick(rng, 1, 12));
    const std::string text = format_functional(f);
    INFO(text);
    CHECK(parse_functional(text, dim) == f);
  }
}

TEST_CASE("property: random documents round-trip through the file format") {
  std::mt19937 rng(52);
  for (int c = 0; c < 200; ++c) {
    const bool ball = c % 7 == 0;
    StateSpace k = ball ? StateSpace::ball({frac(pick(rng, -3, 3), 2), frac(pick(rng, -3, 3), 5)},
                                           frac(pick(rng, 1, 9), pick(rng, 1, 4)))
                        : testsupport::random_polygon(rng, static_cast<std::size_t>(pick(rng, 3, 7)));
    std::vector<Observable> obs;
    if (ball) {
      obs.push_back({"A", {"0", "1"}, {AffineFunctional{{1, 0}, 0}, AffineFunctional{{-1, 0}, 1}}});
      obs.push_back({"B", {"0", "1"}, {AffineFunctional{{0, 1}, 0}, AffineFunctional{{0, -1}, 1}}});
    } else {
      obs.push_back(testsupport::random_observable(rng, k, static_cast<std::size_t>(pick(rng, 2, 3)), "A"));
      obs.push_back(testsupport::random_observable(rng, k, static_cast<std::size_t>(pick(rng, 2, 3)), "B"));
    }
    TheoryDocument doc{"random" + std::to_string(c), Theory{std::move(k), std::move(obs)}, {}, {}};
    const Observable &a = doc.theory.observables[0], &b = doc.theory.observables[1];
    const std::size_t reps = static_cast<std::size_t>(pick(rng, 0, 2));
    for (std::size_t r = 0; r < reps; ++r) {
      std::vector<AffineFunctional> free;
      for (std::size_t i = 0; i < free_parameter_count(a, b); ++i)
        free.push_back(testsupport::random_functional(rng, 2));
      doc.representations.push_back(construct_family(a, b, default_anchor(a, b), free, "W" + std::to_string(r)));
    }
    if (c % 3 == 0) {
      AffineMap m{Matrix(2, 2), {frac(pick(rng, -5, 5), 3), 0}};
      m.matrix(0, 0) = frac(pick(rng, -5, 5), 2);
      m.matrix(1, 1) = 1;
      doc.channels.push_back({"c", m, ProductPermutation::identity(a.size(), b.size())});
      doc.channels.push_back({"d", AffineMap::identity(2), std::nullopt});
    }
    const std::string text = export_document(doc);
    TheoryDocument back = parse_document(text);
    CHECK(same_theory(doc, back));
    CHECK(export_document(back) == text);
  }
}
