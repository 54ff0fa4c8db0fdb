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

#include "wignerlab/catalog.hpp"
#include "wignerlab/errors.hpp"

using namespace wignerlab;

TEST_CASE("every catalog expectation replays") {
  for (const auto& name : catalog_names()) {
    CatalogEntry e = load_catalog(name);
    CHECK(e.name == name);
    for (const auto& x : e.expected) {
      INFO(name << ": " << x.description);
      CHECK(x.check(e));
    }
  }
}

TEST_CASE("catalog lists the seven entries") {
  CHECK(catalog_names() == std::vector<std::string>{"boxworld", "cube", "deformed_12gon", "qubit_ball",
                                                    "qubit_xz", "rebit_diamond", "trit"});
  CHECK_THROWS_AS(load_catalog("hexagon"), PreconditionError);
}

TEST_CASE("boxworld W_1/2 at s_10") {
  CatalogEntry e = load_catalog("boxworld");
  SignedGrid g = evaluate(e.rep("W_1/2"), e.theory.state_space, {1, 0});
  CHECK(g == SignedGrid{{frac(1, 2), frac(1, 2)}, {frac(-1, 2), frac(1, 2)}});
}
