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


// JSON encoding of the exact types, shared by theory files and reports.
// Internal to the library.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "wignerlab/catalog.hpp"
#include "wignerlab/errors.hpp"
#include "wignerlab/geometry.hpp"
#include "wignerlab/lp.hpp"
#include "wignerlab/symmetry.hpp"
#include "wignerlab/theory.hpp"
#include "wignerlab/wigner.hpp"

namespace wignerlab::codec {

using Json = nlohmann::ordered_json;

// Line of every value in a (syntactically valid) JSON text, keyed by a
// dotted path such as "observables[0].effects[1].constant".
class LineIndex {
 public:
  LineIndex() = default;
  explicit LineIndex(std::string_view text);
  /// Line of the path, or of its nearest recorded ancestor; 0 if unknown.
  int line(std::string path) const;

 private:
  void value(const std::string& path);
  std::string string_token();
  void skip_ws();

  std::string_view text_;
  std::size_t pos_ = 0;
  int current_ = 1;
  std::map<std::string, int> lines_;
};

/// Parses text, turning syntax errors into ParseError with a line number.
Json parse_json(std::string_view text);

/// Indented text with arrays of scalars kept on one line.
std::string dump(const Json& j);

std::string child(const std::string& path, const std::string& key);
std::string child(const std::string& path, std::size_t i);

Json encode(const Rational& q);
Json encode(const Vector& v);
Json encode(const AffineFunctional& f);
Json encode(const FunctionalGrid& g);
Json encode(const SignedGrid& g);
Json encode(const AffineMap& m);
Json encode(const InfeasibilityCertificate& c);
Json encode(const ProductPermutation& g);
Json encode(const PhasePointMap& m);
Json encode(const StateSpace& k);
Json encode(const Observable& o);
Json encode(const WignerRep& w);
Json encode(const NamedChannel& c);

// Decoding with field paths and line numbers in every error.
class Reader {
 public:
  explicit Reader(const LineIndex* index = nullptr) : index_(index) {}

  [[noreturn]] void fail(const std::string& path, const std::string& message) const;

  const Json& field(const Json& obj, const std::string& path, const std::string& key) const;
  const Json* optional_field(const Json& obj, const std::string& key) const;
  const Json& array(const Json& j, const std::string& path) const;
  std::string string(const Json& j, const std::string& path) const;
  std::size_t index(const Json& j, const std::string& path) const;
  bool boolean(const Json& j, const std::string& path) const;

  Rational rational(const Json& j, const std::string& path) const;
  Vector vector(const Json& j, const std::string& path, std::optional<std::size_t> size = {}) const;
  AffineFunctional functional(const Json& j, const std::string& path, std::size_t dim) const;
  FunctionalGrid grid(const Json& j, const std::string& path, std::size_t dim) const;
  SignedGrid signed_grid(const Json& j, const std::string& path) const;
  AffineMap map(const Json& j, const std::string& path, std::size_t rows, std::size_t cols) const;
  InfeasibilityCertificate certificate(const Json& j, const std::string& path) const;
  std::vector<std::size_t> permutation(const Json& j, const std::string& path, std::size_t n) const;
  ProductPermutation product_permutation(const Json& j, const std::string& path, std::size_t na,
                                         std::size_t nb) const;
  PhasePointMap phase_point_map(const Json& j, const std::string& path, std::size_t rows,
                                std::size_t cols) const;
  StateSpace state_space(const Json& j, const std::string& path) const;
  Observable observable(const Json& j, const std::string& path, std::size_t dim) const;

 private:
  const LineIndex* index_;
};

}  // namespace wignerlab::codec
