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

#include <string>
#include <string_view>
#include <vector>

#include "wignerlab/catalog.hpp"
#include "wignerlab/theory.hpp"
#include "wignerlab/wigner.hpp"

namespace wignerlab {

// Everything a theory file can hold: the theory plus optional representations
// (each tied to two of its observables by name) and named channels.
struct TheoryDocument {
  std::string name;
  Theory theory;
  std::vector<WignerRep> representations;
  std::vector<NamedChannel> channels;

  /// Empty name picks the first representation. Throws PreconditionError.
  const WignerRep& rep(const std::string& rep_name = {}) const;
  const NamedChannel& channel(const std::string& channel_name) const;
  std::vector<GroupChannel> group_channels() const;
};

/// Throws ParseError naming the line and field on malformed input, including
/// float literals, "1/0", ragged rows and non-extreme polytope vertices.
TheoryDocument parse_document(std::string_view text);
TheoryDocument read_document(const std::string& path);
/// Canonical text; parse_document(export_document(d)) exports identically.
std::string export_document(const TheoryDocument& doc);

TheoryDocument document_from_catalog(const CatalogEntry& entry);

/// "1/2*x0 - x1 + 3/4" in ambient coordinates x0..x{dim-1}.
AffineFunctional parse_functional(std::string_view text, std::size_t dim);
/// ';'-separated list of functionals.
std::vector<AffineFunctional> parse_functionals(std::string_view text, std::size_t dim);
std::string format_functional(const AffineFunctional& f);

}  // namespace wignerlab
