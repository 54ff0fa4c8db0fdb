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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wignerlab/geometry.hpp"
#include "wignerlab/symmetry.hpp"
#include "wignerlab/theory.hpp"
#include "wignerlab/wigner.hpp"

namespace wignerlab {

/// A channel shipped with an example. `action` ties it to an outcome
/// permutation for the covariant solver.
struct NamedChannel {
  std::string name;
  AffineMap map;
  std::optional<ProductPermutation> action;
};

struct CatalogEntry;

/// A checkable statement about an entry, with where the expected value comes
/// from: a published worked example, an independent derivation, or a
/// triviality.
struct Expectation {
  enum class Source { published, derived, trivial };
  std::string description;
  Source source;
  std::function<bool(const CatalogEntry&)> check;
};

struct CatalogEntry {
  std::string name;
  std::string summary;
  Theory theory;
  std::vector<WignerRep> representations;
  std::vector<NamedChannel> channels;
  std::vector<Expectation> expected;

  const WignerRep& rep(const std::string& rep_name) const;
  const NamedChannel& channel(const std::string& channel_name) const;
  /// Channels carrying an outcome permutation, in solver form.
  std::vector<GroupChannel> group_channels() const;
};

std::vector<std::string> catalog_names();

/// Builds and re-validates an entry. Throws PreconditionError on unknown names.
CatalogEntry load_catalog(const std::string& name);

std::string to_string(Expectation::Source s);

}  // namespace wignerlab
