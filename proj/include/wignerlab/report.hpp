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

#include "wignerlab/io.hpp"

namespace wignerlab {

// Reports are JSON documents: the theory they talk about, then a list of
// claims, each carrying the witness or certificate that backs it.
struct Report {
  std::string text;
  /// False when the answer to the command's question is negative (exit 1).
  bool positive = true;
};

/// Observable names for the pair under study; empty picks the first two.
struct PairSelection {
  std::string a;
  std::string b;
};

Report validate_report(const TheoryDocument& doc);
Report analyze_report(const TheoryDocument& doc, const PairSelection& pair = {});

struct WignerRequest {
  enum class Mode { free, faithful, degenerate };
  Mode mode = Mode::free;
  /// ';'-separated functionals for the free block (Mode::free).
  std::string free;
  std::string name = "W";
  PairSelection pair;
};

/// The report's "theory" is the input with the new representation added.
Report wigner_report(const TheoryDocument& doc, const WignerRequest& request);
/// Adds the representation `request` describes to a copy of doc.
TheoryDocument with_representation(const TheoryDocument& doc, const WignerRequest& request);

Report symmetries_report(const TheoryDocument& doc, const std::string& rep = {},
                         const std::string& channel = {});
Report covariant_report(const TheoryDocument& doc, const PairSelection& pair = {});

/// Replays every claim of a report by exact arithmetic; no LP is solved.
Report verify_report(std::string_view report_text);

}  // namespace wignerlab
