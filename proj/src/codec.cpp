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


#include "codec.hpp"

#include <algorithm>
#include <cctype>

namespace wignerlab::codec {

// ---------------------------------------------------------------------------
// Line index. The text has already been accepted by the JSON parser, so this
// walker only needs to find value boundaries.

LineIndex::LineIndex(std::string_view text) : text_(text) {
  value("");
  text_ = {};
}

int LineIndex::line(std::string path) const {
  for (;;) {
    auto it = lines_.find(path);
    if (it != lines_.end()) return it->second;
    if (path.empty()) return 0;
    std::size_t cut = path.find_last_of(".[");
    path = cut == std::string::npos ? std::string() : path.substr(0, cut);
  }
}

void LineIndex::skip_ws() {
  while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
    if (text_[pos_] == '\n') ++current_;
    ++pos_;
  }
}

std::string LineIndex::string_token() {
  std::string out;
  ++pos_;  // opening quote
  while (pos_ < text_.size() && text_[pos_] != '"') {
    if (text_[pos_] == '\\') ++pos_;
    if (pos_ < text_.size()) out += text_[pos_++];
  }
  ++pos_;
  return out;
}

void LineIndex::value(const std::string& path) {
  skip_ws();
  if (pos_ >= text_.size()) return;
  lines_.emplace(path, current_);
  const char c = text_[pos_];
  if (c == '{') {
    ++pos_;
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] == '}') break;
      if (text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      std::string key = string_token();
      skip_ws();
      ++pos_;  // ':'
      value(child(path, key));
    }
    ++pos_;
  } else if (c == '[') {
    ++pos_;
    std::size_t i = 0;
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] == ']') break;
      if (text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      value(child(path, i++));
    }
    ++pos_;
  } else if (c == '"') {
    string_token();
  } else {
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ']' && text_[pos_] != '}' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    int line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    std::string what = e.what();
    // "[json.exception.parse_error.101] parse error at line 2, column 19: msg"
    if (auto p = what.find("] "); p != std::string::npos) what = what.substr(p + 2);
    if (auto p = what.find(", column "); p != std::string::npos) {
      auto colon = what.find(": ", p);
      if (colon != std::string::npos)
        what = "column " + what.substr(p + 9, colon - p - 9) + ": " + what.substr(colon + 2);
    }
    throw ParseError(what, "", line);
  }
}

namespace {

bool scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

void write(const Json& j, int depth, std::string& out) {
  const std::string pad(2 * (depth + 1), ' '), close(2 * depth, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + Json(key).dump() + ": ";
      write(value, depth + 1, out);
    }
    out += "\n" + close + "}";
  } else if (j.is_array()) {
    if (std::all_of(j.begin(), j.end(), scalar)) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += pad;
      write(j[i], depth + 1, out);
    }
    out += "\n" + close + "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  write(j, 0, out);
  return out + "\n";
}

std::string child(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string child(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

// ---------------------------------------------------------------------------
// Encoding

Json encode(const Rational& q) { return to_string(q); }

Json encode(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(encode(x));
  return out;
}

Json encode(const AffineFunctional& f) {
  Json out = Json::object();
  out["linear"] = encode(f.linear);
  out["constant"] = encode(f.constant);
  return out;
}

Json encode(const FunctionalGrid& g) {
  Json out = Json::array();
  for (const auto& row : g) {
    Json r = Json::array();
    for (const auto& f : row) r.push_back(encode(f));
    out.push_back(std::move(r));
  }
  return out;
}

Json encode(const SignedGrid& g) {
  Json out = Json::array();
  for (const auto& row : g) out.push_back(encode(row));
  return out;
}

Json encode(const AffineMap& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.matrix.rows(); ++i) {
    Vector r(m.matrix.cols());
    for (std::size_t j = 0; j < m.matrix.cols(); ++j) r[j] = m.matrix(i, j);
    rows.push_back(encode(r));
  }
  Json out = Json::object();
  out["matrix"] = std::move(rows);
  out["offset"] = encode(m.offset);
  return out;
}

Json encode(const InfeasibilityCertificate& c) {
  Json out = Json::object();
  out["equality_multipliers"] = encode(c.equality_multipliers);
  out["inequality_multipliers"] = encode(c.inequality_multipliers);
  out["gap"] = encode(c.gap);
  return out;
}

Json encode(const ProductPermutation& g) {
  Json out = Json::object();
  out["a"] = g.g1;
  out["b"] = g.g2;
  return out;
}

Json encode(const PhasePointMap& m) { return m.table; }

Json encode(const StateSpace& k) {
  Json out = Json::object();
  if (k.is_polytope()) {
    out["type"] = "polytope";
    Json vs = Json::array();
    for (const auto& v : k.vertices()) vs.push_back(encode(v));
    out["vertices"] = std::move(vs);
  } else {
    out["type"] = "ball";
    out["center"] = encode(k.as_ball().center);
    out["radius"] = encode(k.as_ball().radius);
  }
  return out;
}

Json encode(const Observable& o) {
  Json out = Json::object();
  out["name"] = o.name;
  out["outcomes"] = o.outcomes;
  Json effects = Json::array();
  for (const auto& f : o.effects) effects.push_back(encode(f));
  out["effects"] = std::move(effects);
  return out;
}

Json encode(const WignerRep& w) {
  Json out = Json::object();
  out["name"] = w.name;
  out["observables"] = Json::array({w.a.name, w.b.name});
  out["grid"] = encode(w.grid);
  return out;
}

Json encode(const NamedChannel& c) {
  Json out = Json::object();
  out["name"] = c.name;
  Json m = encode(c.map);
  out["matrix"] = std::move(m["matrix"]);
  out["offset"] = std::move(m["offset"]);
  if (c.action) out["action"] = encode(*c.action);
  return out;
}

// ---------------------------------------------------------------------------
// Decoding

void Reader::fail(const std::string& path, const std::string& message) const {
  throw ParseError(message, path, index_ ? index_->line(path) : 0);
}

const Json& Reader::field(const Json& obj, const std::string& path, const std::string& key) const {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(child(path, key), "missing field");
  return *it;
}

const Json* Reader::optional_field(const Json& obj, const std::string& key) const {
  if (!obj.is_object()) return nullptr;
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

const Json& Reader::array(const Json& j, const std::string& path) const {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::string Reader::string(const Json& j, const std::string& path) const {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

std::size_t Reader::index(const Json& j, const std::string& path) const {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    fail(path, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

bool Reader::boolean(const Json& j, const std::string& path) const {
  if (!j.is_boolean()) fail(path, "expected true or false");
  return j.get<bool>();
}

Rational Reader::rational(const Json& j, const std::string& path) const {
  if (j.is_number_float())
    fail(path, "floating-point literal " + j.dump() + "; write rationals as strings such as \"1/3\"");
  if (j.is_number_integer() || j.is_number_unsigned()) return parse_rational(j.dump());
  if (!j.is_string()) fail(path, "expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

Vector Reader::vector(const Json& j, const std::string& path, std::optional<std::size_t> size) const {
  array(j, path);
  if (size && j.size() != *size)
    fail(path, "expected " + std::to_string(*size) + " entries, got " + std::to_string(j.size()));
  Vector out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational(j[i], child(path, i)));
  return out;
}

AffineFunctional Reader::functional(const Json& j, const std::string& path, std::size_t dim) const {
  AffineFunctional f;
  f.linear = vector(field(j, path, "linear"), child(path, "linear"), dim);
  f.constant = rational(field(j, path, "constant"), child(path, "constant"));
  return f;
}

FunctionalGrid Reader::grid(const Json& j, const std::string& path, std::size_t dim) const {
  array(j, path);
  if (j.empty()) fail(path, "empty grid");
  FunctionalGrid out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string rp = child(path, i);
    array(j[i], rp);
    if (j[i].size() != j[0].size()) fail(rp, "ragged grid row");
    std::vector<AffineFunctional> row;
    for (std::size_t c = 0; c < j[i].size(); ++c) row.push_back(functional(j[i][c], child(rp, c), dim));
    out.push_back(std::move(row));
  }
  return out;
}

SignedGrid Reader::signed_grid(const Json& j, const std::string& path) const {
  array(j, path);
  SignedGrid out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(vector(j[i], child(path, i)));
  return out;
}

AffineMap Reader::map(const Json& j, const std::string& path, std::size_t rows,
                      std::size_t cols) const {
  const std::string mp = child(path, "matrix");
  const Json& m = array(field(j, path, "matrix"), mp);
  if (m.size() != rows) fail(mp, "expected " + std::to_string(rows) + " rows");
  AffineMap out{Matrix(rows, cols), {}};
  for (std::size_t i = 0; i < rows; ++i) {
    Vector r = vector(m[i], child(mp, i), cols);
    for (std::size_t c = 0; c < cols; ++c) out.matrix(i, c) = r[c];
  }
  out.offset = vector(field(j, path, "offset"), child(path, "offset"), rows);
  return out;
}

InfeasibilityCertificate Reader::certificate(const Json& j, const std::string& path) const {
  InfeasibilityCertificate c;
  c.equality_multipliers =
      vector(field(j, path, "equality_multipliers"), child(path, "equality_multipliers"));
  c.inequality_multipliers =
      vector(field(j, path, "inequality_multipliers"), child(path, "inequality_multipliers"));
  c.gap = rational(field(j, path, "gap"), child(path, "gap"));
  return c;
}

std::vector<std::size_t> Reader::permutation(const Json& j, const std::string& path,
                                             std::size_t n) const {
  array(j, path);
  if (j.size() != n) fail(path, "expected a permutation of " + std::to_string(n) + " items");
  std::vector<std::size_t> out;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t v = index(j[i], child(path, i));
    if (v >= n || seen[v]) fail(child(path, i), "not a permutation");
    seen[v] = true;
    out.push_back(v);
  }
  return out;
}

ProductPermutation Reader::product_permutation(const Json& j, const std::string& path,
                                               std::size_t na, std::size_t nb) const {
  return {permutation(field(j, path, "a"), child(path, "a"), na),
          permutation(field(j, path, "b"), child(path, "b"), nb)};
}

PhasePointMap Reader::phase_point_map(const Json& j, const std::string& path, std::size_t rows,
                                      std::size_t cols) const {
  PhasePointMap m = PhasePointMap::identity(rows, cols);
  array(j, path);
  if (j.size() != rows * cols) fail(path, "expected " + std::to_string(rows * cols) + " entries");
  for (std::size_t i = 0; i < j.size(); ++i) {
    m.table[i] = index(j[i], child(path, i));
    if (m.table[i] >= rows * cols) fail(child(path, i), "phase point out of range");
  }
  return m;
}

StateSpace Reader::state_space(const Json& j, const std::string& path) const {
  const std::string type = string(field(j, path, "type"), child(path, "type"));
  if (type == "polytope") {
    const std::string vp = child(path, "vertices");
    const Json& vs = array(field(j, path, "vertices"), vp);
    if (vs.empty()) fail(vp, "no vertices");
    std::vector<Vector> vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      vertices.push_back(vector(vs[i], child(vp, i)));
      if (vertices.back().size() != vertices.front().size()) fail(child(vp, i), "ragged vertex");
    }
    try {
      return StateSpace::polytope(std::move(vertices));
    } catch (const PreconditionError& e) {
      fail(vp, e.what());
    }
  }
  if (type == "ball") {
    Vector center = vector(field(j, path, "center"), child(path, "center"));
    Rational radius = rational(field(j, path, "radius"), child(path, "radius"));
    try {
      return StateSpace::ball(std::move(center), radius);
    } catch (const PreconditionError& e) {
      fail(child(path, "radius"), e.what());
    }
  }
  fail(child(path, "type"), "unknown state space type \"" + type + "\" (polytope or ball)");
}

Observable Reader::observable(const Json& j, const std::string& path, std::size_t dim) const {
  Observable o;
  o.name = string(field(j, path, "name"), child(path, "name"));
  const std::string ep = child(path, "effects");
  const Json& effects = array(field(j, path, "effects"), ep);
  for (std::size_t i = 0; i < effects.size(); ++i)
    o.effects.push_back(functional(effects[i], child(ep, i), dim));
  if (const Json* outs = optional_field(j, "outcomes")) {
    const std::string op = child(path, "outcomes");
    array(*outs, op);
    if (outs->size() != effects.size()) fail(op, "outcome labels and effects differ in number");
    for (std::size_t i = 0; i < outs->size(); ++i) o.outcomes.push_back(string((*outs)[i], child(op, i)));
  } else {
    for (std::size_t i = 0; i < effects.size(); ++i) o.outcomes.push_back(std::to_string(i));
  }
  return o;
}

}  // namespace wignerlab::codec
