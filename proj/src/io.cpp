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


#include "wignerlab/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "codec.hpp"
#include "wignerlab/errors.hpp"

namespace wignerlab {

using codec::Json;

const WignerRep& TheoryDocument::rep(const std::string& rep_name) const {
  if (representations.empty()) throw PreconditionError("the file has no Wigner representation");
  if (rep_name.empty()) return representations.front();
  for (const auto& w : representations)
    if (w.name == rep_name) return w;
  throw PreconditionError("no representation named \"" + rep_name + "\"");
}

const NamedChannel& TheoryDocument::channel(const std::string& channel_name) const {
  for (const auto& c : channels)
    if (c.name == channel_name) return c;
  throw PreconditionError("no channel named \"" + channel_name + "\"");
}

std::vector<GroupChannel> TheoryDocument::group_channels() const {
  std::vector<GroupChannel> out;
  for (const auto& c : channels)
    if (c.action) out.push_back({*c.action, c.map});
  return out;
}

namespace {

const std::set<std::string> kTopLevel = {"name", "state_space", "observables", "wigner", "channels"};

const Observable& find_observable(const codec::Reader& r, const Theory& t, const std::string& name,
                                  const std::string& path) {
  for (const auto& o : t.observables)
    if (o.name == name) return o;
  r.fail(path, "unknown observable \"" + name + "\"");
}

WignerRep read_rep(const codec::Reader& r, const Json& j, const std::string& path, const Theory& t) {
  WignerRep w;
  w.name = r.string(r.field(j, path, "name"), codec::child(path, "name"));
  if (const Json* obs = r.optional_field(j, "observables")) {
    const std::string op = codec::child(path, "observables");
    r.array(*obs, op);
    if (obs->size() != 2) r.fail(op, "expected two observable names");
    w.a = find_observable(r, t, r.string((*obs)[0], codec::child(op, 0)), codec::child(op, 0));
    w.b = find_observable(r, t, r.string((*obs)[1], codec::child(op, 1)), codec::child(op, 1));
  } else {
    if (t.observables.size() < 2) r.fail(path, "a representation needs two observables");
    w.a = t.observables[0];
    w.b = t.observables[1];
  }
  const std::string gp = codec::child(path, "grid");
  w.grid = r.grid(r.field(j, path, "grid"), gp, t.state_space.ambient_dimension());
  if (w.rows() != w.a.size() || w.cols() != w.b.size())
    r.fail(gp, "grid must be " + std::to_string(w.a.size()) + "x" + std::to_string(w.b.size()));
  return w;
}

NamedChannel read_channel(const codec::Reader& r, const Json& j, const std::string& path,
                          const Theory& t) {
  NamedChannel c;
  const std::size_t n = t.state_space.ambient_dimension();
  c.name = r.string(r.field(j, path, "name"), codec::child(path, "name"));
  c.map = r.map(j, path, n, n);
  if (const Json* act = r.optional_field(j, "action")) {
    if (t.observables.size() < 2) r.fail(codec::child(path, "action"), "actions need two observables");
    c.action = r.product_permutation(*act, codec::child(path, "action"), t.observables[0].size(),
                                     t.observables[1].size());
  }
  return c;
}

}  // namespace

TheoryDocument parse_document(std::string_view text) {
  const Json root = codec::parse_json(text);
  const codec::LineIndex index(text);
  const codec::Reader r(&index);
  if (!root.is_object()) r.fail("", "expected a JSON object at the top level");
  for (const auto& [key, value] : root.items())
    if (!kTopLevel.count(key)) r.fail(key, "unknown field");

  std::string name;
  if (const Json* n = r.optional_field(root, "name")) name = r.string(*n, "name");
  StateSpace k = r.state_space(r.field(root, "", "state_space"), "state_space");
  const Json& obs = r.array(r.field(root, "", "observables"), "observables");
  Theory theory{std::move(k), {}};
  std::set<std::string> names;
  for (std::size_t i = 0; i < obs.size(); ++i) {
    const std::string op = codec::child("observables", i);
    theory.observables.push_back(r.observable(obs[i], op, theory.state_space.ambient_dimension()));
    if (!names.insert(theory.observables.back().name).second)
      r.fail(codec::child(op, "name"), "duplicate observable name");
  }

  TheoryDocument doc{std::move(name), std::move(theory), {}, {}};
  if (const Json* w = r.optional_field(root, "wigner")) {
    if (w->is_array()) {
      for (std::size_t i = 0; i < w->size(); ++i)
        doc.representations.push_back(read_rep(r, (*w)[i], codec::child("wigner", i), doc.theory));
    } else {
      doc.representations.push_back(read_rep(r, *w, "wigner", doc.theory));
    }
  }
  std::set<std::string> rep_names;
  for (std::size_t i = 0; i < doc.representations.size(); ++i)
    if (!rep_names.insert(doc.representations[i].name).second)
      r.fail(doc.representations.size() == 1 ? "wigner" : codec::child("wigner", i),
             "duplicate representation name");
  if (const Json* cs = r.optional_field(root, "channels")) {
    r.array(*cs, "channels");
    for (std::size_t i = 0; i < cs->size(); ++i)
      doc.channels.push_back(read_channel(r, (*cs)[i], codec::child("channels", i), doc.theory));
  }
  return doc;
}

TheoryDocument read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string export_document(const TheoryDocument& doc) {
  Json root = Json::object();
  if (!doc.name.empty()) root["name"] = doc.name;
  root["state_space"] = codec::encode(doc.theory.state_space);
  Json obs = Json::array();
  for (const auto& o : doc.theory.observables) obs.push_back(codec::encode(o));
  root["observables"] = std::move(obs);
  if (doc.representations.size() == 1) {
    root["wigner"] = codec::encode(doc.representations.front());
  } else if (!doc.representations.empty()) {
    Json ws = Json::array();
    for (const auto& w : doc.representations) ws.push_back(codec::encode(w));
    root["wigner"] = std::move(ws);
  }
  if (!doc.channels.empty()) {
    Json cs = Json::array();
    for (const auto& c : doc.channels) cs.push_back(codec::encode(c));
    root["channels"] = std::move(cs);
  }
  return codec::dump(root);
}

TheoryDocument document_from_catalog(const CatalogEntry& entry) {
  return {entry.name, entry.theory, entry.representations, entry.channels};
}

// ---------------------------------------------------------------------------
// Functional expressions

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, std::size_t dim) : text_(text), dim_(dim) {}

  AffineFunctional parse() {
    AffineFunctional f = AffineFunctional::constant_function(dim_, 0);
    skip();
    if (at_end()) error("empty expression");
    bool first = true;
    while (!at_end()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip();
      } else if (!first) {
        error("expected '+' or '-'");
      }
      term(f, sign);
      first = false;
      skip();
    }
    return f;
  }

 private:
  void term(AffineFunctional& f, const Rational& sign) {
    Rational coeff = 1;
    bool have_number = false;
    if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
      coeff = number();
      have_number = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
        if (peek() != 'x') error("expected a coordinate after '*'");
      }
    }
    if (peek() == 'x') {
      ++pos_;
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) error("expected a coordinate index after 'x'");
      std::size_t i = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (i >= dim_) error("coordinate x" + std::to_string(i) + " out of range");
      f.linear[i] += sign * coeff;
    } else if (have_number) {
      f.constant += sign * coeff;
    } else {
      error("expected a number or a coordinate");
    }
  }

  Rational number() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.' || peek() == '/') ++pos_;
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      error(e.what());
    }
  }

  [[noreturn]] void error(const std::string& message) const {
    throw ParseError(message + " at column " + std::to_string(pos_ + 1) + " in \"" +
                         std::string(text_) + "\"",
                     "functional");
  }

  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool at_end() const { return pos_ >= text_.size(); }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t dim_;
  std::size_t pos_ = 0;
};

}  // namespace

AffineFunctional parse_functional(std::string_view text, std::size_t dim) {
  return ExpressionParser(text, dim).parse();
}

std::vector<AffineFunctional> parse_functionals(std::string_view text, std::size_t dim) {
  std::vector<AffineFunctional> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t end = text.find(';', start);
    out.push_back(parse_functional(text.substr(start, end == std::string_view::npos ? end : end - start), dim));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string format_functional(const AffineFunctional& f) {
  std::string out;
  auto append = [&](const Rational& c, const std::string& var) {
    if (c == 0) return;
    Rational mag = abs(c);
    std::string body = var.empty() ? to_string(mag) : (mag == 1 ? var : to_string(mag) + "*" + var);
    if (out.empty())
      out = (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
  };
  for (std::size_t i = 0; i < f.linear.size(); ++i) append(f.linear[i], "x" + std::to_string(i));
  append(f.constant, "");
  return out.empty() ? "0" : out;
}

}  // namespace wignerlab
