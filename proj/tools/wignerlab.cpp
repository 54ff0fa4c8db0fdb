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


// Command-line front end. Talks to the engine only through the C interface.
//
// Exit codes: 0 success, 1 negative analysis result, 2 usage, parse or
// precondition error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "wignerlab/wignerlab.h"

namespace {

constexpr int kNegative = 1;
constexpr int kError = 2;

struct Failure {
  std::string message;
};

struct DocDeleter {
  void operator()(wl_document* d) const { wl_document_free(d); }
};
using Document = std::unique_ptr<wl_document, DocDeleter>;

struct StrDeleter {
  void operator()(char* s) const { wl_string_free(s); }
};
using Owned = std::unique_ptr<char, StrDeleter>;

void check(wl_status s) {
  if (s != WL_OK) throw Failure{wl_last_error()};
}

Document load(const std::string& path) {
  wl_document* d = nullptr;
  check(wl_document_read(path.c_str(), &d));
  return Document(d);
}

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"cannot open \"" + path + "\""};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const char* text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{"cannot write \"" + path + "\""};
  out << text;
}

// Prints a report and maps its verdict to an exit code.
int report(char* text, int positive) {
  Owned owned(text);
  std::fputs(text, stdout);
  return positive ? 0 : kNegative;
}

// "A,B" -> {"A", "B"}
std::pair<std::string, std::string> split_pair(const std::string& s) {
  if (s.empty()) return {};
  auto comma = s.find(',');
  if (comma == std::string::npos || comma == 0 || comma + 1 == s.size())
    throw Failure{"--pair expects two observable names such as A,B"};
  return {s.substr(0, comma), s.substr(comma + 1)};
}

const char* opt(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wignerlab: exact Wigner representations of finite-dimensional probabilistic theories"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(wl_version()));

  std::string file, pair, rep, channel, out, free_block, entry, name = "W";
  bool faithful = false, degenerate = false, list = false;

  auto* validate = app.add_subcommand("validate", "check effects and representation marginals");
  validate->add_option("file", file, "theory file")->required();

  auto* analyze = app.add_subcommand("analyze", "compatibility, info-completeness, complementarity, surjectivity");
  analyze->add_option("file", file, "theory file")->required();
  analyze->add_option("--pair", pair, "observable pair, e.g. A,B (default: first two)");

  auto* wigner = app.add_subcommand("wigner", "build a Wigner representation");
  wigner->add_option("file", file, "theory file")->required();
  auto* free_opt = wigner->add_option("--free", free_block, "free block functionals, ';'-separated");
  auto* faithful_opt = wigner->add_flag("--faithful", faithful, "choose a faithful member when one exists");
  auto* degenerate_opt = wigner->add_flag("--degenerate", degenerate, "free block set to zero");
  free_opt->excludes(faithful_opt)->excludes(degenerate_opt);
  faithful_opt->excludes(degenerate_opt);
  wigner->add_option("--name", name, "name of the new representation")->capture_default_str();
  wigner->add_option("--pair", pair, "observable pair, e.g. A,B");
  wigner->add_option("--out", out, "write the theory file with the new representation here");

  auto* symmetries = app.add_subcommand("symmetries", "lifted and transported symmetries");
  symmetries->add_option("file", file, "theory file with a representation")->required();
  symmetries->add_option("--wigner", rep, "representation name (default: first)");
  symmetries->add_option("--channel", channel, "ask whether this channel is a transported symmetry");

  auto* covariant = app.add_subcommand("covariant", "solve for the covariant representation");
  covariant->add_option("file", file, "theory file")->required();
  covariant->add_option("--pair", pair, "observable pair, e.g. A,B");

  auto* plot = app.add_subcommand("plot", "draw W(K) against the probability simplex as SVG");
  plot->add_option("file", file, "theory file with a representation")->required();
  plot->add_option("--wigner", rep, "representation name (default: first)");
  plot->add_option("--out", out, "SVG output path")->required();

  auto* verify = app.add_subcommand("verify", "re-check a report by exact arithmetic");
  verify->add_option("report", file, "report file, or - for stdin")->required();

  auto* example = app.add_subcommand("example", "export a catalog entry as a theory file");
  example->add_option("name", entry, "catalog entry");
  example->add_flag("--list", list, "list catalog entries");
  example->add_option("--out", out, "write to this path instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    if (*validate) {
      Document d = load(file);
      char* r = nullptr;
      int positive = 0;
      check(wl_validate(d.get(), &r, &positive));
      return report(r, positive);
    }
    if (*analyze) {
      auto [a, b] = split_pair(pair);
      Document d = load(file);
      char* r = nullptr;
      int positive = 0;
      check(wl_analyze(d.get(), opt(a), opt(b), &r, &positive));
      return report(r, positive);
    }
    if (*wigner) {
      if (!*free_opt && !faithful && !degenerate)
        throw Failure{"wigner needs one of --free, --faithful or --degenerate"};
      auto [a, b] = split_pair(pair);
      Document d = load(file);
      wl_wigner_request req{};
      req.mode = faithful ? WL_WIGNER_FAITHFUL : degenerate ? WL_WIGNER_DEGENERATE : WL_WIGNER_FREE;
      req.free_block = free_block.c_str();
      req.name = name.c_str();
      req.a = opt(a);
      req.b = opt(b);
      char* r = nullptr;
      char* doc_text = nullptr;
      int positive = 0;
      check(wl_wigner(d.get(), &req, &r, out.empty() ? nullptr : &doc_text, &positive));
      Owned owned_doc(doc_text);
      if (doc_text) write_file(out, doc_text);
      return report(r, positive);
    }
    if (*symmetries) {
      Document d = load(file);
      char* r = nullptr;
      int positive = 0;
      check(wl_symmetries(d.get(), opt(rep), opt(channel), &r, &positive));
      return report(r, positive);
    }
    if (*covariant) {
      auto [a, b] = split_pair(pair);
      Document d = load(file);
      char* r = nullptr;
      int positive = 0;
      check(wl_covariant(d.get(), opt(a), opt(b), &r, &positive));
      return report(r, positive);
    }
    if (*plot) {
      Document d = load(file);
      char* svg = nullptr;
      check(wl_plot(d.get(), opt(rep), &svg));
      Owned owned(svg);
      write_file(out, svg);
      return 0;
    }
    if (*verify) {
      const std::string text = slurp(file);
      char* r = nullptr;
      int positive = 0;
      check(wl_verify(text.c_str(), &r, &positive));
      return report(r, positive);
    }
    if (*example) {
      if (list || entry.empty()) {
        char* names = nullptr;
        check(wl_catalog_names(&names));
        Owned owned(names);
        std::fputs(names, list ? stdout : stderr);
        return list ? 0 : kError;
      }
      wl_document* raw = nullptr;
      check(wl_catalog_load(entry.c_str(), &raw));
      Document d(raw);
      char* text = nullptr;
      check(wl_document_export(d.get(), &text));
      Owned owned(text);
      if (out.empty())
        std::fputs(text, stdout);
      else
        write_file(out, text);
      return 0;
    }
  } catch (const Failure& f) {
    std::fprintf(stderr, "error: %s\n", f.message.c_str());
    return kError;
  }
  return kError;
}
