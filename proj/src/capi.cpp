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


#include "wignerlab/wignerlab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "wignerlab/catalog.hpp"
#include "wignerlab/errors.hpp"
#include "wignerlab/io.hpp"
#include "wignerlab/plot.hpp"
#include "wignerlab/report.hpp"

struct wl_document {
  wignerlab::TheoryDocument doc;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string str(const char* s) { return s ? s : ""; }

template <class F>
wl_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return WL_OK;
  } catch (const wignerlab::ParseError& e) {
    last_error = e.what();
    return WL_ERR_PARSE;
  } catch (const wignerlab::UnsupportedGeometry& e) {
    last_error = e.what();
    return WL_ERR_UNSUPPORTED;
  } catch (const wignerlab::PreconditionError& e) {
    last_error = e.what();
    return WL_ERR_PRECONDITION;
  } catch (const wignerlab::DomainError& e) {
    last_error = e.what();
    return WL_ERR_PRECONDITION;
  } catch (const std::exception& e) {
    last_error = e.what();
    return WL_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return WL_ERR_INTERNAL;
  }
}

wl_status bad_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return WL_ERR_ARGUMENT;
}

wl_status emit(const wignerlab::Report& r, char** report, int* positive) {
  *report = dup(r.text);
  if (positive) *positive = r.positive ? 1 : 0;
  return WL_OK;
}

}  // namespace

extern "C" {

const char* wl_version(void) { return "0.1.0"; }

const char* wl_last_error(void) { return last_error.c_str(); }

void wl_string_free(char* s) { std::free(s); }

wl_status wl_document_parse(const char* text, wl_document** out) {
  if (!text) return bad_argument("text");
  if (!out) return bad_argument("out");
  return guarded([&] { *out = new wl_document{wignerlab::parse_document(text)}; });
}

wl_status wl_document_read(const char* path, wl_document** out) {
  if (!path) return bad_argument("path");
  if (!out) return bad_argument("out");
  return guarded([&] { *out = new wl_document{wignerlab::read_document(path)}; });
}

wl_status wl_catalog_load(const char* name, wl_document** out) {
  if (!name) return bad_argument("name");
  if (!out) return bad_argument("out");
  return guarded([&] {
    *out = new wl_document{wignerlab::document_from_catalog(wignerlab::load_catalog(name))};
  });
}

wl_status wl_catalog_names(char** out) {
  if (!out) return bad_argument("out");
  return guarded([&] {
    std::string s;
    for (const auto& n : wignerlab::catalog_names()) s += n + "\n";
    *out = dup(s);
  });
}

void wl_document_free(wl_document* doc) { delete doc; }

wl_status wl_document_export(const wl_document* doc, char** out) {
  if (!doc) return bad_argument("doc");
  if (!out) return bad_argument("out");
  return guarded([&] { *out = dup(wignerlab::export_document(doc->doc)); });
}

wl_status wl_validate(const wl_document* doc, char** report, int* positive) {
  if (!doc) return bad_argument("doc");
  if (!report) return bad_argument("report");
  return guarded([&] { emit(wignerlab::validate_report(doc->doc), report, positive); });
}

wl_status wl_analyze(const wl_document* doc, const char* a, const char* b, char** report,
                     int* positive) {
  if (!doc) return bad_argument("doc");
  if (!report) return bad_argument("report");
  return guarded([&] { emit(wignerlab::analyze_report(doc->doc, {str(a), str(b)}), report, positive); });
}

wl_status wl_wigner(const wl_document* doc, const wl_wigner_request* request, char** report,
                    char** document, int* positive) {
  if (!doc) return bad_argument("doc");
  if (!request) return bad_argument("request");
  if (!report) return bad_argument("report");
  wignerlab::WignerRequest req;
  switch (request->mode) {
    case WL_WIGNER_FREE: req.mode = wignerlab::WignerRequest::Mode::free; break;
    case WL_WIGNER_FAITHFUL: req.mode = wignerlab::WignerRequest::Mode::faithful; break;
    case WL_WIGNER_DEGENERATE: req.mode = wignerlab::WignerRequest::Mode::degenerate; break;
    default:
      last_error = "unknown wigner mode";
      return WL_ERR_ARGUMENT;
  }
  if (req.mode == wignerlab::WignerRequest::Mode::free && !request->free_block)
    return bad_argument("free_block");
  req.free = str(request->free_block);
  if (request->name) req.name = request->name;
  req.pair = {str(request->a), str(request->b)};
  return guarded([&] {
    wignerlab::Report r = wignerlab::wigner_report(doc->doc, req);
    char* d = document ? dup(wignerlab::export_document(wignerlab::with_representation(doc->doc, req)))
                       : nullptr;
    emit(r, report, positive);
    if (document) *document = d;
  });
}

wl_status wl_symmetries(const wl_document* doc, const char* rep, const char* channel,
                        char** report, int* positive) {
  if (!doc) return bad_argument("doc");
  if (!report) return bad_argument("report");
  return guarded(
      [&] { emit(wignerlab::symmetries_report(doc->doc, str(rep), str(channel)), report, positive); });
}

wl_status wl_covariant(const wl_document* doc, const char* a, const char* b, char** report,
                       int* positive) {
  if (!doc) return bad_argument("doc");
  if (!report) return bad_argument("report");
  return guarded([&] { emit(wignerlab::covariant_report(doc->doc, {str(a), str(b)}), report, positive); });
}

wl_status wl_verify(const char* report, char** result, int* positive) {
  if (!report) return bad_argument("report");
  if (!result) return bad_argument("result");
  return guarded([&] { emit(wignerlab::verify_report(report), result, positive); });
}

wl_status wl_plot(const wl_document* doc, const char* rep, char** svg) {
  if (!doc) return bad_argument("doc");
  if (!svg) return bad_argument("svg");
  return guarded([&] { *svg = dup(wignerlab::plot_svg(doc->doc, str(rep))); });
}

}  // extern "C"
