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


/* C interface to the wignerlab engine. Every function returns a wl_status;
 * on failure wl_last_error() describes the problem for the calling thread.
 * Strings handed out through char** parameters belong to the caller and must
 * be released with wl_string_free. */

#ifndef WIGNERLAB_WIGNERLAB_H_
#define WIGNERLAB_WIGNERLAB_H_

#if defined(_WIN32)
#define WL_API __declspec(dllexport)
#else
#define WL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wl_status {
  WL_OK = 0,
  WL_ERR_PARSE = 1,        /* malformed file or report; message names line and field */
  WL_ERR_PRECONDITION = 2, /* input violates an operation's precondition */
  WL_ERR_UNSUPPORTED = 3,  /* geometry not handled by the operation */
  WL_ERR_ARGUMENT = 4,     /* null pointer or bad enum value */
  WL_ERR_INTERNAL = 5
} wl_status;

typedef enum wl_wigner_mode {
  WL_WIGNER_FREE = 0,
  WL_WIGNER_FAITHFUL = 1,
  WL_WIGNER_DEGENERATE = 2
} wl_wigner_mode;

/* A parsed theory file: state space, observables, representations, channels. */
typedef struct wl_document wl_document;

typedef struct wl_wigner_request {
  wl_wigner_mode mode;
  const char* free_block; /* ';'-separated functionals, e.g. "1/2*x0 - 1/4"; FREE only */
  const char* name;       /* NULL means "W" */
  const char* a;          /* observable names; NULL picks the first two */
  const char* b;
} wl_wigner_request;

WL_API const char* wl_version(void);
WL_API const char* wl_last_error(void);
WL_API void wl_string_free(char* s);

WL_API wl_status wl_document_parse(const char* text, wl_document** out);
WL_API wl_status wl_document_read(const char* path, wl_document** out);
WL_API wl_status wl_catalog_load(const char* name, wl_document** out);
/* Newline-separated catalog entry names. */
WL_API wl_status wl_catalog_names(char** out);
WL_API void wl_document_free(wl_document* doc);
WL_API wl_status wl_document_export(const wl_document* doc, char** out);

/* Report producers. `positive` receives 1 unless the answer is negative. */
WL_API wl_status wl_validate(const wl_document* doc, char** report, int* positive);
WL_API wl_status wl_analyze(const wl_document* doc, const char* a, const char* b, char** report,
                            int* positive);
/* `document` (may be NULL) receives the theory file with the new representation. */
WL_API wl_status wl_wigner(const wl_document* doc, const wl_wigner_request* request,
                           char** report, char** document, int* positive);
WL_API wl_status wl_symmetries(const wl_document* doc, const char* rep, const char* channel,
                               char** report, int* positive);
WL_API wl_status wl_covariant(const wl_document* doc, const char* a, const char* b,
                              char** report, int* positive);
WL_API wl_status wl_verify(const char* report, char** result, int* positive);
WL_API wl_status wl_plot(const wl_document* doc, const char* rep, char** svg);

#ifdef __cplusplus
}
#endif

#endif /* WIGNERLAB_WIGNERLAB_H_ */
