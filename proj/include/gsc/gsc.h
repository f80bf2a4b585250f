/* Copyright 2026 The gsc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to libgsc. Handles are opaque; every call returns a status and
 * leaves a message retrievable with gsc_last_error() on the calling thread.
 * Results are UTF-8 JSON documents owned by the caller (gsc_string_free). */

#ifndef GSC_GSC_H_
#define GSC_GSC_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GSC_API __declspec(dllexport)
#else
#define GSC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gsc_status {
  GSC_OK               = 0,
  GSC_ERR_ARGUMENT     = 1, /* bad flag value, unknown name, malformed word */
  GSC_ERR_PARSE        = 2, /* presentation text does not parse */
  GSC_ERR_VALIDATION   = 3, /* structure or axiom level rejection */
  GSC_ERR_PRECONDITION = 4, /* solver gate or seed check refused the input */
  GSC_ERR_INTERNAL     = 5
} gsc_status;

typedef struct gsc_presentation gsc_presentation;

GSC_API const char* gsc_version(void);
GSC_API const char* gsc_last_error(void);
GSC_API void        gsc_string_free(char* s);

GSC_API gsc_status gsc_presentation_parse(const char* text, gsc_presentation** out);
/* name: modular, dihedral<n>, coxeter, height4, moebius, ... */
GSC_API gsc_status gsc_presentation_example(const char* name, gsc_presentation** out);
GSC_API void       gsc_presentation_free(gsc_presentation* p);
GSC_API gsc_status gsc_example_names(char** json_out);

/* Canonical text form. */
GSC_API gsc_status gsc_presentation_serialize(const gsc_presentation* p, char** out);
/* format: "json" or "dot". */
GSC_API gsc_status gsc_presentation_export(const gsc_presentation* p, const char* format,
                                           char** out);

/* Per-relator validation report; *ok is 1 when every relator validates. */
GSC_API gsc_status gsc_validate(const gsc_presentation* p, char** json_out, int* ok);

GSC_API gsc_status gsc_geometry(const gsc_presentation* p, const char* relator,
                                char** json_out);

/* path: word read from the relator's base vertex, or from vertex `start`
 * when start >= 0. */
GSC_API gsc_status gsc_metric(const gsc_presentation* p, const char* relator,
                              const char* path, int64_t start, char** json_out);

typedef struct gsc_axiom_options {
  size_t path_cap;         /* 0: automatic */
  size_t v_cap;
  size_t extra_rep_length;
  size_t max_patterns;
} gsc_axiom_options;

GSC_API void       gsc_axiom_options_default(gsc_axiom_options* o);
/* *failed is 1 when some axiom reports a failure. */
GSC_API gsc_status gsc_axioms(const gsc_presentation* p, const gsc_axiom_options* o,
                              char** json_out, int* failed);

/* *trivial is 1 when w reduces to the empty word. */
GSC_API gsc_status gsc_solve(const gsc_presentation* p, const char* word, int force,
                             char** json_out, int* trivial);

GSC_API gsc_status gsc_cayley(const gsc_presentation* p, int64_t radius, size_t cap,
                              int force, char** json_out, int* truncated);

/* mode: "cir" or "str"; alpha may be NULL to use the declared constant. */
GSC_API gsc_status gsc_closure(const gsc_presentation* p, const char* seed, const char* mode,
                               int rank, const char* alpha, size_t cap, int force,
                               char** json_out, int* closed);

typedef struct gsc_burnside_options {
  int     m;
  int64_t n;
  size_t  max_len;
  int     toy;
  const char* check_word;  /* optional word run through the admissibility filter */
  const char* probe;       /* optional root word for a one-rank-higher probe */
  size_t  probe_cap;
} gsc_burnside_options;

GSC_API void       gsc_burnside_options_default(gsc_burnside_options* o);
/* *pass is 1 when the small cancellation check passes. */
GSC_API gsc_status gsc_burnside(const gsc_burnside_options* o, char** json_out, int* pass);

#ifdef __cplusplus
}
#endif

#endif /* GSC_GSC_H_ */
