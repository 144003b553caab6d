// Copyright 2026 The ggt Authors
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

/* C interface to libggt. Values are immutable and reached through opaque
 * handles; every call returns a status and, on failure, leaves the error
 * name and message in thread-local storage. Strings returned through char**
 * are owned by the caller and released with ggt_string_free. Handles may be
 * shared between threads. */

#ifndef GGT_GGT_H_
#define GGT_GGT_H_

#include <stddef.h>

#if defined(_WIN32)
#define GGT_API __declspec(dllexport)
#else
#define GGT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ggt_status {
  GGT_OK = 0,
  GGT_USAGE = 1,     /* null pointer or bad argument */
  GGT_INVALID = 2,   /* parse or validation failure */
  GGT_REFUSED = 3,   /* mathematical refusal, e.g. IndexNonzero */
  GGT_INTERNAL = 4,
} ggt_status;

typedef struct ggt_graph ggt_graph;
typedef struct ggt_element ggt_element;
typedef struct ggt_factorization ggt_factorization;

/* Error name such as "IndexNonzero", or "" after a successful call. */
GGT_API const char* ggt_last_error_name(void);
GGT_API const char* ggt_last_error_message(void);

GGT_API void ggt_string_free(char* s);

/* Graphs. `fallback_name` names the graph when the text has no graph line. */
GGT_API ggt_status ggt_graph_parse(const char* text, const char* fallback_name, ggt_graph** out);
GGT_API void ggt_graph_free(ggt_graph* g);
GGT_API ggt_status ggt_graph_format(const ggt_graph* g, char** out);
GGT_API ggt_status ggt_graph_name(const ggt_graph* g, char** out);
/* Criteria flags with witnesses for the failed ones. */
GGT_API ggt_status ggt_graph_check(const ggt_graph* g, char** report);
/* H0 and H1, plus the abelianization note when the AH criteria hold. */
GGT_API ggt_status ggt_graph_homology(const ggt_graph* g, char** report);
GGT_API ggt_status ggt_graph_move_t(const ggt_graph* g, const char* vertex, ggt_graph** out);
GGT_API ggt_status ggt_graph_move_s(const ggt_graph* g, const char* vertex, ggt_graph** out);
/* The two doubling bisections of a clopen set, as block lines. */
GGT_API ggt_status ggt_graph_double(const ggt_graph* g, const char* clopen, char** report);

/* Elements. */
GGT_API ggt_status ggt_element_parse(const ggt_graph* g, const char* text, ggt_element** out);
GGT_API void ggt_element_free(ggt_element* e);
GGT_API ggt_status ggt_element_format(const ggt_element* e, const char* name, char** out);
GGT_API ggt_status ggt_element_name(const ggt_element* e, char** out);
GGT_API ggt_status ggt_element_is_identity(const ggt_element* e, int* out);
GGT_API ggt_status ggt_element_equal(const ggt_element* a, const ggt_element* b, int* out);
/* x -> a(b(x)). */
GGT_API ggt_status ggt_element_compose(const ggt_element* a, const ggt_element* b, ggt_element** out);
GGT_API ggt_status ggt_element_invert(const ggt_element* e, ggt_element** out);
/* One "S(k) = <clopen>" line per nonempty part. */
GGT_API ggt_status ggt_element_partition(const ggt_element* e, char** report);
/* `max_chain` 0 selects the default cap. */
GGT_API ggt_status ggt_element_index(const ggt_element* e, size_t max_chain, int* is_zero,
                                     char** report);

/* Factorizations. `max_depth` 0 selects the default matching depth. */
GGT_API ggt_status ggt_factor(const ggt_element* e, size_t max_depth, size_t max_chain,
                              ggt_factorization** out);
GGT_API ggt_status ggt_factorization_parse(const ggt_graph* g, const char* text,
                                           ggt_factorization** out);
GGT_API void ggt_factorization_free(ggt_factorization* f);
GGT_API ggt_status ggt_factorization_format(const ggt_factorization* f, char** out);
GGT_API ggt_status ggt_factorization_size(const ggt_factorization* f, size_t* out);
/* The i-th factor, counted from the left of the product. */
GGT_API ggt_status ggt_factorization_get(const ggt_factorization* f, size_t i, ggt_element** out);
/* Certified when every factor is a nontrivial involution and the product
 * recomposes to e. */
GGT_API ggt_status ggt_verify(const ggt_element* e, const ggt_factorization* f, int* certified);

#ifdef __cplusplus
}
#endif

#endif /* GGT_GGT_H_ */
