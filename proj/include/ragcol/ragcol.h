/* Copyright 2026 The ragcol Authors
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

/* C interface to the ragcol shared library.
 *
 * Arrays and builders are opaque handles; every fallible call returns an
 * rc_status and leaves a thread-local diagnostic readable through
 * rc_error_message() / rc_error_offset(). Strings returned through char**
 * out-parameters are heap-allocated; release them with rc_string_free().
 * Handles are released with rc_array_free() / rc_builder_free().
 *
 * Arrays are immutable: sharing one rc_array across threads for reads is
 * safe. A builder must be driven by one thread at a time.
 */

#ifndef RAGCOL_RAGCOL_H_
#define RAGCOL_RAGCOL_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rc_array rc_array;
typedef struct rc_builder rc_builder;

typedef enum rc_status {
  RC_OK = 0,
  /* data errors (CLI exit 1) */
  RC_ERR_PARSE = 1,
  RC_ERR_DEPTH_LIMIT = 2,
  RC_ERR_INT_OVERFLOW = 3,
  RC_ERR_STRUCTURE_DEVIATION = 4,
  RC_ERR_SLICE = 5,          /* out-of-range, field-not-found, mask/jagged mismatch */
  RC_ERR_FILL_STATE = 6,
  RC_ERR_DUPLICATE_FIELD = 7,
  RC_ERR_UNSUPPORTED_VALUE = 8,
  RC_ERR_NUMERIC_OP = 9,     /* unknown op, non-numeric leaf, structure mismatch */
  /* input/output errors (CLI exit 2) */
  RC_ERR_IO = 10,
  RC_ERR_FORMAT = 11,
  RC_ERR_STRUCTURE = 12,     /* layout invariant violated */
  RC_ERR_ENCODING = 13,
  /* expression errors (CLI exit 3) */
  RC_ERR_EXPRESSION = 14,
  RC_ERR_INTERNAL = 15
} rc_status;

/* Thread-local message for the most recent failure on this thread. */
const char* rc_error_message(void);

/* Byte offset of the most recent parse-class failure, -1 when not
 * positional. */
int64_t rc_error_offset(void);

void rc_string_free(char* text);
void rc_array_free(rc_array* array);

/* --- parsing --- */

/* `ndjson`: treat input as one JSON value per line. `depth_limit` <= 0
 * selects the default (64). */
rc_status rc_array_from_json(rc_array** out, const char* text, size_t length,
                             int ndjson, int64_t depth_limit);
rc_status rc_array_from_json_file(rc_array** out, const char* path, int ndjson,
                                  int64_t depth_limit);

/* Specialized numbers-only reader; `depth` counts the top-level array. */
rc_status rc_array_from_json_numbers(rc_array** out, const char* text,
                                     size_t length, int64_t depth);
rc_status rc_array_from_json_numbers_file(rc_array** out, const char* path,
                                          int64_t depth);

/* --- inspection --- */

int64_t rc_array_length(const rc_array* array);

/* DataShape-style type, e.g. 3 * var * {"x": int64, "y": var * float64} */
rc_status rc_array_type(const rc_array* array, char** out_text);

/* JSON text of the array's values. */
rc_status rc_array_to_json(const rc_array* array, char** out_text);

rc_status rc_array_validate(const rc_array* array);

/* --- slicing --- */

/* Applies a slice expression (see the CLI documentation for the grammar).
 * Exactly one of *out_array / *out_scalar_json is set: a fully-indexed
 * selection produces the scalar's JSON text instead of an array. */
rc_status rc_array_getitem(const rc_array* array, const char* expression,
                           rc_array** out_array, char** out_scalar_json);

/* --- storage --- */

rc_status rc_array_write(const rc_array* array, const char* directory);
rc_status rc_array_read(rc_array** out, const char* directory);

/* --- builder --- */

rc_builder* rc_builder_new(void);
void rc_builder_free(rc_builder* builder);

rc_status rc_builder_null(rc_builder* builder);
rc_status rc_builder_boolean(rc_builder* builder, int value);
rc_status rc_builder_integer(rc_builder* builder, int64_t value);
rc_status rc_builder_real(rc_builder* builder, double value);
rc_status rc_builder_string(rc_builder* builder, const char* text, size_t length);
rc_status rc_builder_begin_list(rc_builder* builder);
rc_status rc_builder_end_list(rc_builder* builder);
rc_status rc_builder_begin_record(rc_builder* builder);
rc_status rc_builder_field(rc_builder* builder, const char* name);
rc_status rc_builder_end_record(rc_builder* builder);

int64_t rc_builder_length(const rc_builder* builder);
rc_status rc_builder_snapshot(const rc_builder* builder, rc_array** out);

#ifdef __cplusplus
}
#endif

#endif /* RAGCOL_RAGCOL_H_ */
