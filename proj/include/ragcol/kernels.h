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

/* Kernel function reference.
 *
 * Every loop in this library whose trip count scales with the number of
 * array elements lives behind one of the functions below (the builder's
 * type discovery and host-value conversion at the library boundary are the
 * two documented exceptions; see README). The kernels are the complete
 * performance surface: an alternative backend reimplements exactly this
 * header and nothing else.
 *
 * Contract, common to all kernels:
 *   - Pure C signatures: scalars and flat buffers only, no ownership.
 *   - Inputs are read-only; outputs are caller-allocated to the exact
 *     lengths documented per kernel and are filled left to right.
 *   - Kernels never allocate and never read past the declared lengths.
 *     Buffer pointers may be NULL when the corresponding length is 0.
 *   - Kernels with data-dependent output sizes are split into a counting
 *     call and a filling call (two-pass contract); the caller allocates
 *     between the passes.
 *   - On error, `code` is nonzero, `message` points at a static string,
 *     and `position` is the index of the first offending element (-1 when
 *     the error is not positional). Outputs may be partially written.
 *   - Kernels are stateless and reentrant; concurrent calls writing to
 *     disjoint output buffers are safe.
 *
 * The suite covers: sublist length extraction, sublist gather (the core of
 * array-selector slicing), per-sublist range and integer selection, mask to
 * index conversion, negative-index normalization, jagged-selector carries,
 * option-index compaction and validation, union validation, element gather
 * per dtype, int64->float64 widening, and elementwise math. Additions to
 * the suite require a semantics entry in this file.
 */

#ifndef RAGCOL_KERNELS_H_
#define RAGCOL_KERNELS_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rc_kernel_status {
  int64_t code;        /* 0 = ok, 1 = error */
  int64_t position;    /* first offending element when code != 0, else -1 */
  const char* message; /* static string, NULL when ok */
} rc_kernel_status;

typedef enum rc_dtype {
  RC_DTYPE_BOOL8 = 0,
  RC_DTYPE_INT8 = 1,
  RC_DTYPE_UINT8 = 2,
  RC_DTYPE_INT64 = 3,
  RC_DTYPE_FLOAT64 = 4
} rc_dtype;

/* out_lengths[i] = offsets[i+1] - offsets[i] for i in [0, n).
 * out_lengths: n.  offsets: n+1, non-decreasing.
 * Error at position i when offsets[i+1] < offsets[i]. */
rc_kernel_status rc_list_lengths(int64_t* out_lengths, const int64_t* offsets,
                                 int64_t n);

/* Counting pass for rc_carry_list: *out_total = sum of the lengths of the
 * selected sublists.  carry: m values, each in [0, n).
 * Error at position j when carry[j] is out of range. */
rc_kernel_status rc_carry_list_total(int64_t* out_total, const int64_t* offsets,
                                     int64_t n, const int64_t* carry, int64_t m);

/* Gathers sublists carry[0..m) of a jagged array.
 * out_nextoffsets: m+1, the compacted offsets of the selected sublists.
 * out_nextcarry: total (from rc_carry_list_total), the content indices of
 * the selected sublists' elements, in selection order.
 * Error at position j when carry[j] is out of range. */
rc_kernel_status rc_carry_list(int64_t* out_nextoffsets, int64_t* out_nextcarry,
                               const int64_t* offsets, int64_t n,
                               const int64_t* carry, int64_t m);

/* Counting pass for per-sublist range selection with full slice semantics:
 * negative start/stop count from each sublist's end, out-of-bounds values
 * clamp, omitted bounds (has_start/has_stop = 0) default per step sign.
 * out_nextoffsets: n+1; the total element count is out_nextoffsets[n].
 * Error when step == 0 (not positional). */
rc_kernel_status rc_range_per_list_count(int64_t* out_nextoffsets,
                                         const int64_t* offsets, int64_t n,
                                         int64_t start, int64_t stop, int64_t step,
                                         int32_t has_start, int32_t has_stop);

/* Filling pass matching rc_range_per_list_count: writes the content index of
 * every selected element, sublist by sublist, into out_nextcarry (total). */
rc_kernel_status rc_range_per_list_fill(int64_t* out_nextcarry,
                                        const int64_t* offsets, int64_t n,
                                        int64_t start, int64_t stop, int64_t step,
                                        int32_t has_start, int32_t has_stop);

/* Per-sublist single-element selection: out_carry[i] = offsets[i] + at,
 * with negative `at` counting from each sublist's end.
 * out_carry: n.  Error at position i when at is outside sublist i. */
rc_kernel_status rc_at_per_list(int64_t* out_carry, const int64_t* offsets,
                                int64_t n, int64_t at);

/* *out_count = number of nonzero bytes in mask[0..n). */
rc_kernel_status rc_nonzero_count(int64_t* out_count, const uint8_t* mask,
                                  int64_t n);

/* Indices of nonzero mask bytes, ascending.  out_indices: count from
 * rc_nonzero_count. */
rc_kernel_status rc_nonzero(int64_t* out_indices, const uint8_t* mask, int64_t n);

/* out[j] = indices[j] + (indices[j] < 0 ? length : 0); every result must
 * land in [0, length).  out: m.  Error at position j otherwise. */
rc_kernel_status rc_normalize_indices(int64_t* out, const int64_t* indices,
                                      int64_t m, int64_t length);

/* Jagged index selector carry: the selector supplies, per sublist i, the
 * elements sel_values[sel_offsets[i] .. sel_offsets[i+1]) to pick inside
 * sublist i (negative values count from the sublist's end).
 * out_carry: sel_offsets[n]; out_carry[p] = offsets[i] + normalized value.
 * Error at position p (selector element index) when a value is out of range. */
rc_kernel_status rc_jagged_index_carry(int64_t* out_carry, const int64_t* offsets,
                                       const int64_t* sel_offsets, int64_t n,
                                       const int64_t* sel_values);

/* Offsets of a jagged boolean selection: out_nextoffsets[i+1] accumulates the
 * number of nonzero mask bytes within sublist i. The mask runs over the
 * content, length offsets[n]; the selected content indices are exactly
 * rc_nonzero of the mask.  out_nextoffsets: n+1. */
rc_kernel_status rc_jagged_mask_offsets(int64_t* out_nextoffsets,
                                        const int64_t* offsets, int64_t n,
                                        const uint8_t* mask);

/* *out_count = number of entries with index[i] != -1. */
rc_kernel_status rc_index_nonnull_count(int64_t* out_count, const int64_t* index,
                                        int64_t n);

/* Splits an option index into its non-missing positions.
 * out_positions: count, the index values of the non-missing entries in order.
 * out_newindex: n, -1 where index[i] == -1, else the running position in
 * out_positions. */
rc_kernel_status rc_index_compact(int64_t* out_positions, int64_t* out_newindex,
                                  const int64_t* index, int64_t n);

/* Validation: every index[i] is -1 or in [0, content_length).
 * Error at the first violating position. */
rc_kernel_status rc_validate_option_index(const int64_t* index, int64_t n,
                                          int64_t content_length);

/* Validation: 0 <= tags[i] < num_contents and 0 <= index[i] <
 * content_lengths[tags[i]].  Error at the first violating position. */
rc_kernel_status rc_validate_union(const int8_t* tags, const int64_t* index,
                                   int64_t n, int64_t num_contents,
                                   const int64_t* content_lengths);

/* out[j] = values[indices[j]]; indices must be in [0, values_length).
 * Error at the first out-of-range position j. One symbol per dtype. */
rc_kernel_status rc_gather_f64(double* out, const double* values,
                               int64_t values_length, const int64_t* indices,
                               int64_t m);
rc_kernel_status rc_gather_i64(int64_t* out, const int64_t* values,
                               int64_t values_length, const int64_t* indices,
                               int64_t m);
rc_kernel_status rc_gather_u8(uint8_t* out, const uint8_t* values,
                              int64_t values_length, const int64_t* indices,
                              int64_t m);
rc_kernel_status rc_gather_i8(int8_t* out, const int8_t* values,
                              int64_t values_length, const int64_t* indices,
                              int64_t m);
rc_kernel_status rc_gather_b8(uint8_t* out, const uint8_t* values,
                              int64_t values_length, const int64_t* indices,
                              int64_t m);

/* Exact widening, out[i] = (double)src[i]. */
rc_kernel_status rc_int64_to_float64(double* out, const int64_t* src, int64_t n);

/* Elementwise unary math over a numeric buffer, integer inputs widened to
 * float64 first.  op is one of "sin", "negate", "abs", "identity-as-float";
 * src_dtype must be RC_DTYPE_INT8/UINT8/INT64/FLOAT64.
 * Errors (not positional): unknown op name, non-numeric dtype. */
rc_kernel_status rc_map_unary(double* out, const char* op, int32_t src_dtype,
                              const void* src, int64_t n);

/* Elementwise binary math, float64 result; operands widened per element.
 * op is one of "add", "multiply"; dtypes as for rc_map_unary. */
rc_kernel_status rc_map_binary_f64(double* out, const char* op, int32_t a_dtype,
                                   const void* a, int32_t b_dtype, const void* b,
                                   int64_t n);

/* Elementwise binary math on int64 operands with int64 result (wrap on
 * overflow, two's complement).  op as rc_map_binary_f64. */
rc_kernel_status rc_map_binary_i64(int64_t* out, const char* op, const int64_t* a,
                                   const int64_t* b, int64_t n);

/* Scalar broadcast variants: out[i] = op(a[i], b). */
rc_kernel_status rc_map_binary_scalar_f64(double* out, const char* op,
                                          int32_t a_dtype, const void* a,
                                          int64_t n, double b);
rc_kernel_status rc_map_binary_scalar_i64(int64_t* out, const char* op,
                                          const int64_t* a, int64_t n, int64_t b);

#ifdef __cplusplus
}
#endif

#endif /* RAGCOL_KERNELS_H_ */
