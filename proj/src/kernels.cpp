// Copyright 2026 The ragcol Authors
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

#include "ragcol/kernels.h"

#include <cmath>
#include <cstring>

namespace {

constexpr rc_kernel_status ok_status() { return {0, -1, nullptr}; }

constexpr rc_kernel_status err_status(const char* message, int64_t position = -1) {
  return {1, position, message};
}

// Normalized half-open slice over a sublist of length `len`, Python slice
// rules: negative bounds count from the end, out-of-bounds bounds clamp,
// omitted bounds default per step sign.
struct SlicePlan {
  int64_t start;
  int64_t count;
  int64_t step;
};

SlicePlan plan_slice(int64_t len, int64_t start, int64_t stop, int64_t step,
                     bool has_start, bool has_stop) {
  int64_t s, e;
  if (step > 0) {
    s = has_start ? (start < 0 ? start + len : start) : 0;
    if (s < 0) s = 0;
    if (s > len) s = len;
    e = has_stop ? (stop < 0 ? stop + len : stop) : len;
    if (e < 0) e = 0;
    if (e > len) e = len;
    int64_t count = e > s ? (e - s + step - 1) / step : 0;
    return {s, count, step};
  }
  s = has_start ? (start < 0 ? start + len : start) : len - 1;
  if (s < -1) s = -1;
  if (s > len - 1) s = len - 1;
  e = has_stop ? (stop < 0 ? stop + len : stop) : -1;
  if (e < -1) e = -1;
  if (e > len - 1) e = len - 1;
  int64_t count = s > e ? (s - e + (-step) - 1) / (-step) : 0;
  return {s, count, step};
}

template <class T>
rc_kernel_status gather_impl(T* out, const T* values, int64_t values_length,
                             const int64_t* indices, int64_t m) {
  for (int64_t j = 0; j < m; j++) {
    int64_t k = indices[j];
    if (k < 0 || k >= values_length) {
      return err_status("gather index out of range", j);
    }
    out[j] = values[k];
  }
  return ok_status();
}

enum class unary_op { sin_, negate, abs_, identity };

bool lookup_unary(const char* op, unary_op& out) {
  if (std::strcmp(op, "sin") == 0) out = unary_op::sin_;
  else if (std::strcmp(op, "negate") == 0) out = unary_op::negate;
  else if (std::strcmp(op, "abs") == 0) out = unary_op::abs_;
  else if (std::strcmp(op, "identity-as-float") == 0) out = unary_op::identity;
  else return false;
  return true;
}

template <class T>
void map_unary_impl(double* out, unary_op op, const T* src, int64_t n) {
  switch (op) {
    case unary_op::sin_:
      for (int64_t i = 0; i < n; i++) out[i] = std::sin(static_cast<double>(src[i]));
      break;
    case unary_op::negate:
      for (int64_t i = 0; i < n; i++) out[i] = -static_cast<double>(src[i]);
      break;
    case unary_op::abs_:
      for (int64_t i = 0; i < n; i++) out[i] = std::fabs(static_cast<double>(src[i]));
      break;
    case unary_op::identity:
      for (int64_t i = 0; i < n; i++) out[i] = static_cast<double>(src[i]);
      break;
  }
}

enum class binary_op { add, multiply };

bool lookup_binary(const char* op, binary_op& out) {
  if (std::strcmp(op, "add") == 0) out = binary_op::add;
  else if (std::strcmp(op, "multiply") == 0) out = binary_op::multiply;
  else return false;
  return true;
}

// Reads element i of a numeric buffer as double; dtype already vetted.
double load_f64(int32_t t, const void* p, int64_t i) {
  switch (t) {
    case RC_DTYPE_INT8:
      return static_cast<double>(static_cast<const int8_t*>(p)[i]);
    case RC_DTYPE_UINT8:
      return static_cast<double>(static_cast<const uint8_t*>(p)[i]);
    case RC_DTYPE_INT64:
      return static_cast<double>(static_cast<const int64_t*>(p)[i]);
    default:
      return static_cast<const double*>(p)[i];
  }
}

bool numeric_dtype(int32_t t) {
  return t == RC_DTYPE_INT8 || t == RC_DTYPE_UINT8 || t == RC_DTYPE_INT64 ||
         t == RC_DTYPE_FLOAT64;
}

}  // namespace

extern "C" {

rc_kernel_status rc_list_lengths(int64_t* out_lengths, const int64_t* offsets,
                                 int64_t n) {
  for (int64_t i = 0; i < n; i++) {
    if (offsets[i + 1] < offsets[i]) {
      return err_status("offsets not non-decreasing", i);
    }
    out_lengths[i] = offsets[i + 1] - offsets[i];
  }
  return ok_status();
}

rc_kernel_status rc_carry_list_total(int64_t* out_total, const int64_t* offsets,
                                     int64_t n, const int64_t* carry, int64_t m) {
  int64_t total = 0;
  for (int64_t j = 0; j < m; j++) {
    int64_t i = carry[j];
    if (i < 0 || i >= n) {
      return err_status("carry index out of range", j);
    }
    total += offsets[i + 1] - offsets[i];
  }
  *out_total = total;
  return ok_status();
}

rc_kernel_status rc_carry_list(int64_t* out_nextoffsets, int64_t* out_nextcarry,
                               const int64_t* offsets, int64_t n,
                               const int64_t* carry, int64_t m) {
  out_nextoffsets[0] = 0;
  int64_t k = 0;
  for (int64_t j = 0; j < m; j++) {
    int64_t i = carry[j];
    if (i < 0 || i >= n) {
      return err_status("carry index out of range", j);
    }
    for (int64_t p = offsets[i]; p < offsets[i + 1]; p++) {
      out_nextcarry[k++] = p;
    }
    out_nextoffsets[j + 1] = k;
  }
  return ok_status();
}

rc_kernel_status rc_range_per_list_count(int64_t* out_nextoffsets,
                                         const int64_t* offsets, int64_t n,
                                         int64_t start, int64_t stop, int64_t step,
                                         int32_t has_start, int32_t has_stop) {
  if (step == 0) {
    return err_status("slice step must not be zero");
  }
  out_nextoffsets[0] = 0;
  for (int64_t i = 0; i < n; i++) {
    SlicePlan plan = plan_slice(offsets[i + 1] - offsets[i], start, stop, step,
                                has_start != 0, has_stop != 0);
    out_nextoffsets[i + 1] = out_nextoffsets[i] + plan.count;
  }
  return ok_status();
}

rc_kernel_status rc_range_per_list_fill(int64_t* out_nextcarry,
                                        const int64_t* offsets, int64_t n,
                                        int64_t start, int64_t stop, int64_t step,
                                        int32_t has_start, int32_t has_stop) {
  if (step == 0) {
    return err_status("slice step must not be zero");
  }
  int64_t k = 0;
  for (int64_t i = 0; i < n; i++) {
    SlicePlan plan = plan_slice(offsets[i + 1] - offsets[i], start, stop, step,
                                has_start != 0, has_stop != 0);
    int64_t pos = offsets[i] + plan.start;
    for (int64_t c = 0; c < plan.count; c++, pos += plan.step) {
      out_nextcarry[k++] = pos;
    }
  }
  return ok_status();
}

rc_kernel_status rc_at_per_list(int64_t* out_carry, const int64_t* offsets,
                                int64_t n, int64_t at) {
  for (int64_t i = 0; i < n; i++) {
    int64_t len = offsets[i + 1] - offsets[i];
    int64_t norm = at < 0 ? at + len : at;
    if (norm < 0 || norm >= len) {
      return err_status("index out of range for sublist", i);
    }
    out_carry[i] = offsets[i] + norm;
  }
  return ok_status();
}

rc_kernel_status rc_nonzero_count(int64_t* out_count, const uint8_t* mask,
                                  int64_t n) {
  int64_t count = 0;
  for (int64_t i = 0; i < n; i++) {
    count += mask[i] != 0;
  }
  *out_count = count;
  return ok_status();
}

rc_kernel_status rc_nonzero(int64_t* out_indices, const uint8_t* mask, int64_t n) {
  int64_t k = 0;
  for (int64_t i = 0; i < n; i++) {
    if (mask[i] != 0) {
      out_indices[k++] = i;
    }
  }
  return ok_status();
}

rc_kernel_status rc_normalize_indices(int64_t* out, const int64_t* indices,
                                      int64_t m, int64_t length) {
  for (int64_t j = 0; j < m; j++) {
    int64_t v = indices[j] < 0 ? indices[j] + length : indices[j];
    if (v < 0 || v >= length) {
      return err_status("index out of range", j);
    }
    out[j] = v;
  }
  return ok_status();
}

rc_kernel_status rc_jagged_index_carry(int64_t* out_carry, const int64_t* offsets,
                                       const int64_t* sel_offsets, int64_t n,
                                       const int64_t* sel_values) {
  for (int64_t i = 0; i < n; i++) {
    int64_t len = offsets[i + 1] - offsets[i];
    for (int64_t p = sel_offsets[i]; p < sel_offsets[i + 1]; p++) {
      int64_t v = sel_values[p] < 0 ? sel_values[p] + len : sel_values[p];
      if (v < 0 || v >= len) {
        return err_status("jagged index out of range for sublist", p);
      }
      out_carry[p] = offsets[i] + v;
    }
  }
  return ok_status();
}

rc_kernel_status rc_jagged_mask_offsets(int64_t* out_nextoffsets,
                                        const int64_t* offsets, int64_t n,
                                        const uint8_t* mask) {
  out_nextoffsets[0] = 0;
  for (int64_t i = 0; i < n; i++) {
    int64_t count = 0;
    for (int64_t p = offsets[i]; p < offsets[i + 1]; p++) {
      count += mask[p] != 0;
    }
    out_nextoffsets[i + 1] = out_nextoffsets[i] + count;
  }
  return ok_status();
}

rc_kernel_status rc_index_nonnull_count(int64_t* out_count, const int64_t* index,
                                        int64_t n) {
  int64_t count = 0;
  for (int64_t i = 0; i < n; i++) {
    count += index[i] != -1;
  }
  *out_count = count;
  return ok_status();
}

rc_kernel_status rc_index_compact(int64_t* out_positions, int64_t* out_newindex,
                                  const int64_t* index, int64_t n) {
  int64_t k = 0;
  for (int64_t i = 0; i < n; i++) {
    if (index[i] == -1) {
      out_newindex[i] = -1;
    } else {
      out_positions[k] = index[i];
      out_newindex[i] = k;
      k++;
    }
  }
  return ok_status();
}

rc_kernel_status rc_validate_option_index(const int64_t* index, int64_t n,
                                          int64_t content_length) {
  for (int64_t i = 0; i < n; i++) {
    if (index[i] != -1 && (index[i] < 0 || index[i] >= content_length)) {
      return err_status("option index out of range", i);
    }
  }
  return ok_status();
}

rc_kernel_status rc_validate_union(const int8_t* tags, const int64_t* index,
                                   int64_t n, int64_t num_contents,
                                   const int64_t* content_lengths) {
  for (int64_t i = 0; i < n; i++) {
    if (tags[i] < 0 || tags[i] >= num_contents) {
      return err_status("tag out of range", i);
    }
    if (index[i] < 0 || index[i] >= content_lengths[tags[i]]) {
      return err_status("union index out of range", i);
    }
  }
  return ok_status();
}

rc_kernel_status rc_gather_f64(double* out, const double* values,
                               int64_t values_length, const int64_t* indices,
                               int64_t m) {
  return gather_impl(out, values, values_length, indices, m);
}

rc_kernel_status rc_gather_i64(int64_t* out, const int64_t* values,
                               int64_t values_length, const int64_t* indices,
                               int64_t m) {
  return gather_impl(out, values, values_length, indices, m);
}

rc_kernel_status rc_gather_u8(uint8_t* out, const uint8_t* values,
                              int64_t values_length, const int64_t* indices,
                              int64_t m) {
  return gather_impl(out, values, values_length, indices, m);
}

rc_kernel_status rc_gather_i8(int8_t* out, const int8_t* values,
                              int64_t values_length, const int64_t* indices,
                              int64_t m) {
  return gather_impl(out, values, values_length, indices, m);
}

rc_kernel_status rc_gather_b8(uint8_t* out, const uint8_t* values,
                              int64_t values_length, const int64_t* indices,
                              int64_t m) {
  return gather_impl(out, values, values_length, indices, m);
}

rc_kernel_status rc_int64_to_float64(double* out, const int64_t* src, int64_t n) {
  for (int64_t i = 0; i < n; i++) {
    out[i] = static_cast<double>(src[i]);
  }
  return ok_status();
}

rc_kernel_status rc_map_unary(double* out, const char* op, int32_t src_dtype,
                              const void* src, int64_t n) {
  unary_op u;
  if (!lookup_unary(op, u)) {
    return err_status("unknown unary op name");
  }
  switch (src_dtype) {
    case RC_DTYPE_INT8:
      map_unary_impl(out, u, static_cast<const int8_t*>(src), n);
      break;
    case RC_DTYPE_UINT8:
      map_unary_impl(out, u, static_cast<const uint8_t*>(src), n);
      break;
    case RC_DTYPE_INT64:
      map_unary_impl(out, u, static_cast<const int64_t*>(src), n);
      break;
    case RC_DTYPE_FLOAT64:
      map_unary_impl(out, u, static_cast<const double*>(src), n);
      break;
    default:
      return err_status("non-numeric dtype for unary op");
  }
  return ok_status();
}

rc_kernel_status rc_map_binary_f64(double* out, const char* op, int32_t a_dtype,
                                   const void* a, int32_t b_dtype, const void* b,
                                   int64_t n) {
  binary_op o;
  if (!lookup_binary(op, o)) {
    return err_status("unknown binary op name");
  }
  if (!numeric_dtype(a_dtype) || !numeric_dtype(b_dtype)) {
    return err_status("non-numeric dtype for binary op");
  }
  if (o == binary_op::add) {
    for (int64_t i = 0; i < n; i++) out[i] = load_f64(a_dtype, a, i) + load_f64(b_dtype, b, i);
  } else {
    for (int64_t i = 0; i < n; i++) out[i] = load_f64(a_dtype, a, i) * load_f64(b_dtype, b, i);
  }
  return ok_status();
}

rc_kernel_status rc_map_binary_i64(int64_t* out, const char* op, const int64_t* a,
                                   const int64_t* b, int64_t n) {
  binary_op o;
  if (!lookup_binary(op, o)) {
    return err_status("unknown binary op name");
  }
  if (o == binary_op::add) {
    for (int64_t i = 0; i < n; i++) {
      out[i] = static_cast<int64_t>(static_cast<uint64_t>(a[i]) + static_cast<uint64_t>(b[i]));
    }
  } else {
    for (int64_t i = 0; i < n; i++) {
      out[i] = static_cast<int64_t>(static_cast<uint64_t>(a[i]) * static_cast<uint64_t>(b[i]));
    }
  }
  return ok_status();
}

rc_kernel_status rc_map_binary_scalar_f64(double* out, const char* op,
                                          int32_t a_dtype, const void* a,
                                          int64_t n, double b) {
  binary_op o;
  if (!lookup_binary(op, o)) {
    return err_status("unknown binary op name");
  }
  if (!numeric_dtype(a_dtype)) {
    return err_status("non-numeric dtype for binary op");
  }
  if (o == binary_op::add) {
    for (int64_t i = 0; i < n; i++) out[i] = load_f64(a_dtype, a, i) + b;
  } else {
    for (int64_t i = 0; i < n; i++) out[i] = load_f64(a_dtype, a, i) * b;
  }
  return ok_status();
}

rc_kernel_status rc_map_binary_scalar_i64(int64_t* out, const char* op,
                                          const int64_t* a, int64_t n, int64_t b) {
  binary_op o;
  if (!lookup_binary(op, o)) {
    return err_status("unknown binary op name");
  }
  if (o == binary_op::add) {
    for (int64_t i = 0; i < n; i++) {
      out[i] = static_cast<int64_t>(static_cast<uint64_t>(a[i]) + static_cast<uint64_t>(b));
    }
  } else {
    for (int64_t i = 0; i < n; i++) {
      out[i] = static_cast<int64_t>(static_cast<uint64_t>(a[i]) * static_cast<uint64_t>(b));
    }
  }
  return ok_status();
}

}  // extern "C"
