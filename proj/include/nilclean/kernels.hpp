#pragma once

#include <cstdint>

namespace nilclean::kernels {

// out = a * b over F2. Square n x n, one 64-bit word per row (bit j = column j),
// n <= 64. out must not alias a or b.
using MulFn = void (*)(int n, const std::uint64_t* a, const std::uint64_t* b,
                       std::uint64_t* out);

// In-place Gauss-Jordan reduction to reduced row echelon form.
// rows: n_rows words, each holding n_cols column bits. aug, when non-null,
// receives the same row swaps and XORs. pivot_cols, when non-null, receives
// the pivot column of reduced row i for i < rank. Returns the rank.
using RowReduceFn = int (*)(int n_cols, int n_rows, std::uint64_t* rows,
                            std::uint64_t* aug, int* pivot_cols);

struct Kernels {
  const char* name;
  MulFn mul;
  RowReduceFn row_reduce;
};

const Kernels& scalar_kernels();

bool avx2_available();
// Valid to call only when avx2_available().
const Kernels& avx2_kernels();

// AVX2 when the CPU supports it, scalar otherwise. NILCLEAN_KERNELS=scalar
// in the environment forces the reference path.
const Kernels& active_kernels();

}  // namespace nilclean::kernels
