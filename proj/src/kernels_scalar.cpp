#include "nilclean/kernels.hpp"

#include <bit>
#include <utility>

namespace nilclean::kernels {

namespace {

// Row-by-row accumulation: for each set bit j of a row of a, XOR row j of b.
void mul_scalar(int n, const std::uint64_t* a, const std::uint64_t* b,
                std::uint64_t* out) {
  for (int i = 0; i < n; ++i) {
    std::uint64_t acc = 0;
    std::uint64_t bits = a[i];
    while (bits) {
      const int j = std::countr_zero(bits);
      acc ^= b[j];
      bits &= bits - 1;
    }
    out[i] = acc;
  }
}

int row_reduce_scalar(int n_cols, int n_rows, std::uint64_t* rows,
                      std::uint64_t* aug, int* pivot_cols) {
  int rank = 0;
  for (int c = 0; c < n_cols && rank < n_rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < n_rows; ++r) {
      if ((rows[r] >> c) & 1u) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[pivot], rows[rank]);
    if (aug) std::swap(aug[pivot], aug[rank]);
    for (int r = 0; r < n_rows; ++r) {
      if (r != rank && ((rows[r] >> c) & 1u)) {
        rows[r] ^= rows[rank];
        if (aug) aug[r] ^= aug[rank];
      }
    }
    if (pivot_cols) pivot_cols[rank] = c;
    ++rank;
  }
  return rank;
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{"scalar", &mul_scalar, &row_reduce_scalar};
  return k;
}

}  // namespace nilclean::kernels
