#include "nilclean/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <bit>
#include <utility>

namespace nilclean::kernels {

namespace {

// Four output rows per pass: broadcast row j of b into every lane, select by
// bit j of the corresponding row of a. Bit-identical to the scalar product.
__attribute__((target("avx2"))) void mul_avx2(int n, const std::uint64_t* a,
                                              const std::uint64_t* b,
                                              std::uint64_t* out) {
  const __m256i one = _mm256_set1_epi64x(1);
  int i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i acc = _mm256_setzero_si256();
    for (int j = 0; j < n; ++j) {
      const __m256i mask = _mm256_cmpeq_epi64(_mm256_and_si256(va, one), one);
      const __m256i bj = _mm256_set1_epi64x(static_cast<long long>(b[j]));
      acc = _mm256_xor_si256(acc, _mm256_and_si256(mask, bj));
      va = _mm256_srli_epi64(va, 1);
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), acc);
  }
  for (; i < n; ++i) {
    std::uint64_t acc = 0;
    std::uint64_t bits = a[i];
    while (bits) {
      acc ^= b[std::countr_zero(bits)];
      bits &= bits - 1;
    }
    out[i] = acc;
  }
}

// Column sweep over four rows at a time. The pivot row eliminates itself in
// the vector pass and is restored afterwards.
__attribute__((target("avx2"))) void eliminate_avx2(int c, int n_rows,
                                                    int pivot_row,
                                                    std::uint64_t* rows,
                                                    std::uint64_t* aug) {
  const std::uint64_t pv = rows[pivot_row];
  const std::uint64_t pa = aug ? aug[pivot_row] : 0;
  const __m256i one = _mm256_set1_epi64x(1);
  const __m256i vpv = _mm256_set1_epi64x(static_cast<long long>(pv));
  const __m256i vpa = _mm256_set1_epi64x(static_cast<long long>(pa));
  int r = 0;
  for (; r + 4 <= n_rows; r += 4) {
    __m256i vr = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows + r));
    const __m256i bit = _mm256_and_si256(_mm256_srli_epi64(vr, c), one);
    const __m256i mask = _mm256_cmpeq_epi64(bit, one);
    vr = _mm256_xor_si256(vr, _mm256_and_si256(mask, vpv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(rows + r), vr);
    if (aug) {
      __m256i vg =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(aug + r));
      vg = _mm256_xor_si256(vg, _mm256_and_si256(mask, vpa));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(aug + r), vg);
    }
  }
  for (; r < n_rows; ++r) {
    if ((rows[r] >> c) & 1u) {
      rows[r] ^= pv;
      if (aug) aug[r] ^= pa;
    }
  }
  rows[pivot_row] = pv;
  if (aug) aug[pivot_row] = pa;
}

__attribute__((target("avx2"))) int row_reduce_avx2(int n_cols, int n_rows,
                                                    std::uint64_t* rows,
                                                    std::uint64_t* aug,
                                                    int* pivot_cols) {
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
    eliminate_avx2(c, n_rows, rank, rows, aug);
    if (pivot_cols) pivot_cols[rank] = c;
    ++rank;
  }
  return rank;
}

}  // namespace

bool avx2_available() {
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
}

const Kernels& avx2_kernels() {
  static const Kernels k{"avx2", &mul_avx2, &row_reduce_avx2};
  return k;
}

}  // namespace nilclean::kernels

#else  // non-x86: only the scalar path exists

namespace nilclean::kernels {

bool avx2_available() { return false; }

const Kernels& avx2_kernels() { return scalar_kernels(); }

}  // namespace nilclean::kernels

#endif
