#include <cstdint>
#include <cstring>
#include <random>
#include <vector>

#include "doctest.h"
#include "nilclean/kernels.hpp"

namespace {

using nilclean::kernels::Kernels;

// Independent oracle: entry-by-entry inner products, no word tricks.
std::vector<std::uint64_t> oracle_mul(int n, const std::uint64_t* a,
                                      const std::uint64_t* b) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      unsigned bit = 0;
      for (int k = 0; k < n; ++k)
        bit ^= ((a[i] >> k) & 1u) & ((b[k] >> j) & 1u);
      if (bit) out[static_cast<std::size_t>(i)] |= 1ull << j;
    }
  return out;
}

std::vector<std::uint64_t> rand_rows(std::mt19937_64& rng, int n_rows,
                                     int n_cols) {
  const std::uint64_t mask = n_cols == 64 ? ~0ull : ((1ull << n_cols) - 1);
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_rows));
  for (auto& r : rows) r = rng() & mask;
  return rows;
}

// result[i] = XOR of rows[k] over the set bits k of combo[i], bit by bit.
std::vector<std::uint64_t> oracle_apply(int n_rows, int n_cols,
                                        const std::uint64_t* combo,
                                        const std::uint64_t* rows) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n_rows), 0);
  for (int i = 0; i < n_rows; ++i)
    for (int j = 0; j < n_cols; ++j) {
      unsigned bit = 0;
      for (int k = 0; k < n_rows; ++k)
        bit ^= ((combo[i] >> k) & 1u) & ((rows[k] >> j) & 1u);
      if (bit) out[static_cast<std::size_t>(i)] |= 1ull << j;
    }
  return out;
}

void check_rref(int n_cols, int n_rows, const std::vector<std::uint64_t>& rows,
                int rank, const int* pivot_cols) {
  REQUIRE(rank <= n_rows);
  REQUIRE(rank <= n_cols);
  int prev = -1;
  for (int r = 0; r < rank; ++r) {
    const int c = pivot_cols[r];
    CHECK(c > prev);
    prev = c;
    for (int i = 0; i < n_rows; ++i)
      CHECK(((rows[static_cast<std::size_t>(i)] >> c) & 1u) == (i == r ? 1u : 0u));
    // Nothing to the left of the pivot in its own row.
    CHECK((rows[static_cast<std::size_t>(r)] & ((1ull << c) - 1)) == 0);
  }
  for (int r = rank; r < n_rows; ++r)
    CHECK(rows[static_cast<std::size_t>(r)] == 0);
}

void run_mul_suite(const Kernels& k) {
  std::mt19937_64 rng(0xabcd01);
  for (int n : {1, 2, 3, 5, 8, 13, 16, 31, 32, 33, 47, 63, 64}) {
    const auto a = rand_rows(rng, n, n);
    const auto b = rand_rows(rng, n, n);
    std::vector<std::uint64_t> out(static_cast<std::size_t>(n));
    k.mul(n, a.data(), b.data(), out.data());
    CHECK(out == oracle_mul(n, a.data(), b.data()));
  }
}

void run_reduce_suite(const Kernels& k) {
  std::mt19937_64 rng(0xabcd02);
  const int shapes[][2] = {{1, 1}, {4, 4}, {6, 10}, {10, 6}, {17, 17},
                           {33, 40}, {64, 64}};
  for (const auto& sh : shapes) {
    const int n_rows = sh[0], n_cols = sh[1];
    const auto orig = rand_rows(rng, n_rows, n_cols);
    auto rows = orig;
    std::vector<std::uint64_t> aug(static_cast<std::size_t>(n_rows));
    for (int i = 0; i < n_rows; ++i) aug[static_cast<std::size_t>(i)] = 1ull << i;
    std::vector<int> pivots(static_cast<std::size_t>(n_rows), -1);
    const int rank = k.row_reduce(n_cols, n_rows, rows.data(), aug.data(),
                                  pivots.data());
    check_rref(n_cols, n_rows, rows, rank, pivots.data());
    // The recorded row operations really map the input to the output.
    CHECK(oracle_apply(n_rows, n_cols, aug.data(), orig.data()) == rows);
  }
}

}  // namespace

TEST_CASE("scalar multiply matches the entrywise oracle") {
  run_mul_suite(nilclean::kernels::scalar_kernels());
}

TEST_CASE("scalar row reduction yields verified reduced echelon form") {
  run_reduce_suite(nilclean::kernels::scalar_kernels());
}

TEST_CASE("avx2 kernels are bit-identical to scalar") {
  if (!nilclean::kernels::avx2_available()) {
    MESSAGE("avx2 not available on this host; skipping");
    return;
  }
  const Kernels& fast = nilclean::kernels::avx2_kernels();
  run_mul_suite(fast);
  run_reduce_suite(fast);

  const Kernels& ref = nilclean::kernels::scalar_kernels();
  std::mt19937_64 rng(0xabcd03);
  for (int n : {1, 7, 24, 40, 64}) {
    const auto a = rand_rows(rng, n, n);
    const auto b = rand_rows(rng, n, n);
    std::vector<std::uint64_t> out_ref(static_cast<std::size_t>(n));
    std::vector<std::uint64_t> out_fast(static_cast<std::size_t>(n));
    ref.mul(n, a.data(), b.data(), out_ref.data());
    fast.mul(n, a.data(), b.data(), out_fast.data());
    CHECK(out_ref == out_fast);

    auto rows_ref = a;
    auto rows_fast = a;
    std::vector<std::uint64_t> aug_ref(static_cast<std::size_t>(n));
    std::vector<std::uint64_t> aug_fast(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      aug_ref[static_cast<std::size_t>(i)] = aug_fast[static_cast<std::size_t>(i)] = 1ull << i;
    std::vector<int> piv_ref(static_cast<std::size_t>(n), -1);
    std::vector<int> piv_fast(static_cast<std::size_t>(n), -1);
    const int rank_ref =
        ref.row_reduce(n, n, rows_ref.data(), aug_ref.data(), piv_ref.data());
    const int rank_fast = fast.row_reduce(n, n, rows_fast.data(),
                                          aug_fast.data(), piv_fast.data());
    CHECK(rank_ref == rank_fast);
    CHECK(rows_ref == rows_fast);
    CHECK(aug_ref == aug_fast);
    CHECK(piv_ref == piv_fast);
  }
}

TEST_CASE("active kernel set is one of the named implementations") {
  const Kernels& active = nilclean::kernels::active_kernels();
  const std::string name = active.name;
  CHECK((name == "scalar" || name == "avx2"));
  if (name == "scalar")
    CHECK(active.mul == nilclean::kernels::scalar_kernels().mul);
  if (name == "avx2") {
    REQUIRE(nilclean::kernels::avx2_available());
    CHECK(active.mul == nilclean::kernels::avx2_kernels().mul);
  }
}

TEST_CASE("row reduction handles degenerate inputs") {
  const Kernels& k = nilclean::kernels::scalar_kernels();

  std::vector<std::uint64_t> zero_rows(4, 0);
  std::vector<int> pivots(4, -1);
  CHECK(k.row_reduce(4, 4, zero_rows.data(), nullptr, pivots.data()) == 0);

  std::vector<std::uint64_t> eye = {1, 2, 4, 8};
  CHECK(k.row_reduce(4, 4, eye.data(), nullptr, nullptr) == 4);
  CHECK(eye == std::vector<std::uint64_t>{1, 2, 4, 8});

  // Dependent rows: row2 = row0 ^ row1.
  std::vector<std::uint64_t> dep = {0b011, 0b110, 0b101};
  CHECK(k.row_reduce(3, 3, dep.data(), nullptr, nullptr) == 2);
}
