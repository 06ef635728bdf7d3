#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nilclean/gf2_matrix.hpp"
#include "nilclean/gf2_poly.hpp"

namespace testutil {

using nilclean::Gf2Matrix;
using nilclean::Gf2Poly;

inline Gf2Matrix mat(const std::vector<std::string>& rows) {
  return Gf2Matrix::from_rows(rows);
}

inline Gf2Poly poly(const std::string& bits) {
  return Gf2Poly::from_bit_string(bits);
}

// Superdiagonal shift: entry (i, i+1) = 1, nilpotent of index exactly n.
inline Gf2Matrix shift(int n) {
  Gf2Matrix s = Gf2Matrix::zero(n);
  for (int i = 0; i + 1 < n; ++i) s.set(i, i + 1, true);
  return s;
}

inline Gf2Matrix rand_matrix(std::mt19937_64& rng, int n) {
  Gf2Matrix a = Gf2Matrix::zero(n);
  const std::uint64_t mask =
      n == 64 ? ~0ull : ((1ull << n) - 1);
  for (int i = 0; i < n; ++i) a.set_row_bits(i, rng() & mask);
  return a;
}

inline Gf2Matrix rand_invertible(std::mt19937_64& rng, int n) {
  for (;;) {
    Gf2Matrix s = rand_matrix(rng, n);
    if (s.is_invertible()) return s;
  }
}

// Conjugate of a coordinate projector: a uniform-rank random idempotent.
inline Gf2Matrix rand_idempotent(std::mt19937_64& rng, int n) {
  const int r = static_cast<int>(rng() % (n + 1));
  Gf2Matrix p = Gf2Matrix::zero(n);
  for (int i = 0; i < r; ++i) p.set(i, i, true);
  const Gf2Matrix s = rand_invertible(rng, n);
  return s * p * s.inverse();
}

// Strictly upper triangular, hence nilpotent of index at most n.
inline Gf2Matrix rand_strict_upper(std::mt19937_64& rng, int n) {
  Gf2Matrix a = Gf2Matrix::zero(n);
  const std::uint64_t mask = n == 64 ? ~0ull : ((1ull << n) - 1);
  for (int i = 0; i + 1 < n; ++i) {
    const std::uint64_t above = mask & ~((2ull << i) - 1);
    a.set_row_bits(i, rng() & above);
  }
  return a;
}

// Random nilpotent with nontrivial similarity type: conjugated triangular.
inline Gf2Matrix rand_nilpotent(std::mt19937_64& rng, int n) {
  const Gf2Matrix s = rand_invertible(rng, n);
  return s * rand_strict_upper(rng, n) * s.inverse();
}

}  // namespace testutil
