#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilclean/gf2_poly.hpp"

namespace nilclean {

class SingularMatrixError : public std::domain_error {
 public:
  SingularMatrixError() : std::domain_error("matrix is singular") {}
};

/// Square matrix over F2, one 64-bit word per row (bit j = column j), for
/// dimensions up to 64. Immutable value semantics: every operation returns a
/// fresh matrix. Documentation and file formats index entries 1-based; the
/// API is 0-based.
class Gf2Matrix {
 public:
  static constexpr int kMaxDim = 64;

  Gf2Matrix() = default;  // the empty (0 x 0) matrix

  static Gf2Matrix zero(int n);
  static Gf2Matrix identity(int n);
  /// Row-major entry list, bits.size() == n*n.
  static Gf2Matrix from_entries(int n, std::span<const std::uint8_t> bits);
  /// Rows as strings of '0'/'1', e.g. {"01","11"}.
  static Gf2Matrix from_rows(const std::vector<std::string>& rows);
  /// The 4x4 companion matrix of t^4+t^3+1: rows 0001, 1000, 0100, 0011.
  static Gf2Matrix matrix_c();
  /// Blocks along the diagonal in argument order. Throws on an empty list.
  static Gf2Matrix direct_sum(std::span<const Gf2Matrix> blocks);
  /// Companion matrix: ones on the subdiagonal, coefficients of p in the
  /// last column. Requires p monic of degree >= 1.
  static Gf2Matrix companion(const Gf2Poly& p);

  int dim() const { return n_; }
  bool get(int i, int j) const { return (rows_[i] >> j) & 1u; }
  void set(int i, int j, bool v);
  std::uint64_t row_bits(int i) const { return rows_[i]; }
  void set_row_bits(int i, std::uint64_t bits);
  std::uint64_t col_mask() const;  // low n bits set

  friend Gf2Matrix operator+(const Gf2Matrix& a, const Gf2Matrix& b);
  friend Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b);
  bool operator==(const Gf2Matrix&) const = default;

  Gf2Matrix pow(std::uint64_t e) const;
  int trace() const;  // 0 or 1
  int rank() const;
  int corank() const { return n_ - rank(); }
  bool is_zero() const;
  bool is_invertible() const { return rank() == n_; }
  /// Throws SingularMatrixError when not invertible.
  Gf2Matrix inverse() const;

  bool is_idempotent() const;
  /// a^k == 0. Requires k >= 1.
  bool is_nilpotent_index(int k) const;

  /// Order by concatenated row bits read as a string, entry (1,1) first.
  bool lex_less(const Gf2Matrix& other) const;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// s * a * s^{-1}. Throws when s is singular or dimensions differ.
Gf2Matrix conjugate(const Gf2Matrix& s, const Gf2Matrix& a);

/// p(a): sum of coefficient_i * a^i, constant term times the identity.
Gf2Matrix eval_poly(const Gf2Poly& p, const Gf2Matrix& a);

/// 2x2 block decomposition with the bottom-right block alpha x alpha. The
/// off-diagonal blocks are (n-alpha) x alpha and alpha x (n-alpha); since the
/// matrix type is square-only they are carried in the smallest square that
/// holds them (dimension max of the two sides, or 0 when either side is 0),
/// with the content in the top-left corner and zero padding elsewhere.
struct BlockSplit {
  Gf2Matrix q1, q2, q3, q4;  // top-left, top-right, bottom-left, bottom-right
  int r = 0;                 // n - alpha
  int alpha = 0;
};

BlockSplit block_split(const Gf2Matrix& a, int alpha);

/// Inverse of block_split: reassemble the four blocks.
Gf2Matrix block_join(const BlockSplit& b);

/// For idempotent p, an invertible S with S p S^{-1} = diag(I_rank, 0).
/// Columns of S^{-1} are a basis of the image of p (greedy pivot selection
/// over columns in index order) followed by the reduced-echelon kernel basis
/// in free-column order. Throws when p is not idempotent.
Gf2Matrix canonicalize_idempotent(const Gf2Matrix& p);

}  // namespace nilclean
