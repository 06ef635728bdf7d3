#include "nilclean/gf2_matrix.hpp"

#include <array>
#include <bit>

#include "nilclean/kernels.hpp"

namespace nilclean {

namespace {

void check_dim(int n) {
  if (n < 0 || n > Gf2Matrix::kMaxDim)
    throw std::invalid_argument("dimension must be between 0 and 64");
}

}  // namespace

Gf2Matrix Gf2Matrix::zero(int n) {
  check_dim(n);
  Gf2Matrix m;
  m.n_ = n;
  m.rows_.assign(static_cast<std::size_t>(n), 0);
  return m;
}

Gf2Matrix Gf2Matrix::identity(int n) {
  Gf2Matrix m = zero(n);
  for (int i = 0; i < n; ++i) m.rows_[i] = std::uint64_t{1} << i;
  return m;
}

Gf2Matrix Gf2Matrix::from_entries(int n, std::span<const std::uint8_t> bits) {
  if (bits.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw std::invalid_argument("entry list must hold n*n bits");
  Gf2Matrix m = zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (bits[static_cast<std::size_t>(i) * n + j] & 1u) m.set(i, j, true);
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::string>& rows) {
  const int n = static_cast<int>(rows.size());
  Gf2Matrix m = zero(n);
  for (int i = 0; i < n; ++i) {
    if (rows[i].size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("row length must equal the dimension");
    for (int j = 0; j < n; ++j) {
      if (rows[i][j] == '1')
        m.set(i, j, true);
      else if (rows[i][j] != '0')
        throw std::invalid_argument("rows must be over {0,1}");
    }
  }
  return m;
}

Gf2Matrix Gf2Matrix::matrix_c() {
  return from_rows({"0001", "1000", "0100", "0011"});
}

Gf2Matrix Gf2Matrix::direct_sum(std::span<const Gf2Matrix> blocks) {
  if (blocks.empty())
    throw std::invalid_argument("direct_sum of an empty list");
  int n = 0;
  for (const Gf2Matrix& b : blocks) n += b.dim();
  Gf2Matrix m = zero(n);
  int off = 0;
  for (const Gf2Matrix& b : blocks) {
    for (int i = 0; i < b.dim(); ++i)
      m.rows_[static_cast<std::size_t>(off + i)] = b.rows_[i] << off;
    off += b.dim();
  }
  return m;
}

Gf2Matrix Gf2Matrix::companion(const Gf2Poly& p) {
  const int d = p.degree();
  if (d < 1)
    throw std::invalid_argument("companion requires a monic polynomial of degree >= 1");
  Gf2Matrix m = zero(d);
  for (int i = 1; i < d; ++i) m.set(i, i - 1, true);
  for (int i = 0; i < d; ++i) m.set(i, d - 1, p.coeff(i));
  return m;
}

void Gf2Matrix::set(int i, int j, bool v) {
  const std::uint64_t bit = std::uint64_t{1} << j;
  if (v)
    rows_[i] |= bit;
  else
    rows_[i] &= ~bit;
}

void Gf2Matrix::set_row_bits(int i, std::uint64_t bits) {
  rows_[i] = bits & col_mask();
}

std::uint64_t Gf2Matrix::col_mask() const {
  return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

Gf2Matrix operator+(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch in add");
  Gf2Matrix r = a;
  for (int i = 0; i < a.n_; ++i) r.rows_[i] ^= b.rows_[i];
  return r;
}

Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch in mul");
  Gf2Matrix r = Gf2Matrix::zero(a.n_);
  if (a.n_ > 0)
    kernels::active_kernels().mul(a.n_, a.rows_.data(), b.rows_.data(),
                                  r.rows_.data());
  return r;
}

Gf2Matrix Gf2Matrix::pow(std::uint64_t e) const {
  Gf2Matrix result = identity(n_);
  Gf2Matrix base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

int Gf2Matrix::trace() const {
  int t = 0;
  for (int i = 0; i < n_; ++i) t ^= static_cast<int>(get(i, i));
  return t;
}

int Gf2Matrix::rank() const {
  if (n_ == 0) return 0;
  std::vector<std::uint64_t> work = rows_;
  return kernels::active_kernels().row_reduce(n_, n_, work.data(), nullptr,
                                              nullptr);
}

bool Gf2Matrix::is_zero() const {
  for (const std::uint64_t r : rows_)
    if (r) return false;
  return true;
}

Gf2Matrix Gf2Matrix::inverse() const {
  Gf2Matrix aug = identity(n_);
  if (n_ == 0) return aug;
  std::vector<std::uint64_t> work = rows_;
  const int rank = kernels::active_kernels().row_reduce(
      n_, n_, work.data(), aug.rows_.data(), nullptr);
  if (rank != n_) throw SingularMatrixError();
  return aug;
}

bool Gf2Matrix::is_idempotent() const { return *this * *this == *this; }

bool Gf2Matrix::is_nilpotent_index(int k) const {
  if (k < 1) throw std::invalid_argument("nilpotency index must be >= 1");
  Gf2Matrix q = *this;
  if (q.is_zero()) return true;
  for (int i = 1; i < k; ++i) {
    q = q * *this;
    if (q.is_zero()) return true;
  }
  return false;
}

bool Gf2Matrix::lex_less(const Gf2Matrix& other) const {
  for (int i = 0; i < n_ && i < other.n_; ++i) {
    const std::uint64_t d = rows_[i] ^ other.rows_[i];
    if (d) {
      const int j = std::countr_zero(d);
      return !get(i, j);  // a 0 entry sorts before a 1
    }
  }
  return n_ < other.n_;
}

Gf2Matrix conjugate(const Gf2Matrix& s, const Gf2Matrix& a) {
  if (s.dim() != a.dim())
    throw std::invalid_argument("dimension mismatch in conjugate");
  return s * a * s.inverse();
}

Gf2Matrix eval_poly(const Gf2Poly& p, const Gf2Matrix& a) {
  Gf2Matrix r = Gf2Matrix::zero(a.dim());
  for (int i = p.degree(); i >= 0; --i) {
    r = r * a;
    if (p.coeff(i)) r = r + Gf2Matrix::identity(a.dim());
  }
  return r;
}

BlockSplit block_split(const Gf2Matrix& a, int alpha) {
  const int n = a.dim();
  if (alpha < 0 || alpha > n)
    throw std::invalid_argument("block size out of range");
  const int r = n - alpha;
  const int off = (r == 0 || alpha == 0) ? 0 : std::max(r, alpha);
  BlockSplit b{Gf2Matrix::zero(r), Gf2Matrix::zero(off), Gf2Matrix::zero(off),
               Gf2Matrix::zero(alpha), r, alpha};
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) b.q1.set(i, j, a.get(i, j));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < alpha; ++j) b.q2.set(i, j, a.get(i, r + j));
  for (int i = 0; i < alpha; ++i)
    for (int j = 0; j < r; ++j) b.q3.set(i, j, a.get(r + i, j));
  for (int i = 0; i < alpha; ++i)
    for (int j = 0; j < alpha; ++j) b.q4.set(i, j, a.get(r + i, r + j));
  return b;
}

Gf2Matrix block_join(const BlockSplit& b) {
  const int r = b.r;
  const int alpha = b.alpha;
  if (b.q1.dim() != r || b.q4.dim() != alpha)
    throw std::invalid_argument("diagonal block sizes disagree with r/alpha");
  Gf2Matrix a = Gf2Matrix::zero(r + alpha);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) a.set(i, j, b.q1.get(i, j));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < alpha; ++j) a.set(i, r + j, b.q2.get(i, j));
  for (int i = 0; i < alpha; ++i)
    for (int j = 0; j < r; ++j) a.set(r + i, j, b.q3.get(i, j));
  for (int i = 0; i < alpha; ++i)
    for (int j = 0; j < alpha; ++j) a.set(r + i, r + j, b.q4.get(i, j));
  return a;
}

Gf2Matrix canonicalize_idempotent(const Gf2Matrix& p) {
  if (!p.is_idempotent())
    throw std::invalid_argument("canonicalize_idempotent requires an idempotent");
  const int n = p.dim();

  // Image basis: original columns of p, greedily selected in index order.
  std::vector<std::uint64_t> columns(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.get(i, j)) columns[j] |= std::uint64_t{1} << i;

  // elim[b] holds a seen vector whose lowest set bit is b; reducing a
  // candidate against the table decides linear independence.
  std::array<std::uint64_t, Gf2Matrix::kMaxDim> elim{};
  std::vector<std::uint64_t> image;  // selected original columns
  for (int j = 0; j < n; ++j) {
    std::uint64_t v = columns[j];
    while (v != 0) {
      const std::size_t b = static_cast<std::size_t>(std::countr_zero(v));
      if (elim[b] == 0) {
        elim[b] = v;
        image.push_back(columns[j]);
        break;
      }
      v ^= elim[b];
    }
  }

  // Kernel basis from the reduced echelon form of p, free columns ascending.
  std::vector<std::uint64_t> rref(p.dim(), 0);
  for (int i = 0; i < n; ++i) rref[i] = p.row_bits(i);
  std::vector<int> pivot_cols(static_cast<std::size_t>(n), -1);
  const int rank =
      n == 0 ? 0
             : kernels::active_kernels().row_reduce(n, n, rref.data(), nullptr,
                                                    pivot_cols.data());
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int i = 0; i < rank; ++i) is_pivot[pivot_cols[i]] = true;

  std::vector<std::uint64_t> kernel;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::uint64_t v = std::uint64_t{1} << f;
    for (int i = 0; i < rank; ++i)
      if ((rref[i] >> f) & 1u) v |= std::uint64_t{1} << pivot_cols[i];
    kernel.push_back(v);
  }

  Gf2Matrix m = Gf2Matrix::zero(n);  // columns: image basis then kernel basis
  int col = 0;
  for (const std::uint64_t v : image) {
    for (int i = 0; i < n; ++i)
      if ((v >> i) & 1u) m.set(i, col, true);
    ++col;
  }
  for (const std::uint64_t v : kernel) {
    for (int i = 0; i < n; ++i)
      if ((v >> i) & 1u) m.set(i, col, true);
    ++col;
  }
  return m.inverse();
}

}  // namespace nilclean
