#include "nilclean/search.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "nilclean/nc_poly.hpp"

namespace nilclean {

namespace {

// ---------- stratified idempotent generation ----------

// One enumeration unit: a rank and the reduced-row-echelon basis of one
// image subspace. Every idempotent with that image arises from exactly one
// complement subspace, enumerated inside the unit.
struct ImageBasis {
  int r = 0;
  std::vector<std::uint64_t> rows;  // basis vectors, bit j = coordinate j
  std::vector<int> pivots;          // ascending
};

// Advance an ascending index combination over {0..n-1}; false when done.
bool next_combination(std::vector<int>& s, int n) {
  const int r = static_cast<int>(s.size());
  for (int i = r - 1; i >= 0; --i) {
    if (s[i] < n - r + i) {
      ++s[i];
      for (int j = i + 1; j < r; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Ranks ascending, pivot sets in ascending lexicographic order, free-entry
// bit patterns ascending: every subspace exactly once, deterministically.
bool for_each_image_basis(int n,
                          const std::function<bool(const ImageBasis&)>& f) {
  for (int r = 0; r <= n; ++r) {
    std::vector<int> pivots(static_cast<std::size_t>(r));
    std::iota(pivots.begin(), pivots.end(), 0);
    do {
      std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
      for (const int s : pivots) is_pivot[s] = true;
      // free slots of the echelon form: (row i, column f) with f non-pivot
      // and right of the row's pivot
      std::vector<std::pair<int, int>> slots;
      for (int i = 0; i < r; ++i)
        for (int fcol = pivots[i] + 1; fcol < n; ++fcol)
          if (!is_pivot[fcol]) slots.emplace_back(i, fcol);
      const int nbits = static_cast<int>(slots.size());
      for (std::uint64_t bits = 0;; ++bits) {
        ImageBasis u;
        u.r = r;
        u.pivots = pivots;
        u.rows.assign(static_cast<std::size_t>(r), 0);
        for (int i = 0; i < r; ++i)
          u.rows[i] = std::uint64_t{1} << pivots[i];
        for (int idx = 0; idx < nbits; ++idx)
          if ((bits >> idx) & 1u)
            u.rows[slots[idx].first] |= std::uint64_t{1} << slots[idx].second;
        if (!f(u)) return false;
        if (bits + 1 >= (std::uint64_t{1} << nbits)) break;
      }
    } while (next_combination(pivots, n));
  }
  return true;
}

// All idempotents with image spanned by u: the kernel is the graph of a map
// from the coordinate complement (non-pivot unit vectors) into the image.
bool for_each_idempotent_with_image(
    int n, const ImageBasis& u,
    const std::function<bool(const Gf2Matrix&)>& f) {
  const int r = u.r;
  const int cdim = n - r;
  std::vector<int> non_pivots;
  {
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (const int s : u.pivots) is_pivot[s] = true;
    for (int j = 0; j < n; ++j)
      if (!is_pivot[j]) non_pivots.push_back(j);
  }
  const int phi_bits = r * cdim;
  for (std::uint64_t c = 0;; ++c) {
    // columns of m: image basis, then kernel basis; p maps the former to
    // themselves and the latter to zero.
    Gf2Matrix m = Gf2Matrix::zero(n);
    Gf2Matrix img = Gf2Matrix::zero(n);
    for (int col = 0; col < r; ++col)
      for (int row = 0; row < n; ++row)
        if ((u.rows[col] >> row) & 1u) {
          m.set(row, col, true);
          img.set(row, col, true);
        }
    for (int j = 0; j < cdim; ++j) {
      std::uint64_t w = std::uint64_t{1} << non_pivots[j];
      for (int i = 0; i < r; ++i)
        if ((c >> (static_cast<std::size_t>(j) * r + i)) & 1u) w ^= u.rows[i];
      for (int row = 0; row < n; ++row)
        if ((w >> row) & 1u) m.set(row, r + j, true);
    }
    if (!f(img * m.inverse())) return false;
    if (c + 1 >= (std::uint64_t{1} << phi_bits)) break;
  }
  return true;
}

void check_enumeration_dim(int n, Strategy strategy) {
  if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
  if (strategy == Strategy::kBrute && n > 4)
    throw std::invalid_argument("brute enumeration is limited to n <= 4");
  if (strategy == Strategy::kStratified && n > 15)
    throw std::invalid_argument("stratified enumeration is limited to n <= 15");
}

bool brute_scan(int n, const std::function<bool(const Gf2Matrix&)>& yield) {
  const std::uint64_t total = std::uint64_t{1}
                              << (static_cast<unsigned>(n) * n);
  for (std::uint64_t word = 0; word < total; ++word) {
    Gf2Matrix p = Gf2Matrix::zero(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if ((word >> (i * n + j)) & 1u) p.set(i, j, true);
    if (p.is_idempotent() && !yield(p)) return false;
  }
  return true;
}

}  // namespace

void iter_idempotents(int n, Strategy strategy,
                      const std::function<bool(const Gf2Matrix&)>& yield) {
  check_enumeration_dim(n, strategy);
  if (strategy == Strategy::kSat)
    throw std::invalid_argument("sat is not an enumeration strategy");
  if (strategy == Strategy::kBrute) {
    brute_scan(n, yield);
    return;
  }
  for_each_image_basis(n, [&](const ImageBasis& u) {
    return for_each_idempotent_with_image(n, u, yield);
  });
}

std::uint64_t count_idempotents(int n, Strategy strategy) {
  std::uint64_t count = 0;
  iter_idempotents(n, strategy, [&](const Gf2Matrix&) {
    ++count;
    return true;
  });
  return count;
}

// ---------- BigUint ----------

BigUint::BigUint(std::uint64_t v) {
  if (v != 0) limbs_.push_back(v);
}

BigUint BigUint::operator+(const BigUint& b) const {
  BigUint out;
  const std::size_t sz = std::max(limbs_.size(), b.limbs_.size());
  out.limbs_.reserve(sz + 1);
  unsigned __int128 carry = 0;
  for (std::size_t i = 0; i < sz; ++i) {
    unsigned __int128 sum = carry;
    if (i < limbs_.size()) sum += limbs_[i];
    if (i < b.limbs_.size()) sum += b.limbs_[i];
    out.limbs_.push_back(static_cast<std::uint64_t>(sum));
    carry = sum >> 64;
  }
  if (carry != 0) out.limbs_.push_back(static_cast<std::uint64_t>(carry));
  return out;
}

BigUint BigUint::shifted_left(int bits) const {
  if (bits < 0) throw std::invalid_argument("negative shift");
  if (limbs_.empty() || bits == 0) return *this;
  const int words = bits / 64;
  const int rem = bits % 64;
  BigUint out;
  out.limbs_.assign(limbs_.size() + words + 1, 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    out.limbs_[i + words] |= limbs_[i] << rem;
    if (rem != 0) out.limbs_[i + words + 1] |= limbs_[i] >> (64 - rem);
  }
  while (!out.limbs_.empty() && out.limbs_.back() == 0) out.limbs_.pop_back();
  return out;
}

std::uint64_t BigUint::to_uint64() const {
  if (limbs_.empty()) return 0;
  if (limbs_.size() > 1) throw std::overflow_error("value exceeds 64 bits");
  return limbs_[0];
}

std::string BigUint::to_decimal_string() const {
  if (limbs_.empty()) return "0";
  std::vector<std::uint64_t> work = limbs_;
  std::string digits;
  while (!work.empty()) {
    unsigned __int128 rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      const unsigned __int128 cur = (rem << 64) | work[i];
      work[i] = static_cast<std::uint64_t>(cur / 10);
      rem = cur % 10;
    }
    digits.push_back(static_cast<char>('0' + static_cast<int>(rem)));
    while (!work.empty() && work.back() == 0) work.pop_back();
  }
  return {digits.rbegin(), digits.rend()};
}

BigUint idempotent_count_formula(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  // Gaussian binomials [n, r] base 2 by the q-Pascal recurrence
  // [m, r] = [m-1, r-1] + 2^r [m-1, r].
  std::vector<BigUint> row{BigUint(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<BigUint> next(static_cast<std::size_t>(m) + 1);
    next[0] = BigUint(1);
    next[m] = BigUint(1);
    for (int r = 1; r < m; ++r) next[r] = row[r - 1] + row[r].shifted_left(r);
    row = std::move(next);
  }
  BigUint total;
  for (int r = 0; r <= n; ++r) total = total + row[r].shifted_left(r * (n - r));
  return total;
}

// ---------- decompose ----------

namespace {

struct ExhaustiveResult {
  std::uint64_t examined = 0;
  std::optional<Gf2Matrix> best;  // lexicographically smallest witness
};

void consider(const Gf2Matrix& a, int k, int max_rank, const Gf2Matrix& p,
              ExhaustiveResult& out) {
  ++out.examined;
  const Gf2Matrix q = a + p;
  if (q.rank() > max_rank) return;  // necessary for nilpotency of index k
  if (!q.is_nilpotent_index(k)) return;
  if (!out.best || p.lex_less(*out.best)) out.best = p;
}

SearchReport exhaustive_decompose(const Gf2Matrix& a, int k, Strategy strategy,
                                  const SearchOptions& opts) {
  const int n = a.dim();
  check_enumeration_dim(n, strategy);
  const int max_rank = n - (n + k - 1) / k;

  int workers = opts.workers > 0
                    ? opts.workers
                    : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (strategy == Strategy::kBrute) workers = 1;

  ExhaustiveResult merged;
  if (workers == 1) {
    iter_idempotents(n, strategy, [&](const Gf2Matrix& p) {
      consider(a, k, max_rank, p, merged);
      return true;
    });
  } else {
    // Units (image subspaces) are dealt round-robin; workers share nothing
    // and the merge below is order-independent, so the result does not
    // depend on the worker count.
    std::vector<ExhaustiveResult> outs(static_cast<std::size_t>(workers));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        std::uint64_t unit = 0;
        for_each_image_basis(n, [&](const ImageBasis& u) {
          if (unit++ % static_cast<std::uint64_t>(workers) !=
              static_cast<std::uint64_t>(w))
            return true;
          return for_each_idempotent_with_image(n, u,
                                                [&](const Gf2Matrix& p) {
                                                  consider(a, k, max_rank, p,
                                                           outs[w]);
                                                  return true;
                                                });
        });
      });
    }
    for (auto& t : threads) t.join();
    for (const ExhaustiveResult& o : outs) {
      merged.examined += o.examined;
      if (o.best && (!merged.best || o.best->lex_less(*merged.best)))
        merged.best = o.best;
    }
  }

  SearchReport rep;
  rep.target = a;
  rep.k = k;
  rep.strategy = strategy;
  rep.space_size = merged.examined;
  if (merged.best) {
    rep.status = SearchStatus::kFound;
    rep.witness = make_checked_decomposition(*merged.best, a + *merged.best,
                                             a, k);
  } else {
    rep.status = SearchStatus::kExhaustedNone;
  }
  return rep;
}

SearchReport sat_decompose(const Gf2Matrix& a, int k,
                           const SearchOptions& opts) {
  SearchReport rep;
  rep.target = a;
  rep.k = k;
  rep.strategy = Strategy::kSat;
  const CnfInstance inst = encode(a, k);
  if (a.dim() > opts.sat_solve_dim_limit) {
    rep.status = SearchStatus::kExported;
    return rep;
  }
  const SolveResult res =
      dpll_solve(inst, SolveMode::kFirstSolution, opts.sat_step_budget);
  rep.space_size = res.decisions;
  switch (res.status) {
    case SolveStatus::kSat:
      rep.status = SearchStatus::kFound;
      rep.witness = decode_and_verify(inst, *res.assignment);
      break;
    case SolveStatus::kUnsat:
      rep.status = SearchStatus::kExhaustedNone;
      break;
    case SolveStatus::kUnknown:
      rep.status = SearchStatus::kExported;
      break;
  }
  return rep;
}

}  // namespace

SearchReport decompose(const Gf2Matrix& a, int k, Strategy strategy,
                       const SearchOptions& opts) {
  if (k < 1) throw std::invalid_argument("nilpotency index must be >= 1");
  if (a.dim() == 0) {
    SearchReport rep;
    rep.target = a;
    rep.k = k;
    rep.strategy = strategy;
    rep.status = SearchStatus::kFound;
    rep.witness = make_checked_decomposition(a, a, a, k);
    rep.space_size = 1;
    return rep;
  }
  if (strategy == Strategy::kSat) return sat_decompose(a, k, opts);
  return exhaustive_decompose(a, k, strategy, opts);
}

TheoremResult theorem_check(int m) {
  if (m < 1 || m % 2 == 0)
    throw std::invalid_argument("theorem applies to odd m only");
  const std::vector<Gf2Matrix> blocks(static_cast<std::size_t>(m),
                                      Gf2Matrix::matrix_c());
  const Gf2Matrix target = Gf2Matrix::direct_sum(blocks);
  TheoremResult res;
  if (m == 1) {
    res.report = decompose(target, 3, Strategy::kStratified);
    return res;
  }
  res.instance = encode(target, 3);
  res.report.target = target;
  res.report.k = 3;
  res.report.status = SearchStatus::kExported;
  res.report.strategy = Strategy::kSat;
  res.report.space_size = 0;
  return res;
}

BlockIdentityResult block_identity_check(int r, const Gf2Matrix& q) {
  const int n = q.dim();
  if (r < 0 || r > n) throw std::invalid_argument("rank out of range");
  const int alpha = n - r;
  Gf2Matrix p = Gf2Matrix::zero(n);
  for (int i = 0; i < r; ++i) p.set(i, i, true);

  const Gf2Matrix e = evaluate(derive_eq1(), p, q);
  BlockIdentityResult out;
  out.lhs = block_split(e, alpha).q4;

  if (alpha == 0) {
    out.rhs = Gf2Matrix::zero(0);
  } else if (r == 0) {
    // Q2 and Q3 have no columns/rows at all; both triple products vanish.
    out.rhs = Gf2Matrix::zero(alpha);
  } else {
    // The off-diagonal blocks live in squares of size max(r, alpha); lift Q4
    // to that size, multiply there, and read back the alpha x alpha corner.
    const BlockSplit bs = block_split(q, alpha);
    const int s = bs.q2.dim();
    Gf2Matrix q4l = Gf2Matrix::zero(s);
    for (int i = 0; i < alpha; ++i)
      for (int j = 0; j < alpha; ++j) q4l.set(i, j, bs.q4.get(i, j));
    const Gf2Matrix prod = bs.q3 * bs.q2;
    const Gf2Matrix rhs_s = prod * q4l + q4l * prod;
    out.rhs = Gf2Matrix::zero(alpha);
    for (int i = 0; i < alpha; ++i)
      for (int j = 0; j < alpha; ++j) out.rhs.set(i, j, rhs_s.get(i, j));
  }
  out.equal = out.lhs == out.rhs;
  return out;
}

ParityAudit parity_audit(const Gf2Matrix& p, const Gf2Matrix& q) {
  if (p.dim() != q.dim())
    throw std::invalid_argument("parity_audit requires equal dimensions");
  if (!p.is_idempotent())
    throw std::invalid_argument("parity_audit requires p idempotent");
  if (!q.is_nilpotent_index(3))
    throw std::invalid_argument("parity_audit requires q^3 = 0");
  ParityAudit out;
  out.alpha = p.corank();
  out.eq1_holds =
      evaluate(derive_eq1(), p, q) == Gf2Matrix::identity(p.dim());
  out.trace_sum = (p + q).trace();
  out.trace_p = p.trace();
  out.rank_p = p.rank();
  out.trace_q = q.trace();
  return out;
}

std::vector<SurveyRow> survey(int n, int k, const SearchOptions& opts) {
  if (n < 1 || n > 6)
    throw std::invalid_argument("survey is limited to 1 <= n <= 6");
  if (k < 1) throw std::invalid_argument("nilpotency index must be >= 1");
  std::vector<SurveyRow> rows;
  for (SimilarityClass& cls : enumerate_similarity_classes(n)) {
    SearchReport rep =
        decompose(cls.representative, k, Strategy::kStratified, opts);
    rows.push_back({std::move(cls), std::move(rep)});
  }
  return rows;
}

}  // namespace nilclean
