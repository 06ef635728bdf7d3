#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nilclean/canonical.hpp"
#include "nilclean/cnf.hpp"
#include "nilclean/decomposition.hpp"
#include "nilclean/gf2_matrix.hpp"

namespace nilclean {

enum class Strategy { kBrute, kStratified, kSat };
enum class SearchStatus { kFound, kExhaustedNone, kExported, kUnknown };

struct SearchReport {
  Gf2Matrix target;
  int k = 1;
  SearchStatus status = SearchStatus::kUnknown;
  std::optional<Decomposition> witness;  // present iff status = found
  Strategy strategy = Strategy::kStratified;
  std::uint64_t space_size = 0;  // candidates examined (solver decisions
                                 // for the sat strategy)
};

struct SearchOptions {
  int workers = 0;  // stratified search only; 0 = hardware concurrency
  std::uint64_t sat_step_budget = 1'000'000'000;
  int sat_solve_dim_limit = 8;  // larger instances are exported, not solved
};

/// Stream every idempotent of M_n(F2) exactly once. brute filters all 2^(n^2)
/// matrices and is limited to n <= 4; stratified generates each idempotent
/// from its (image, kernel) pair of complementary subspaces, the image
/// running over reduced-row-echelon bases and the kernel over graphs of
/// linear maps into the image. Both orders are deterministic. The callback
/// returns false to stop early.
void iter_idempotents(int n, Strategy strategy,
                      const std::function<bool(const Gf2Matrix&)>& yield);

std::uint64_t count_idempotents(int n, Strategy strategy);

/// Unsigned integer of arbitrary size; just enough arithmetic for the
/// Gaussian-binomial count below, which overflows 64 bits past n = 11.
class BigUint {
 public:
  BigUint() = default;  // zero
  explicit BigUint(std::uint64_t v);

  BigUint operator+(const BigUint& b) const;
  BigUint shifted_left(int bits) const;
  bool operator==(const BigUint& b) const = default;

  bool is_zero() const { return limbs_.empty(); }
  bool fits_uint64() const { return limbs_.size() <= 1; }
  std::uint64_t to_uint64() const;  // throws std::overflow_error if too wide
  std::string to_decimal_string() const;

 private:
  std::vector<std::uint64_t> limbs_;  // little-endian, no trailing zero limb
};

/// Number of idempotents of M_n(F2): sum over r of the Gaussian binomial
/// [n choose r] base 2 times 2^(r(n-r)).
BigUint idempotent_count_formula(int n);

/// Search for p with p^2 = p and (a + p)^k = 0. brute and stratified
/// exhaust the idempotent set and report the lexicographically smallest
/// witness (rows concatenated, read as a bit string); sat encodes the
/// constraints and runs the built-in solver when the dimension and budget
/// allow, otherwise reports exported. Candidates failing the nilpotent rank
/// bound rank(a+p) <= n - ceil(n/k) are rejected without powering.
SearchReport decompose(const Gf2Matrix& a, int k, Strategy strategy,
                       const SearchOptions& opts = {});

struct TheoremResult {
  SearchReport report;
  std::optional<CnfInstance> instance;  // present iff status = exported
};

/// The headline claim at m copies: direct_sum of m copies of the reference
/// matrix admits no splitting with q^3 = 0. m = 1 is settled here by
/// complete stratified enumeration; odd m >= 3 is exported as CNF (the
/// idempotent count at dimension 12 is astronomically large). Even m is
/// rejected: the claim is about an odd number of copies.
TheoremResult theorem_check(int m);

struct BlockIdentityResult {
  Gf2Matrix lhs;  // bottom-right alpha x alpha block of the evaluated sum
  Gf2Matrix rhs;  // Q3*Q2*Q4 + Q4*Q3*Q2 from the blocks of q
  bool equal = false;
};

/// With p the rank-r coordinate projector diag(I_r, 0) and alpha = n - r:
/// the bottom-right block of evaluate(derive_eq1(), p, q) equals
/// Q3 Q2 Q4 + Q4 Q3 Q2 for EVERY q, unconditionally.
BlockIdentityResult block_identity_check(int r, const Gf2Matrix& q);

struct ParityAudit {
  int alpha = 0;          // corank of p
  bool eq1_holds = false; // evaluate(derive_eq1(), p, q) = identity
  int trace_sum = 0;      // trace(p + q)
  int trace_p = 0;
  int rank_p = 0;         // trace_p = rank_p mod 2 for idempotents
  int trace_q = 0;        // 0 for nilpotents
};

/// Trace bookkeeping for a valid pair (p idempotent, q^3 = 0); rejects
/// invalid pairs.
ParityAudit parity_audit(const Gf2Matrix& p, const Gf2Matrix& q);

struct SurveyRow {
  SimilarityClass cls;
  SearchReport report;
};

/// Classify every similarity class of M_n(F2) by decomposability at index k:
/// one decompose run per class representative (decomposability is a
/// similarity invariant). Exhaustive strategies only; n <= 6.
std::vector<SurveyRow> survey(int n, int k, const SearchOptions& opts = {});

}  // namespace nilclean
