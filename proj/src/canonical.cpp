#include "nilclean/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nilclean {

namespace {

// Largest irreducible degree the factor scan will sieve before giving up.
// Covers every matrix of dimension <= kMaxFactorDegree outright, and larger
// ones whenever their elementary divisors stay below the cap.
constexpr int kMaxFactorDegree = 20;

// All monic irreducibles of exactly degree d, ascending by coefficient bits.
std::vector<Gf2Poly> irreducibles_of_degree(int d) {
  std::vector<Gf2Poly> out;
  for (const Gf2Poly& p : irreducibles_up_to(d))
    if (p.degree() == d) out.push_back(p);
  return out;
}

Gf2Poly poly_power(const Gf2Poly& base, int e) {
  Gf2Poly acc = Gf2Poly::one();
  for (int i = 0; i < e; ++i) acc = acc * base;
  return acc;
}

}  // namespace

std::vector<Gf2Poly> invariant_factors(const Gf2Matrix& a) {
  const int n = a.dim();

  // exponents[p] = multiset of elementary-divisor exponents for irreducible p,
  // descending.
  std::map<Gf2Poly, std::vector<int>> exponents;
  int accounted = 0;  // sum of deg(p) * (sum of exponents) found so far

  for (int d = 1; accounted < n; ++d) {
    if (d > n || d > kMaxFactorDegree)
      throw std::runtime_error(
          "invariant factor scan exceeded the supported irreducible degree");
    for (const Gf2Poly& p : irreducibles_of_degree(d)) {
      const Gf2Matrix pa = eval_poly(p, a);
      // d_j = nullity(p(a)^j) / deg p counts elementary divisors weighted by
      // min(exponent, j); successive differences s_j = #
      // divisors with exponent >= j.
      std::vector<int> s;
      Gf2Matrix power = Gf2Matrix::identity(n);
      int prev = 0;
      while (true) {
        power = power * pa;
        const int nullity = power.corank();
        if (nullity % d != 0)
          throw std::logic_error("nullity not divisible by factor degree");
        const int dj = nullity / d;
        if (dj == prev) break;
        s.push_back(dj - prev);
        prev = dj;
      }
      if (s.empty()) continue;
      // s_j is non-increasing; expand into the exponent multiset.
      std::vector<int> exps;
      for (int i = 0; i < s[0]; ++i) {
        int e = 0;
        for (const int sj : s)
          if (sj > i) ++e;
        exps.push_back(e);
      }
      std::sort(exps.begin(), exps.end(), std::greater<>());
      accounted += d * prev;
      exponents.emplace(p, std::move(exps));
      if (accounted >= n) break;
    }
  }
  if (accounted != n) throw std::logic_error("factor degrees do not sum to n");

  std::size_t chain_len = 0;
  for (const auto& [p, exps] : exponents)
    chain_len = std::max(chain_len, exps.size());

  // Factor i (from the largest down) takes the i-th largest exponent of every
  // irreducible.
  std::vector<Gf2Poly> chain;
  for (std::size_t i = 0; i < chain_len; ++i) {
    Gf2Poly f = Gf2Poly::one();
    for (const auto& [p, exps] : exponents)
      if (i < exps.size()) f = f * poly_power(p, exps[i]);
    chain.push_back(f);
  }
  std::reverse(chain.begin(), chain.end());  // ascending
  return chain;
}

Gf2Poly minimal_polynomial(const Gf2Matrix& a) {
  const std::vector<Gf2Poly> chain = invariant_factors(a);
  const Gf2Poly m = chain.empty() ? Gf2Poly::one() : chain.back();
  if (!eval_poly(m, a).is_zero())
    throw std::logic_error("computed minimal polynomial fails to annihilate");
  return m;
}

Gf2Matrix frobenius_form(const Gf2Matrix& a) {
  const std::vector<Gf2Poly> chain = invariant_factors(a);
  std::vector<Gf2Matrix> blocks;
  blocks.reserve(chain.size());
  for (const Gf2Poly& f : chain) blocks.push_back(Gf2Matrix::companion(f));
  if (blocks.empty()) return Gf2Matrix::zero(0);
  return Gf2Matrix::direct_sum(blocks);
}

bool is_similar(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("is_similar requires equal dimensions");
  return invariant_factors(a) == invariant_factors(b);
}

namespace {

// All monic divisors of f, each a product of powers of f's irreducible
// factors.
std::vector<Gf2Poly> monic_divisors(const Gf2Poly& f) {
  std::vector<std::pair<Gf2Poly, int>> factors;
  Gf2Poly rest = f;
  for (const Gf2Poly& p : irreducibles_up_to(f.degree())) {
    int mult = 0;
    while (rest.divisible_by(p)) {
      rest = rest.divmod(p).first;
      ++mult;
    }
    if (mult > 0) factors.emplace_back(p, mult);
    if (rest.degree() <= 0) break;
  }
  std::vector<Gf2Poly> divisors{Gf2Poly::one()};
  for (const auto& [p, mult] : factors) {
    std::vector<Gf2Poly> next;
    Gf2Poly pe = Gf2Poly::one();
    for (int e = 0; e <= mult; ++e) {
      for (const Gf2Poly& d : divisors) next.push_back(d * pe);
      pe = pe * p;
    }
    divisors = std::move(next);
  }
  return divisors;
}

// Extend a descending chain whose last (smallest) factor is `last`, with
// `remaining` total degree still to place.
void extend_chains(const Gf2Poly& last, int remaining,
                   std::vector<Gf2Poly>& chain,
                   std::vector<std::vector<Gf2Poly>>& out) {
  if (remaining == 0) {
    std::vector<Gf2Poly> ascending(chain.rbegin(), chain.rend());
    out.push_back(std::move(ascending));
    return;
  }
  for (const Gf2Poly& g : monic_divisors(last)) {
    if (g.degree() < 1 || g.degree() > remaining) continue;
    chain.push_back(g);
    extend_chains(g, remaining - g.degree(), chain, out);
    chain.pop_back();
  }
}

}  // namespace

std::vector<SimilarityClass> enumerate_similarity_classes(int n) {
  if (n < 1) throw std::invalid_argument("dimension must be at least 1");

  std::vector<std::vector<Gf2Poly>> chains;
  std::vector<Gf2Poly> chain;
  // Largest factor first: any monic polynomial of degree 1..n (bit patterns
  // below the leading coefficient).
  for (int d = 1; d <= n; ++d) {
    for (std::uint64_t low = 0; low < (std::uint64_t{1} << d); ++low) {
      Gf2Poly f = Gf2Poly::monomial(d);
      for (int i = 0; i < d; ++i)
        if ((low >> i) & 1u) f.set_coeff(i, true);
      chain.push_back(f);
      extend_chains(f, n - d, chain, chains);
      chain.pop_back();
    }
  }
  std::sort(chains.begin(), chains.end());

  std::vector<SimilarityClass> out;
  out.reserve(chains.size());
  for (auto& c : chains) {
    std::vector<Gf2Matrix> blocks;
    blocks.reserve(c.size());
    for (const Gf2Poly& f : c) blocks.push_back(Gf2Matrix::companion(f));
    out.push_back({std::move(c), Gf2Matrix::direct_sum(blocks)});
  }
  return out;
}

}  // namespace nilclean
