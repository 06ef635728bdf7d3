#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "nilclean/gf2_poly.hpp"
#include "test_util.hpp"

using nilclean::Gf2Poly;
using nilclean::gcd;
using nilclean::irreducibles_up_to;
using nilclean::is_irreducible;
using testutil::poly;

namespace {

Gf2Poly rand_poly(std::mt19937_64& rng, int max_deg) {
  Gf2Poly f;
  const int d = static_cast<int>(rng() % (max_deg + 1));
  for (int i = 0; i <= d; ++i) f.set_coeff(i, rng() & 1);
  return f;
}

}  // namespace

TEST_CASE("construction and coefficient access") {
  CHECK(Gf2Poly::zero().is_zero());
  CHECK(Gf2Poly::zero().degree() == -1);
  CHECK(Gf2Poly::one().degree() == 0);
  CHECK(Gf2Poly::t().degree() == 1);
  CHECK(Gf2Poly::monomial(5).degree() == 5);

  const Gf2Poly f = poly("10011");  // 1 + t^3 + t^4
  CHECK(f.degree() == 4);
  CHECK(f.coeff(0));
  CHECK(!f.coeff(1));
  CHECK(!f.coeff(2));
  CHECK(f.coeff(3));
  CHECK(f.coeff(4));
  CHECK(f.to_bit_string() == "10011");
  CHECK(f.to_string() == "t^4+t^3+1");

  CHECK(Gf2Poly::zero().to_bit_string() == "0");
  CHECK(Gf2Poly::zero().to_string() == "0");
  CHECK(Gf2Poly::one().to_string() == "1");
  CHECK(Gf2Poly::t().to_string() == "t");
  CHECK(poly("011").to_string() == "t^2+t");

  // Clearing the top coefficient re-trims the degree.
  Gf2Poly g = Gf2Poly::monomial(7);
  g.set_coeff(7, false);
  CHECK(g.is_zero());
}

TEST_CASE("addition and multiplication") {
  const Gf2Poly t1 = poly("11");  // t + 1
  CHECK(t1 + t1 == Gf2Poly::zero());
  CHECK(t1 * t1 == poly("101"));  // t^2 + 1
  CHECK(poly("10011") + Gf2Poly::one() == poly("00011"));
  CHECK(Gf2Poly::zero() * poly("10011") == Gf2Poly::zero());
  CHECK(Gf2Poly::one() * poly("10011") == poly("10011"));

  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    const Gf2Poly f = rand_poly(rng, 12), g = rand_poly(rng, 12),
                  h = rand_poly(rng, 12);
    CHECK(f * g == g * f);
    CHECK((f + g) * h == f * h + g * h);
    CHECK((f * g) * h == f * (g * h));
  }
}

TEST_CASE("division with remainder") {
  const auto [q, r] = poly("10011").divmod(poly("111"));
  CHECK(q == poly("101"));  // t^2 + 1
  CHECK(r == poly("01"));   // t
  CHECK_THROWS_AS(poly("11").divmod(Gf2Poly::zero()), std::invalid_argument);

  std::mt19937_64 rng(12);
  int checked = 0;
  while (checked < 1000) {
    const Gf2Poly f = rand_poly(rng, 16), g = rand_poly(rng, 9);
    if (g.is_zero()) continue;
    ++checked;
    const auto [quot, rem] = f.divmod(g);
    CHECK(quot * g + rem == f);
    CHECK(rem.degree() < g.degree());
  }
}

TEST_CASE("gcd") {
  CHECK(gcd(poly("101"), poly("11")) == poly("11"));  // t^2+1 = (t+1)^2
  CHECK(gcd(poly("10011"), poly("111")) == Gf2Poly::one());
  CHECK(gcd(Gf2Poly::zero(), poly("11")) == poly("11"));

  std::mt19937_64 rng(13);
  for (int it = 0; it < 300; ++it) {
    const Gf2Poly f = rand_poly(rng, 10), g = rand_poly(rng, 10);
    if (f.is_zero() && g.is_zero()) continue;
    const Gf2Poly d = gcd(f, g);
    CHECK(!d.is_zero());
    CHECK(f.divisible_by(d));
    CHECK(g.divisible_by(d));
    if (!f.is_zero()) CHECK(gcd(f * g, f) == f);
  }
}

TEST_CASE("ordering: degree first, then bits as an integer") {
  CHECK(Gf2Poly::zero() < Gf2Poly::one());
  CHECK(Gf2Poly::one() < Gf2Poly::t());
  CHECK(Gf2Poly::t() < poly("11"));      // t < t+1
  CHECK(poly("11") < poly("001"));       // t+1 < t^2
  CHECK(poly("001") < poly("101"));      // t^2 < t^2+1
  std::vector<nilclean::Gf2Poly> v = {poly("10011"), Gf2Poly::t(),
                                      Gf2Poly::one()};
  std::sort(v.begin(), v.end());
  CHECK(v[0] == Gf2Poly::one());
  CHECK(v[2] == poly("10011"));
}

TEST_CASE("irreducible enumeration") {
  const auto irr = irreducibles_up_to(4);
  auto of_degree = [&](int d) {
    std::vector<Gf2Poly> out;
    for (const auto& p : irr)
      if (p.degree() == d) out.push_back(p);
    return out;
  };
  CHECK(of_degree(1) == std::vector<Gf2Poly>{poly("01"), poly("11")});
  CHECK(of_degree(2) == std::vector<Gf2Poly>{poly("111")});
  CHECK(of_degree(3).size() == 2);  // t^3+t+1, t^3+t^2+1
  CHECK(of_degree(4).size() == 3);  // t^4+t+1, t^4+t^3+1, t^4+t^3+t^2+t+1
  const auto deg4 = of_degree(4);
  CHECK(std::find(deg4.begin(), deg4.end(), poly("10011")) != deg4.end());
  CHECK(std::is_sorted(irr.begin(), irr.end()));

  CHECK(is_irreducible(poly("10011")));
  CHECK(is_irreducible(poly("11001")));   // t^4+t+1
  CHECK(!is_irreducible(poly("101")));    // (t+1)^2
  CHECK(!is_irreducible(poly("10101")));  // (t^2+t+1)^2
  CHECK(!is_irreducible(Gf2Poly::one()));
  CHECK(!is_irreducible(Gf2Poly::zero()));
}

TEST_CASE("every listed irreducible has no nontrivial factorization") {
  // Cross-check the sieve against brute-force products.
  const int d = 6;
  const auto irr = irreducibles_up_to(d);
  // Build the set of all products f*g with 1 <= deg f <= deg g, total <= d.
  std::vector<Gf2Poly> composite;
  for (std::uint64_t fb = 2; fb < (1ull << (d + 1)); ++fb) {
    Gf2Poly f;
    for (int i = 0; i <= d; ++i) f.set_coeff(i, (fb >> i) & 1);
    if (f.degree() < 1) continue;
    for (std::uint64_t gb = 2; gb < (1ull << (d + 1)); ++gb) {
      Gf2Poly g;
      for (int i = 0; i <= d; ++i) g.set_coeff(i, (gb >> i) & 1);
      if (g.degree() < 1) continue;
      if (f.degree() + g.degree() > d) continue;
      composite.push_back(f * g);
    }
  }
  std::sort(composite.begin(), composite.end());
  for (const auto& p : irr) {
    CHECK(!std::binary_search(composite.begin(), composite.end(), p));
  }
  // Counts by degree: 2, 1, 2, 3, 6, 9 (necklace numbers).
  int counts[7] = {0, 0, 0, 0, 0, 0, 0};
  for (const auto& p : irr) ++counts[p.degree()];
  CHECK(counts[1] == 2);
  CHECK(counts[2] == 1);
  CHECK(counts[3] == 2);
  CHECK(counts[4] == 3);
  CHECK(counts[5] == 6);
  CHECK(counts[6] == 9);
}
