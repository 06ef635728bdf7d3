#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nilclean {

/// Univariate polynomial over F2. Coefficient of t^i is bit i; the zero
/// polynomial has empty support and degree -1. Every nonzero polynomial is
/// monic by construction.
class Gf2Poly {
 public:
  Gf2Poly() = default;

  static Gf2Poly zero() { return {}; }
  static Gf2Poly one();
  static Gf2Poly t();
  /// Single monomial t^d.
  static Gf2Poly monomial(int d);
  /// Coefficient bit string, lowest degree first ("10011" = 1 + t^3 + t^4).
  static Gf2Poly from_bit_string(std::string_view s);

  bool is_zero() const { return words_.empty(); }
  int degree() const;  // -1 for the zero polynomial
  bool coeff(int i) const;
  void set_coeff(int i, bool v);

  Gf2Poly operator+(const Gf2Poly& g) const;
  Gf2Poly operator*(const Gf2Poly& g) const;
  bool operator==(const Gf2Poly& g) const = default;

  /// Ordering used everywhere canonical output is required: by degree, then
  /// by coefficient bits read as an integer.
  std::strong_ordering operator<=>(const Gf2Poly& g) const;

  /// Quotient and remainder with deg r < deg g. Throws on division by zero.
  std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& g) const;
  bool divisible_by(const Gf2Poly& g) const;

  std::string to_bit_string() const;  // "0" for the zero polynomial
  std::string to_string() const;      // "t^4+t^3+1"

 private:
  void trim();
  std::vector<std::uint64_t> words_;  // bit i of word i/64 = coeff of t^i
};

Gf2Poly gcd(Gf2Poly f, Gf2Poly g);

/// All monic irreducible polynomials of degree <= d, by exhaustive trial
/// division, ordered by degree then coefficient bits.
std::vector<Gf2Poly> irreducibles_up_to(int d);

bool is_irreducible(const Gf2Poly& p);

}  // namespace nilclean
