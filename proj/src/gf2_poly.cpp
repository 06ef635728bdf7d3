#include "nilclean/gf2_poly.hpp"

#include <bit>
#include <stdexcept>

namespace nilclean {

namespace {

constexpr int kWordBits = 64;

}  // namespace

Gf2Poly Gf2Poly::one() { return monomial(0); }

Gf2Poly Gf2Poly::t() { return monomial(1); }

Gf2Poly Gf2Poly::monomial(int d) {
  Gf2Poly p;
  p.set_coeff(d, true);
  return p;
}

Gf2Poly Gf2Poly::from_bit_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty polynomial bit string");
  Gf2Poly p;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') {
      p.set_coeff(static_cast<int>(i), true);
    } else if (s[i] != '0') {
      throw std::invalid_argument("polynomial bit string must be over {0,1}");
    }
  }
  return p;
}

void Gf2Poly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

int Gf2Poly::degree() const {
  if (words_.empty()) return -1;
  const int top = static_cast<int>(words_.size()) - 1;
  return top * kWordBits + (kWordBits - 1) -
         std::countl_zero(words_.back());
}

bool Gf2Poly::coeff(int i) const {
  if (i < 0) return false;
  const std::size_t w = static_cast<std::size_t>(i) / kWordBits;
  if (w >= words_.size()) return false;
  return (words_[w] >> (i % kWordBits)) & 1u;
}

void Gf2Poly::set_coeff(int i, bool v) {
  if (i < 0) throw std::invalid_argument("negative coefficient index");
  const std::size_t w = static_cast<std::size_t>(i) / kWordBits;
  if (w >= words_.size()) {
    if (!v) return;
    words_.resize(w + 1, 0);
  }
  const std::uint64_t bit = std::uint64_t{1} << (i % kWordBits);
  if (v)
    words_[w] |= bit;
  else
    words_[w] &= ~bit;
  trim();
}

Gf2Poly Gf2Poly::operator+(const Gf2Poly& g) const {
  Gf2Poly r;
  r.words_.resize(std::max(words_.size(), g.words_.size()), 0);
  for (std::size_t i = 0; i < r.words_.size(); ++i) {
    std::uint64_t w = 0;
    if (i < words_.size()) w ^= words_[i];
    if (i < g.words_.size()) w ^= g.words_[i];
    r.words_[i] = w;
  }
  r.trim();
  return r;
}

Gf2Poly Gf2Poly::operator*(const Gf2Poly& g) const {
  if (is_zero() || g.is_zero()) return {};
  Gf2Poly r;
  r.words_.assign(words_.size() + g.words_.size(), 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t bits = words_[i];
    while (bits) {
      const int b = std::countr_zero(bits);
      bits &= bits - 1;
      const int shift = static_cast<int>(i) * kWordBits + b;
      const int ws = shift / kWordBits;
      const int bs = shift % kWordBits;
      for (std::size_t j = 0; j < g.words_.size(); ++j) {
        r.words_[j + ws] ^= g.words_[j] << bs;
        if (bs) r.words_[j + ws + 1] ^= g.words_[j] >> (kWordBits - bs);
      }
    }
  }
  r.trim();
  return r;
}

std::strong_ordering Gf2Poly::operator<=>(const Gf2Poly& g) const {
  if (const auto c = degree() <=> g.degree(); c != 0) return c;
  for (std::size_t i = words_.size(); i-- > 0;) {
    if (const auto c = words_[i] <=> g.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::pair<Gf2Poly, Gf2Poly> Gf2Poly::divmod(const Gf2Poly& g) const {
  if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
  Gf2Poly q;
  Gf2Poly r = *this;
  const int dg = g.degree();
  while (!r.is_zero() && r.degree() >= dg) {
    const int shift = r.degree() - dg;
    q.set_coeff(shift, true);
    r = r + g * Gf2Poly::monomial(shift);
  }
  return {q, r};
}

bool Gf2Poly::divisible_by(const Gf2Poly& g) const {
  return divmod(g).second.is_zero();
}

std::string Gf2Poly::to_bit_string() const {
  if (is_zero()) return "0";
  std::string s(static_cast<std::size_t>(degree()) + 1, '0');
  for (int i = 0; i <= degree(); ++i)
    if (coeff(i)) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

std::string Gf2Poly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    if (!coeff(i)) continue;
    if (!s.empty()) s += "+";
    if (i == 0)
      s += "1";
    else if (i == 1)
      s += "t";
    else
      s += "t^" + std::to_string(i);
  }
  return s;
}

Gf2Poly gcd(Gf2Poly f, Gf2Poly g) {
  while (!g.is_zero()) {
    Gf2Poly r = f.divmod(g).second;
    f = std::move(g);
    g = std::move(r);
  }
  return f;
}

std::vector<Gf2Poly> irreducibles_up_to(int d) {
  if (d < 1) throw std::invalid_argument("degree bound must be >= 1");
  std::vector<Gf2Poly> irr;
  for (int k = 1; k <= d; ++k) {
    // Monic candidates of degree k: t^k plus any choice of lower bits.
    const std::uint64_t count = std::uint64_t{1} << k;
    for (std::uint64_t low = 0; low < count; ++low) {
      Gf2Poly p = Gf2Poly::monomial(k);
      for (int i = 0; i < k; ++i)
        if ((low >> i) & 1u) p.set_coeff(i, true);
      bool composite = false;
      for (const Gf2Poly& q : irr) {
        if (2 * q.degree() > k) break;
        if (p.divisible_by(q)) {
          composite = true;
          break;
        }
      }
      if (!composite) irr.push_back(std::move(p));
    }
  }
  return irr;
}

bool is_irreducible(const Gf2Poly& p) {
  const int d = p.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  for (const Gf2Poly& q : irreducibles_up_to(d / 2)) {
    if (p.divisible_by(q)) return false;
  }
  return true;
}

}  // namespace nilclean
