#include "nilclean/nc_poly.hpp"

#include <stdexcept>

namespace nilclean {

NcPoly::NcPoly(std::initializer_list<NcWord> ws) {
  for (const NcWord& w : ws) toggle(w);
}

void NcPoly::toggle(const NcWord& w) {
  const auto [it, inserted] = words_.insert(w);
  if (!inserted) words_.erase(it);
}

NcPoly NcPoly::operator+(const NcPoly& g) const {
  NcPoly out = *this;
  for (const NcWord& w : g.words_) out.toggle(w);
  return out;
}

NcPoly NcPoly::operator*(const NcPoly& g) const {
  NcPoly out;
  for (const NcWord& a : words_)
    for (const NcWord& b : g.words_) out.toggle(a + b);
  return out;
}

std::string NcPoly::to_string() const {
  if (words_.empty()) return "0";
  std::string out;
  for (const NcWord& w : words_) {
    if (!out.empty()) out += '+';
    out += w.empty() ? "1" : w;
  }
  return out;
}

std::optional<NcWord> reduce_word(const NcWord& w, const RuleSet& rules) {
  if (rules.nilpotency_index < 1)
    throw std::invalid_argument("nilpotency index must be at least 1");
  NcWord out;
  std::size_t i = 0;
  while (i < w.size()) {
    const char c = w[i];
    if (c != 'P' && c != 'Q') throw std::invalid_argument("letters are P, Q");
    std::size_t run = i;
    while (run < w.size() && w[run] == c) ++run;
    if (c == 'P') {
      out += 'P';  // any run of P collapses to one
    } else {
      if (static_cast<int>(run - i) >= rules.nilpotency_index)
        return std::nullopt;  // word vanishes
      out.append(run - i, 'Q');
    }
    i = run;
  }
  return out;
}

NcPoly normal_form(const NcPoly& x, const RuleSet& rules) {
  NcPoly out;
  for (const NcWord& w : x.words())
    if (const auto r = reduce_word(w, rules)) out.toggle(*r);
  return out;
}

NcPoly expand_sum_power(int k, const RuleSet& rules) {
  if (k < 0) throw std::invalid_argument("exponent must be nonnegative");
  NcPoly sum;
  sum.toggle("P");
  sum.toggle("Q");
  NcPoly acc;
  acc.toggle("");  // empty product
  for (int i = 0; i < k; ++i) acc = acc * sum;
  return normal_form(acc, rules);
}

NcPoly derive_eq1() { return derive_power_identity(3); }

NcPoly derive_power_identity(int e) {
  const RuleSet rules{e};
  return normal_form(expand_sum_power(e + 1, rules) + expand_sum_power(e, rules),
                     rules);
}

Gf2Matrix evaluate(const NcPoly& x, const Gf2Matrix& p0, const Gf2Matrix& q0) {
  if (p0.dim() != q0.dim())
    throw std::invalid_argument("evaluate requires equal dimensions");
  const int n = p0.dim();
  Gf2Matrix acc = Gf2Matrix::zero(n);
  for (const NcWord& w : x.words()) {
    Gf2Matrix term = Gf2Matrix::identity(n);
    for (const char c : w) term = term * (c == 'P' ? p0 : q0);
    acc = acc + term;
  }
  return acc;
}

}  // namespace nilclean
