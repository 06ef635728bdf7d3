#pragma once

#include <optional>
#include <set>
#include <string>

#include "nilclean/gf2_matrix.hpp"

namespace nilclean {

/// A word over the letters P and Q; the empty word is the identity.
using NcWord = std::string;

/// Length-lexicographic order with P < Q; the display order for word sets.
struct LenLexLess {
  bool operator()(const NcWord& a, const NcWord& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Rewriting rules P·P -> P and Q^e -> 0.
struct RuleSet {
  int nilpotency_index = 3;  // e, must be >= 1
};

/// A sum of words with coefficients mod 2: a set with symmetric-difference
/// addition.
class NcPoly {
 public:
  NcPoly() = default;
  explicit NcPoly(std::initializer_list<NcWord> ws);

  /// Mod-2 addition: inserting a word already present removes it.
  void toggle(const NcWord& w);

  NcPoly operator+(const NcPoly& g) const;
  NcPoly operator*(const NcPoly& g) const;  // word concatenation, bilinear
  bool operator==(const NcPoly& g) const = default;

  const std::set<NcWord, LenLexLess>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }

  /// '+'-joined words in display order; "1" stands for the empty word, and a
  /// polynomial with no words prints as "0".
  std::string to_string() const;

 private:
  std::set<NcWord, LenLexLess> words_;
};

/// Fully reduce one word: collapse every maximal run of P to length 1; a run
/// of Q of length >= e kills the word (nullopt).
std::optional<NcWord> reduce_word(const NcWord& w, const RuleSet& rules);

/// Reduce every word and cancel mod 2.
NcPoly normal_form(const NcPoly& x, const RuleSet& rules);

/// (P+Q)^k expanded into its 2^k words, reduced.
NcPoly expand_sum_power(int k, const RuleSet& rules);

/// normal_form((P+Q)^4 + (P+Q)^3) with e = 3: the six-word identity satisfied
/// whenever (P+Q)^4 + (P+Q)^3 = I.
NcPoly derive_eq1();

/// normal_form((P+Q)^{e+1} + (P+Q)^e) at nilpotency index e: the analogue of
/// derive_eq1 for an arbitrary index.
NcPoly derive_power_identity(int e);

/// Substitute matrices for the letters and sum mod 2; the empty word becomes
/// the identity matrix. p0 and q0 must have equal dimension.
Gf2Matrix evaluate(const NcPoly& x, const Gf2Matrix& p0, const Gf2Matrix& q0);

}  // namespace nilclean
