#pragma once

#include <vector>

#include "nilclean/gf2_matrix.hpp"
#include "nilclean/gf2_poly.hpp"

namespace nilclean {

/// Invariant-factor chain f_1 | f_2 | ... | f_k of a, ordered ascending by
/// (degree, coefficient bits as an integer); the degrees sum to dim(a).
///
/// Computed without polynomial-matrix reduction: for each irreducible p the
/// nullities of p(a)^j for j = 1, 2, ... determine the multiset of elementary
/// divisors p^e, and the chain is assembled by giving the i-th largest
/// exponent of every irreducible to the i-th largest factor. Irreducibles are
/// enumerated by ascending degree and the scan stops once the accounted
/// degree reaches dim(a), so only matrices whose elementary divisors all have
/// large prime degree are expensive; a hard degree cap keeps that failure
/// mode an error instead of a hang.
std::vector<Gf2Poly> invariant_factors(const Gf2Matrix& a);

/// Largest invariant factor; the monic annihilating polynomial of least
/// degree. Cross-checked by evaluation at construction.
Gf2Poly minimal_polynomial(const Gf2Matrix& a);

/// Block diagonal of companion matrices of invariant_factors(a), smallest
/// factor first.
Gf2Matrix frobenius_form(const Gf2Matrix& a);

/// True iff a and b have equal invariant-factor chains. Dimensions must
/// match.
bool is_similar(const Gf2Matrix& a, const Gf2Matrix& b);

struct SimilarityClass {
  std::vector<Gf2Poly> invariant_factors;  // ascending, divisibility chain
  Gf2Matrix representative;                // direct sum of companion blocks
};

/// One entry per similarity class of n x n matrices: every divisor chain of
/// monic polynomials with total degree n. Output order is deterministic
/// (chains compared elementwise by the polynomial ordering).
std::vector<SimilarityClass> enumerate_similarity_classes(int n);

}  // namespace nilclean
