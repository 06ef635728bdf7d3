#pragma once

#include "nilclean/gf2_matrix.hpp"

namespace nilclean {

/// A claimed splitting target = p + q with p idempotent and q nilpotent of
/// index at most k. Build one through make_checked_decomposition to have the
/// three invariants machine-checked; verify_decomposition re-checks any
/// triple.
struct Decomposition {
  Gf2Matrix p;
  Gf2Matrix q;
  Gf2Matrix target;
  int k = 1;
};

/// True iff p + q = target, p^2 = p, and q^k = 0 (with k >= 1 and matching
/// dimensions).
bool verify_decomposition(const Decomposition& d);

/// Constructs a Decomposition and throws std::invalid_argument unless it
/// verifies.
Decomposition make_checked_decomposition(Gf2Matrix p, Gf2Matrix q,
                                         Gf2Matrix target, int k);

}  // namespace nilclean
