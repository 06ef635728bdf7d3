#include "nilclean/decomposition.hpp"

#include <stdexcept>

namespace nilclean {

bool verify_decomposition(const Decomposition& d) {
  if (d.k < 1) return false;
  if (d.p.dim() != d.target.dim() || d.q.dim() != d.target.dim()) return false;
  if (d.p + d.q != d.target) return false;
  if (!d.p.is_idempotent()) return false;
  return d.q.is_nilpotent_index(d.k);
}

Decomposition make_checked_decomposition(Gf2Matrix p, Gf2Matrix q,
                                         Gf2Matrix target, int k) {
  Decomposition d{std::move(p), std::move(q), std::move(target), k};
  if (!verify_decomposition(d))
    throw std::invalid_argument("decomposition invariants violated");
  return d;
}

}  // namespace nilclean
