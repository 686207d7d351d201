#pragma once

#include <span>
#include <vector>

#include "polystab/ideal.hpp"

namespace polystab {

/// Witness that I has linear quotients: an ordering of G(I) whose prefix
/// colons (u_1..u_{j-1}) : u_j are each generated by q_j variables.
struct LinearQuotientCertificate {
  enum class Ordering { revlex_descending, lex_descending };

  std::vector<Monomial> order;
  std::vector<int> q_values;  // q_2..q_t
  int q = 0;                  // max of q_values, 0 for a principal ideal
  Ordering ordering_used = Ordering::revlex_descending;
};

/// Sorts the generators in descending reverse-lexicographic order and
/// verifies every prefix colon is variable-generated.  Retries with
/// descending lexicographic order before giving up with ColonNotLinearError.
LinearQuotientCertificate linear_quotients(const MonomialIdeal& I);

/// q(I) from the verified certificate.
int quotient_statistic(const MonomialIdeal& I);

/// depth R/I = n - q(I) - 1.
int depth_of_quotient(const MonomialIdeal& I);

/// pd R/I = q(I) + 1.
int projective_dimension(const MonomialIdeal& I);

namespace detail {

/// q(I) for an equigenerated ideal assumed to have linear quotients in
/// descending revlex order (powers of a verified polymatroidal ideal).
/// Skips the per-step verification, which makes it O(m * n^3) instead of
/// O(m^2 * n); callers cross-check it against the certificate path at desk
/// scale.
int q_fast_equigenerated(std::span<const Monomial> gens, int vars);

/// Descending revlex sort used by both paths.
void sort_revlex_descending(std::vector<Monomial>& gens);

}  // namespace detail

}  // namespace polystab
