#include "polystab/depth.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace polystab {

namespace {

// One ordered pass: for each j, compute the prefix colon's variable set and
// verify every colon generator is divisible by one of those variables.
// Returns false (with *bad_step set) when a prefix colon is not linear.
bool try_order(const std::vector<Monomial>& order, int n,
               std::vector<int>& q_values, std::size_t* bad_step) {
  q_values.clear();
  for (std::size_t j = 1; j < order.size(); ++j) {
    const Monomial& uj = order[j];
    std::vector<bool> in_colon(static_cast<std::size_t>(n), false);
    // x_i lies in the colon iff some earlier generator divides x_i * u_j,
    // i.e. some quotient u_k / gcd(u_k, u_j) equals x_i.
    for (std::size_t k = 0; k < j; ++k) {
      std::uint64_t excess = 0;
      int var = -1;
      for (int v = 0; v < n; ++v) {
        if (order[k][v] > uj[v]) {
          excess += order[k][v] - uj[v];
          var = v;
          if (excess > 1) break;
        }
      }
      if (excess == 1) in_colon[static_cast<std::size_t>(var)] = true;
    }
    // Every quotient must be a multiple of a colon variable.
    for (std::size_t k = 0; k < j; ++k) {
      bool covered = false;
      for (int v = 0; v < n; ++v) {
        if (in_colon[static_cast<std::size_t>(v)] && order[k][v] > uj[v]) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        *bad_step = j;
        return false;
      }
    }
    int qj = 0;
    for (int v = 0; v < n; ++v) qj += in_colon[static_cast<std::size_t>(v)];
    q_values.push_back(qj);
  }
  return true;
}

}  // namespace

namespace detail {

void sort_revlex_descending(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), revlex_greater);
}

int q_fast_equigenerated(std::span<const Monomial> gens, int vars) {
  std::unordered_set<Monomial, MonomialHash> prefix;
  prefix.reserve(gens.size());
  int q = 0;
  Monomial key(vars);
  for (const Monomial& u : gens) {
    int qj = 0;
    // x_i is in the prefix colon iff u + e_i - e_l is an earlier generator
    // for some l in supp(u) (same-degree quotients leave no other shape).
    for (int i = 0; i < vars; ++i) {
      bool hit = false;
      for (int l = 0; l < vars && !hit; ++l) {
        if (l == i || u[l] == 0) continue;
        key = u;
        key.set(i, u[i] + 1);
        key.set(l, u[l] - 1);
        hit = prefix.count(key) != 0;
      }
      qj += hit;
    }
    q = std::max(q, qj);
    prefix.insert(u);
  }
  return q;
}

}  // namespace detail

LinearQuotientCertificate linear_quotients(const MonomialIdeal& I) {
  if (!I.is_proper())
    throw PreconditionError("linear_quotients: unit ideal rejected");
  const int n = I.vars();

  LinearQuotientCertificate cert;
  cert.order = I.generators();
  if (cert.order.size() == 1) {
    cert.q = 0;
    return cert;
  }

  std::size_t bad_step = 0;
  detail::sort_revlex_descending(cert.order);
  if (try_order(cert.order, n, cert.q_values, &bad_step)) {
    cert.ordering_used = LinearQuotientCertificate::Ordering::revlex_descending;
    cert.q = *std::max_element(cert.q_values.begin(), cert.q_values.end());
    return cert;
  }

  // The reverse-lex convention is ambiguous in the literature; descending
  // lex is the one fallback tried before reporting failure.
  std::sort(cert.order.begin(), cert.order.end(), lex_greater);
  if (try_order(cert.order, n, cert.q_values, &bad_step)) {
    cert.ordering_used = LinearQuotientCertificate::Ordering::lex_descending;
    cert.q = *std::max_element(cert.q_values.begin(), cert.q_values.end());
    return cert;
  }

  throw ColonNotLinearError(
      "no linear quotients under the revlex or lex descending orders (step " +
      std::to_string(bad_step + 1) + " has a non-linear colon)");
}

int quotient_statistic(const MonomialIdeal& I) { return linear_quotients(I).q; }

int depth_of_quotient(const MonomialIdeal& I) {
  return I.vars() - quotient_statistic(I) - 1;
}

int projective_dimension(const MonomialIdeal& I) {
  return quotient_statistic(I) + 1;
}

}  // namespace polystab
