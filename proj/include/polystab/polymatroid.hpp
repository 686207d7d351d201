#pragma once

#include <utility>
#include <vector>

#include "polystab/ideal.hpp"
#include "polystab/prime.hpp"

namespace polystab {

/// Linear relation graph: vertices are the variables that occur in a
/// relation x_i * u_k = x_j * u_l between generators, edges those pairs.
struct RelationGraph {
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted
  int r = 0;  // |vertices|
  int s = 0;  // connected components over the listed vertices
};

/// Equigenerated and closed under the symmetric exchange:
/// whenever deg_i(u) > deg_i(v) there is j with deg_j(u) < deg_j(v) and
/// x_j * u / x_i in the ideal.  Non-equigenerated ideals return false.
bool is_polymatroidal(const MonomialIdeal& I);

/// Polymatroidal with squarefree generators.
bool is_matroidal(const MonomialIdeal& I);

/// Exchange with the swapped monomial landing in G(I) for every admissible
/// pair (i, j).
bool has_strong_exchange(const MonomialIdeal& I);

/// All degree-d monomials with exponent of x_j capped at caps[j].  A cap of
/// zero excludes the variable.  Throws when the caps cannot reach degree d.
MonomialIdeal veronese_type(int vars, unsigned degree,
                            const std::vector<Exp>& caps);

/// Product of monomial prime ideals.
MonomialIdeal transversal(const std::vector<MonomialPrime>& primes);

RelationGraph relation_graph(const MonomialIdeal& I);

/// r - s + 1 from the relation graph (1 for the empty graph).  Only defined
/// for polymatroidal ideals; rejects other input.
int analytic_spread(const MonomialIdeal& I);

}  // namespace polystab
