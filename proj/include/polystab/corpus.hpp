#pragma once

#include "polystab/ideal.hpp"

namespace polystab {

/// Bundled ideals the verification suite and the tests revolve around.
namespace corpus {

/// (x1x2, x1x3, x2x3) in three variables.
MonomialIdeal triangle();

/// (x1^3 x2 x3, x1^2 x2^2 x3, x1^3 x2^2): height 1, both stability indices 2.
MonomialIdeal height_one();

/// The squarefree Veronese ideal of degree n-1 in n variables.
MonomialIdeal squarefree_veronese_codegree_one(int vars);

/// (x1, ..., xn)^2.
MonomialIdeal max_ideal_square(int vars);

/// The degree-(n-1) polymatroidal family with dstab = 1 and astab = n - 2,
/// built from its block generator list: for every j >= 2 let
/// P_j = prod of {x2..xn} minus x_j; the generators are x1 * P_j, all
/// x_k * P_j for k != 1, j, and x2 ... xn.  n = 4 is the Herzog-Qureshi
/// counterexample.
MonomialIdeal stability_gap_family(int vars);

/// (x1, x2) * (x3x4, x3x5, x4x5) in five variables.
MonomialIdeal prime_times_triangle();

}  // namespace corpus

}  // namespace polystab
