#include "polystab/corpus.hpp"

#include "polystab/polymatroid.hpp"

namespace polystab::corpus {

namespace {

Monomial from_exps(std::vector<Exp> e) { return Monomial(std::move(e)); }

}  // namespace

MonomialIdeal triangle() {
  return MonomialIdeal::from_generators(
      3, {from_exps({1, 1, 0}), from_exps({1, 0, 1}), from_exps({0, 1, 1})});
}

MonomialIdeal height_one() {
  return MonomialIdeal::from_generators(
      3, {from_exps({3, 1, 1}), from_exps({2, 2, 1}), from_exps({3, 2, 0})});
}

MonomialIdeal squarefree_veronese_codegree_one(int vars) {
  return veronese_type(vars, static_cast<unsigned>(vars - 1),
                       std::vector<Exp>(static_cast<std::size_t>(vars), 1));
}

MonomialIdeal max_ideal_square(int vars) {
  return power(MonomialPrime::maximal(vars).to_ideal(), 2);
}

MonomialIdeal stability_gap_family(int vars) {
  if (vars < 4)
    throw PreconditionError("stability_gap_family: needs >= 4 variables");
  const int n = vars;
  std::vector<Monomial> gens;

  for (int j = 1; j < n; ++j) {  // 0-based: x_{j+1} is the dropped variable
    Monomial pj(n);              // product of {x2..xn} without x_{j+1}
    for (int v = 1; v < n; ++v)
      if (v != j) pj.set(v, 1);
    gens.push_back(pj.with_exponent(0, 1));  // x1 * P_j
    for (int k = 1; k < n; ++k) {
      if (k == j) continue;
      gens.push_back(pj.with_exponent(k, pj[k] + 1));  // x_k * P_j
    }
  }
  Monomial tail(n);  // x2 ... xn
  for (int v = 1; v < n; ++v) tail.set(v, 1);
  gens.push_back(tail);

  return MonomialIdeal::from_generators(n, std::move(gens));
}

MonomialIdeal prime_times_triangle() {
  const MonomialIdeal front = MonomialPrime(5, {0, 1}).to_ideal();
  const MonomialIdeal back = MonomialIdeal::from_generators(
      5, {from_exps({0, 0, 1, 1, 0}), from_exps({0, 0, 1, 0, 1}),
          from_exps({0, 0, 0, 1, 1})});
  return multiply(front, back);
}

}  // namespace polystab::corpus
