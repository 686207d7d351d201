#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "polystab/ideal.hpp"
#include "polystab/prime.hpp"

namespace polystab {

/// An irreducible monomial ideal (x_i^{e_i} : i in S), e_i >= 1.
struct IrreducibleComponent {
  int vars = 0;
  std::vector<std::pair<int, Exp>> entries;  // sorted by variable index

  MonomialPrime radical() const {
    std::vector<int> members;
    members.reserve(entries.size());
    for (const auto& [v, e] : entries) members.push_back(v);
    return MonomialPrime(vars, std::move(members));
  }

  MonomialIdeal to_ideal() const {
    std::vector<Monomial> gens;
    gens.reserve(entries.size());
    for (const auto& [v, e] : entries)
      gens.push_back(Monomial::variable(vars, v, e));
    return MonomialIdeal::from_generators(vars, std::move(gens));
  }

  bool contains(const Monomial& m) const {
    for (const auto& [v, e] : entries)
      if (m[v] >= e) return true;
    return false;
  }

  friend bool operator==(const IrreducibleComponent&,
                         const IrreducibleComponent&) = default;
  friend bool operator<(const IrreducibleComponent& a,
                        const IrreducibleComponent& b) {
    return a.entries < b.entries;
  }
};

/// Irredundant irreducible decomposition by generator splitting: a generator
/// g = a*b with coprime nontrivial a, b splits I into (I+(a)) ∩ (I+(b)).
/// Splits are explored with memoization on the minimalized subideals; the
/// final pass removes redundant components.  Rejects the unit ideal.
std::vector<IrreducibleComponent> irreducible_decomposition(
    const MonomialIdeal& I);

/// Radicals of the irredundant irreducible decomposition.
AssSet associated_primes(const MonomialIdeal& I);

/// Independent brute-force oracle: scan every monomial m in the box bounded
/// by the componentwise maximal generator exponents; whenever m lies outside
/// I and (I : m) is generated by variables, collect that prime.
AssSet box_oracle_ass(const MonomialIdeal& I);
AssSet box_oracle_ass_serial(const MonomialIdeal& I);

/// Number of cells the box oracle would scan.
std::uint64_t box_cell_count(const MonomialIdeal& I);

/// Minimal primes as minimal transversals of the generator supports.
AssSet minimal_primes(const MonomialIdeal& I);

int height(const MonomialIdeal& I);

/// Whether the maximal ideal is associated.  Uses the socle criterion
/// (I : m) != I; the decomposition-backed variant is kept for cross-checks.
bool max_ideal_associated(const MonomialIdeal& I);
bool max_ideal_associated_via_decomposition(const MonomialIdeal& I);

}  // namespace polystab
