#include "polystab/ideal.hpp"

#include <algorithm>
#include <unordered_set>

namespace polystab {

namespace {

void check_ambient(int vars, const std::vector<Monomial>& gens) {
  for (const Monomial& g : gens)
    if (g.vars() != vars)
      throw PreconditionError("generator ambient mismatch");
}

bool all_same_degree(const std::vector<Monomial>& gens) {
  const std::uint64_t d = gens.front().total_degree();
  for (const Monomial& g : gens)
    if (g.total_degree() != d) return false;
  return true;
}

}  // namespace

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  if (gens.empty())
    throw PreconditionError("minimalize: empty generating set");
  check_ambient(gens.front().vars(), gens);

  // Monomials of one common degree form an antichain automatically, so
  // minimalization degenerates to deduplication.  This is the hot path for
  // powers of equigenerated ideals.
  if (all_same_degree(gens)) {
    std::sort(gens.begin(), gens.end(), lex_greater);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return gens;
  }

  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return lex_greater(a, b);
  });
  std::vector<Monomial> kept;
  for (Monomial& m : gens) {
    bool divisible = false;
    for (const Monomial& k : kept) {
      if (k.divides(m)) {
        divisible = true;
        break;
      }
    }
    if (!divisible) kept.push_back(std::move(m));
  }
  std::sort(kept.begin(), kept.end(), lex_greater);
  return kept;
}

MonomialIdeal MonomialIdeal::from_generators(int vars,
                                             std::vector<Monomial> gens) {
  if (vars < 1) throw PreconditionError("ambient variable count must be >= 1");
  if (gens.empty())
    throw PreconditionError("a monomial ideal needs >= 1 generator");
  check_ambient(vars, gens);
  return MonomialIdeal(vars, minimalize(std::move(gens)));
}

MonomialIdeal MonomialIdeal::from_minimal(int vars,
                                          std::vector<Monomial> gens) {
  if (vars < 1) throw PreconditionError("ambient variable count must be >= 1");
  if (gens.empty())
    throw PreconditionError("a monomial ideal needs >= 1 generator");
  return MonomialIdeal(vars, std::move(gens));
}

MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.vars() != J.vars())
    throw PreconditionError("multiply: ambient mismatch");
  if (I.is_unit()) return J;
  if (J.is_unit()) return I;

  const auto& gi = I.generators();
  const auto& gj = J.generators();
  const bool equi = all_same_degree(gi) && all_same_degree(gj);
  if (equi) {
    std::unordered_set<Monomial, MonomialHash> seen;
    seen.reserve(gi.size() * gj.size());
    for (const Monomial& a : gi)
      for (const Monomial& b : gj) seen.insert(a.times(b));
    std::vector<Monomial> prods(seen.begin(), seen.end());
    std::sort(prods.begin(), prods.end(), lex_greater);
    return MonomialIdeal::from_minimal(I.vars(), std::move(prods));
  }

  std::vector<Monomial> prods;
  prods.reserve(gi.size() * gj.size());
  for (const Monomial& a : gi)
    for (const Monomial& b : gj) prods.push_back(a.times(b));
  return MonomialIdeal::from_minimal(I.vars(), minimalize(std::move(prods)));
}

MonomialIdeal power(const MonomialIdeal& I, unsigned k) {
  if (k == 0) return MonomialIdeal::unit_ideal(I.vars());
  MonomialIdeal acc = I;
  for (unsigned i = 1; i < k; ++i) acc = multiply(acc, I);
  return acc;
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& u) {
  if (I.vars() != u.vars()) throw PreconditionError("colon: ambient mismatch");
  std::vector<Monomial> quotients;
  quotients.reserve(I.size());
  for (const Monomial& g : I.generators()) quotients.push_back(g.colon_by(u));
  return MonomialIdeal::from_minimal(I.vars(),
                                     minimalize(std::move(quotients)));
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.vars() != J.vars()) throw PreconditionError("colon: ambient mismatch");
  const auto& gens = J.generators();
  MonomialIdeal acc = colon(I, gens.front());
  for (std::size_t i = 1; i < gens.size(); ++i)
    acc = intersect(acc, colon(I, gens[i]));
  return acc;
}

MonomialIdeal saturate_var(const MonomialIdeal& I, int var) {
  if (var < 0 || var >= I.vars())
    throw PreconditionError("saturate_var: variable out of range");
  std::vector<Monomial> gens;
  gens.reserve(I.size());
  for (const Monomial& g : I.generators())
    gens.push_back(g.with_exponent(var, 0));
  return MonomialIdeal::from_minimal(I.vars(), minimalize(std::move(gens)));
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.vars() != J.vars())
    throw PreconditionError("intersect: ambient mismatch");
  if (I.is_unit()) return J;
  if (J.is_unit()) return I;
  std::vector<Monomial> lcms;
  lcms.reserve(I.size() * J.size());
  for (const Monomial& a : I.generators())
    for (const Monomial& b : J.generators()) lcms.push_back(a.lcm(b));
  return MonomialIdeal::from_minimal(I.vars(), minimalize(std::move(lcms)));
}

IdealStats stats(const MonomialIdeal& I) {
  IdealStats s{.support = {},
               .gcd = I.generators().front(),
               .equigenerated = true,
               .degree = {},
               .squarefree = true,
               .full_supported = false};
  const std::uint64_t d0 = I.generators().front().total_degree();
  std::vector<bool> used(static_cast<std::size_t>(I.vars()), false);
  for (const Monomial& g : I.generators()) {
    s.gcd = s.gcd.gcd(g);
    if (g.total_degree() != d0) s.equigenerated = false;
    if (!g.is_squarefree()) s.squarefree = false;
    for (int i = 0; i < I.vars(); ++i)
      if (g[i] != 0) used[static_cast<std::size_t>(i)] = true;
  }
  for (int i = 0; i < I.vars(); ++i)
    if (used[static_cast<std::size_t>(i)]) s.support.push_back(i);
  if (s.equigenerated) s.degree = d0;
  s.full_supported = static_cast<int>(s.support.size()) == I.vars();
  return s;
}

StripResult strip(const MonomialIdeal& I) {
  Monomial g = I.generators().front();
  for (const Monomial& m : I.generators()) g = g.gcd(m);
  std::vector<Monomial> core;
  core.reserve(I.size());
  for (const Monomial& m : I.generators()) core.push_back(m.divide_by(g));
  return StripResult{
      MonomialIdeal::from_minimal(I.vars(), minimalize(std::move(core))),
      std::move(g)};
}

}  // namespace polystab
