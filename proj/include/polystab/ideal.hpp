#pragma once

#include <optional>
#include <vector>

#include "polystab/monomial.hpp"

namespace polystab {

/// A monomial ideal, represented by its unique minimal generating set.
/// Generators are kept as a divisibility antichain in descending
/// lexicographic order, so equality of ideals is equality of the stored
/// vectors and all rendering is deterministic.
///
/// The zero ideal is not representable; the unit ideal is (G = {1}).
class MonomialIdeal {
 public:
  /// Minimalizes the given set.  Throws on an empty set or mixed ambients.
  static MonomialIdeal from_generators(int vars, std::vector<Monomial> gens);

  /// Trusted constructor for generators already known to be an antichain in
  /// canonical order (hot paths: equigenerated products, constructors).
  static MonomialIdeal from_minimal(int vars, std::vector<Monomial> gens);

  static MonomialIdeal unit_ideal(int vars) {
    return from_minimal(vars, {Monomial::unit(vars)});
  }
  static MonomialIdeal principal(Monomial u) {
    int n = u.vars();
    return from_minimal(n, {std::move(u)});
  }

  int vars() const { return vars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }
  bool is_proper() const { return !is_unit(); }
  bool is_principal() const { return gens_.size() == 1; }

  bool contains(const Monomial& m) const {
    for (const Monomial& g : gens_)
      if (g.divides(m)) return true;
    return false;
  }

  /// Superset test: every generator of other lies in this ideal.
  bool contains(const MonomialIdeal& other) const {
    for (const Monomial& g : other.gens_)
      if (!contains(g)) return false;
    return true;
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  MonomialIdeal(int vars, std::vector<Monomial> gens)
      : vars_(vars), gens_(std::move(gens)) {}

  int vars_;
  std::vector<Monomial> gens_;
};

struct MonomialIdealHash {
  std::size_t operator()(const MonomialIdeal& I) const {
    MonomialHash h;
    std::uint64_t acc = 0x9e3779b97f4a7c15ULL;
    for (const Monomial& g : I.generators())
      acc = acc * 1099511628211ULL + h(g);
    return static_cast<std::size_t>(acc);
  }
};

/// Reduces a generating set to the divisibility antichain generating the
/// same ideal, in canonical (descending lex) order.  Idempotent and
/// independent of the input order.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J);

/// power(I, 0) is the unit ideal by convention.
MonomialIdeal power(const MonomialIdeal& I, unsigned k);

/// (I : u), computed generator-wise.
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& u);

/// (I : J) = intersection of (I : w) over the generators w of J.
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);

/// I[var] = (I : x_var^infinity): zero the exponent of x_var in every
/// generator, then minimalize.
MonomialIdeal saturate_var(const MonomialIdeal& I, int var);

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

struct IdealStats {
  std::vector<int> support;
  Monomial gcd;
  bool equigenerated = false;
  std::optional<std::uint64_t> degree;  // present iff equigenerated
  bool squarefree = false;
  bool full_supported = false;
};

IdealStats stats(const MonomialIdeal& I);

struct StripResult {
  MonomialIdeal core;  // gcd(core) = 1
  Monomial cofactor;   // gcd(I); I = cofactor * core
};

/// Factor out gcd(I): I = cofactor * core with gcd(core) = 1.
StripResult strip(const MonomialIdeal& I);

}  // namespace polystab
