#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "polystab/errors.hpp"

namespace polystab {

/// Exponents are fixed-width unsigned integers.  Every operation that can
/// grow an exponent is overflow-checked, so all computations the suites run
/// (products of powers with exponents well past 64) stay exact.
using Exp = std::uint32_t;

/// A monomial in a fixed ambient variable count, stored as its exponent
/// vector.  Variable indices are 0-based internally; rendering is 1-based
/// (x1..xn).  The all-zero vector is the unit monomial.
class Monomial {
 public:
  explicit Monomial(int vars) : exps_(checked_size(vars), 0) {}
  explicit Monomial(std::vector<Exp> exps) : exps_(std::move(exps)) {
    if (exps_.empty()) throw PreconditionError("monomial needs >= 1 variable");
  }

  static Monomial unit(int vars) { return Monomial(vars); }
  static Monomial variable(int vars, int var, Exp e = 1) {
    Monomial m(vars);
    m.set(var, e);
    return m;
  }

  int vars() const { return static_cast<int>(exps_.size()); }
  Exp operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  void set(int i, Exp e) { exps_[static_cast<std::size_t>(i)] = e; }
  std::span<const Exp> exponents() const { return exps_; }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (Exp e : exps_) d += e;
    return d;
  }

  bool is_unit() const {
    for (Exp e : exps_)
      if (e != 0) return false;
    return true;
  }

  bool is_squarefree() const {
    for (Exp e : exps_)
      if (e > 1) return false;
    return true;
  }

  /// True when exactly one variable has a positive exponent.
  bool is_pure_power() const { return support_size() == 1; }

  int support_size() const {
    int s = 0;
    for (Exp e : exps_) s += (e != 0);
    return s;
  }

  std::vector<int> support() const {
    std::vector<int> s;
    for (int i = 0; i < vars(); ++i)
      if (exps_[static_cast<std::size_t>(i)] != 0) s.push_back(i);
    return s;
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  Monomial times(const Monomial& other) const {
    Monomial r(*this);
    constexpr Exp kMax = std::numeric_limits<Exp>::max();
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (other.exps_[i] > kMax - r.exps_[i])
        throw OverflowError("exponent overflow in monomial product");
      r.exps_[i] += other.exps_[i];
    }
    return r;
  }

  Monomial gcd(const Monomial& other) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i)
      r.exps_[i] = std::min(r.exps_[i], other.exps_[i]);
    return r;
  }

  Monomial lcm(const Monomial& other) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i)
      r.exps_[i] = std::max(r.exps_[i], other.exps_[i]);
    return r;
  }

  /// this / gcd(this, v): the generator-wise colon quotient.
  Monomial colon_by(const Monomial& v) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i)
      r.exps_[i] = r.exps_[i] > v.exps_[i] ? r.exps_[i] - v.exps_[i] : 0;
    return r;
  }

  /// Exact division; the divisor must divide this monomial.
  Monomial divide_by(const Monomial& v) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (v.exps_[i] > r.exps_[i])
        throw PreconditionError("divide_by: not divisible");
      r.exps_[i] -= v.exps_[i];
    }
    return r;
  }

  Monomial with_exponent(int var, Exp e) const {
    Monomial r(*this);
    r.set(var, e);
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  static std::size_t checked_size(int vars) {
    if (vars < 1) throw PreconditionError("monomial needs >= 1 variable");
    return static_cast<std::size_t>(vars);
  }

  std::vector<Exp> exps_;
};

/// Lexicographic order on exponent vectors (x1 weighs heaviest).
inline bool lex_greater(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.vars(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

/// Reverse-lexicographic order: a > b iff the last nonzero entry of the
/// difference a - b is negative.
inline bool revlex_greater(const Monomial& a, const Monomial& b) {
  for (int i = a.vars() - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t h = 14695981039346656037ULL;
    for (Exp e : m.exponents()) {
      h ^= e;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace polystab
