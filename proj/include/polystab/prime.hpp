#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <vector>

#include "polystab/ideal.hpp"

namespace polystab {

/// A monomial prime ideal: a nonempty subset of the ambient variables.
/// members = {0..n-1} encodes the maximal ideal.
class MonomialPrime {
 public:
  MonomialPrime(int vars, std::vector<int> members)
      : vars_(vars), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()),
                   members_.end());
    if (members_.empty())
      throw PreconditionError("monomial prime needs >= 1 variable");
    if (members_.front() < 0 || members_.back() >= vars_)
      throw PreconditionError("prime member outside ambient range");
  }

  static MonomialPrime maximal(int vars) {
    std::vector<int> all(static_cast<std::size_t>(vars));
    for (int i = 0; i < vars; ++i) all[static_cast<std::size_t>(i)] = i;
    return MonomialPrime(vars, std::move(all));
  }

  /// Build from a variable bitmask (requires vars <= 32).
  static MonomialPrime from_mask(int vars, std::uint32_t mask) {
    std::vector<int> members;
    for (int i = 0; i < vars; ++i)
      if (mask & (1u << i)) members.push_back(i);
    return MonomialPrime(vars, std::move(members));
  }

  int vars() const { return vars_; }
  const std::vector<int>& members() const { return members_; }
  int height() const { return static_cast<int>(members_.size()); }
  bool is_maximal() const { return height() == vars_; }

  bool contains_var(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }

  std::uint32_t mask() const {
    std::uint32_t m = 0;
    for (int v : members_) m |= (1u << v);
    return m;
  }

  MonomialIdeal to_ideal() const {
    std::vector<Monomial> gens;
    gens.reserve(members_.size());
    for (int v : members_) gens.push_back(Monomial::variable(vars_, v));
    return MonomialIdeal::from_minimal(vars_, std::move(gens));
  }

  /// Canonical order: by height, then by member list.
  friend std::strong_ordering operator<=>(const MonomialPrime& a,
                                          const MonomialPrime& b) {
    if (auto c = a.height() <=> b.height(); c != 0) return c;
    return a.members_ <=> b.members_;
  }
  friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;

 private:
  int vars_;
  std::vector<int> members_;
};

/// A deduplicated, canonically ordered set of monomial primes.
class AssSet {
 public:
  AssSet() = default;
  explicit AssSet(std::vector<MonomialPrime> primes)
      : primes_(std::move(primes)) {
    normalize();
  }

  void insert(MonomialPrime p) {
    auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    if (it == primes_.end() || *it != p) primes_.insert(it, std::move(p));
  }

  bool contains(const MonomialPrime& p) const {
    return std::binary_search(primes_.begin(), primes_.end(), p);
  }

  bool contains_maximal(int vars) const {
    return !primes_.empty() && primes_.back().height() == vars;
  }

  bool subset_of(const AssSet& other) const {
    return std::includes(other.primes_.begin(), other.primes_.end(),
                         primes_.begin(), primes_.end());
  }

  AssSet united(const AssSet& other) const {
    AssSet r = *this;
    for (const auto& p : other.primes_) r.insert(p);
    return r;
  }

  AssSet without(const MonomialPrime& p) const {
    AssSet r = *this;
    auto it = std::lower_bound(r.primes_.begin(), r.primes_.end(), p);
    if (it != r.primes_.end() && *it == p) r.primes_.erase(it);
    return r;
  }

  const std::vector<MonomialPrime>& primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }
  bool empty() const { return primes_.empty(); }
  auto begin() const { return primes_.begin(); }
  auto end() const { return primes_.end(); }

  friend bool operator==(const AssSet&, const AssSet&) = default;

 private:
  void normalize() {
    std::sort(primes_.begin(), primes_.end());
    primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
  }

  std::vector<MonomialPrime> primes_;
};

}  // namespace polystab
