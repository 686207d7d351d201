#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polystab/ideal.hpp"

namespace polystab {

/// A pool of candidate generators plus a traversal strategy.
struct SearchSpace {
  int vars = 0;
  unsigned degree = 1;
  std::vector<Exp> caps;   // one per variable
  bool squarefree = false; // matroidal mode: squarefree pool, full support

  enum class Mode { exhaustive, sampled };
  Mode mode = Mode::exhaustive;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  /// Exhaustive mode enumerates all subsets; refuse pools past this size.
  static constexpr std::size_t kExhaustivePoolLimit = 24;

  static SearchSpace exhaustive(int vars, unsigned degree, Exp cap);
  static SearchSpace sampled(int vars, unsigned degree, Exp cap,
                             std::uint64_t samples, std::uint64_t seed);
};

/// All degree-d monomials under the caps, in descending lex order.
std::vector<Monomial> monomial_pool(const SearchSpace& space);

/// Every full-supported matroidal ideal generated by degree-d squarefree
/// monomials, in deterministic (ascending subset mask) order.
std::vector<MonomialIdeal> enumerate_matroidal(int vars, unsigned degree);
std::vector<MonomialIdeal> enumerate_matroidal_serial(int vars,
                                                      unsigned degree);

/// Exhaustive mode: every polymatroidal subset of the pool, in mask order.
/// Sampled mode: `samples` draws of a random subset (size uniform in
/// 2..pool, then a uniform subset of that size, both from a seeded
/// mt19937_64 as documented in the README), filtered by is_polymatroidal;
/// the stream is reproducible from the seed and may repeat ideals.
std::vector<MonomialIdeal> sample_polymatroidal(const SearchSpace& space);

struct HuntHit {
  MonomialIdeal ideal;
  int astab = 0;
  int dstab = 0;
};

struct HuntResult {
  std::vector<HuntHit> hits;
  std::uint64_t candidates = 0;     // subsets examined
  std::uint64_t polymatroidal = 0;  // candidates passing the filter
};

/// Scans the space for polymatroidal ideals with astab != dstab.  Every hit
/// is re-verified with the box-oracle Ass route substituted for the default
/// one; any disagreement raises CrossCheckError.
HuntResult hunt(const SearchSpace& space);
HuntResult hunt_serial(const SearchSpace& space);

struct SuiteItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::vector<SuiteItem> items;
  bool all_pass() const {
    for (const SuiteItem& i : items)
      if (!i.pass) return false;
    return true;
  }
};

/// The bundled verification suite: the fixture ideals with their published
/// invariants, plus every theorem oracle over the exhaustive matroidal
/// corpora with up to five variables.
SuiteReport run_verification_suite();

}  // namespace polystab
