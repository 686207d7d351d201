#include "polystab/search.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "polystab/corpus.hpp"
#include "polystab/depth.hpp"
#include "polystab/polymatroid.hpp"
#include "polystab/stability.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polystab {

SearchSpace SearchSpace::exhaustive(int vars, unsigned degree, Exp cap) {
  SearchSpace s;
  s.vars = vars;
  s.degree = degree;
  s.caps.assign(static_cast<std::size_t>(vars), cap);
  return s;
}

SearchSpace SearchSpace::sampled(int vars, unsigned degree, Exp cap,
                                 std::uint64_t samples, std::uint64_t seed) {
  SearchSpace s = exhaustive(vars, degree, cap);
  s.mode = Mode::sampled;
  s.samples = samples;
  s.seed = seed;
  return s;
}

std::vector<Monomial> monomial_pool(const SearchSpace& space) {
  if (space.vars < 1)
    throw PreconditionError("search space: vars must be >= 1");
  if (space.caps.size() != static_cast<std::size_t>(space.vars))
    throw PreconditionError("search space: need one cap per variable");
  std::uint64_t total = 0;
  for (Exp c : space.caps) total += std::min<std::uint64_t>(c, space.degree);
  if (total < space.degree) return {};
  return veronese_type(space.vars, space.degree, space.caps).generators();
}

namespace {

std::vector<Monomial> subset_gens(const std::vector<Monomial>& pool,
                                  std::uint32_t mask) {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (mask & (1u << i)) gens.push_back(pool[i]);
  return gens;
}

void check_pool_limit(const std::vector<Monomial>& pool) {
  if (pool.size() > SearchSpace::kExhaustivePoolLimit)
    throw PreconditionError(
        "exhaustive mode: candidate pool exceeds " +
        std::to_string(SearchSpace::kExhaustivePoolLimit) + " monomials (" +
        std::to_string(pool.size()) + "); use sampled mode");
}

// Scan all nonempty subsets of the pool, collect the masks `keep` accepts,
// in ascending mask order.  The OpenMP and serial paths return identical
// results; the serial one is the reference the tests compare against.
template <typename Keep>
std::vector<std::uint32_t> scan_subsets(const std::vector<Monomial>& pool,
                                        bool parallel, const Keep& keep) {
  check_pool_limit(pool);
  const std::uint32_t end = static_cast<std::uint32_t>(1u << pool.size());
  std::vector<std::uint32_t> kept;

  if (!parallel) {
    for (std::uint32_t mask = 1; mask < end; ++mask)
      if (keep(mask)) kept.push_back(mask);
    return kept;
  }

#ifdef _OPENMP
  std::string error;
#pragma omp parallel
  {
    std::vector<std::uint32_t> local;
#pragma omp for schedule(dynamic, 256)
    for (std::int64_t mask = 1; mask < static_cast<std::int64_t>(end);
         ++mask) {
      try {
        if (keep(static_cast<std::uint32_t>(mask)))
          local.push_back(static_cast<std::uint32_t>(mask));
      } catch (const std::exception& e) {
#pragma omp critical
        if (error.empty()) error = e.what();
      }
    }
#pragma omp critical
    kept.insert(kept.end(), local.begin(), local.end());
  }
  if (!error.empty()) throw CrossCheckError("subset scan failed: " + error);
  std::sort(kept.begin(), kept.end());
  return kept;
#else
  for (std::uint32_t mask = 1; mask < end; ++mask)
    if (keep(mask)) kept.push_back(mask);
  return kept;
#endif
}

std::vector<MonomialIdeal> enumerate_matroidal_impl(int vars, unsigned degree,
                                                    bool parallel) {
  if (degree > static_cast<unsigned>(vars))
    throw PreconditionError("enumerate_matroidal: degree exceeds vars");
  SearchSpace space = SearchSpace::exhaustive(vars, degree, 1);
  space.squarefree = true;
  const std::vector<Monomial> pool = monomial_pool(space);

  std::vector<std::uint32_t> support_masks(pool.size(), 0);
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (int v = 0; v < vars; ++v)
      if (pool[i][v] != 0) support_masks[i] |= (1u << v);
  const std::uint32_t full = vars == 32 ? ~0u : (1u << vars) - 1;

  const auto keep = [&](std::uint32_t mask) {
    std::uint32_t support = 0;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (mask & (1u << i)) support |= support_masks[i];
    if (support != full) return false;
    return is_matroidal(
        MonomialIdeal::from_minimal(vars, subset_gens(pool, mask)));
  };

  std::vector<MonomialIdeal> out;
  for (std::uint32_t mask : scan_subsets(pool, parallel, keep))
    out.push_back(MonomialIdeal::from_minimal(vars, subset_gens(pool, mask)));
  return out;
}

}  // namespace

std::vector<MonomialIdeal> enumerate_matroidal(int vars, unsigned degree) {
  return enumerate_matroidal_impl(vars, degree, true);
}

std::vector<MonomialIdeal> enumerate_matroidal_serial(int vars,
                                                      unsigned degree) {
  return enumerate_matroidal_impl(vars, degree, false);
}

std::vector<MonomialIdeal> sample_polymatroidal(const SearchSpace& space) {
  const std::vector<Monomial> pool = monomial_pool(space);
  std::vector<MonomialIdeal> out;
  if (pool.empty()) return out;

  if (space.mode == SearchSpace::Mode::exhaustive) {
    const auto keep = [&](std::uint32_t mask) {
      return is_polymatroidal(
          MonomialIdeal::from_minimal(space.vars, subset_gens(pool, mask)));
    };
    for (std::uint32_t mask : scan_subsets(pool, true, keep))
      out.push_back(
          MonomialIdeal::from_minimal(space.vars, subset_gens(pool, mask)));
    return out;
  }

  // Documented sampling scheme: sizes uniform in 2..pool (1 if the pool is a
  // single monomial), subsets by partial Fisher-Yates, all randomness from
  // one mt19937_64 stream.
  std::mt19937_64 rng(space.seed);
  std::vector<std::size_t> indices(pool.size());
  for (std::uint64_t s = 0; s < space.samples; ++s) {
    const std::size_t size =
        pool.size() == 1
            ? 1
            : 2 + static_cast<std::size_t>(rng() % (pool.size() - 1));
    for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i;
    for (std::size_t i = 0; i < size; ++i) {
      const std::size_t j =
          i + static_cast<std::size_t>(rng() % (indices.size() - i));
      std::swap(indices[i], indices[j]);
    }
    std::vector<std::size_t> chosen(indices.begin(),
                                    indices.begin() +
                                        static_cast<std::ptrdiff_t>(size));
    std::sort(chosen.begin(), chosen.end());
    std::vector<Monomial> gens;
    gens.reserve(size);
    for (std::size_t i : chosen) gens.push_back(pool[i]);
    MonomialIdeal I = MonomialIdeal::from_minimal(space.vars, std::move(gens));
    if (is_polymatroidal(I)) out.push_back(std::move(I));
  }
  return out;
}

namespace {

// Re-derive both indices for a hit with the box oracle substituted for the
// default Ass route; throw on any disagreement.
void verify_hit(const MonomialIdeal& I, int astab_value, int dstab_value) {
  const int a_box = astab(I, AssEngine::box_oracle);
  if (a_box != astab_value)
    throw CrossCheckError("hunt: astab disagreement (default " +
                          std::to_string(astab_value) + ", box oracle " +
                          std::to_string(a_box) + ")");
  const int d_again = dstab(I);
  if (d_again != dstab_value)
    throw CrossCheckError("hunt: dstab recomputation disagreed");
  const int n = I.vars();
  const int spread = analytic_spread(I);
  if (spread == n) {
    // With the maximal ideal eventually associated, dstab is also the first
    // power where the box oracle sees the maximal ideal.
    MonomialIdeal Ik = I;
    int first = 0;
    for (int k = 1; k <= std::max(spread - 1, 1); ++k) {
      if (k > 1) Ik = multiply(Ik, I);
      if (box_oracle_ass(Ik).contains_maximal(n)) {
        first = k;
        break;
      }
    }
    if (first != dstab_value)
      throw CrossCheckError("hunt: dstab vs box-oracle first appearance of "
                            "the maximal ideal disagreed");
  }
}

HuntResult hunt_impl(const SearchSpace& space, bool parallel) {
  HuntResult result;

  std::vector<MonomialIdeal> candidates;
  if (space.squarefree) {
    const std::vector<Monomial> pool = monomial_pool(
        [&] {
          SearchSpace sf = space;
          sf.caps.assign(static_cast<std::size_t>(space.vars), 1);
          return sf;
        }());
    check_pool_limit(pool);
    result.candidates = (std::uint64_t{1} << pool.size()) - 1;
    candidates = enumerate_matroidal_impl(space.vars, space.degree, parallel);
  } else if (space.mode == SearchSpace::Mode::exhaustive) {
    const std::vector<Monomial> pool = monomial_pool(space);
    check_pool_limit(pool);
    result.candidates = pool.empty()
                            ? 0
                            : (std::uint64_t{1} << pool.size()) - 1;
    candidates = sample_polymatroidal(space);
  } else {
    result.candidates = space.samples;
    candidates = sample_polymatroidal(space);
    // The sampled stream may repeat; evaluate each ideal once.
    std::unordered_set<MonomialIdeal, MonomialIdealHash> seen;
    std::vector<MonomialIdeal> unique;
    for (MonomialIdeal& I : candidates)
      if (seen.insert(I).second) unique.push_back(std::move(I));
    candidates = std::move(unique);
  }
  result.polymatroidal = candidates.size();

  std::vector<char> is_hit(candidates.size(), 0);
  std::vector<int> a_vals(candidates.size(), 0), d_vals(candidates.size(), 0);
  std::string error;

  const auto evaluate = [&](std::size_t i) {
    const MonomialIdeal& I = candidates[i];
    const int a = astab(I);
    const int d = dstab(I);
    if (a != d) {
      verify_hit(I, a, d);
      is_hit[i] = 1;
      a_vals[i] = a;
      d_vals[i] = d;
    }
  };

  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(candidates.size());
         ++i) {
      try {
        evaluate(static_cast<std::size_t>(i));
      } catch (const std::exception& e) {
#pragma omp critical
        if (error.empty()) error = e.what();
      }
    }
#else
    for (std::size_t i = 0; i < candidates.size(); ++i) evaluate(i);
#endif
  } else {
    for (std::size_t i = 0; i < candidates.size(); ++i) evaluate(i);
  }
  if (!error.empty()) throw CrossCheckError(error);

  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (is_hit[i])
      result.hits.push_back(
          HuntHit{std::move(candidates[i]), a_vals[i], d_vals[i]});
  return result;
}

}  // namespace

HuntResult hunt(const SearchSpace& space) { return hunt_impl(space, true); }

HuntResult hunt_serial(const SearchSpace& space) {
  return hunt_impl(space, false);
}

namespace {

std::string ad_detail(const StabilityReport& rep) {
  return "astab=" + std::to_string(rep.astab) +
         " dstab=" + std::to_string(rep.dstab) +
         " height=" + std::to_string(rep.height) +
         " l=" + std::to_string(rep.spread);
}

}  // namespace

SuiteReport run_verification_suite() {
  SuiteReport report;
  const auto expect = [&report](std::string name, bool pass,
                                std::string detail) {
    report.items.push_back(SuiteItem{std::move(name), pass, std::move(detail)});
  };

  {
    const StabilityReport rep = full_report(corpus::height_one());
    expect("height-one ideal: astab = dstab = 2, height = 1",
           rep.astab == 2 && rep.dstab == 2 && rep.height == 1,
           ad_detail(rep));
  }
  {
    const StabilityReport rep =
        full_report(corpus::squarefree_veronese_codegree_one(4));
    expect("squarefree Veronese (4 vars, degree 3): astab = dstab = 3, "
           "height = 2, gcd = 1",
           rep.astab == 3 && rep.dstab == 3 && rep.height == 2 &&
               rep.cofactor.is_unit(),
           ad_detail(rep));
  }
  {
    const int d = depth_of_quotient(corpus::max_ideal_square(3));
    expect("square of the maximal ideal (3 vars): depth 0", d == 0,
           "depth=" + std::to_string(d));
  }
  {
    const MonomialIdeal t = corpus::triangle();
    bool sat_ok = true;
    for (int v = 0; v < 3; ++v)
      sat_ok = sat_ok && astab(saturate_var(t, v)) == 1;
    const int a = astab(t);
    expect("triangle: astab = 2 while every saturation has astab = 1",
           a == 2 && sat_ok, "astab=" + std::to_string(a));
  }
  for (int n = 4; n <= 6; ++n) {
    const StabilityReport rep = full_report(corpus::stability_gap_family(n));
    const bool pass = rep.dstab == 1 && rep.astab == n - 2 &&
                      !rep.flags.herzog_qureshi_equality;
    std::string name = "stability-gap family, " + std::to_string(n) +
                       " vars: dstab = 1, astab = " + std::to_string(n - 2);
    if (n == 4) name += " (the Herzog-Qureshi counterexample)";
    expect(std::move(name), pass, ad_detail(rep));
  }
  {
    const StabilityReport rep = full_report(corpus::prime_times_triangle());
    expect("prime times triangle (5 vars): astab = dstab = 2",
           rep.astab == 2 && rep.dstab == 2, ad_detail(rep));
  }

  {
    std::size_t count = 0;
    bool ok = true;
    std::string first_fail;
    for (int n = 2; n <= 5 && ok; ++n) {
      for (unsigned d = 1; d <= static_cast<unsigned>(n) && ok; ++d) {
        for (const MonomialIdeal& I : enumerate_matroidal(n, d)) {
          ++count;
          const auto checks = theorem_oracles(I);
          if (!oracles_ok(checks)) {
            ok = false;
            for (const OracleCheck& c : checks)
              if (c.status == OracleStatus::fail)
                first_fail = c.name + " failed (" + c.detail + ")";
            break;
          }
        }
      }
    }
    expect("theorem oracles over the exhaustive matroidal corpora (n <= 5)",
           ok,
           ok ? std::to_string(count) + " ideals, all oracles passed"
              : first_fail);
  }
  {
    bool ok = true;
    std::size_t count = 0;
    for (const MonomialIdeal& I : enumerate_matroidal(5, 3)) {
      if (!stats(I).gcd.is_unit()) continue;
      ++count;
      if (astab(I) == 1) ok = false;
    }
    expect("matroidal, 5 vars, degree 3, gcd 1: astab is never 1", ok,
           std::to_string(count) + " ideals checked");
  }
  {
    // Open-question probe: astab, dstab <= degree over the matroidal
    // corpora.  Violations would be findings, not errors.
    std::size_t violations = 0, count = 0;
    for (int n = 2; n <= 5; ++n) {
      for (unsigned d = 1; d <= static_cast<unsigned>(n); ++d) {
        for (const MonomialIdeal& I : enumerate_matroidal(n, d)) {
          ++count;
          const StabilityReport rep = full_report(I);
          if (rep.astab > static_cast<int>(d) ||
              rep.dstab > static_cast<int>(d))
            ++violations;
        }
      }
    }
    expect("degree-bound probe over matroidal corpora (finding)", true,
           std::to_string(violations) + " violations among " +
               std::to_string(count) + " ideals");
  }
  return report;
}

}  // namespace polystab
