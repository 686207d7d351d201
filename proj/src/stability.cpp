#include "polystab/stability.hpp"

#include <algorithm>
#include <unordered_set>

#include "polystab/depth.hpp"
#include "polystab/polymatroid.hpp"

namespace polystab {

namespace {

constexpr std::size_t kCertificatePathLimit = 1500;

void require_proper(const MonomialIdeal& I, const char* op) {
  if (!I.is_proper())
    throw PreconditionError(std::string(op) + ": unit ideal rejected");
}

void require_polymatroidal(const MonomialIdeal& I, const char* op) {
  require_proper(I, op);
  if (!is_polymatroidal(I))
    throw PreconditionError(std::string(op) +
                            ": input is not polymatroidal; use the raw "
                            "profile operations instead");
}

// Whether the subset's maximal ideal is associated to the equigenerated
// ideal generated by `gens` inside the subring on `mask`.  Ideals with a
// linear resolution have socle witnesses exactly in degree D - 1, and every
// witness times a variable must land on a generator, so candidates are the
// g / x_i and membership is a hash lookup.
bool socle_witness(const std::vector<Monomial>& gens, std::uint32_t mask,
                   int n) {
  std::unordered_set<Monomial, MonomialHash> gset(gens.begin(), gens.end());
  std::unordered_set<Monomial, MonomialHash> tried;
  Monomial w(n), probe(n);
  for (const Monomial& g : gens) {
    for (int i = 0; i < n; ++i) {
      if ((mask & (1u << i)) == 0 || g[i] == 0) continue;
      w = g;
      w.set(i, g[i] - 1);
      if (!tried.insert(w).second) continue;
      bool all = true;
      for (int j = 0; j < n && all; ++j) {
        if ((mask & (1u << j)) == 0) continue;
        probe = w;
        probe.set(j, w[j] + 1);
        all = gset.count(probe) != 0;
      }
      if (all) return true;
    }
  }
  return false;
}

// Zero the exponents outside `mask` and minimalize.
std::vector<Monomial> localize_gens(const MonomialIdeal& I,
                                    std::uint32_t mask) {
  std::vector<Monomial> gens;
  gens.reserve(I.size());
  for (const Monomial& g : I.generators()) {
    Monomial m = g;
    for (int v = 0; v < I.vars(); ++v)
      if ((mask & (1u << v)) == 0) m.set(v, 0);
    gens.push_back(std::move(m));
  }
  return minimalize(std::move(gens));
}

// For every nonempty variable subset, the least power 1..k_max at which the
// subset's prime is associated (0 when it never is within the horizon).
// Rests on the localization identity Ass(I^t) \ {m} = U_i Ass(I[i]^t) pushed
// all the way down, and on persistence of polymatroidal ideals.
std::vector<int> first_hit_table(const MonomialIdeal& I, int k_max) {
  const int n = I.vars();
  if (n > 24)
    throw PreconditionError("localized engine: ambient too large (> 24)");
  std::vector<int> hit(std::size_t{1} << n, 0);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<Monomial> gens = localize_gens(I, mask);
    if (gens.size() == 1 && gens[0].is_unit()) continue;
    {
      const std::uint64_t d0 = gens.front().total_degree();
      for (const Monomial& g : gens)
        if (g.total_degree() != d0)
          throw CrossCheckError(
              "localization of a polymatroidal ideal is not equigenerated");
    }
    const MonomialIdeal J = MonomialIdeal::from_minimal(n, std::move(gens));
    MonomialIdeal M = J;
    for (int t = 1; t <= k_max; ++t) {
      if (t > 1) M = multiply(M, J);
      if (socle_witness(M.generators(), mask, n)) {
        hit[mask] = t;
        break;
      }
    }
  }
  return hit;
}

AssSet table_level(const std::vector<int>& hit, int n, int k) {
  std::vector<MonomialPrime> primes;
  for (std::uint32_t mask = 1; mask < hit.size(); ++mask)
    if (hit[mask] != 0 && hit[mask] <= k)
      primes.push_back(MonomialPrime::from_mask(n, mask));
  return AssSet(std::move(primes));
}

std::vector<AssSet> ass_profile_upto(const MonomialIdeal& I, int k_max,
                                     AssEngine engine) {
  std::vector<AssSet> profile;
  profile.reserve(static_cast<std::size_t>(k_max));
  if (engine == AssEngine::localized) {
    const std::vector<int> hit = first_hit_table(I, k_max);
    for (int k = 1; k <= k_max; ++k)
      profile.push_back(table_level(hit, I.vars(), k));
    return profile;
  }
  MonomialIdeal Ik = I;
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1) Ik = multiply(Ik, I);
    profile.push_back(engine == AssEngine::decomposition
                          ? associated_primes(Ik)
                          : box_oracle_ass(Ik));
  }
  return profile;
}

int astab_from_profile(const std::vector<AssSet>& profile) {
  const AssSet& stable = profile.back();
  for (std::size_t k = 0; k < profile.size(); ++k)
    if (profile[k] == stable) return static_cast<int>(k) + 1;
  return static_cast<int>(profile.size());
}

// depth R/J for a power of a verified polymatroidal ideal: the certificate
// path at desk scale, the unverified revlex q beyond it.
int depth_of_polymatroidal_power(const MonomialIdeal& J) {
  if (J.size() <= kCertificatePathLimit) return depth_of_quotient(J);
  std::vector<Monomial> gens = J.generators();
  detail::sort_revlex_descending(gens);
  return J.vars() - detail::q_fast_equigenerated(gens, J.vars()) - 1;
}

void check_spread_consistency(const MonomialIdeal& I, int spread,
                              bool max_in_stable) {
  if ((spread == I.vars()) != max_in_stable)
    throw CrossCheckError(
        "spread/stable-set mismatch: l(I) = n must hold exactly when the "
        "maximal ideal is eventually associated");
}

}  // namespace

AssSet ass_of_power(const MonomialIdeal& I, int k, AssEngine engine) {
  require_proper(I, "ass_of_power");
  if (k < 1) throw PreconditionError("ass_of_power: power must be >= 1");
  if (engine == AssEngine::localized) {
    require_polymatroidal(I, "ass_of_power(localized)");
    return table_level(first_hit_table(I, k), I.vars(), k);
  }
  const MonomialIdeal Ik = power(I, static_cast<unsigned>(k));
  return engine == AssEngine::decomposition ? associated_primes(Ik)
                                            : box_oracle_ass(Ik);
}

PowerProfiles profiles(const MonomialIdeal& I, int k_max, AssEngine engine) {
  require_proper(I, "profiles");
  if (k_max < 1) throw PreconditionError("profiles: k_max must be >= 1");
  const bool poly = is_polymatroidal(I);
  if (engine == AssEngine::localized && !poly)
    throw PreconditionError(
        "profiles: the localized engine needs polymatroidal input");

  PowerProfiles out;
  out.ass = ass_profile_upto(I, k_max, engine);
  out.depth.reserve(static_cast<std::size_t>(k_max));
  out.generator_counts.reserve(static_cast<std::size_t>(k_max));

  MonomialIdeal Ik = I;
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1) Ik = multiply(Ik, I);
    out.generator_counts.push_back(Ik.size());
    try {
      out.depth.push_back(poly ? depth_of_polymatroidal_power(Ik)
                               : depth_of_quotient(Ik));
    } catch (const ColonNotLinearError&) {
      out.depth.push_back(std::nullopt);
    }
  }
  return out;
}

int astab(const MonomialIdeal& I, AssEngine engine) {
  require_polymatroidal(I, "astab");
  const int spread = analytic_spread(I);
  const int k_max = std::max(spread - 1, 1);
  const std::vector<AssSet> profile = ass_profile_upto(I, k_max, engine);
  check_spread_consistency(I, spread,
                           profile.back().contains_maximal(I.vars()));
  return astab_from_profile(profile);
}

int dstab(const MonomialIdeal& I) {
  require_polymatroidal(I, "dstab");
  const int spread = analytic_spread(I);
  const int k_max = std::max(spread - 1, 1);
  const int target = I.vars() - spread;

  MonomialIdeal Ik = I;
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1) Ik = multiply(Ik, I);
    const int d = depth_of_polymatroidal_power(Ik);
    if (d == target) return k;
    if (d < target)
      throw CrossCheckError("depth fell below the limit value n - l(I)");
  }
  throw CrossCheckError("depth did not reach n - l(I) within l(I) - 1 powers");
}

StabilityReport full_report(const MonomialIdeal& I, AssEngine engine) {
  require_polymatroidal(I, "full_report");
  const int n = I.vars();

  StripResult parts = strip(I);
  StabilityReport rep{.ideal = I,
                      .core = std::move(parts.core),
                      .cofactor = std::move(parts.cofactor),
                      .spread = analytic_spread(I),
                      .k_max = 1,
                      .ass_profile = {},
                      .depth_profile = {},
                      .generator_counts = {},
                      .astab = 1,
                      .dstab = 1,
                      .stable_ass = {},
                      .limit_depth = 0,
                      .height = height(I),
                      .flags = {}};
  rep.k_max = std::max(rep.spread - 1, 1);

  const PowerProfiles prof = profiles(I, rep.k_max, engine);
  rep.ass_profile = prof.ass;
  rep.generator_counts = prof.generator_counts;
  for (const auto& d : prof.depth) {
    if (!d)
      throw CrossCheckError(
          "power of a polymatroidal ideal lost its linear quotients");
    rep.depth_profile.push_back(*d);
  }

  rep.astab = astab_from_profile(rep.ass_profile);
  rep.stable_ass = rep.ass_profile.back();
  rep.limit_depth = rep.depth_profile.back();

  const int target = n - rep.spread;
  rep.dstab = 0;
  for (std::size_t k = 0; k < rep.depth_profile.size(); ++k) {
    if (rep.depth_profile[k] == target) {
      rep.dstab = static_cast<int>(k) + 1;
      break;
    }
  }
  if (rep.dstab == 0)
    throw CrossCheckError("depth did not reach n - l(I) within the horizon");
  if (rep.limit_depth != target)
    throw CrossCheckError("limit depth differs from n - l(I)");
  for (std::size_t k = 0; k + 1 < rep.ass_profile.size(); ++k) {
    if (!rep.ass_profile[k].subset_of(rep.ass_profile[k + 1]))
      throw CrossCheckError("associated primes of powers are not persistent");
    if (rep.depth_profile[k] < rep.depth_profile[k + 1])
      throw CrossCheckError("depth of powers increased");
  }
  check_spread_consistency(I, rep.spread, rep.stable_ass.contains_maximal(n));

  rep.flags.polymatroidal = true;
  rep.flags.matroidal = is_matroidal(I);
  rep.flags.strong_exchange = has_strong_exchange(I);
  rep.flags.max_in_stable_ass = rep.stable_ass.contains_maximal(n);
  rep.flags.herzog_qureshi_equality = rep.astab == rep.dstab;
  return rep;
}

namespace {

MonomialIdeal product_of_graph_component_primes(const MonomialIdeal& I,
                                                const RelationGraph& g) {
  // Union-find over the graph vertices only.
  std::vector<int> root(static_cast<std::size_t>(I.vars()), -1);
  for (int v : g.vertices) root[static_cast<std::size_t>(v)] = v;
  const auto find = [&](int a) {
    while (root[static_cast<std::size_t>(a)] != a)
      a = root[static_cast<std::size_t>(a)];
    return a;
  };
  for (const auto& [a, b] : g.edges)
    root[static_cast<std::size_t>(find(a))] = find(b);

  std::vector<MonomialPrime> primes;
  for (int v : g.vertices) {
    if (find(v) != v) continue;
    std::vector<int> members;
    for (int w : g.vertices)
      if (find(w) == v) members.push_back(w);
    primes.emplace_back(I.vars(), std::move(members));
  }
  return transversal(primes);
}

}  // namespace

std::vector<OracleCheck> theorem_oracles(const MonomialIdeal& I) {
  require_polymatroidal(I, "theorem_oracles");
  const StabilityReport rep = full_report(I);
  const IdealStats st = stats(I);
  const int n = I.vars();
  const int d = static_cast<int>(*st.degree);
  const bool matroidal = rep.flags.matroidal;
  const bool gcd_one = rep.cofactor.is_unit();
  const bool m_stable = rep.flags.max_in_stable_ass;
  const bool m_first = rep.ass_profile.front().contains_maximal(n);
  const bool equal = rep.astab == rep.dstab;

  std::vector<OracleCheck> checks;
  const auto add = [&checks](std::string name, bool applicable, bool holds,
                             std::string detail = {}) {
    checks.push_back(OracleCheck{
        std::move(name),
        applicable ? (holds ? OracleStatus::pass : OracleStatus::fail)
                   : OracleStatus::not_applicable,
        std::move(detail)});
  };
  const std::string ad = "astab=" + std::to_string(rep.astab) +
                         " dstab=" + std::to_string(rep.dstab);

  add("spread_bound", rep.spread >= 2,
      rep.astab < rep.spread && rep.dstab < rep.spread,
      ad + " l=" + std::to_string(rep.spread));
  add("degree2_equality", d == 2, equal, ad);
  add("degree2_matroidal_le2", d == 2 && matroidal, equal && rep.astab <= 2,
      ad);
  add("matroidal_n4_equality", matroidal && n == 4, equal, ad);
  add("matroidal_n5_equality", matroidal && n == 5, equal, ad);
  add("poly_n4_no_max_equality", n == 4 && !m_stable, equal, ad);
  add("strong_exchange_equality", rep.flags.strong_exchange, equal, ad);
  add("matroidal_n4_degree_bound", matroidal && n == 4,
      rep.astab <= d && rep.dstab <= d, ad + " d=" + std::to_string(d));
  add("max_assoc_dstab_le_astab", m_stable,
      rep.dstab <= rep.astab && (rep.astab != 1 || rep.dstab == 1) &&
          (rep.dstab != n - 1 || rep.astab == n - 1),
      ad);
  add("n3_no_max_both_one", n == 3 && !m_stable,
      rep.astab == 1 && rep.dstab == 1, ad);

  // Saturation oracles.
  {
    bool any = false, p1 = true;
    int max_sat = 0;
    for (int v = 0; v < n; ++v) {
      const MonomialIdeal J = saturate_var(I, v);
      if (J.is_unit()) continue;
      if (!is_polymatroidal(J))
        throw CrossCheckError(
            "saturation of a polymatroidal ideal is not polymatroidal");
      any = true;
      const int a = astab(J);
      p1 = p1 && a <= rep.astab;
      max_sat = std::max(max_sat, a);
    }
    add("saturation_astab_monotone", any, p1, ad);
    add("saturation_astab_max", any && (!m_stable || m_first),
        rep.astab == max_sat,
        ad + " max_saturation=" + std::to_string(max_sat));
  }

  // Relation-graph statements for matroidal ideals.
  {
    const RelationGraph g = relation_graph(I);
    add("matroidal_component_bound", matroidal, g.s <= d,
        "s=" + std::to_string(g.s) + " d=" + std::to_string(d));
    const bool hv_scope = matroidal && st.full_supported && gcd_one;
    add("matroidal_graph_spans", hv_scope, g.r == n,
        "r=" + std::to_string(g.r));
    if (hv_scope) {
      const bool product_form =
          g.s == d && I == product_of_graph_component_primes(I, g);
      add("matroidal_disjoint_product", true,
          (rep.dstab == 1) == product_form, ad + " s=" + std::to_string(g.s));
    } else {
      add("matroidal_disjoint_product", false, true);
    }
  }

  checks.push_back(OracleCheck{
      "herzog_qureshi_equality", OracleStatus::finding,
      equal ? "holds (" + ad + ")" : "VIOLATED (" + ad + ")"});
  return checks;
}

bool oracles_ok(const std::vector<OracleCheck>& checks) {
  for (const OracleCheck& c : checks)
    if (c.status == OracleStatus::fail) return false;
  return true;
}

}  // namespace polystab
