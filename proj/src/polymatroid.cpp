#include "polystab/polymatroid.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace polystab {

namespace {

// Generators of an equigenerated ideal as a hash set: membership of a
// same-degree monomial in the ideal is exactly membership in this set.
std::unordered_set<Monomial, MonomialHash> generator_set(
    const MonomialIdeal& I) {
  return {I.generators().begin(), I.generators().end()};
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

bool is_polymatroidal(const MonomialIdeal& I) {
  if (!stats(I).equigenerated) return false;
  const auto& gens = I.generators();
  if (gens.size() <= 1) return true;

  const int n = I.vars();
  const auto gset = generator_set(I);
  Monomial scratch(n);
  for (const Monomial& u : gens) {
    for (const Monomial& v : gens) {
      if (u == v) continue;
      for (int i = 0; i < n; ++i) {
        if (u[i] <= v[i]) continue;
        bool exchanged = false;
        for (int j = 0; j < n && !exchanged; ++j) {
          if (u[j] >= v[j]) continue;
          scratch = u;
          scratch.set(i, u[i] - 1);
          scratch.set(j, u[j] + 1);
          exchanged = gset.count(scratch) != 0;
        }
        if (!exchanged) return false;
      }
    }
  }
  return true;
}

bool is_matroidal(const MonomialIdeal& I) {
  return stats(I).squarefree && is_polymatroidal(I);
}

bool has_strong_exchange(const MonomialIdeal& I) {
  if (!stats(I).equigenerated) return false;
  const auto& gens = I.generators();
  if (gens.size() <= 1) return true;

  const int n = I.vars();
  const auto gset = generator_set(I);
  Monomial scratch(n);
  for (const Monomial& u : gens) {
    for (const Monomial& v : gens) {
      if (u == v) continue;
      for (int i = 0; i < n; ++i) {
        if (u[i] <= v[i]) continue;
        for (int j = 0; j < n; ++j) {
          if (u[j] >= v[j]) continue;
          scratch = u;
          scratch.set(i, u[i] - 1);
          scratch.set(j, u[j] + 1);
          if (gset.count(scratch) == 0) return false;
        }
      }
    }
  }
  return true;
}

namespace {

void enumerate_capped(int n, unsigned degree, const std::vector<Exp>& caps,
                      int var, Monomial& partial, unsigned remaining,
                      std::vector<Monomial>& out) {
  if (var == n - 1) {
    if (remaining <= caps[static_cast<std::size_t>(var)]) {
      partial.set(var, remaining);
      out.push_back(partial);
      partial.set(var, 0);
    }
    return;
  }
  const Exp cap = caps[static_cast<std::size_t>(var)];
  const Exp hi = static_cast<Exp>(std::min<unsigned>(cap, remaining));
  // Descend from the high exponent so the output arrives in descending lex order.
  for (Exp e = hi;; --e) {
    partial.set(var, e);
    enumerate_capped(n, degree, caps, var + 1, partial, remaining - e, out);
    if (e == 0) break;
  }
  partial.set(var, 0);
}

}  // namespace

MonomialIdeal veronese_type(int vars, unsigned degree,
                            const std::vector<Exp>& caps) {
  if (vars < 1) throw PreconditionError("veronese_type: vars must be >= 1");
  if (degree < 1) throw PreconditionError("veronese_type: degree must be >= 1");
  if (caps.size() != static_cast<std::size_t>(vars))
    throw PreconditionError("veronese_type: need one cap per variable");
  std::uint64_t total = 0;
  for (Exp c : caps) total += std::min<std::uint64_t>(c, degree);
  if (total < degree)
    throw PreconditionError("veronese_type: caps cannot reach the degree");

  std::vector<Monomial> gens;
  Monomial partial(vars);
  enumerate_capped(vars, degree, caps, 0, partial, degree, gens);
  return MonomialIdeal::from_minimal(vars, std::move(gens));
}

MonomialIdeal transversal(const std::vector<MonomialPrime>& primes) {
  if (primes.empty())
    throw PreconditionError("transversal: need >= 1 prime ideal");
  MonomialIdeal acc = primes.front().to_ideal();
  for (std::size_t i = 1; i < primes.size(); ++i) {
    if (primes[i].vars() != acc.vars())
      throw PreconditionError("transversal: ambient mismatch");
    acc = multiply(acc, primes[i].to_ideal());
  }
  return acc;
}

RelationGraph relation_graph(const MonomialIdeal& I) {
  const int n = I.vars();
  const auto& gens = I.generators();
  std::vector<std::pair<int, int>> edges;

  // x_i * u_k = x_j * u_l means the exponent vectors differ by +1 at j and
  // -1 at i only.
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (std::size_t l = k + 1; l < gens.size(); ++l) {
      int plus = -1, minus = -1;
      bool ok = true;
      for (int v = 0; v < n && ok; ++v) {
        const Exp a = gens[k][v], b = gens[l][v];
        if (a == b) continue;
        if (a == b + 1 && plus < 0)
          plus = v;
        else if (b == a + 1 && minus < 0)
          minus = v;
        else
          ok = false;
      }
      if (ok && plus >= 0 && minus >= 0)
        edges.emplace_back(std::min(plus, minus), std::max(plus, minus));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  RelationGraph g;
  g.edges = std::move(edges);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const auto& [a, b] : g.edges) {
    seen[static_cast<std::size_t>(a)] = true;
    seen[static_cast<std::size_t>(b)] = true;
  }
  for (int v = 0; v < n; ++v)
    if (seen[static_cast<std::size_t>(v)]) g.vertices.push_back(v);
  g.r = static_cast<int>(g.vertices.size());

  UnionFind uf(n);
  for (const auto& [a, b] : g.edges) uf.unite(a, b);
  std::unordered_set<int> roots;
  for (int v : g.vertices) roots.insert(uf.find(v));
  g.s = static_cast<int>(roots.size());
  return g;
}

int analytic_spread(const MonomialIdeal& I) {
  if (!is_polymatroidal(I))
    throw PreconditionError(
        "analytic_spread: input is not polymatroidal; the relation-graph "
        "formula is only available there");
  const RelationGraph g = relation_graph(I);
  return g.r - g.s + 1;
}

}  // namespace polystab
