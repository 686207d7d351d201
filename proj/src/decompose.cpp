#include "polystab/decompose.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polystab {

namespace {

void require_proper(const MonomialIdeal& I, const char* op) {
  if (!I.is_proper())
    throw PreconditionError(std::string(op) + ": unit ideal rejected");
}

struct GensKey {
  std::vector<Monomial> gens;
  std::size_t hash;

  explicit GensKey(std::vector<Monomial> g) : gens(std::move(g)) {
    MonomialHash h;
    std::uint64_t acc = 0x9e3779b97f4a7c15ULL;
    for (const Monomial& m : gens) acc = acc * 1099511628211ULL + h(m);
    hash = static_cast<std::size_t>(acc);
  }
  friend bool operator==(const GensKey& a, const GensKey& b) {
    return a.gens == b.gens;
  }
};

struct GensKeyHash {
  std::size_t operator()(const GensKey& k) const { return k.hash; }
};

// Insert a monomial known to lie outside the ideal generated by `gens`,
// dropping generators it divides.  Keeps descending-lex order.
std::vector<Monomial> antichain_insert(const std::vector<Monomial>& gens,
                                       const Monomial& m) {
  std::vector<Monomial> out;
  out.reserve(gens.size() + 1);
  bool placed = false;
  for (const Monomial& g : gens) {
    if (m.divides(g)) continue;
    if (!placed && lex_greater(m, g)) {
      out.push_back(m);
      placed = true;
    }
    out.push_back(g);
  }
  if (!placed) out.push_back(m);
  return out;
}

int first_non_pure(const std::vector<Monomial>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].support_size() >= 2) return static_cast<int>(i);
  return -1;
}

IrreducibleComponent component_of(int vars, const std::vector<Monomial>& gens) {
  IrreducibleComponent c;
  c.vars = vars;
  c.entries.reserve(gens.size());
  for (const Monomial& g : gens) {
    for (int v = 0; v < vars; ++v)
      if (g[v] != 0) c.entries.emplace_back(v, g[v]);
  }
  std::sort(c.entries.begin(), c.entries.end());
  return c;
}

// A component C is redundant in the current list iff the largest monomial
// outside C (entries minus one, everything else saturated) lies in every
// other component.
void remove_redundant(std::vector<IrreducibleComponent>& comps, int vars) {
  Exp big = 1;
  for (const auto& c : comps)
    for (const auto& [v, e] : c.entries) big = std::max(big, e);
  big += 1;

  bool changed = true;
  while (changed && comps.size() > 1) {
    changed = false;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      Monomial witness(vars);
      for (int v = 0; v < vars; ++v) witness.set(v, big);
      for (const auto& [v, e] : comps[i].entries) witness.set(v, e - 1);
      bool in_all_others = true;
      for (std::size_t j = 0; j < comps.size(); ++j) {
        if (j == i) continue;
        if (!comps[j].contains(witness)) {
          in_all_others = false;
          break;
        }
      }
      if (in_all_others) {
        comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
}

}  // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(
    const MonomialIdeal& I) {
  require_proper(I, "irreducible_decomposition");
  const int n = I.vars();

  // Leaves of the split DAG are exactly the components (before the
  // irredundancy pass), so no per-node aggregation is needed: walk the DAG
  // once with a visited set.
  std::unordered_set<GensKey, GensKeyHash> visited;
  std::vector<std::vector<Monomial>> stack;
  std::vector<IrreducibleComponent> leaves;

  stack.push_back(I.generators());
  visited.insert(GensKey(I.generators()));

  while (!stack.empty()) {
    std::vector<Monomial> cur = std::move(stack.back());
    stack.pop_back();

    const int pivot = first_non_pure(cur);
    if (pivot < 0) {
      leaves.push_back(component_of(n, cur));
      continue;
    }

    const Monomial& g = cur[static_cast<std::size_t>(pivot)];
    int v = 0;
    while (g[v] == 0) ++v;  // lowest variable of the pivot generator
    const Monomial a = Monomial::variable(n, v, g[v]);
    const Monomial b = g.divide_by(a);

    for (const Monomial& piece : {a, b}) {
      GensKey key(antichain_insert(cur, piece));
      if (visited.find(key) == visited.end()) {
        stack.push_back(key.gens);
        visited.insert(std::move(key));
      }
    }
  }

  std::sort(leaves.begin(), leaves.end());
  leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());
  remove_redundant(leaves, n);
  std::sort(leaves.begin(), leaves.end());
  return leaves;
}

AssSet associated_primes(const MonomialIdeal& I) {
  require_proper(I, "associated_primes");
  std::vector<MonomialPrime> primes;
  for (const IrreducibleComponent& c : irreducible_decomposition(I))
    primes.push_back(c.radical());
  return AssSet(std::move(primes));
}

std::uint64_t box_cell_count(const MonomialIdeal& I) {
  std::uint64_t cells = 1;
  for (int v = 0; v < I.vars(); ++v) {
    Exp maxe = 0;
    for (const Monomial& g : I.generators()) maxe = std::max(maxe, g[v]);
    cells *= static_cast<std::uint64_t>(maxe) + 1;
    if (cells > (1ull << 40))
      throw PreconditionError("box oracle: box too large");
  }
  return cells;
}

namespace {

// Examines one box cell.  Returns the prime's variable mask if (I : m) is
// generated by variables, 0 otherwise (also when m lies in I).
std::uint32_t box_cell_prime(const std::vector<Monomial>& gens, int n,
                             const std::vector<Exp>& cell) {
  std::uint32_t vars_mask = 0;
  for (const Monomial& g : gens) {
    std::uint64_t excess = 0;
    int last_var = -1;
    for (int v = 0; v < n; ++v) {
      if (g[v] > cell[static_cast<std::size_t>(v)]) {
        excess += g[v] - cell[static_cast<std::size_t>(v)];
        last_var = v;
        if (excess > 1) break;
      }
    }
    if (excess == 0) return 0;  // m in I
    if (excess == 1) vars_mask |= (1u << last_var);
  }
  if (vars_mask == 0) return 0;
  // Every colon generator must be divisible by a collected variable.
  for (const Monomial& g : gens) {
    bool covered = false;
    for (int v = 0; v < n; ++v) {
      if ((vars_mask & (1u << v)) && g[v] > cell[static_cast<std::size_t>(v)]) {
        covered = true;
        break;
      }
    }
    if (!covered) return 0;
  }
  return vars_mask;
}

void decode_cell(std::uint64_t index, const std::vector<Exp>& dims,
                 std::vector<Exp>& cell) {
  for (std::size_t v = 0; v < dims.size(); ++v) {
    cell[v] = static_cast<Exp>(index % dims[v]);
    index /= dims[v];
  }
}

std::vector<Exp> box_dims(const MonomialIdeal& I) {
  std::vector<Exp> dims(static_cast<std::size_t>(I.vars()), 1);
  for (int v = 0; v < I.vars(); ++v) {
    Exp maxe = 0;
    for (const Monomial& g : I.generators()) maxe = std::max(maxe, g[v]);
    dims[static_cast<std::size_t>(v)] = maxe + 1;
  }
  return dims;
}

AssSet masks_to_ass(int n, const std::unordered_set<std::uint32_t>& masks) {
  std::vector<MonomialPrime> primes;
  primes.reserve(masks.size());
  for (std::uint32_t m : masks) primes.push_back(MonomialPrime::from_mask(n, m));
  return AssSet(std::move(primes));
}

}  // namespace

AssSet box_oracle_ass_serial(const MonomialIdeal& I) {
  require_proper(I, "box_oracle_ass");
  if (I.vars() > 32)
    throw PreconditionError("box oracle: ambient too large (> 32 variables)");
  const std::uint64_t cells = box_cell_count(I);
  const std::vector<Exp> dims = box_dims(I);
  const int n = I.vars();
  const auto& gens = I.generators();

  std::unordered_set<std::uint32_t> found;
  std::vector<Exp> cell(static_cast<std::size_t>(n), 0);
  for (std::uint64_t idx = 0; idx < cells; ++idx) {
    decode_cell(idx, dims, cell);
    if (std::uint32_t mask = box_cell_prime(gens, n, cell)) found.insert(mask);
  }
  return masks_to_ass(n, found);
}

AssSet box_oracle_ass(const MonomialIdeal& I) {
#ifndef _OPENMP
  return box_oracle_ass_serial(I);
#else
  require_proper(I, "box_oracle_ass");
  if (I.vars() > 32)
    throw PreconditionError("box oracle: ambient too large (> 32 variables)");
  const std::uint64_t cells = box_cell_count(I);
  const std::vector<Exp> dims = box_dims(I);
  const int n = I.vars();
  const auto& gens = I.generators();

  std::unordered_set<std::uint32_t> found;
#pragma omp parallel
  {
    std::unordered_set<std::uint32_t> local;
    std::vector<Exp> cell(static_cast<std::size_t>(n), 0);
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(cells); ++idx) {
      decode_cell(static_cast<std::uint64_t>(idx), dims, cell);
      if (std::uint32_t mask = box_cell_prime(gens, n, cell))
        local.insert(mask);
    }
#pragma omp critical
    found.insert(local.begin(), local.end());
  }
  return masks_to_ass(n, found);
#endif
}

AssSet minimal_primes(const MonomialIdeal& I) {
  require_proper(I, "minimal_primes");
  const int n = I.vars();
  if (n > 20)
    throw PreconditionError("minimal_primes: ambient too large (> 20 variables)");

  std::vector<std::uint32_t> supports;
  supports.reserve(I.size());
  for (const Monomial& g : I.generators()) {
    std::uint32_t s = 0;
    for (int v = 0; v < n; ++v)
      if (g[v] != 0) s |= (1u << v);
    supports.push_back(s);
  }

  // Scan masks in popcount order; a hitting set is minimal iff no kept
  // hitting set is contained in it.
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 1; m < (1u << n); ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });

  std::vector<std::uint32_t> kept;
  for (std::uint32_t m : masks) {
    bool hits = true;
    for (std::uint32_t s : supports) {
      if ((s & m) == 0) {
        hits = false;
        break;
      }
    }
    if (!hits) continue;
    bool dominated = false;
    for (std::uint32_t k : kept) {
      if ((k & m) == k) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(m);
  }

  std::vector<MonomialPrime> primes;
  primes.reserve(kept.size());
  for (std::uint32_t m : kept) primes.push_back(MonomialPrime::from_mask(n, m));
  return AssSet(std::move(primes));
}

int height(const MonomialIdeal& I) {
  int h = I.vars();
  for (const MonomialPrime& p : minimal_primes(I)) h = std::min(h, p.height());
  return h;
}

bool max_ideal_associated(const MonomialIdeal& I) {
  require_proper(I, "max_ideal_associated");
  const MonomialIdeal socle = colon(I, MonomialPrime::maximal(I.vars()).to_ideal());
  return !(socle == I);
}

bool max_ideal_associated_via_decomposition(const MonomialIdeal& I) {
  return associated_primes(I).contains_maximal(I.vars());
}

}  // namespace polystab
