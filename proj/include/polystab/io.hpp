#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "polystab/ideal.hpp"
#include "polystab/prime.hpp"
#include "polystab/stability.hpp"

namespace polystab {

/// A parsed ideal file: the monomials as written plus the minimalized ideal.
struct IdealDocument {
  int vars = 0;
  bool vars_inferred = true;
  std::vector<Monomial> parsed;  // as written, before reduction
  MonomialIdeal ideal;
  bool reduced = false;  // true when minimalization dropped generators
};

/// Grammar:  ideal := monomial (',' monomial)*
///           monomial := term (('*' | whitespace) term)*
///           term := 'x' INDEX ('^' EXPONENT)?
/// INDEX and EXPONENT are positive decimals; '1' alone is the unit monomial.
/// Indices are 1-based in the text.  With an explicit ambient, every index
/// must fit; otherwise the ambient is the largest index seen.
IdealDocument parse_ideal(std::string_view text,
                          std::optional<int> explicit_vars = std::nullopt);

std::string to_string(const Monomial& m);
std::string to_string(const MonomialIdeal& I);
std::string to_string(const MonomialPrime& p);
std::string to_string(const AssSet& s);

/// Fixed-layout per-power table plus the summary lines; byte-deterministic.
std::string render_report_text(const StabilityReport& rep, bool vars_inferred);

/// Stable-key JSON tree carrying the same content plus tool metadata.
std::string render_report_json(const StabilityReport& rep, bool vars_inferred);

}  // namespace polystab
