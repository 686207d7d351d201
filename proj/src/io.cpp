#include "polystab/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "polystab/version.hpp"

namespace polystab {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;
  int column = 1;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void advance() {
    if (text[pos] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++pos;
  }
  void skip_ws() {
    while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\r' ||
                       peek() == '\n'))
      advance();
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line, column, message);
  }
};

long parse_number(Cursor& c, const char* what) {
  if (c.done() || c.peek() < '0' || c.peek() > '9')
    c.fail(std::string("expected ") + what);
  long value = 0;
  while (!c.done() && c.peek() >= '0' && c.peek() <= '9') {
    value = value * 10 + (c.peek() - '0');
    if (value > 1000000) c.fail(std::string(what) + " too large");
    c.advance();
  }
  return value;
}

// One monomial: a '*'/whitespace-separated term sequence, or a lone '1'.
// Records exponents per 1-based index in `occurrences`.
std::map<int, Exp> parse_monomial(Cursor& c) {
  std::map<int, Exp> exps;
  bool any_term = false;
  bool unit_seen = false;

  while (true) {
    c.skip_ws();
    if (c.done() || c.peek() == ',') break;
    if (c.peek() == '*') {
      if (!any_term && !unit_seen) c.fail("'*' without a preceding term");
      c.advance();
      c.skip_ws();
      if (c.done() || c.peek() == ',') c.fail("'*' without a following term");
    }
    if (c.peek() == '1') {
      if (any_term || unit_seen)
        c.fail("'1' must stand alone as the unit monomial");
      c.advance();
      unit_seen = true;
      continue;
    }
    if (c.peek() != 'x')
      c.fail(std::string("unexpected character '") + c.peek() + "'");
    if (unit_seen) c.fail("'1' must stand alone as the unit monomial");
    c.advance();
    const int index_line = c.line, index_col = c.column;
    const long index = parse_number(c, "variable index");
    if (index < 1)
      throw ParseError(index_line, index_col,
                       "variable indices are 1-based (x0 is invalid)");
    Exp exponent = 1;
    if (!c.done() && c.peek() == '^') {
      c.advance();
      const int exp_line = c.line, exp_col = c.column;
      const long e = parse_number(c, "exponent");
      if (e < 1)
        throw ParseError(exp_line, exp_col, "exponent must be >= 1");
      exponent = static_cast<Exp>(e);
    }
    exps[static_cast<int>(index)] += exponent;
    any_term = true;
  }

  if (!any_term && !unit_seen) c.fail("empty monomial");
  return exps;
}

}  // namespace

IdealDocument parse_ideal(std::string_view text,
                          std::optional<int> explicit_vars) {
  Cursor c{text};
  c.skip_ws();
  if (c.done()) c.fail("empty input");

  std::vector<std::map<int, Exp>> raw;
  while (true) {
    raw.push_back(parse_monomial(c));
    c.skip_ws();
    if (c.done()) break;
    if (c.peek() != ',') c.fail("expected ',' between monomials");
    c.advance();
    c.skip_ws();
    if (c.done()) c.fail("trailing ',' without a monomial");
  }

  int max_index = 0;
  for (const auto& m : raw)
    for (const auto& [idx, e] : m) max_index = std::max(max_index, idx);
  int vars = max_index == 0 ? 1 : max_index;
  if (explicit_vars) {
    if (*explicit_vars < 1)
      throw ParseError(1, 1, "ambient variable count must be >= 1");
    if (max_index > *explicit_vars)
      throw ParseError(1, 1,
                       "index x" + std::to_string(max_index) +
                           " exceeds the declared ambient of " +
                           std::to_string(*explicit_vars) + " variables");
    vars = *explicit_vars;
  }

  std::vector<Monomial> parsed;
  parsed.reserve(raw.size());
  for (const auto& m : raw) {
    Monomial mono(vars);
    for (const auto& [idx, e] : m) mono.set(idx - 1, e);
    parsed.push_back(std::move(mono));
  }

  MonomialIdeal ideal = MonomialIdeal::from_generators(vars, parsed);
  const bool reduced = ideal.size() != parsed.size();
  return IdealDocument{vars, !explicit_vars.has_value(), std::move(parsed),
                       std::move(ideal), reduced};
}

std::string to_string(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (int v = 0; v < m.vars(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(v + 1);
    if (m[v] > 1) {
      out += '^';
      out += std::to_string(m[v]);
    }
  }
  return out;
}

std::string to_string(const MonomialIdeal& I) {
  std::string out;
  for (const Monomial& g : I.generators()) {
    if (!out.empty()) out += ", ";
    out += to_string(g);
  }
  return out;
}

std::string to_string(const MonomialPrime& p) {
  std::string out = "(";
  bool first = true;
  for (int v : p.members()) {
    if (!first) out += ',';
    out += 'x';
    out += std::to_string(v + 1);
    first = false;
  }
  return out + ")";
}

std::string to_string(const AssSet& s) {
  std::string out;
  for (const MonomialPrime& p : s) {
    if (!out.empty()) out += ' ';
    out += to_string(p);
  }
  return out.empty() ? "{}" : out;
}

namespace {

std::string flag_word(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string render_report_text(const StabilityReport& rep,
                               bool vars_inferred) {
  std::ostringstream os;
  os << "ideal       : " << to_string(rep.ideal) << '\n';
  os << "vars        : " << rep.ideal.vars()
     << (vars_inferred ? " (inferred)" : "") << '\n';
  os << "gcd         : " << to_string(rep.cofactor) << '\n';
  if (!rep.cofactor.is_unit())
    os << "core        : " << to_string(rep.core) << '\n';
  os << "height      : " << rep.height << '\n';
  os << "flags       : polymatroidal=" << flag_word(rep.flags.polymatroidal)
     << " matroidal=" << flag_word(rep.flags.matroidal)
     << " strong_exchange=" << flag_word(rep.flags.strong_exchange) << '\n';
  os << '\n';
  os << "  k  |G(I^k)|  depth  Ass(I^k)\n";
  for (int k = 1; k <= rep.k_max; ++k) {
    const std::size_t i = static_cast<std::size_t>(k - 1);
    os << "  " << k << "  ";
    std::string count = std::to_string(rep.generator_counts[i]);
    os << std::string(count.size() < 8 ? 8 - count.size() : 0, ' ') << count;
    std::string depth = std::to_string(rep.depth_profile[i]);
    os << "  " << std::string(depth.size() < 5 ? 5 - depth.size() : 0, ' ')
       << depth;
    os << "  " << to_string(rep.ass_profile[i]) << '\n';
  }
  os << '\n';
  os << "astab = " << rep.astab << '\n';
  os << "dstab = " << rep.dstab << '\n';
  os << "ℓ = " << rep.spread << '\n';
  os << "limit depth = " << rep.limit_depth << '\n';
  os << "maximal ideal eventually associated: "
     << flag_word(rep.flags.max_in_stable_ass) << '\n';
  if (!rep.flags.herzog_qureshi_equality)
    os << "Herzog-Qureshi equality astab = dstab: VIOLATED (astab = "
       << rep.astab << ", dstab = " << rep.dstab << ")\n";
  return std::move(os).str();
}

std::string render_report_json(const StabilityReport& rep,
                               bool vars_inferred) {
  nlohmann::ordered_json j;
  j["tool"] = {{"name", std::string(kToolName)},
               {"version", std::string(kToolVersion)}};
  j["vars"] = rep.ideal.vars();
  j["vars_inferred"] = vars_inferred;
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const Monomial& g : rep.ideal.generators()) gens.push_back(to_string(g));
  j["generators"] = std::move(gens);
  j["gcd"] = to_string(rep.cofactor);
  j["height"] = rep.height;
  j["spread"] = rep.spread;
  j["k_max"] = rep.k_max;
  nlohmann::ordered_json ass = nlohmann::ordered_json::array();
  for (const AssSet& s : rep.ass_profile) {
    nlohmann::ordered_json level = nlohmann::ordered_json::array();
    for (const MonomialPrime& p : s) level.push_back(to_string(p));
    ass.push_back(std::move(level));
  }
  j["ass_profile"] = std::move(ass);
  j["depth_profile"] = rep.depth_profile;
  j["generator_counts"] = rep.generator_counts;
  j["astab"] = rep.astab;
  j["dstab"] = rep.dstab;
  nlohmann::ordered_json stable = nlohmann::ordered_json::array();
  for (const MonomialPrime& p : rep.stable_ass) stable.push_back(to_string(p));
  j["stable_ass"] = std::move(stable);
  j["limit_depth"] = rep.limit_depth;
  j["flags"] = {{"polymatroidal", rep.flags.polymatroidal},
                {"matroidal", rep.flags.matroidal},
                {"strong_exchange", rep.flags.strong_exchange},
                {"max_in_stable_ass", rep.flags.max_in_stable_ass},
                {"herzog_qureshi_equality", rep.flags.herzog_qureshi_equality}};
  return j.dump(2) + "\n";
}

}  // namespace polystab
