#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "toroidal/root_data.hpp"
#include "toroidal/wick.hpp"

namespace toroidal {

/// Syntax error or unknown label in a field expression. `position` is the
/// 0-based character offset where the problem was detected.
class ParseError : public ConfigError {
public:
  ParseError(std::size_t position, const std::string &what)
      : ConfigError("at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Parses a quadratic field expression, e.g.
///   `:eps(1) eps*(2): - 1/2*sqrt2*:beta* e:`
/// Atomic labels: eps(i) eps*(i) epsbar(i) epsbar*(i) cbar cbar* e;
/// compound: beta beta* betabar betabar*. Scalars: integers, `/`, `sqrt2`.
/// Labels are checked against the alphabet of `ctx`.
LocalField parse_local_field(std::string_view text, const LatticeContext &ctx);

/// Parses a Q(sqrt2) scalar such as `-3/4 + 1/2*sqrt2`.
Coeff parse_coeff(std::string_view text);

/// Canonical text: identity component first, then monomials in label order.
/// The zero field prints as "0". Output re-parses to the same field.
std::string to_expr(const LocalField &f);

/// "delta: <field>, d_delta: <scalar>", or "0" for the zero bracket.
std::string to_expr(const BracketResult &r);

} // namespace toroidal
