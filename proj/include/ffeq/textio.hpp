#pragma once

#include <string>
#include <string_view>

#include "ffeq/poly.hpp"
#include "ffeq/tower.hpp"

namespace ffeq {

/// Polynomial text format used by every CLI command, e.g.
///   T^8+T^6+T^5+T^3+1
///   T^4+z*T^2+(z+1)*T+(z+1)
/// Whitespace-insensitive.  `z` denotes the F_4 generator and is accepted
/// only over fields containing it.  Parsing is exact; errors throw
/// std::invalid_argument with a position hint.
Poly parse_poly(const FqFieldPtr& field, std::string_view text, const std::string& var = "T");
std::string format_poly(const Poly& f, const std::string& var = "T");

/// Tower elements in the same grammar extended with generator names, e.g.
///   (T^2+z*T)*a + T^3
TowerElement parse_tower_element(const TowerSpecPtr& spec, std::string_view text);

/// Declarative tower spec format: one `gen <name> = <expr>` line per
/// generator (relation constants over the earlier generators), comments
/// starting with '#'.
TowerSpecPtr parse_tower_spec(std::string_view text);

/// Monic polynomial in X with F_q[T] coefficients, e.g.
///   X^4+(T+1)*X^2+T*X+T^2
/// Coefficients may use z over F_4.
std::vector<Poly> parse_xpoly_coeffs(const FqFieldPtr& field, std::string_view text);
std::string format_xpoly(const std::vector<Poly>& coeffs, const std::string& var = "X");

}  // namespace ffeq
