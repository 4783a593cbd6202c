#pragma once

#include <string>

#include "ffeq/tower.hpp"

namespace ffeq {

/// The degree-32 tower N = F_2(T)[z, a, b, at, at3] with relations
///   z^2  = z  + 1           (constant quadratic layer)
///   a^2  = a  + z*T
///   b^2  = b  + (T^2+z*T)*a
///   at^2 = at + T
///   at3^2= at3 + T^3
/// together with the derived element g (a root of X^2+X+a*T+(T^2+(z+1)*T)*at
/// found inside the tower) and the automorphisms used throughout.
struct SiblingTowers {
    TowerSpecPtr N;
    TowerElement zeta, alpha, beta, at, at3, gamma;
    TowerAut phi1, psi1, psi3, psi5, psi7;
    int delta;  // the sign bit in phi1(gamma) = gamma + alpha + T + delta
};

/// Build the shared tower context once; cheap enough to call freely.
SiblingTowers build_sibling_towers();

/// The sign bit forced by the chosen root of the g-relation: applies the
/// order-8 automorphism to the derived element "g" of the spec and checks
/// which of g+a+T, g+a+T+1 it equals.  The spec must carry the derived
/// element (the shipped N preset does); throws otherwise.
int resolve_delta(const TowerSpecPtr& spec);

/// Named tower presets over F_2(T) / F_4(T):
///   paper:K, paper:Kprime, paper:F, paper:L, paper:M, paper:N,
///   paper:Kgamma, paper:F4T, paper:AT, paper:K(p), paper:Kprime(p).
/// Throws std::invalid_argument for unknown names.
TowerSpecPtr preset_tower(const std::string& name);

/// All preset names in a stable order (p instantiated for 2,3,5,7).
std::vector<std::string> preset_names();

/// Text form of a spec (gen lines with relation constants); inverse of
/// parse_tower_spec in textio.
std::string serialize_tower_spec(const TowerSpec& spec);

}  // namespace ffeq
