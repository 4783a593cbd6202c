#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ffeq/fq.hpp"

namespace ffeq {

/// Dense univariate polynomial over an FqField, trailing zeros trimmed.
/// Degree of the zero polynomial is -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(FqFieldPtr field) : field_(std::move(field)) {}
    Poly(FqFieldPtr field, std::vector<FqElement> coeffs);

    static Poly zero(FqFieldPtr field) { return Poly(std::move(field)); }
    static Poly constant(const FqElement& c);
    static Poly one(FqFieldPtr field) { return constant(field->one()); }
    /// The variable itself.
    static Poly x(FqFieldPtr field);
    /// Polynomial with scalar coefficients given as ints (constant first).
    static Poly from_ints(FqFieldPtr field, const std::vector<int>& coeffs);

    const FqFieldPtr& field() const { return field_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const;
    const FqElement& leading() const;
    /// Coefficient of x^i (zero beyond the degree).
    FqElement coeff(int i) const;
    const std::vector<FqElement>& coeffs() const { return coeffs_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const FqElement& c) const;
    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& o) const;
    Poly operator/(const Poly& o) const { return divmod(o).first; }
    Poly operator%(const Poly& o) const { return divmod(o).second; }
    Poly shifted(int n) const;  // multiply by x^n
    Poly monic() const;
    Poly derivative() const;
    FqElement eval(const FqElement& x) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }
    /// Enumeration order: degree, then coefficient vectors as base-q values.
    bool enum_less(const Poly& o) const;

private:
    void trim();
    FqFieldPtr field_;
    std::vector<FqElement> coeffs_;
};

/// Monic gcd.
Poly poly_gcd(Poly a, Poly b);
/// b^e mod m.
Poly pow_mod(const Poly& b, uint64_t e, const Poly& m);
/// x^(q^iters) mod m, where q is the field size (iterated Frobenius of x).
Poly frobenius_power_mod(const Poly& m, int iters);

/// Deterministic irreducibility test over the coefficient field.
/// Throws std::invalid_argument for constant input.
bool is_irreducible(const Poly& f);

/// Full factorization into monic irreducibles with multiplicities, sorted in
/// enumeration order.  Squarefree decomposition, then distinct-degree, then
/// equal-degree splitting (additive trace splitting in characteristic 2).
/// The PRNG seed makes runs reproducible.
std::vector<std::pair<Poly, int>> factor(const Poly& f, uint64_t seed = 0x66657131u);

/// Roots in the coefficient field (brute linear algebra is not needed:
/// gcd with x^q - x then factor the split part).
std::vector<FqElement> poly_roots(const Poly& f, uint64_t seed = 0x66657131u);

/// The two roots of X^2 + X + c in the parent field of c, or empty if there
/// are none (characteristic 2 only).  Nonempty iff the absolute trace of c
/// vanishes; the roots differ by 1 and are returned in value order.
std::vector<FqElement> artin_schreier_roots(const FqElement& c);

/// Result of flattening a quotient base[x]/(h) to a plain F_p field:
/// the new field, the embedding of the base, and the residue class of x.
struct FlattenedQuotient {
    FqFieldPtr field;
    FqEmbedding embed;
    FqElement root;
};

/// Construct base[x]/(h) for h monic irreducible over base, as a flat field
/// over F_p together with the base embedding and the image of x.  Primitive
/// elements are searched as x + lambda*u in enumeration order, then over a
/// deterministic pseudo-random sequence.
FlattenedQuotient flatten_quotient(const FqFieldPtr& base, const Poly& h);

/// Degree-2k field containing a root of X^2 + X + c, c of absolute trace 1.
/// Throws when c has trace 0 (the roots already live in the parent field).
FlattenedQuotient extend_by_artin_schreier(const FqFieldPtr& field, const FqElement& c);

/// All q^d monic polynomials of degree exactly d, ordered by coefficient
/// vectors read as base-q integers (f_0=1; degree 1: x, x+1, ...).
std::vector<Poly> enumerate_monic(const FqFieldPtr& field, int d);

/// Monic irreducibles of degree exactly d, in enumeration order.
std::vector<Poly> enumerate_irreducible(const FqFieldPtr& field, int d);

}  // namespace ffeq
