#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ffeq {

class FqField;
class FqElement;
using FqFieldPtr = std::shared_ptr<const FqField>;

/// A finite field F_{p^k} presented as F_p[u]/(m(u)) with m monic irreducible.
/// Irreducibility of the modulus is certified at construction. Fields are
/// immutable and shared by pointer; two fields with equal (p, modulus) are
/// interchangeable.
class FqField : public std::enable_shared_from_this<FqField> {
public:
    /// F_p itself (modulus u).
    static FqFieldPtr prime_field(int p);
    /// F_p[u]/(modulus); modulus is a dense coefficient vector, constant term
    /// first, monic.  Throws std::invalid_argument unless p is prime and the
    /// modulus is monic irreducible of degree >= 1.
    static FqFieldPtr make(int p, std::vector<uint8_t> modulus);
    /// The field of degree k over F_p whose modulus is the enumeration-least
    /// monic irreducible of degree k (e.g. u^2+u+1 for F_4).
    static FqFieldPtr canonical(int p, int k);

    int characteristic() const { return p_; }
    int degree() const { return k_; }
    const std::vector<uint8_t>& modulus() const { return modulus_; }

    FqElement zero() const;
    FqElement one() const;
    /// Residue class of u (zero in a prime field).
    FqElement gen() const;
    /// Element with the given coordinate vector over F_p (length k).
    FqElement from_coords(std::vector<uint8_t> coords) const;
    /// Element whose coordinates are the base-p digits of v.
    FqElement from_value(uint64_t v) const;
    /// Scalar n mod p.
    FqElement from_int(long long n) const;
    /// All p^k elements in increasing value order (small fields only).
    std::vector<FqElement> elements() const;

    bool same_field(const FqField& other) const;

private:
    FqField(int p, std::vector<uint8_t> modulus);
    int p_;
    int k_;
    std::vector<uint8_t> modulus_;  // length k_+1, monic

    friend class FqElement;
};

/// An element of an FqField: the residue representative as a coordinate
/// vector over F_p of length k.  Arithmetic requires matching parents.
class FqElement {
public:
    FqElement() = default;
    FqElement(FqFieldPtr field, std::vector<uint8_t> coords);

    const FqFieldPtr& field() const { return field_; }
    const std::vector<uint8_t>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_one() const;
    /// True when the element lies in the prime field.
    bool is_scalar() const;
    /// The scalar value for prime-field elements; throws otherwise.
    int scalar_value() const;
    /// Coordinates read as base-p digits (requires p^k to fit in 64 bits).
    uint64_t value() const;

    FqElement operator+(const FqElement& o) const;
    FqElement operator-(const FqElement& o) const;
    FqElement operator*(const FqElement& o) const;
    FqElement operator-() const;
    FqElement inverse() const;
    FqElement pow(uint64_t e) const;
    /// x -> x^p.
    FqElement frobenius() const;
    /// x -> x^(p^i).
    FqElement frobenius_iter(int i) const;
    /// Absolute trace down to F_p, returned as an integer in [0, p).
    int trace_to_prime() const;

    bool operator==(const FqElement& o) const;
    bool operator!=(const FqElement& o) const { return !(*this == o); }
    /// Total order: degree-then-value on coordinate vectors (no overflow).
    bool value_less(const FqElement& o) const;

    std::string str() const;

private:
    void check_same(const FqElement& o) const;
    FqFieldPtr field_;
    std::vector<uint8_t> coords_;
};

/// Ring embedding of one finite field into another, represented by the image
/// of the source generator.
struct FqEmbedding {
    FqFieldPtr from;
    FqFieldPtr to;
    FqElement gen_image;

    FqElement operator()(const FqElement& e) const;
};

}  // namespace ffeq
