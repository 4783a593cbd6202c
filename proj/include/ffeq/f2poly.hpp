#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace ffeq {

class FqField;
class FqElement;
class Poly;

/// Dense polynomial over F_2, bit-packed 64 coefficients per word.
/// This is the coefficient type of the tower algebra, where minimal
/// polynomial elimination wants fast gcd/divmod on mid-size polynomials.
class F2Poly {
public:
    F2Poly() = default;

    static F2Poly zero() { return F2Poly(); }
    static F2Poly one() { return from_coeff_bits({1}); }
    static F2Poly t() { return from_coeff_bits({0, 1}); }
    /// x^n.
    static F2Poly monomial(int n);
    /// Coefficients constant-term first, each 0 or 1.
    static F2Poly from_coeff_bits(const std::vector<int>& bits);
    /// Sum of x^e over the listed exponents.
    static F2Poly from_exponents(const std::vector<int>& exps);

    int degree() const;  // -1 for zero
    bool is_zero() const { return words_.empty(); }
    bool is_one() const { return degree() == 0; }
    int coeff(int i) const;
    bool operator==(const F2Poly& o) const { return words_ == o.words_; }
    bool operator!=(const F2Poly& o) const { return words_ != o.words_; }
    /// Degree-then-value enumeration order.
    bool enum_less(const F2Poly& o) const;

    F2Poly operator+(const F2Poly& o) const;
    F2Poly operator*(const F2Poly& o) const;
    std::pair<F2Poly, F2Poly> divmod(const F2Poly& o) const;
    F2Poly operator/(const F2Poly& o) const { return divmod(o).first; }
    F2Poly operator%(const F2Poly& o) const { return divmod(o).second; }
    F2Poly shifted(int n) const;

    /// Evaluate at an element of any characteristic-2 FqField.
    FqElement eval(const FqElement& x) const;
    /// Convert to a generic Poly over a characteristic-2 field (coefficients
    /// lifted to scalars).
    Poly to_poly(const std::shared_ptr<const FqField>& field) const;
    /// Convert from a generic Poly with prime-field coefficients over F_2.
    static F2Poly from_poly(const Poly& f);

    std::string str(const std::string& var = "T") const;

private:
    void trim();
    std::vector<uint64_t> words_;
};

F2Poly f2_gcd(F2Poly a, F2Poly b);

}  // namespace ffeq
