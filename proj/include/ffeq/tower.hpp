#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ffeq/f2poly.hpp"
#include "ffeq/fq.hpp"

namespace ffeq {

class TowerSpec;
class TowerElement;
using TowerSpecPtr = std::shared_ptr<const TowerSpec>;

/// An ordered list of quadratic generators over F_2(T), each satisfying
/// g^2 = g + c where the constant c is an element of the algebra spanned by
/// the strictly earlier generators.  The spanned algebra has dimension 2^k
/// over F_2(T) with basis the square-free generator monomials.
class TowerSpec : public std::enable_shared_from_this<TowerSpec> {
public:
    static TowerSpecPtr empty();
    /// New spec with one more generator; the relation constant must live over
    /// `base` (it is re-rooted into the extended spec unchanged).
    static TowerSpecPtr extend(const TowerSpecPtr& base, const std::string& name,
                               const TowerElement& relation);
    /// The spec consisting of the first n generators.
    TowerSpecPtr prefix(int n) const;
    /// Same spec plus a named derived element (for elements that are known
    /// combinations of the generators rather than generators themselves).
    TowerSpecPtr with_derived(const std::string& name, const TowerElement& value) const;

    int count() const { return static_cast<int>(names_.size()); }
    size_t dim() const { return size_t{1} << names_.size(); }
    const std::string& name(int i) const { return names_[i]; }
    int index_of(const std::string& name) const;  // -1 when absent
    /// Relation constant of generator i as an element of this spec.
    TowerElement relation(int i) const;
    std::optional<TowerElement> derived(const std::string& name) const;
    std::vector<std::string> derived_names() const;

    bool compatible(const TowerSpec& o) const;
    /// True when o's generators are a prefix of ours.
    bool extends(const TowerSpec& o) const;

private:
    TowerSpec() = default;
    std::vector<std::string> names_;
    std::vector<std::vector<F2Poly>> relations_;  // relation i has 2^i coefficients
    std::map<std::string, std::vector<F2Poly>> derived_;

    friend class TowerElement;
};

/// Element of the tower algebra: numerator coefficients indexed by generator
/// monomial masks (dense, 2^k entries) over a common denominator in F_2[T].
/// The representation is canonical: gcd of all numerators and the denominator
/// is 1, and the zero element has denominator 1.
class TowerElement {
public:
    TowerElement() = default;

    static TowerElement zero(const TowerSpecPtr& spec);
    static TowerElement one(const TowerSpecPtr& spec);
    static TowerElement rational(const TowerSpecPtr& spec, const F2Poly& num,
                                 const F2Poly& den = F2Poly::one());
    static TowerElement generator(const TowerSpecPtr& spec, int i);
    static TowerElement from_coeffs(const TowerSpecPtr& spec, std::vector<F2Poly> num,
                                    const F2Poly& den = F2Poly::one());

    const TowerSpecPtr& spec() const { return spec_; }
    const F2Poly& num(size_t mask) const { return num_[mask]; }
    const F2Poly& den() const { return den_; }

    bool is_zero() const;
    /// True when only the empty monomial carries a coefficient.
    bool is_rational() const;
    /// The rational part as (num, den); throws unless is_rational().
    std::pair<F2Poly, F2Poly> rational_value() const;
    /// True when the element is the scalar 0 or 1 (used for sign bits).
    std::optional<int> as_bit() const;

    TowerElement operator+(const TowerElement& o) const;
    TowerElement operator*(const TowerElement& o) const;
    TowerElement operator*(const F2Poly& c) const;
    TowerElement pow(unsigned e) const;
    /// Multiplicative inverse via a linear solve over F_2(T); throws
    /// std::invalid_argument for zero divisors.
    TowerElement inverse() const;
    /// Re-root an element of a prefix spec into an extending spec.
    TowerElement lift_to(const TowerSpecPtr& bigger) const;

    bool operator==(const TowerElement& o) const;
    bool operator!=(const TowerElement& o) const { return !(*this == o); }

    /// Evaluate in a characteristic-2 residue field given the image of T and
    /// images of the generators (indexed like the spec).
    FqElement eval_at(const FqElement& t_image, const std::vector<FqElement>& gen_images) const;

    std::string str() const;

private:
    void canonicalize();
    TowerSpecPtr spec_;
    std::vector<F2Poly> num_;
    F2Poly den_ = F2Poly::one();
};

/// Monic polynomial in X with tower-element coefficients.
class XPolyT {
public:
    XPolyT() = default;
    explicit XPolyT(std::vector<TowerElement> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const TowerElement& coeff(int i) const { return coeffs_[i]; }
    const std::vector<TowerElement>& coeffs() const { return coeffs_; }
    bool is_monic() const;

    XPolyT operator*(const XPolyT& o) const;
    TowerElement eval(const TowerElement& x) const;

    /// True when every coefficient is rational with denominator 1.
    bool has_rational_coeffs() const;
    /// Coefficients as plain F_2[T] polynomials; throws unless rational.
    std::vector<F2Poly> rational_coeffs() const;

    bool operator==(const XPolyT& o) const;
    bool operator!=(const XPolyT& o) const { return !(*this == o); }
    std::string str() const;

private:
    std::vector<TowerElement> coeffs_;
};

/// X^2 + X + c over the given spec.
XPolyT artin_schreier_xpoly(const TowerElement& c);

/// Expand a product of monic quadratics over the tower and require every
/// generator to cancel; throws std::invalid_argument when a non-rational
/// coefficient survives (wrong conjugate list).
XPolyT conjugate_product(const std::vector<XPolyT>& quadratics);

/// Minimal polynomial of e over the subfield spanned by the generators in
/// subfield_mask (0 = over F_2(T)).  The mask must be downward closed:
/// relations of included generators may only use included generators.
/// Fraction-free elimination with content stripping; first dependence wins.
XPolyT min_poly(const TowerElement& e, uint32_t subfield_mask = 0);

/// Ring endomorphism given by generator images.  Images are checked against
/// the defining relations at construction.
class TowerAut {
public:
    TowerAut(TowerSpecPtr spec, std::vector<TowerElement> images, std::string name = "");

    const TowerSpecPtr& spec() const { return spec_; }
    const std::string& name() const { return name_; }
    const TowerElement& image(int i) const { return images_[i]; }

    TowerElement apply(const TowerElement& e) const;
    XPolyT apply(const XPolyT& f) const;
    /// this after other: (a.compose(b))(x) = a(b(x)).
    TowerAut compose(const TowerAut& other) const;
    TowerAut power(int e) const;

    bool operator==(const TowerAut& o) const;
    bool operator!=(const TowerAut& o) const { return !(*this == o); }

private:
    TowerSpecPtr spec_;
    std::vector<TowerElement> images_;
    std::vector<TowerElement> subst_;  // image of every monomial mask
    std::string name_;
};

/// Checks that a degree-2 layer is of Artin-Schreier shape X^2 + X + c (so
/// its derivative is 1 and the layer is unramified at finite places).
/// Returns true for valid layers; throws for inseparable quadratics.
bool different_is_trivial(const XPolyT& layer);

}  // namespace ffeq
