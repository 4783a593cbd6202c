#pragma once

#include <string>
#include <vector>

#include "ffeq/splitting.hpp"
#include "ffeq/witt.hpp"

namespace ffeq {

/// Truncated Laurent series in the uniformizer pi = 1/T at the infinite
/// place: coefficients over F_q for exponents [v, end), zero outside the
/// stored window.  end is the absolute precision bound (coefficients at
/// exponents >= end are unknown).
class LaurentSeries {
public:
    /// Zero series known up to exponent `end`.
    static LaurentSeries zero(FqFieldPtr base, int end);
    static LaurentSeries one(FqFieldPtr base, int prec);
    /// pi^j with window length prec.
    static LaurentSeries pi_power(FqFieldPtr base, int j, int prec);

    LaurentSeries(FqFieldPtr base, int v, std::vector<FqElement> coeffs, int end);

    const FqFieldPtr& base() const { return base_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Valuation (exponent of the leading nonzero coefficient); throws for 0.
    int valuation() const;
    int precision_end() const { return end_; }
    FqElement coeff(int exponent) const;

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries scaled(const FqElement& c) const;
    LaurentSeries inverse() const;
    LaurentSeries pow(int j) const;
    /// Truncate to a smaller precision end.
    LaurentSeries truncated(int end) const;

    /// Equality of the overlapping known windows.
    bool agrees_with(const LaurentSeries& o) const;
    bool operator==(const LaurentSeries& o) const;

    std::string str() const;

private:
    void trim();
    FqFieldPtr base_;
    int v_ = 0;    // exponent of coeffs_[0]
    int end_ = 0;  // exclusive precision bound
    std::vector<FqElement> coeffs_;
};

/// A point of the exponent space: an invertible truncated Laurent series x
/// and a truncated p-adic integer y given by its first N digits.
struct SPoint {
    LaurentSeries x;
    std::vector<int> y_digits;  // base-p digits, least significant first

    /// The integer point s_j = (pi^{-j}, j); negative j uses the p-adic
    /// expansion of j mod p^N, which is exact within the Laurent window as
    /// long as p^N exceeds it.
    static SPoint integer_point(int j, const FqFieldPtr& base, int laurent_prec, int n_digits);
};

/// Canonical decomposition of a monic polynomial: f = T^{deg f} * <f> with
/// <f> a 1-unit; returns (v = -deg f, <f>).
std::pair<int, LaurentSeries> canonical_decomposition(const Poly& f, int prec);

/// <u>^y for a 1-unit u = 1 + m: the finite product over the available
/// digits prod_i (1 + m^{p^i})^{a_i}.  Omitted factors differ from 1 only
/// beyond pi^{p^N v(m)}, so the result is exact within the window whenever
/// p^N * v(m) >= the precision end.
LaurentSeries one_unit_power(const LaurentSeries& u, const std::vector<int>& y_digits, int p);

/// f^s = x^{deg f} * <f>^y for monic f.
LaurentSeries goss_exponent(const Poly& f, const SPoint& s);

/// Coefficient table of the truncated (lifted) zeta function: for every
/// monic f with deg f <= max_degree, the characteristic-0 ideal count B(f),
/// its reduction A(f) mod p, and the Witt coordinate vector of B(f).
struct ZetaRow {
    Poly f;
    int a;
    BigInt b;
    WittVector witt;
};
struct ZetaTable {
    std::string field_name;
    int max_degree;
    int p;
    int witt_len;
    std::vector<ZetaRow> rows;
};
ZetaTable zeta_table(const FieldDesc& k, int max_degree, int p, int witt_len);

/// True when the two tables agree row-by-row on (f, A, B, witt).
bool zeta_tables_equal(const ZetaTable& a, const ZetaTable& b);

/// Truncated sum-versus-Euler-product comparison at s: returns the partial
/// Dirichlet sum over monic f with deg f <= max_degree and the product over
/// primes of O_K lying above base primes of degree <= max_degree.  The two
/// agree on the exponent window covered by degree <= max_degree terms.
struct EulerCheck {
    LaurentSeries sum;
    LaurentSeries product;
    bool agree;  // on the shared window up to the degree bound
};
EulerCheck euler_product_check(const FieldDesc& k, const SPoint& s, int max_degree);

}  // namespace ffeq
