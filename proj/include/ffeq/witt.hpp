#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ffeq {

/// Truncated Witt vector over F_p of length N.  Arithmetic routes through
/// the ring isomorphism W_N(F_p) = Z/p^N via Teichmuller expansions; the
/// closed-form low-component law is exposed separately as a cross-check.
class WittVector {
public:
    WittVector(int p, int n, std::vector<int> coords);

    /// Teichmuller lift of a scalar: (a, 0, ..., 0).
    static WittVector teichmuller(int a, int p, int n);
    static WittVector zero(int p, int n);
    /// Witt coordinates of a non-negative integer (reduction mod p^N).
    static WittVector from_integer(uint64_t v, int p, int n);

    int prime() const { return p_; }
    int length() const { return n_; }
    const std::vector<int>& coords() const { return coords_; }

    WittVector operator+(const WittVector& o) const;
    WittVector operator*(const WittVector& o) const;
    bool operator==(const WittVector& o) const;
    bool operator!=(const WittVector& o) const { return !(*this == o); }

    /// The residue in Z/p^N under the Teichmuller expansion.
    uint64_t to_residue() const;

    std::string str() const;

private:
    int p_;
    int n_;
    std::vector<int> coords_;
};

/// First k coordinates of x + y from the classical Witt addition polynomials
/// (p = 2, k <= 2): S0 = x0 + y0, S1 = x1 + y1 + x0*y0.  Independent oracle
/// for the residue-based addition.
std::vector<int> witt_formula_sum(const WittVector& x, const WittVector& y, int first_k);

}  // namespace ffeq
