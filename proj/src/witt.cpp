#include "ffeq/witt.hpp"

#include <stdexcept>

namespace ffeq {

namespace {

uint64_t pow_checked(int p, int n) {
    uint64_t m = 1;
    for (int i = 0; i < n; ++i) {
        if (m > (1ull << 57)) throw std::invalid_argument("p^N too large for Witt arithmetic");
        m *= static_cast<uint64_t>(p);
    }
    return m;
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

// Teichmuller representative of r in Z/m (m = p^N): iterate r <- r^p until
// the Frobenius fixed point is reached (at most N steps).
uint64_t teich_digit(uint64_t r, int p, int n, uint64_t m) {
    for (int i = 0; i < n; ++i) {
        uint64_t s = r;
        uint64_t acc = 1;
        for (int j = 0; j < p; ++j) acc = mulmod(acc, s, m);
        r = acc;
    }
    return r;
}

}  // namespace

WittVector::WittVector(int p, int n, std::vector<int> coords) : p_(p), n_(n), coords_(std::move(coords)) {
    if (n < 1) throw std::invalid_argument("truncation length must be >= 1");
    if (static_cast<int>(coords_.size()) != n) throw std::invalid_argument("coordinate count must equal N");
    pow_checked(p, n);
    for (auto& c : coords_) {
        c %= p;
        if (c < 0) c += p;
    }
}

WittVector WittVector::teichmuller(int a, int p, int n) {
    std::vector<int> c(n, 0);
    c[0] = ((a % p) + p) % p;
    return WittVector(p, n, std::move(c));
}

WittVector WittVector::zero(int p, int n) {
    return WittVector(p, n, std::vector<int>(n, 0));
}

WittVector WittVector::from_integer(uint64_t v, int p, int n) {
    const uint64_t m = pow_checked(p, n);
    uint64_t r = v % m;
    std::vector<int> coords(n, 0);
    for (int i = 0; i < n; ++i) {
        uint64_t t = teich_digit(r, p, n, m);
        coords[i] = static_cast<int>(t % p);
        // r - t is divisible by p since t = r mod p.
        r = (r + m - t) % m;
        r /= p;
    }
    return WittVector(p, n, std::move(coords));
}

uint64_t WittVector::to_residue() const {
    const uint64_t m = pow_checked(p_, n_);
    uint64_t acc = 0;
    uint64_t ppow = 1;
    for (int i = 0; i < n_; ++i) {
        acc = (acc + mulmod(ppow, teich_digit(coords_[i], p_, n_, m), m)) % m;
        ppow *= static_cast<uint64_t>(p_);
    }
    return acc;
}

WittVector WittVector::operator+(const WittVector& o) const {
    if (p_ != o.p_ || n_ != o.n_) throw std::invalid_argument("Witt context mismatch");
    const uint64_t m = pow_checked(p_, n_);
    return from_integer((to_residue() + o.to_residue()) % m, p_, n_);
}

WittVector WittVector::operator*(const WittVector& o) const {
    if (p_ != o.p_ || n_ != o.n_) throw std::invalid_argument("Witt context mismatch");
    const uint64_t m = pow_checked(p_, n_);
    return from_integer(mulmod(to_residue(), o.to_residue(), m), p_, n_);
}

bool WittVector::operator==(const WittVector& o) const {
    return p_ == o.p_ && n_ == o.n_ && coords_ == o.coords_;
}

std::string WittVector::str() const {
    std::string s = "(";
    for (int i = 0; i < n_; ++i) {
        if (i) s += ",";
        s += std::to_string(coords_[i]);
    }
    return s + ")";
}

std::vector<int> witt_formula_sum(const WittVector& x, const WittVector& y, int first_k) {
    if (x.prime() != 2 || y.prime() != 2) throw std::invalid_argument("formula oracle supports p = 2 only");
    if (first_k < 1 || first_k > 2) throw std::invalid_argument("formula oracle supports k <= 2");
    const auto& a = x.coords();
    const auto& b = y.coords();
    std::vector<int> out;
    out.push_back((a[0] + b[0]) % 2);
    if (first_k == 2) {
        if (x.length() < 2) throw std::invalid_argument("vectors too short");
        out.push_back((a[1] + b[1] + a[0] * b[0]) % 2);
    }
    return out;
}

}  // namespace ffeq
