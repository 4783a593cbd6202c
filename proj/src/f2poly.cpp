#include "ffeq/f2poly.hpp"

#include <stdexcept>

#include "ffeq/poly.hpp"

namespace ffeq {

void F2Poly::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

F2Poly F2Poly::monomial(int n) {
    if (n < 0) throw std::invalid_argument("negative exponent");
    F2Poly f;
    f.words_.assign(n / 64 + 1, 0);
    f.words_[n / 64] = 1ull << (n % 64);
    return f;
}

F2Poly F2Poly::from_coeff_bits(const std::vector<int>& bits) {
    F2Poly f;
    f.words_.assign(bits.size() / 64 + 1, 0);
    for (size_t i = 0; i < bits.size(); ++i)
        if (bits[i] & 1) f.words_[i / 64] |= 1ull << (i % 64);
    f.trim();
    return f;
}

F2Poly F2Poly::from_exponents(const std::vector<int>& exps) {
    F2Poly f;
    for (int e : exps) f = f + monomial(e);
    return f;
}

int F2Poly::degree() const {
    if (words_.empty()) return -1;
    uint64_t w = words_.back();
    int bit = 63;
    while (!(w >> bit & 1)) --bit;
    return static_cast<int>(words_.size() - 1) * 64 + bit;
}

int F2Poly::coeff(int i) const {
    if (i < 0 || i / 64 >= static_cast<int>(words_.size())) return 0;
    return static_cast<int>(words_[i / 64] >> (i % 64) & 1);
}

bool F2Poly::enum_less(const F2Poly& o) const {
    int da = degree(), db = o.degree();
    if (da != db) return da < db;
    for (int i = static_cast<int>(std::max(words_.size(), o.words_.size())) - 1; i >= 0; --i) {
        uint64_t a = i < static_cast<int>(words_.size()) ? words_[i] : 0;
        uint64_t b = i < static_cast<int>(o.words_.size()) ? o.words_[i] : 0;
        if (a != b) return a < b;
    }
    return false;
}

F2Poly F2Poly::operator+(const F2Poly& o) const {
    F2Poly r;
    r.words_.resize(std::max(words_.size(), o.words_.size()), 0);
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i];
    for (size_t i = 0; i < o.words_.size(); ++i) r.words_[i] ^= o.words_[i];
    r.trim();
    return r;
}

F2Poly F2Poly::operator*(const F2Poly& o) const {
    if (is_zero() || o.is_zero()) return F2Poly();
    F2Poly r;
    r.words_.assign(words_.size() + o.words_.size(), 0);
    for (size_t i = 0; i < words_.size(); ++i) {
        uint64_t w = words_[i];
        while (w) {
            int bit = __builtin_ctzll(w);
            w &= w - 1;
            // xor o shifted by 64*i + bit
            for (size_t j = 0; j < o.words_.size(); ++j) {
                uint64_t v = o.words_[j];
                r.words_[i + j] ^= v << bit;
                if (bit) r.words_[i + j + 1] ^= v >> (64 - bit);
            }
        }
    }
    r.trim();
    return r;
}

std::pair<F2Poly, F2Poly> F2Poly::divmod(const F2Poly& o) const {
    if (o.is_zero()) throw std::invalid_argument("division by zero polynomial");
    int db = o.degree();
    F2Poly rem = *this;
    F2Poly quot;
    int dr = rem.degree();
    if (dr >= db) quot.words_.assign((dr - db) / 64 + 1, 0);
    while ((dr = rem.degree()) >= db) {
        int shift = dr - db;
        quot.words_[shift / 64] |= 1ull << (shift % 64);
        rem = rem + o.shifted(shift);
    }
    quot.trim();
    return {quot, rem};
}

F2Poly F2Poly::shifted(int n) const {
    if (is_zero() || n == 0) return *this;
    if (n < 0) throw std::invalid_argument("negative shift");
    F2Poly r;
    int wshift = n / 64, bshift = n % 64;
    r.words_.assign(words_.size() + wshift + 1, 0);
    for (size_t i = 0; i < words_.size(); ++i) {
        r.words_[i + wshift] ^= words_[i] << bshift;
        if (bshift) r.words_[i + wshift + 1] ^= words_[i] >> (64 - bshift);
    }
    r.trim();
    return r;
}

FqElement F2Poly::eval(const FqElement& x) const {
    const auto field = x.field();
    if (field->characteristic() != 2) throw std::invalid_argument("evaluation requires characteristic 2");
    FqElement acc = field->zero();
    for (int i = degree(); i >= 0; --i) {
        acc = acc * x;
        if (coeff(i)) acc = acc + field->one();
    }
    return acc;
}

Poly F2Poly::to_poly(const std::shared_ptr<const FqField>& field) const {
    std::vector<FqElement> cs;
    for (int i = 0; i <= degree(); ++i) cs.push_back(field->from_int(coeff(i)));
    return Poly(field, std::move(cs));
}

F2Poly F2Poly::from_poly(const Poly& f) {
    if (f.field()->characteristic() != 2) throw std::invalid_argument("polynomial is not over characteristic 2");
    std::vector<int> bits;
    for (int i = 0; i <= f.degree(); ++i) {
        if (!f.coeff(i).is_scalar()) throw std::invalid_argument("coefficient outside the prime field");
        bits.push_back(f.coeff(i).scalar_value());
    }
    return from_coeff_bits(bits);
}

std::string F2Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (!coeff(i)) continue;
        if (!s.empty()) s += "+";
        if (i == 0)
            s += "1";
        else if (i == 1)
            s += var;
        else
            s += var + "^" + std::to_string(i);
    }
    return s;
}

F2Poly f2_gcd(F2Poly a, F2Poly b) {
    while (!b.is_zero()) {
        F2Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace ffeq
