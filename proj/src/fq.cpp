#include "ffeq/fq.hpp"

#include <algorithm>
#include <stdexcept>

#include "ffeq/poly.hpp"

namespace ffeq {

namespace {

bool is_prime_int(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Raw residue arithmetic on coefficient vectors over F_p, modulo a monic
// modulus of degree k.  Vectors have fixed length k.
using Vec = std::vector<uint8_t>;

void trim(std::vector<int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Reduce an arbitrary-length int vector modulo the monic modulus, return
// length-k vector.
Vec reduce_mod(std::vector<int> a, const Vec& mod, int p) {
    const int k = static_cast<int>(mod.size()) - 1;
    for (auto& x : a) x = ((x % p) + p) % p;
    trim(a);
    while (static_cast<int>(a.size()) > k) {
        int d = static_cast<int>(a.size()) - 1;
        int c = a[d];
        if (c != 0) {
            for (int i = 0; i <= k; ++i) {
                int& t = a[d - k + i];
                t = ((t - c * mod[i]) % p + p) % p;
            }
        }
        a.pop_back();
        trim(a);
    }
    Vec out(k, 0);
    for (size_t i = 0; i < a.size(); ++i) out[i] = static_cast<uint8_t>(a[i]);
    return out;
}

Vec mul_raw(const Vec& a, const Vec& b, const Vec& mod, int p) {
    std::vector<int> conv(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) conv[i + j] += a[i] * b[j];
    }
    return reduce_mod(std::move(conv), mod, p);
}

// Extended gcd of the residue representative with the modulus; returns the
// inverse representative.  Throws on non-invertible input.
Vec inv_raw(const Vec& a, const Vec& mod, int p) {
    // Work with int vectors (coefficients in [0,p)), classic extended Euclid.
    auto degree = [](const std::vector<int>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
            if (v[i]) return i;
        return -1;
    };
    auto inv_mod_p = [p](int x) {
        x = ((x % p) + p) % p;
        for (int y = 1; y < p; ++y)
            if (x * y % p == 1) return y;
        throw std::runtime_error("no inverse mod p");
    };
    std::vector<int> r0(mod.begin(), mod.end()), r1(a.begin(), a.end());
    std::vector<int> s0{0}, s1{1};
    while (degree(r1) >= 0) {
        int d0 = degree(r0), d1 = degree(r1);
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(s0, s1);
            continue;
        }
        int c = r0[d0] * inv_mod_p(r1[d1]) % p;
        int shift = d0 - d1;
        for (int i = 0; i <= d1; ++i)
            r0[i + shift] = ((r0[i + shift] - c * r1[i]) % p + p) % p;
        if (s1.size() + shift > s0.size()) s0.resize(s1.size() + shift, 0);
        for (size_t i = 0; i < s1.size(); ++i)
            s0[i + shift] = ((static_cast<int>(s0[i + shift]) - c * s1[i]) % p + p) % p;
    }
    int d0 = degree(r0);
    if (d0 != 0) throw std::invalid_argument("element is not invertible");
    int c = inv_mod_p(r0[0]);
    for (auto& x : s0) x = x * c % p;
    s0.resize(mod.size() - 1, 0);
    Vec out(s0.size());
    for (size_t i = 0; i < s0.size(); ++i) out[i] = static_cast<uint8_t>(s0[i]);
    return out;
}

}  // namespace

FqField::FqField(int p, std::vector<uint8_t> modulus) : p_(p), modulus_(std::move(modulus)) {
    k_ = static_cast<int>(modulus_.size()) - 1;
}

FqFieldPtr FqField::prime_field(int p) {
    return make(p, {0, 1});
}

FqFieldPtr FqField::make(int p, std::vector<uint8_t> modulus) {
    if (!is_prime_int(p)) throw std::invalid_argument("characteristic must be prime");
    if (p > 251) throw std::invalid_argument("characteristic too large for this representation");
    while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
    if (modulus.size() < 2) throw std::invalid_argument("modulus must have degree >= 1");
    for (auto c : modulus)
        if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
    auto f = FqFieldPtr(new FqField(p, std::move(modulus)));
    if (f->degree() > 1) {
        auto fp = prime_field(p);
        std::vector<FqElement> cs;
        for (auto c : f->modulus()) cs.push_back(fp->from_int(c));
        if (!is_irreducible(Poly(fp, cs)))
            throw std::invalid_argument("modulus is not irreducible");
    }
    return f;
}

FqFieldPtr FqField::canonical(int p, int k) {
    if (k < 1) throw std::invalid_argument("degree must be >= 1");
    if (k == 1) return prime_field(p);
    // Enumeration-least monic irreducible of degree k.
    auto fp = prime_field(p);
    for (const Poly& f : enumerate_monic(fp, k)) {
        if (is_irreducible(f)) {
            std::vector<uint8_t> mod(k + 1, 0);
            for (int i = 0; i <= k; ++i) mod[i] = static_cast<uint8_t>(f.coeff(i).scalar_value());
            return FqFieldPtr(new FqField(p, std::move(mod)));
        }
    }
    throw std::runtime_error("no irreducible modulus found");
}

FqElement FqField::zero() const {
    return FqElement(shared_from_this(), Vec(k_, 0));
}

FqElement FqField::one() const {
    Vec c(k_, 0);
    c[0] = 1;
    return FqElement(shared_from_this(), std::move(c));
}

FqElement FqField::gen() const {
    Vec c(k_, 0);
    if (k_ > 1) c[1] = 1;
    return FqElement(shared_from_this(), std::move(c));
}

FqElement FqField::from_coords(std::vector<uint8_t> coords) const {
    if (static_cast<int>(coords.size()) != k_)
        throw std::invalid_argument("coordinate vector has wrong length");
    for (auto c : coords)
        if (c >= p_) throw std::invalid_argument("coordinate out of range");
    return FqElement(shared_from_this(), std::move(coords));
}

FqElement FqField::from_value(uint64_t v) const {
    Vec c(k_, 0);
    for (int i = 0; i < k_; ++i) {
        c[i] = static_cast<uint8_t>(v % p_);
        v /= p_;
    }
    if (v != 0) throw std::invalid_argument("value out of range for field");
    return FqElement(shared_from_this(), std::move(c));
}

FqElement FqField::from_int(long long n) const {
    long long r = ((n % p_) + p_) % p_;
    Vec c(k_, 0);
    c[0] = static_cast<uint8_t>(r);
    return FqElement(shared_from_this(), std::move(c));
}

std::vector<FqElement> FqField::elements() const {
    uint64_t q = 1;
    for (int i = 0; i < k_; ++i) {
        if (q > (1ull << 20)) throw std::invalid_argument("field too large to enumerate");
        q *= p_;
    }
    std::vector<FqElement> out;
    out.reserve(q);
    for (uint64_t v = 0; v < q; ++v) out.push_back(from_value(v));
    return out;
}

bool FqField::same_field(const FqField& other) const {
    return p_ == other.p_ && modulus_ == other.modulus_;
}

FqElement::FqElement(FqFieldPtr field, std::vector<uint8_t> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {}

void FqElement::check_same(const FqElement& o) const {
    if (!field_ || !o.field_ || !field_->same_field(*o.field_))
        throw std::invalid_argument("field mismatch");
}

bool FqElement::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](uint8_t c) { return c == 0; });
}

bool FqElement::is_one() const {
    if (coords_.empty() || coords_[0] != 1) return false;
    return std::all_of(coords_.begin() + 1, coords_.end(), [](uint8_t c) { return c == 0; });
}

bool FqElement::is_scalar() const {
    return std::all_of(coords_.begin() + 1, coords_.end(), [](uint8_t c) { return c == 0; });
}

int FqElement::scalar_value() const {
    if (!is_scalar()) throw std::invalid_argument("element is not in the prime field");
    return coords_[0];
}

uint64_t FqElement::value() const {
    uint64_t v = 0;
    for (int i = static_cast<int>(coords_.size()) - 1; i >= 0; --i)
        v = v * field_->characteristic() + coords_[i];
    return v;
}

FqElement FqElement::operator+(const FqElement& o) const {
    check_same(o);
    int p = field_->characteristic();
    Vec c(coords_.size());
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = static_cast<uint8_t>((coords_[i] + o.coords_[i]) % p);
    return FqElement(field_, std::move(c));
}

FqElement FqElement::operator-(const FqElement& o) const {
    return *this + (-o);
}

FqElement FqElement::operator-() const {
    int p = field_->characteristic();
    Vec c(coords_.size());
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = static_cast<uint8_t>((p - coords_[i]) % p);
    return FqElement(field_, std::move(c));
}

FqElement FqElement::operator*(const FqElement& o) const {
    check_same(o);
    return FqElement(field_, mul_raw(coords_, o.coords_, field_->modulus(), field_->characteristic()));
}

FqElement FqElement::inverse() const {
    if (is_zero()) throw std::invalid_argument("division by zero");
    return FqElement(field_, inv_raw(coords_, field_->modulus(), field_->characteristic()));
}

FqElement FqElement::pow(uint64_t e) const {
    FqElement r = field_->one();
    FqElement b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

FqElement FqElement::frobenius() const {
    return pow(field_->characteristic());
}

FqElement FqElement::frobenius_iter(int i) const {
    FqElement r = *this;
    for (int j = 0; j < i; ++j) r = r.frobenius();
    return r;
}

int FqElement::trace_to_prime() const {
    FqElement acc = *this;
    FqElement cur = *this;
    for (int i = 1; i < field_->degree(); ++i) {
        cur = cur.frobenius();
        acc = acc + cur;
    }
    return acc.scalar_value();
}

bool FqElement::operator==(const FqElement& o) const {
    check_same(o);
    return coords_ == o.coords_;
}

bool FqElement::value_less(const FqElement& o) const {
    check_same(o);
    for (int i = static_cast<int>(coords_.size()) - 1; i >= 0; --i)
        if (coords_[i] != o.coords_[i]) return coords_[i] < o.coords_[i];
    return false;
}

std::string FqElement::str() const {
    // Prime-field scalars print as digits; otherwise base-p digit string of
    // the value, most significant first, prefixed with '#' for readability.
    if (is_scalar()) return std::to_string(coords_[0]);
    std::string s = "#";
    for (int i = static_cast<int>(coords_.size()) - 1; i >= 0; --i)
        s += static_cast<char>('0' + coords_[i]);
    return s;
}

FqElement FqEmbedding::operator()(const FqElement& e) const {
    if (!e.field()->same_field(*from)) throw std::invalid_argument("embedding applied to wrong field");
    FqElement acc = to->zero();
    for (int i = static_cast<int>(e.coords().size()) - 1; i >= 0; --i)
        acc = acc * gen_image + to->from_int(e.coords()[i]);
    return acc;
}

}  // namespace ffeq
