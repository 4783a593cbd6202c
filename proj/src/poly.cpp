#include "ffeq/poly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ffeq {

Poly::Poly(FqFieldPtr field, std::vector<FqElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (!c.field()->same_field(*field_)) throw std::invalid_argument("coefficient field mismatch");
    trim();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const FqElement& c) {
    return Poly(c.field(), std::vector<FqElement>{c});
}

Poly Poly::x(FqFieldPtr field) {
    return Poly(field, {field->zero(), field->one()});
}

Poly Poly::from_ints(FqFieldPtr field, const std::vector<int>& coeffs) {
    std::vector<FqElement> cs;
    cs.reserve(coeffs.size());
    for (int c : coeffs) cs.push_back(field->from_int(c));
    return Poly(field, std::move(cs));
}

bool Poly::is_monic() const {
    return !coeffs_.empty() && coeffs_.back().is_one();
}

const FqElement& Poly::leading() const {
    if (coeffs_.empty()) throw std::invalid_argument("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

FqElement Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return field_->zero();
    return coeffs_[i];
}

Poly Poly::operator+(const Poly& o) const {
    if (!field_->same_field(*o.field_)) throw std::invalid_argument("field mismatch");
    std::vector<FqElement> c(std::max(coeffs_.size(), o.coeffs_.size()), field_->zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] = c[i] + o.coeffs_[i];
    return Poly(field_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    if (!field_->same_field(*o.field_)) throw std::invalid_argument("field mismatch");
    std::vector<FqElement> c(std::max(coeffs_.size(), o.coeffs_.size()), field_->zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] = c[i] - o.coeffs_[i];
    return Poly(field_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (!field_->same_field(*o.field_)) throw std::invalid_argument("field mismatch");
    if (is_zero() || o.is_zero()) return Poly(field_);
    std::vector<FqElement> c(coeffs_.size() + o.coeffs_.size() - 1, field_->zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] = c[i + j] + coeffs_[i] * o.coeffs_[j];
    }
    return Poly(field_, std::move(c));
}

Poly Poly::operator*(const FqElement& s) const {
    std::vector<FqElement> c;
    c.reserve(coeffs_.size());
    for (const auto& a : coeffs_) c.push_back(a * s);
    return Poly(field_, std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& o) const {
    if (!field_->same_field(*o.field_)) throw std::invalid_argument("field mismatch");
    if (o.is_zero()) throw std::invalid_argument("division by zero polynomial");
    Poly r = *this;
    std::vector<FqElement> q(std::max<int>(degree() - o.degree() + 1, 0), field_->zero());
    FqElement lead_inv = o.leading().inverse();
    while (!r.is_zero() && r.degree() >= o.degree()) {
        int shift = r.degree() - o.degree();
        FqElement c = r.leading() * lead_inv;
        q[shift] = c;
        r = r - (o * c).shifted(shift);
    }
    return {Poly(field_, std::move(q)), std::move(r)};
}

Poly Poly::shifted(int n) const {
    if (is_zero()) return *this;
    std::vector<FqElement> c(coeffs_.size() + n, field_->zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i + n] = coeffs_[i];
    return Poly(field_, std::move(c));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

Poly Poly::derivative() const {
    if (degree() < 1) return Poly(field_);
    std::vector<FqElement> c;
    c.reserve(coeffs_.size() - 1);
    for (int i = 1; i <= degree(); ++i) c.push_back(coeffs_[i] * field_->from_int(i));
    return Poly(field_, std::move(c));
}

FqElement Poly::eval(const FqElement& x) const {
    FqElement acc = x.field()->zero();
    for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs_[i];
    return acc;
}

bool Poly::operator==(const Poly& o) const {
    if (!field_->same_field(*o.field_)) return false;
    if (coeffs_.size() != o.coeffs_.size()) return false;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != o.coeffs_[i]) return false;
    return true;
}

bool Poly::enum_less(const Poly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    for (int i = degree(); i >= 0; --i) {
        if (coeff(i) != o.coeff(i)) return coeff(i).value_less(o.coeff(i));
    }
    return false;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly pow_mod(const Poly& b, uint64_t e, const Poly& m) {
    Poly r = Poly::one(b.field());
    Poly base = b % m;
    while (e) {
        if (e & 1) r = (r * base) % m;
        base = (base * base) % m;
        e >>= 1;
    }
    return r;
}

Poly frobenius_power_mod(const Poly& m, int iters) {
    const int p = m.field()->characteristic();
    const int k = m.field()->degree();
    Poly h = Poly::x(m.field()) % m;
    for (int i = 0; i < iters * k; ++i) h = pow_mod(h, p, m);
    return h;
}

namespace {

// h(x) -> h(g(x)) mod m, used to iterate q-power Frobenius cheaply.
Poly compose_mod(const Poly& h, const Poly& g, const Poly& m) {
    Poly acc = Poly::zero(m.field());
    for (int i = h.degree(); i >= 0; --i)
        acc = (acc * g + Poly::constant(h.coeff(i))) % m;
    return acc;
}

}  // namespace

bool is_irreducible(const Poly& f_in) {
    if (f_in.degree() < 1) throw std::invalid_argument("irreducibility is undefined for constants");
    Poly f = f_in.monic();
    int n = f.degree();
    if (n == 1) return true;
    // Rabin: x^(q^n) == x mod f, and gcd(x^(q^(n/l)) - x, f) = 1 for primes l | n.
    Poly xq = frobenius_power_mod(f, 1);  // x^q mod f
    std::vector<Poly> steps{Poly::x(f.field()) % f};
    Poly cur = steps[0];
    for (int i = 1; i <= n; ++i) {
        cur = compose_mod(cur, xq, f);  // x^(q^i)
        steps.push_back(cur);
    }
    if (steps[n] != steps[0]) return false;
    for (int l = 2; l <= n; ++l) {
        if (n % l != 0) continue;
        bool lp = true;
        for (int d = 2; d * d <= l; ++d)
            if (l % d == 0) lp = false;
        if (!lp) continue;
        Poly g = poly_gcd(steps[n / l] - steps[0], f);
        if (g.degree() != 0) return false;
    }
    return true;
}

namespace {

// p-th root of an element (Frobenius inverse): x^(p^(k-1)).
FqElement pth_root(const FqElement& a) {
    return a.frobenius_iter(a.field()->degree() - 1);
}


// Yun-style squarefree decomposition adapted to positive characteristic:
// strips gcd(f, f') repeatedly and handles f' = 0 via p-th roots.
void squarefree_decompose(const Poly& f, std::vector<std::pair<Poly, int>>& out, int mult) {
    if (f.degree() < 1) return;
    Poly d = f.derivative();
    if (d.is_zero()) {
        // f = g(x^p); take the p-th root of each coefficient.
        int p = f.field()->characteristic();
        std::vector<FqElement> cs;
        for (int i = 0; i <= f.degree(); i += p) cs.push_back(pth_root(f.coeff(i)));
        squarefree_decompose(Poly(f.field(), cs), out, mult * p);
        return;
    }
    Poly c = poly_gcd(f, d);
    Poly w = f / c;  // product of squarefree part
    int i = 1;
    while (w.degree() > 0) {
        Poly y = poly_gcd(w, c);
        Poly part = w / y;
        if (part.degree() > 0) out.emplace_back(part.monic(), mult * i);
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) squarefree_decompose(c, out, mult);
}

// Distinct-degree decomposition of a squarefree monic f.
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f) {
    std::vector<std::pair<Poly, int>> out;
    Poly rem = f;
    Poly xq = frobenius_power_mod(f, 1);
    Poly h = Poly::x(f.field()) % f;  // x^(q^d) mod f as d advances
    int d = 0;
    while (rem.degree() > 0) {
        ++d;
        if (2 * d > rem.degree()) {
            out.emplace_back(rem, rem.degree());
            break;
        }
        h = compose_mod(h, xq, f);
        Poly g = poly_gcd(h - Poly::x(f.field()), rem);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            rem = rem / g;
        }
    }
    return out;
}

// Trace over F_2 of h inside F_q[x]/(f) with q = 2^k and factors of degree d:
// h + h^2 + h^4 + ... (k*d terms).
Poly additive_trace(const Poly& h, const Poly& f, int d) {
    int kd = f.field()->degree() * d;
    Poly acc = h % f;
    Poly cur = acc;
    for (int i = 1; i < kd; ++i) {
        cur = (cur * cur) % f;
        acc = acc + cur;
    }
    return acc;
}

void equal_degree_split(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const auto field = f.field();
    const int p = field->characteristic();
    Poly g = Poly::zero(field);
    while (true) {
        // Random polynomial of degree < deg f.
        std::vector<FqElement> cs;
        for (int i = 0; i < f.degree(); ++i) {
            std::vector<uint8_t> coords(field->degree());
            for (auto& c : coords) c = static_cast<uint8_t>(rng() % p);
            cs.push_back(field->from_coords(std::move(coords)));
        }
        Poly h(field, std::move(cs));
        if (h.degree() < 1) continue;
        Poly t;
        if (p == 2) {
            t = additive_trace(h, f, d);
        } else {
            // (q^d - 1)/2 as a 128-bit exponent; enough for every field this
            // library constructs in odd characteristic.
            unsigned __int128 qd = 1;
            for (int i = 0; i < field->degree() * d; ++i) {
                if (qd > (static_cast<unsigned __int128>(1) << 120)) throw std::runtime_error("field too large for odd-characteristic splitting");
                qd *= p;
            }
            unsigned __int128 e = (qd - 1) / 2;
            Poly r = Poly::one(field);
            Poly base = h % f;
            while (e) {
                if (e & 1) r = (r * base) % f;
                base = (base * base) % f;
                e >>= 1;
            }
            t = r - Poly::one(field);
        }
        g = poly_gcd(t, f);
        if (g.degree() > 0 && g.degree() < f.degree()) break;
    }
    equal_degree_split(g, d, rng, out);
    equal_degree_split(f / g, d, rng, out);
}

}  // namespace

std::vector<std::pair<Poly, int>> factor(const Poly& f, uint64_t seed) {
    if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    std::vector<std::pair<Poly, int>> sqf;
    squarefree_decompose(f.monic(), sqf, 1);
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Poly, int>> out;
    for (const auto& [part, mult] : sqf) {
        for (const auto& [g, d] : distinct_degree(part)) {
            std::vector<Poly> irred;
            equal_degree_split(g, d, rng, irred);
            for (auto& h : irred) out.emplace_back(std::move(h), mult);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first.enum_less(b.first);
        return a.second < b.second;
    });
    return out;
}

std::vector<FqElement> poly_roots(const Poly& f, uint64_t seed) {
    std::vector<FqElement> roots;
    for (const auto& [g, mult] : factor(f, seed)) {
        (void)mult;
        if (g.degree() == 1) roots.push_back(-g.coeff(0));
    }
    std::sort(roots.begin(), roots.end(), [](const FqElement& a, const FqElement& b) { return a.value_less(b); });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<FqElement> artin_schreier_roots(const FqElement& c) {
    const auto field = c.field();
    if (field->characteristic() != 2)
        throw std::invalid_argument("Artin-Schreier roots require characteristic 2");
    const int k = field->degree();
    // Solve the F_2-linear system (x^2 + x) = c.
    std::vector<std::vector<uint8_t>> m(k, std::vector<uint8_t>(k + 1, 0));
    for (int j = 0; j < k; ++j) {
        std::vector<uint8_t> e(k, 0);
        e[j] = 1;
        FqElement b = field->from_coords(e);
        FqElement img = b * b + b;
        for (int i = 0; i < k; ++i) m[i][j] = img.coords()[i];
    }
    for (int i = 0; i < k; ++i) m[i][k] = c.coords()[i];
    // Gaussian elimination over F_2.
    std::vector<int> pivot_col(k, -1);
    int row = 0;
    for (int col = 0; col < k && row < k; ++col) {
        int sel = -1;
        for (int i = row; i < k; ++i)
            if (m[i][col]) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[sel], m[row]);
        for (int i = 0; i < k; ++i) {
            if (i != row && m[i][col])
                for (int j = col; j <= k; ++j) m[i][j] ^= m[row][j];
        }
        pivot_col[row] = col;
        ++row;
    }
    for (int i = row; i < k; ++i)
        if (m[i][k]) return {};  // inconsistent: no root
    std::vector<uint8_t> x(k, 0);
    for (int i = 0; i < row; ++i) x[pivot_col[i]] = m[i][k];
    FqElement r = field->from_coords(std::move(x));
    FqElement r2 = r + field->one();
    if (r2.value_less(r)) std::swap(r, r2);
    return {r, r2};
}

namespace {

// Coordinates of an algebra element (polynomial over base, degree < d) as a
// flat F_p vector of length base_degree * d.
std::vector<uint8_t> algebra_coords(const Poly& e, int k, int d) {
    std::vector<uint8_t> v(static_cast<size_t>(k) * d, 0);
    for (int j = 0; j <= e.degree(); ++j) {
        const FqElement c = e.coeff(j);
        for (int i = 0; i < k; ++i) v[static_cast<size_t>(j) * k + i] = c.coords()[i];
    }
    return v;
}

// Minimal polynomial over F_p of theta inside base[x]/(h); returns the monic
// coefficient vector, or nullopt if the degree is less than full.
std::optional<std::vector<uint8_t>> full_degree_min_poly(const Poly& theta, const Poly& h, int n) {
    const auto base = h.field();
    const int p = base->characteristic();
    const int k = base->degree();
    const int d = h.degree();
    // rows r = theta^r in algebra coords, augmented with combination tracking.
    std::vector<std::vector<int>> rows;      // reduced rows
    std::vector<std::vector<int>> combos;    // combination over powers
    std::vector<int> pivots;                 // pivot column per reduced row
    auto inv_mod_p = [p](int x) {
        x = ((x % p) + p) % p;
        for (int y = 1; y < p; ++y)
            if (x * y % p == 1) return y;
        throw std::runtime_error("no inverse mod p");
    };
    Poly cur = Poly::one(base);
    for (int r = 0; r <= n; ++r) {
        auto rc = algebra_coords(cur, k, d);
        std::vector<int> v(rc.begin(), rc.end());
        std::vector<int> combo(n + 1, 0);
        combo[r] = 1;
        for (size_t i = 0; i < rows.size(); ++i) {
            int c = v[pivots[i]];
            if (c == 0) continue;
            for (int j = 0; j < n; ++j) v[j] = ((v[j] - c * rows[i][j]) % p + p) % p;
            for (int j = 0; j <= n; ++j) combo[j] = ((combo[j] - c * combos[i][j]) % p + p) % p;
        }
        int piv = -1;
        for (int j = 0; j < n; ++j)
            if (v[j]) {
                piv = j;
                break;
            }
        if (piv < 0) {
            if (r < n) return std::nullopt;  // dependence before full degree
            // combo gives the minimal polynomial (monic after scaling).
            int lead = combo[n];
            int s = inv_mod_p(lead);
            std::vector<uint8_t> mp(n + 1);
            for (int j = 0; j <= n; ++j) mp[j] = static_cast<uint8_t>(combo[j] * s % p);
            return mp;
        }
        int s = inv_mod_p(v[piv]);
        for (int j = 0; j < n; ++j) v[j] = v[j] * s % p;
        for (int j = 0; j <= n; ++j) combo[j] = combo[j] * s % p;
        rows.push_back(std::move(v));
        combos.push_back(std::move(combo));
        pivots.push_back(piv);
        cur = (cur * theta) % h;
    }
    return std::nullopt;
}

// Express e as an F_p-polynomial in theta (powers reduced in the algebra).
std::vector<uint8_t> express_in_powers(const Poly& e, const Poly& theta, const Poly& h, int n) {
    const auto base = h.field();
    const int p = base->characteristic();
    const int k = base->degree();
    const int d = h.degree();
    std::vector<std::vector<int>> m(n, std::vector<int>(n + 1, 0));
    Poly cur = Poly::one(base);
    for (int c = 0; c < n; ++c) {
        auto rc = algebra_coords(cur, k, d);
        for (int i = 0; i < n; ++i) m[i][c] = rc[i];
        cur = (cur * theta) % h;
    }
    auto ec = algebra_coords(e, k, d);
    for (int i = 0; i < n; ++i) m[i][n] = ec[i];
    auto inv_mod_p = [p](int x) {
        x = ((x % p) + p) % p;
        for (int y = 1; y < p; ++y)
            if (x * y % p == 1) return y;
        throw std::runtime_error("no inverse mod p");
    };
    std::vector<int> pivot_col(n, -1);
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int sel = -1;
        for (int i = row; i < n; ++i)
            if (m[i][col]) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[sel], m[row]);
        int s = inv_mod_p(m[row][col]);
        for (int j = col; j <= n; ++j) m[row][j] = m[row][j] * s % p;
        for (int i = 0; i < n; ++i) {
            if (i != row && m[i][col]) {
                int c = m[i][col];
                for (int j = col; j <= n; ++j) m[i][j] = ((m[i][j] - c * m[row][j]) % p + p) % p;
            }
        }
        pivot_col[row] = col;
        ++row;
    }
    std::vector<uint8_t> x(n, 0);
    for (int i = 0; i < row; ++i)
        if (pivot_col[i] >= 0) x[pivot_col[i]] = static_cast<uint8_t>(m[i][n]);
    return x;
}

}  // namespace

FlattenedQuotient flatten_quotient(const FqFieldPtr& base, const Poly& h) {
    if (!h.is_monic() || h.degree() < 1) throw std::invalid_argument("modulus must be monic of degree >= 1");
    const int n = base->degree() * h.degree();
    const Poly xclass = Poly::x(base) % h;
    const Poly uclass = Poly::constant(base->gen());

    auto finish = [&](const Poly& theta, const std::vector<uint8_t>& mp) {
        auto big = FqField::make(base->characteristic(), mp);
        // theta maps to the generator of the big field; express u and x in
        // powers of theta and map them across.
        auto lift = [&](const std::vector<uint8_t>& pows) {
            FqElement acc = big->zero();
            for (int i = n - 1; i >= 0; --i) acc = acc * big->gen() + big->from_int(pows[i]);
            return acc;
        };
        FqElement u_im = lift(express_in_powers(uclass, theta, h, n));
        FqElement x_im = lift(express_in_powers(xclass, theta, h, n));
        return FlattenedQuotient{big, FqEmbedding{base, big, u_im}, x_im};
    };

    // x + lambda*u over the base in enumeration order.
    uint64_t count = 1;
    for (int i = 0; i < base->degree(); ++i) count *= base->characteristic();
    if (count <= (1u << 16)) {
        for (uint64_t v = 0; v < count; ++v) {
            Poly theta = (xclass + uclass * Poly::constant(base->from_value(v))) % h;
            if (auto mp = full_degree_min_poly(theta, h, n)) return finish(theta, *mp);
        }
    } else {
        Poly theta = xclass;
        if (auto mp = full_degree_min_poly(theta, h, n)) return finish(theta, *mp);
    }
    // Deterministic pseudo-random candidates.
    std::mt19937_64 rng(0x7468657461u);
    const int p = base->characteristic();
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::vector<FqElement> cs;
        for (int i = 0; i < h.degree(); ++i) {
            std::vector<uint8_t> coords(base->degree());
            for (auto& c : coords) c = static_cast<uint8_t>(rng() % p);
            cs.push_back(base->from_coords(std::move(coords)));
        }
        Poly theta(base, std::move(cs));
        if (auto mp = full_degree_min_poly(theta, h, n)) return finish(theta, *mp);
    }
    throw std::runtime_error("primitive element search exhausted; modulus is likely reducible");
}

FlattenedQuotient extend_by_artin_schreier(const FqFieldPtr& field, const FqElement& c) {
    if (field->characteristic() != 2)
        throw std::invalid_argument("Artin-Schreier extension requires characteristic 2");
    if (c.trace_to_prime() == 0)
        throw std::invalid_argument("constant has trace 0: the roots already lie in the field");
    Poly h(field, {c, field->one(), field->one()});  // X^2 + X + c
    return flatten_quotient(field, h);
}

std::vector<Poly> enumerate_monic(const FqFieldPtr& field, int d) {
    if (d < 0) throw std::invalid_argument("degree must be >= 0");
    uint64_t q = 1;
    for (int i = 0; i < field->degree(); ++i) q *= field->characteristic();
    uint64_t total = 1;
    for (int i = 0; i < d; ++i) {
        total *= q;
        if (total > (1ull << 26)) throw std::invalid_argument("enumeration too large");
    }
    std::vector<Poly> out;
    out.reserve(total);
    for (uint64_t v = 0; v < total; ++v) {
        std::vector<FqElement> cs;
        cs.reserve(d + 1);
        uint64_t t = v;
        for (int i = 0; i < d; ++i) {
            cs.push_back(field->from_value(t % q));
            t /= q;
        }
        cs.push_back(field->one());
        out.push_back(Poly(field, std::move(cs)));
    }
    return out;
}

std::vector<Poly> enumerate_irreducible(const FqFieldPtr& field, int d) {
    std::vector<Poly> out;
    for (const auto& f : enumerate_monic(field, d))
        if (is_irreducible(f)) out.push_back(f);
    return out;
}

}  // namespace ffeq
