#include "ffeq/goss.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffeq {

LaurentSeries::LaurentSeries(FqFieldPtr base, int v, std::vector<FqElement> coeffs, int end)
    : base_(std::move(base)), v_(v), end_(end), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) > end_ - v_) coeffs_.resize(end_ - v_, base_->zero());
    trim();
}

void LaurentSeries::trim() {
    while (!coeffs_.empty() && coeffs_.front().is_zero()) {
        coeffs_.erase(coeffs_.begin());
        ++v_;
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    if (coeffs_.empty()) v_ = end_;
}

LaurentSeries LaurentSeries::zero(FqFieldPtr base, int end) {
    return LaurentSeries(std::move(base), end, {}, end);
}

LaurentSeries LaurentSeries::one(FqFieldPtr base, int prec) {
    auto c = base->one();
    return LaurentSeries(std::move(base), 0, {c}, prec);
}

LaurentSeries LaurentSeries::pi_power(FqFieldPtr base, int j, int prec) {
    auto c = base->one();
    return LaurentSeries(std::move(base), j, {c}, j + prec);
}

int LaurentSeries::valuation() const {
    if (is_zero()) throw std::invalid_argument("the zero series has no valuation");
    return v_;
}

FqElement LaurentSeries::coeff(int exponent) const {
    if (exponent >= end_) throw std::invalid_argument("coefficient beyond the precision window");
    int i = exponent - v_;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return base_->zero();
    return coeffs_[i];
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    if (!base_->same_field(*o.base_)) throw std::invalid_argument("base field mismatch");
    int end = std::min(end_, o.end_);
    int v = std::min(v_, o.v_);
    if (v >= end) return zero(base_, end);
    std::vector<FqElement> c(end - v, base_->zero());
    for (int e = v; e < end; ++e) {
        FqElement a = e < end_ ? coeff(e) : base_->zero();
        FqElement b = e < o.end_ ? o.coeff(e) : base_->zero();
        c[e - v] = a + b;
    }
    return LaurentSeries(base_, v, std::move(c), end);
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    if (!base_->same_field(*o.base_)) throw std::invalid_argument("base field mismatch");
    // Unknown tails bound the product's window.
    int va = is_zero() ? end_ : v_;
    int vb = o.is_zero() ? o.end_ : o.v_;
    int end = std::min(end_ + vb, o.end_ + va);
    if (is_zero() || o.is_zero()) return zero(base_, end);
    int v = v_ + o.v_;
    if (v >= end) return zero(base_, end);
    std::vector<FqElement> c(end - v, base_->zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            size_t k = i + j;
            if (static_cast<int>(k) >= end - v) break;
            c[k] = c[k] + coeffs_[i] * o.coeffs_[j];
        }
    }
    return LaurentSeries(base_, v, std::move(c), end);
}

LaurentSeries LaurentSeries::scaled(const FqElement& s) const {
    if (s.is_zero()) return zero(base_, end_);
    std::vector<FqElement> c;
    c.reserve(coeffs_.size());
    for (const auto& a : coeffs_) c.push_back(a * s);
    return LaurentSeries(base_, v_, std::move(c), end_);
}

LaurentSeries LaurentSeries::inverse() const {
    if (is_zero()) throw std::invalid_argument("cannot invert the zero series");
    const int len = end_ - v_;
    std::vector<FqElement> d(len, base_->zero());
    FqElement lead_inv = coeffs_[0].inverse();
    d[0] = lead_inv;
    for (int n = 1; n < len; ++n) {
        FqElement acc = base_->zero();
        for (int i = 1; i <= n; ++i) {
            FqElement ci = i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : base_->zero();
            acc = acc + ci * d[n - i];
        }
        d[n] = -(acc * lead_inv);
    }
    return LaurentSeries(base_, -v_, std::move(d), -v_ + len);
}

LaurentSeries LaurentSeries::pow(int j) const {
    if (j == 0) {
        int len = is_zero() ? end_ - v_ : end_ - v_;
        return one(base_, std::max(len, 1));
    }
    LaurentSeries b = j < 0 ? inverse() : *this;
    int e = j < 0 ? -j : j;
    LaurentSeries acc = b;
    for (int i = 1; i < e; ++i) acc = acc * b;
    return acc;
}

LaurentSeries LaurentSeries::truncated(int end) const {
    if (end >= end_) return *this;
    std::vector<FqElement> c;
    for (int e = v_; e < end; ++e) c.push_back(coeff(e));
    return LaurentSeries(base_, v_, std::move(c), end);
}

bool LaurentSeries::agrees_with(const LaurentSeries& o) const {
    int end = std::min(end_, o.end_);
    int lb = std::min(is_zero() ? end : v_, o.is_zero() ? end : o.v_);
    for (int e = lb; e < end; ++e)
        if (coeff(e) != o.coeff(e)) return false;
    return true;
}

bool LaurentSeries::operator==(const LaurentSeries& o) const {
    if (!base_->same_field(*o.base_)) return false;
    if (is_zero() && o.is_zero()) return end_ == o.end_;
    return v_ == o.v_ && end_ == o.end_ && coeffs_ == o.coeffs_;
}

std::string LaurentSeries::str() const {
    if (is_zero()) return "0 + O(pi^" + std::to_string(end_) + ")";
    std::string s;
    for (int e = v_; e < end_; ++e) {
        FqElement c = coeff(e);
        if (c.is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string term;
        if (e == 0)
            term = c.str();
        else {
            std::string pi = e == 1 ? "pi" : "pi^" + std::to_string(e);
            term = c.is_one() ? pi : c.str() + "*" + pi;
        }
        s += term;
    }
    if (s.empty()) s = "0";
    return s + " + O(pi^" + std::to_string(end_) + ")";
}

SPoint SPoint::integer_point(int j, const FqFieldPtr& base, int laurent_prec, int n_digits) {
    const int p = base->characteristic();
    uint64_t mod = 1;
    for (int i = 0; i < n_digits; ++i) mod *= static_cast<uint64_t>(p);
    int64_t r = static_cast<int64_t>(((j % static_cast<int64_t>(mod)) + static_cast<int64_t>(mod)) %
                                     static_cast<int64_t>(mod));
    std::vector<int> digits(n_digits);
    for (int i = 0; i < n_digits; ++i) {
        digits[i] = static_cast<int>(r % p);
        r /= p;
    }
    return SPoint{LaurentSeries::pi_power(base, -j, laurent_prec), std::move(digits)};
}

std::pair<int, LaurentSeries> canonical_decomposition(const Poly& f, int prec) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial has no decomposition");
    if (!f.is_monic()) throw std::invalid_argument("decomposition is defined for monic polynomials");
    const int d = f.degree();
    std::vector<FqElement> c;
    c.reserve(d + 1);
    for (int j = 0; j <= d && j < prec; ++j) c.push_back(f.coeff(d - j));
    return {-d, LaurentSeries(f.field(), 0, std::move(c), prec)};
}

LaurentSeries one_unit_power(const LaurentSeries& u, const std::vector<int>& y_digits, int p) {
    if (u.is_zero() || u.valuation() != 0 || !u.coeff(0).is_one())
        throw std::invalid_argument("one_unit_power requires a 1-unit");
    const auto base = u.base();
    const int end = u.precision_end();
    // m = u - 1
    std::vector<FqElement> mc;
    for (int e = 1; e < end; ++e) mc.push_back(u.coeff(e));
    LaurentSeries m(base, 1, std::move(mc), end);

    LaurentSeries acc = LaurentSeries::one(base, end);
    LaurentSeries mp = m;  // m^(p^i)
    for (size_t i = 0; i < y_digits.size(); ++i) {
        if (y_digits[i] < 0 || y_digits[i] >= p) throw std::invalid_argument("digit out of range");
        if (y_digits[i] > 0) {
            LaurentSeries factor = LaurentSeries::one(base, end) + mp;
            for (int a = 0; a < y_digits[i]; ++a) acc = acc * factor;
        }
        if (i + 1 < y_digits.size()) mp = mp.pow(p);
    }
    return acc.truncated(end);
}

LaurentSeries goss_exponent(const Poly& f, const SPoint& s) {
    const auto base = s.x.base();
    if (!f.field()->same_field(*base)) throw std::invalid_argument("field mismatch");
    const int prec = s.x.precision_end() - (s.x.is_zero() ? 0 : s.x.valuation());
    auto [v, unit] = canonical_decomposition(f, prec);
    const int p = base->characteristic();
    LaurentSeries xs = s.x.pow(-v);
    return xs * one_unit_power(unit, s.y_digits, p);
}

ZetaTable zeta_table(const FieldDesc& k, int max_degree, int p, int witt_len) {
    IdealCountTable counts = ideal_count_table(k, max_degree, p);
    ZetaTable t;
    t.field_name = k.name;
    t.max_degree = max_degree;
    t.p = p;
    t.witt_len = witt_len;
    uint64_t mod = 1;
    for (int i = 0; i < witt_len; ++i) mod *= static_cast<uint64_t>(p);
    for (auto& row : counts.rows) {
        uint64_t reduced = static_cast<uint64_t>(row.b % mod);
        t.rows.push_back(ZetaRow{row.f, row.a, row.b, WittVector::from_integer(reduced, p, witt_len)});
    }
    return t;
}

bool zeta_tables_equal(const ZetaTable& a, const ZetaTable& b) {
    if (a.max_degree != b.max_degree || a.p != b.p || a.witt_len != b.witt_len) return false;
    if (a.rows.size() != b.rows.size()) return false;
    for (size_t i = 0; i < a.rows.size(); ++i) {
        if (a.rows[i].f != b.rows[i].f || a.rows[i].a != b.rows[i].a || a.rows[i].b != b.rows[i].b ||
            a.rows[i].witt != b.rows[i].witt)
            return false;
    }
    return true;
}

EulerCheck euler_product_check(const FieldDesc& k, const SPoint& s, int max_degree) {
    const auto base = base_field(k.base_q);
    if (!s.x.base()->same_field(*base)) throw std::invalid_argument("exponent base mismatch");
    if (s.x.is_zero() || s.x.valuation() >= 0)
        throw std::invalid_argument("s lies outside the convergence region (need |x| > 1)");
    const int p = base->characteristic();

    IdealCountTable counts = ideal_count_table(k, max_degree, p);
    LaurentSeries sum = LaurentSeries::zero(base, s.x.precision_end() - s.x.valuation());
    for (const auto& row : counts.rows) {
        if (row.a == 0) continue;
        LaurentSeries term = goss_exponent(row.f, s).inverse().scaled(base->from_int(row.a));
        sum = sum + term;
    }

    LaurentSeries prod = LaurentSeries::one(base, sum.precision_end());
    for (const auto& prime : primes_up_to(k.base_q, max_degree)) {
        SplittingType st = splitting_type(k, prime);
        for (int deg : st.degrees()) {
            Poly norm = Poly::one(base);
            for (int i = 0; i < deg; ++i) norm = norm * prime.gen;
            LaurentSeries ns = goss_exponent(norm, s).inverse();
            LaurentSeries factor = LaurentSeries::one(base, ns.precision_end()) + ns.scaled(-base->one());
            prod = prod * factor.inverse();
        }
    }

    // Terms beyond the degree bound first affect exponent (D+1)*|v(x)|.
    int window = (max_degree + 1) * (-s.x.valuation());
    EulerCheck out{sum.truncated(std::min(window, sum.precision_end())),
                   prod.truncated(std::min(window, prod.precision_end())), false};
    out.agree = out.sum.agrees_with(out.product);
    return out;
}

}  // namespace ffeq
