#include "ffeq/tower.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffeq {

namespace {

// Fraction over F_2[T], kept reduced.  Used only by the inverse solver.
struct Frac {
    F2Poly n, d;
    static Frac of(F2Poly nn, F2Poly dd = F2Poly::one()) {
        Frac f{std::move(nn), std::move(dd)};
        f.reduce();
        return f;
    }
    void reduce() {
        if (n.is_zero()) {
            d = F2Poly::one();
            return;
        }
        F2Poly g = f2_gcd(n, d);
        if (!g.is_one()) {
            n = n / g;
            d = d / g;
        }
    }
    bool is_zero() const { return n.is_zero(); }
    Frac operator+(const Frac& o) const { return of(n * o.d + o.n * d, d * o.d); }
    Frac operator*(const Frac& o) const { return of(n * o.n, d * o.d); }
    Frac inv() const {
        if (is_zero()) throw std::invalid_argument("division by zero fraction");
        return of(d, n);
    }
};

}  // namespace

TowerSpecPtr TowerSpec::empty() {
    return TowerSpecPtr(new TowerSpec());
}

TowerSpecPtr TowerSpec::extend(const TowerSpecPtr& base, const std::string& name,
                               const TowerElement& relation) {
    if (!relation.spec()->compatible(*base))
        throw std::invalid_argument("relation constant must live over the base spec");
    if (base->index_of(name) >= 0) throw std::invalid_argument("duplicate generator name");
    if (base->count() >= 8) throw std::invalid_argument("at most 8 generators supported");
    if (!relation.den().is_one())
        throw std::invalid_argument("relation constants must be integral");
    auto s = new TowerSpec(*base);
    s->names_.push_back(name);
    std::vector<F2Poly> raw(base->dim());
    for (size_t m = 0; m < base->dim(); ++m) raw[m] = relation.num(m);
    s->relations_.push_back(std::move(raw));
    return TowerSpecPtr(s);
}

TowerSpecPtr TowerSpec::prefix(int n) const {
    if (n < 0 || n > count()) throw std::invalid_argument("prefix length out of range");
    auto s = new TowerSpec();
    s->names_.assign(names_.begin(), names_.begin() + n);
    s->relations_.assign(relations_.begin(), relations_.begin() + n);
    return TowerSpecPtr(s);
}

TowerSpecPtr TowerSpec::with_derived(const std::string& name, const TowerElement& value) const {
    if (!value.spec()->compatible(*this))
        throw std::invalid_argument("derived element must live over this spec");
    if (!value.den().is_one()) throw std::invalid_argument("derived elements must be integral");
    auto s = new TowerSpec(*this);
    std::vector<F2Poly> raw(dim());
    for (size_t m = 0; m < dim(); ++m) raw[m] = value.num(m);
    s->derived_[name] = std::move(raw);
    return TowerSpecPtr(s);
}

int TowerSpec::index_of(const std::string& name) const {
    for (int i = 0; i < count(); ++i)
        if (names_[i] == name) return i;
    return -1;
}

TowerElement TowerSpec::relation(int i) const {
    if (i < 0 || i >= count()) throw std::invalid_argument("generator index out of range");
    std::vector<F2Poly> num(dim());
    for (size_t m = 0; m < relations_[i].size(); ++m) num[m] = relations_[i][m];
    return TowerElement::from_coeffs(shared_from_this(), std::move(num));
}

std::optional<TowerElement> TowerSpec::derived(const std::string& name) const {
    auto it = derived_.find(name);
    if (it == derived_.end()) return std::nullopt;
    std::vector<F2Poly> num(it->second);
    num.resize(dim());
    return TowerElement::from_coeffs(shared_from_this(), std::move(num));
}

std::vector<std::string> TowerSpec::derived_names() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : derived_) {
        (void)v;
        out.push_back(k);
    }
    return out;
}

bool TowerSpec::compatible(const TowerSpec& o) const {
    return names_ == o.names_ && relations_ == o.relations_;
}

bool TowerSpec::extends(const TowerSpec& o) const {
    if (o.count() > count()) return false;
    for (int i = 0; i < o.count(); ++i)
        if (names_[i] != o.names_[i] || relations_[i] != o.relations_[i]) return false;
    return true;
}

TowerElement TowerElement::zero(const TowerSpecPtr& spec) {
    TowerElement e;
    e.spec_ = spec;
    e.num_.assign(spec->dim(), F2Poly());
    return e;
}

TowerElement TowerElement::one(const TowerSpecPtr& spec) {
    return rational(spec, F2Poly::one());
}

TowerElement TowerElement::rational(const TowerSpecPtr& spec, const F2Poly& num, const F2Poly& den) {
    TowerElement e = zero(spec);
    e.num_[0] = num;
    e.den_ = den;
    e.canonicalize();
    return e;
}

TowerElement TowerElement::generator(const TowerSpecPtr& spec, int i) {
    if (i < 0 || i >= spec->count()) throw std::invalid_argument("generator index out of range");
    TowerElement e = zero(spec);
    e.num_[size_t{1} << i] = F2Poly::one();
    return e;
}

TowerElement TowerElement::from_coeffs(const TowerSpecPtr& spec, std::vector<F2Poly> num,
                                       const F2Poly& den) {
    if (num.size() != spec->dim()) throw std::invalid_argument("coefficient vector has wrong size");
    TowerElement e;
    e.spec_ = spec;
    e.num_ = std::move(num);
    e.den_ = den;
    e.canonicalize();
    return e;
}

void TowerElement::canonicalize() {
    if (den_.is_zero()) throw std::invalid_argument("zero denominator");
    if (is_zero()) {
        den_ = F2Poly::one();
        return;
    }
    F2Poly g = den_;
    for (const auto& n : num_) {
        if (!n.is_zero()) g = f2_gcd(g, n);
        if (g.is_one()) return;
    }
    if (!g.is_one()) {
        for (auto& n : num_)
            if (!n.is_zero()) n = n / g;
        den_ = den_ / g;
    }
}

bool TowerElement::is_zero() const {
    return std::all_of(num_.begin(), num_.end(), [](const F2Poly& p) { return p.is_zero(); });
}

bool TowerElement::is_rational() const {
    for (size_t m = 1; m < num_.size(); ++m)
        if (!num_[m].is_zero()) return false;
    return true;
}

std::pair<F2Poly, F2Poly> TowerElement::rational_value() const {
    if (!is_rational()) throw std::invalid_argument("element is not rational");
    return {num_[0], den_};
}

std::optional<int> TowerElement::as_bit() const {
    if (!is_rational() || !den_.is_one()) return std::nullopt;
    if (num_[0].is_zero()) return 0;
    if (num_[0].is_one()) return 1;
    return std::nullopt;
}

TowerElement TowerElement::operator+(const TowerElement& o) const {
    if (!spec_->compatible(*o.spec_)) throw std::invalid_argument("tower spec mismatch");
    TowerElement e = zero(spec_);
    for (size_t m = 0; m < num_.size(); ++m) e.num_[m] = num_[m] * o.den_ + o.num_[m] * den_;
    e.den_ = den_ * o.den_;
    e.canonicalize();
    return e;
}

namespace {

// out += a*b over the first `ngen` generators; all spans have length 2^ngen.
// Splitting by the top generator g with relation constant c:
//   (x0 + x1 g)(y0 + y1 g) = (x0 y0 + x1 y1 c) + (x0 y1 + x1 y0 + x1 y1) g.
void mul_rec(const TowerSpec& spec, int ngen, const F2Poly* a, const F2Poly* b, F2Poly* out,
             const std::vector<std::vector<F2Poly>>& rels) {
    if (ngen == 0) {
        if (!a[0].is_zero() && !b[0].is_zero()) out[0] = out[0] + a[0] * b[0];
        return;
    }
    const size_t h = size_t{1} << (ngen - 1);
    auto all_zero = [h](const F2Poly* v) {
        for (size_t i = 0; i < h; ++i)
            if (!v[i].is_zero()) return false;
        return true;
    };
    bool a1z = all_zero(a + h), b1z = all_zero(b + h);
    mul_rec(spec, ngen - 1, a, b, out, rels);  // x0 y0
    if (!a1z || !b1z) {
        if (!b1z) mul_rec(spec, ngen - 1, a, b + h, out + h, rels);      // x0 y1
        if (!a1z) mul_rec(spec, ngen - 1, a + h, b, out + h, rels);      // x1 y0
        if (!a1z && !b1z) {
            std::vector<F2Poly> t(h);
            mul_rec(spec, ngen - 1, a + h, b + h, t.data(), rels);       // x1 y1
            for (size_t i = 0; i < h; ++i) out[h + i] = out[h + i] + t[i];
            mul_rec(spec, ngen - 1, t.data(), rels[ngen - 1].data(), out, rels);  // x1 y1 c
        }
    }
}

}  // namespace

TowerElement TowerElement::operator*(const TowerElement& o) const {
    if (!spec_->compatible(*o.spec_)) throw std::invalid_argument("tower spec mismatch");
    TowerElement e = zero(spec_);
    mul_rec(*spec_, spec_->count(), num_.data(), o.num_.data(), e.num_.data(), spec_->relations_);
    e.den_ = den_ * o.den_;
    e.canonicalize();
    return e;
}

TowerElement TowerElement::operator*(const F2Poly& c) const {
    TowerElement e = *this;
    for (auto& n : e.num_) n = n * c;
    e.canonicalize();
    return e;
}

TowerElement TowerElement::pow(unsigned e) const {
    TowerElement r = one(spec_);
    TowerElement b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

TowerElement TowerElement::inverse() const {
    if (is_zero()) throw std::invalid_argument("division by zero");
    const size_t n = spec_->dim();
    // Solve x * this = 1 by Gaussian elimination over F_2(T): column j of the
    // matrix is this * m_j expanded on the monomial basis.
    std::vector<std::vector<Frac>> m(n, std::vector<Frac>(n + 1, Frac::of(F2Poly())));
    for (size_t j = 0; j < n; ++j) {
        TowerElement basis = zero(spec_);
        basis.num_[j] = F2Poly::one();
        TowerElement col = *this * basis;
        for (size_t i = 0; i < n; ++i) m[i][j] = Frac::of(col.num(i), col.den());
    }
    m[0][n] = Frac::of(F2Poly::one());
    std::vector<int> pivot_col(n, -1);
    size_t row = 0;
    for (size_t col = 0; col < n && row < n; ++col) {
        size_t sel = row;
        while (sel < n && m[sel][col].is_zero()) ++sel;
        if (sel == n) continue;
        std::swap(m[sel], m[row]);
        Frac inv = m[row][col].inv();
        for (size_t j = col; j <= n; ++j) m[row][j] = m[row][j] * inv;
        for (size_t i = 0; i < n; ++i) {
            if (i != row && !m[i][col].is_zero()) {
                Frac c = m[i][col];
                for (size_t j = col; j <= n; ++j) m[i][j] = m[i][j] + c * m[row][j];
            }
        }
        pivot_col[row] = static_cast<int>(col);
        ++row;
    }
    for (size_t i = row; i < n; ++i)
        if (!m[i][n].is_zero()) throw std::invalid_argument("element is a zero divisor");
    std::vector<Frac> x(n, Frac::of(F2Poly()));
    for (size_t i = 0; i < row; ++i)
        if (pivot_col[i] >= 0) x[pivot_col[i]] = m[i][n];
    // Common denominator.
    F2Poly den = F2Poly::one();
    for (const auto& f : x)
        if (!f.is_zero()) den = den * (f.d / f2_gcd(den, f.d));
    std::vector<F2Poly> num(n);
    for (size_t i = 0; i < n; ++i)
        if (!x[i].is_zero()) num[i] = x[i].n * (den / x[i].d);
    return from_coeffs(spec_, std::move(num), den);
}

TowerElement TowerElement::lift_to(const TowerSpecPtr& bigger) const {
    if (!bigger->extends(*spec_)) throw std::invalid_argument("target spec does not extend source");
    std::vector<F2Poly> num(bigger->dim());
    for (size_t m = 0; m < num_.size(); ++m) num[m] = num_[m];
    return from_coeffs(bigger, std::move(num), den_);
}

bool TowerElement::operator==(const TowerElement& o) const {
    if (!spec_ || !o.spec_ || !spec_->compatible(*o.spec_)) return false;
    return num_ == o.num_ && den_ == o.den_;
}

FqElement TowerElement::eval_at(const FqElement& t_image, const std::vector<FqElement>& gen_images) const {
    const auto field = t_image.field();
    FqElement acc = field->zero();
    for (size_t m = 0; m < num_.size(); ++m) {
        if (num_[m].is_zero()) continue;
        FqElement term = num_[m].eval(t_image);
        for (int i = 0; i < spec_->count(); ++i) {
            if (!(m >> i & 1)) continue;
            if (i >= static_cast<int>(gen_images.size()))
                throw std::invalid_argument("missing generator image for " + spec_->name(i));
            term = term * gen_images[i];
        }
        acc = acc + term;
    }
    FqElement d = den_.eval(t_image);
    if (d.is_zero()) throw std::invalid_argument("denominator vanishes at this prime");
    return acc * d.inverse();
}

std::string TowerElement::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t m = 0; m < num_.size(); ++m) {
        if (num_[m].is_zero()) continue;
        if (!s.empty()) s += "+";
        std::string mono;
        for (int i = 0; i < spec_->count(); ++i) {
            if (m >> i & 1) {
                if (!mono.empty()) mono += "*";
                mono += spec_->name(i);
            }
        }
        bool trivial_coeff = num_[m].is_one();
        std::string coeff = num_[m].str();
        if (num_[m].degree() > 0 && (coeff.find('+') != std::string::npos) && !mono.empty())
            coeff = "(" + coeff + ")";
        if (mono.empty())
            s += coeff;
        else if (trivial_coeff)
            s += mono;
        else
            s += coeff + "*" + mono;
    }
    if (!den_.is_one()) {
        std::string d = den_.str();
        s = "(" + s + ")/(" + d + ")";
    }
    return s;
}

XPolyT::XPolyT(std::vector<TowerElement> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("empty polynomial");
    while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool XPolyT::is_monic() const {
    auto b = coeffs_.back().as_bit();
    return b && *b == 1;
}

XPolyT XPolyT::operator*(const XPolyT& o) const {
    const auto spec = coeffs_[0].spec();
    std::vector<TowerElement> out(coeffs_.size() + o.coeffs_.size() - 1, TowerElement::zero(spec));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] = out[i + j] + coeffs_[i] * o.coeffs_[j];
    }
    return XPolyT(std::move(out));
}

TowerElement XPolyT::eval(const TowerElement& x) const {
    TowerElement acc = TowerElement::zero(x.spec());
    for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs_[i];
    return acc;
}

bool XPolyT::has_rational_coeffs() const {
    for (const auto& c : coeffs_)
        if (!c.is_rational() || !c.den().is_one()) return false;
    return true;
}

std::vector<F2Poly> XPolyT::rational_coeffs() const {
    std::vector<F2Poly> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        if (!c.is_rational() || !c.den().is_one())
            throw std::invalid_argument("non-rational coefficient");
        out.push_back(c.num(0));
    }
    return out;
}

bool XPolyT::operator==(const XPolyT& o) const { return coeffs_ == o.coeffs_; }

std::string XPolyT::str() const {
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (coeffs_[i].is_zero()) continue;
        if (!s.empty()) s += "+";
        std::string var = i == 0 ? "" : (i == 1 ? "X" : "X^" + std::to_string(i));
        auto b = coeffs_[i].as_bit();
        if (b && *b == 1 && i > 0) {
            s += var;
            continue;
        }
        std::string c = coeffs_[i].str();
        if (c.find('+') != std::string::npos || c.find('/') != std::string::npos) c = "(" + c + ")";
        s += var.empty() ? c : c + "*" + var;
    }
    return s.empty() ? "0" : s;
}

XPolyT artin_schreier_xpoly(const TowerElement& c) {
    const auto spec = c.spec();
    return XPolyT({c, TowerElement::one(spec), TowerElement::one(spec)});
}

XPolyT conjugate_product(const std::vector<XPolyT>& quadratics) {
    if (quadratics.empty()) throw std::invalid_argument("empty conjugate list");
    XPolyT acc = quadratics[0];
    for (size_t i = 0; i < quadratics.size(); ++i) {
        if (quadratics[i].degree() != 2 || !quadratics[i].is_monic())
            throw std::invalid_argument("conjugates must be monic quadratics");
        if (i) acc = acc * quadratics[i];
    }
    for (const auto& c : acc.coeffs())
        if (!c.is_rational())
            throw std::invalid_argument("conjugate product does not collapse: non-rational coefficient " + c.str());
    return acc;
}

namespace {

struct EliminationRow {
    std::vector<F2Poly> coords;
    std::vector<F2Poly> combo;  // over original inserted rows (+ candidate last)
};

void strip_content(EliminationRow& r) {
    F2Poly g;
    bool first = true;
    auto acc = [&](const F2Poly& p) {
        if (p.is_zero()) return;
        g = first ? p : f2_gcd(g, p);
        first = false;
    };
    for (const auto& p : r.coords) acc(p);
    for (const auto& p : r.combo) acc(p);
    if (first || g.is_one()) return;
    for (auto& p : r.coords)
        if (!p.is_zero()) p = p / g;
    for (auto& p : r.combo)
        if (!p.is_zero()) p = p / g;
}

// Reduce r against the pivot rows (cross multiplication, characteristic 2).
void reduce_row(EliminationRow& r, const std::vector<EliminationRow>& pivots,
                const std::vector<int>& pivot_cols) {
    for (size_t i = 0; i < pivots.size(); ++i) {
        const F2Poly& rc = r.coords[pivot_cols[i]];
        if (rc.is_zero()) continue;
        const F2Poly& pc = pivots[i].coords[pivot_cols[i]];
        F2Poly rcc = rc;  // r is modified below
        for (size_t j = 0; j < r.coords.size(); ++j)
            r.coords[j] = r.coords[j] * pc + pivots[i].coords[j] * rcc;
        if (pivots[i].combo.size() > r.combo.size()) r.combo.resize(pivots[i].combo.size());
        for (size_t j = 0; j < r.combo.size(); ++j) {
            F2Poly other = j < pivots[i].combo.size() ? pivots[i].combo[j] : F2Poly();
            r.combo[j] = r.combo[j] * pc + other * rcc;
        }
        strip_content(r);
    }
}

}  // namespace

XPolyT min_poly(const TowerElement& e, uint32_t subfield_mask) {
    const auto spec = e.spec();
    const size_t dim = spec->dim();
    if (subfield_mask >= dim) throw std::invalid_argument("subfield mask out of range");
    // Downward closure: relations of included generators use included ones.
    for (int i = 0; i < spec->count(); ++i) {
        if (!(subfield_mask >> i & 1)) continue;
        TowerElement rel = spec->relation(i);
        for (size_t m = 0; m < dim; ++m)
            if (!rel.num(m).is_zero() && (m & ~static_cast<size_t>(subfield_mask)))
                throw std::invalid_argument("subfield generators are not downward closed");
    }
    std::vector<size_t> sub_monos;
    for (size_t m = 0; m < dim; ++m)
        if ((m & ~static_cast<size_t>(subfield_mask)) == 0) sub_monos.push_back(m);

    // Rows are stored as numerator coordinate vectors; each row's denominator
    // is remembered and folded back in when the dependence is assembled.
    std::vector<EliminationRow> pivots;
    std::vector<int> pivot_cols;
    struct RowTag {
        int power;
        size_t mono;
        F2Poly den;
    };
    std::vector<RowTag> tags;  // original inserted rows, in insertion order

    auto coords_of = [&](const TowerElement& x) {
        std::vector<F2Poly> v(dim);
        for (size_t m = 0; m < dim; ++m) v[m] = x.num(m);
        return v;
    };

    TowerElement power = TowerElement::one(spec);
    const int max_deg = static_cast<int>(dim);
    for (int d = 0; d <= max_deg; ++d) {
        if (d > 0) power = power * e;
        if (d > 0) {
            // Candidate: is e^d in the span of inserted rows?
            EliminationRow cand{coords_of(power), std::vector<F2Poly>(tags.size() + 1)};
            cand.combo.back() = F2Poly::one();
            reduce_row(cand, pivots, pivot_cols);
            bool zero = std::all_of(cand.coords.begin(), cand.coords.end(),
                                    [](const F2Poly& p) { return p.is_zero(); });
            if (zero) {
                // combo entry j pairs with tags[j]; denominators rescale each
                // term since elimination ran on numerator rows.
                const F2Poly lead = cand.combo.back() * power.den();
                std::vector<TowerElement> cs(d + 1, TowerElement::zero(spec));
                for (size_t j = 0; j < tags.size(); ++j) {
                    if (j >= cand.combo.size() || cand.combo[j].is_zero()) continue;
                    std::vector<F2Poly> mc(dim);
                    mc[tags[j].mono] = cand.combo[j] * tags[j].den;
                    cs[tags[j].power] =
                        cs[tags[j].power] + TowerElement::from_coeffs(spec, std::move(mc), lead);
                }
                cs[d] = TowerElement::one(spec);
                return XPolyT(std::move(cs));
            }
        }
        // Insert rows e^d * m for sub-monomials m.
        for (size_t m : sub_monos) {
            std::vector<F2Poly> bc(dim);
            bc[m] = F2Poly::one();
            TowerElement val = power * TowerElement::from_coeffs(spec, std::move(bc));
            EliminationRow row{coords_of(val), std::vector<F2Poly>(tags.size() + 1)};
            row.combo.back() = F2Poly::one();
            tags.push_back({d, m, val.den()});
            reduce_row(row, pivots, pivot_cols);
            int pc = -1;
            for (size_t j = 0; j < row.coords.size(); ++j)
                if (!row.coords[j].is_zero()) {
                    pc = static_cast<int>(j);
                    break;
                }
            if (pc < 0) {
                tags.pop_back();  // dependent basis row; span unchanged
                continue;
            }
            pivots.push_back(std::move(row));
            pivot_cols.push_back(pc);
        }
    }
    throw std::runtime_error("minimal polynomial search exceeded the dimension bound");
}

TowerAut::TowerAut(TowerSpecPtr spec, std::vector<TowerElement> images, std::string name)
    : spec_(std::move(spec)), images_(std::move(images)), name_(std::move(name)) {
    if (static_cast<int>(images_.size()) != spec_->count())
        throw std::invalid_argument("one image per generator required");
    for (const auto& im : images_)
        if (!im.spec()->compatible(*spec_)) throw std::invalid_argument("image spec mismatch");
    // Substitution table for every monomial.
    subst_.assign(spec_->dim(), TowerElement::one(spec_));
    for (size_t m = 1; m < spec_->dim(); ++m) {
        int low = __builtin_ctzll(m);
        subst_[m] = subst_[m & (m - 1)] * images_[low];
    }
    // Relation consistency: image(g)^2 + image(g) = image(c_g).
    for (int i = 0; i < spec_->count(); ++i) {
        TowerElement lhs = images_[i] * images_[i] + images_[i];
        TowerElement rhs = apply(spec_->relation(i));
        if (lhs != rhs)
            throw std::invalid_argument("images violate the relation of generator " + spec_->name(i));
    }
}

TowerElement TowerAut::apply(const TowerElement& e) const {
    if (!e.spec()->compatible(*spec_)) throw std::invalid_argument("spec mismatch");
    TowerElement acc = TowerElement::zero(spec_);
    for (size_t m = 0; m < spec_->dim(); ++m) {
        if (e.num(m).is_zero()) continue;
        acc = acc + subst_[m] * e.num(m);
    }
    if (!e.den().is_one()) {
        acc = acc * TowerElement::rational(spec_, F2Poly::one(), e.den());
    }
    return acc;
}

XPolyT TowerAut::apply(const XPolyT& f) const {
    std::vector<TowerElement> cs;
    cs.reserve(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) cs.push_back(apply(f.coeff(i)));
    return XPolyT(std::move(cs));
}

TowerAut TowerAut::compose(const TowerAut& other) const {
    std::vector<TowerElement> images;
    images.reserve(spec_->count());
    for (int i = 0; i < spec_->count(); ++i) images.push_back(apply(other.image(i)));
    std::string nm = name_.empty() || other.name_.empty() ? "" : name_ + "*" + other.name_;
    return TowerAut(spec_, std::move(images), nm);
}

TowerAut TowerAut::power(int e) const {
    std::vector<TowerElement> id;
    for (int i = 0; i < spec_->count(); ++i) id.push_back(TowerElement::generator(spec_, i));
    TowerAut acc(spec_, std::move(id), "id");
    for (int i = 0; i < e; ++i) acc = compose(acc);
    return acc;
}

bool TowerAut::operator==(const TowerAut& o) const {
    if (!spec_->compatible(*o.spec_)) return false;
    return images_ == o.images_;
}

bool different_is_trivial(const XPolyT& layer) {
    if (layer.degree() != 2 || !layer.is_monic())
        throw std::invalid_argument("layer must be a monic quadratic");
    auto x_coeff = layer.coeff(1).as_bit();
    if (!x_coeff || *x_coeff != 1)
        throw std::invalid_argument("not an Artin-Schreier layer: derivative is not 1");
    return true;
}

}  // namespace ffeq
