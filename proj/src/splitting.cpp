#include "ffeq/splitting.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <stdexcept>

#include "json.hpp"

#include "ffeq/textio.hpp"

namespace ffeq {

using nlohmann::json;

PrimeOfBase PrimeOfBase::make(int q, Poly gen) {
    if (q != 2 && q != 4) throw std::invalid_argument("base q must be 2 or 4");
    if (!gen.is_monic()) throw std::invalid_argument("prime generator must be monic");
    if (!gen.field()->same_field(*base_field(q)))
        throw std::invalid_argument("prime generator must live over the canonical base field");
    if (!is_irreducible(gen)) throw std::invalid_argument("prime generator must be irreducible");
    return PrimeOfBase{q, std::move(gen)};
}

std::string PrimeOfBase::str() const { return format_poly(gen); }

FqFieldPtr base_field(int q) {
    static FqFieldPtr f2 = FqField::prime_field(2);
    static FqFieldPtr f4 = FqField::canonical(2, 2);
    if (q == 2) return f2;
    if (q == 4) return f4;
    throw std::invalid_argument("base q must be 2 or 4");
}

std::vector<PrimeOfBase> primes_of_degree(int q, int d) {
    std::vector<PrimeOfBase> out;
    for (auto& f : enumerate_irreducible(base_field(q), d)) out.push_back(PrimeOfBase{q, f});
    return out;
}

std::vector<PrimeOfBase> primes_up_to(int q, int d) {
    std::vector<PrimeOfBase> out;
    for (int i = 1; i <= d; ++i)
        for (auto& p : primes_of_degree(q, i)) out.push_back(std::move(p));
    return out;
}

FieldDesc FieldDesc::from_tower(std::string name, int base_q, TowerSpecPtr tower) {
    if (base_q != 2 && base_q != 4) throw std::invalid_argument("base q must be 2 or 4");
    if (!tower || tower->count() == 0) throw std::invalid_argument("empty tower");
    if (base_q == 4) {
        TowerElement rel = tower->relation(0);
        auto bit = rel.as_bit();
        if (!bit || *bit != 1)
            throw std::invalid_argument("over F_4(T) the first layer must be the constant layer with relation 1");
    }
    FieldDesc d;
    d.name = std::move(name);
    d.base_q = base_q;
    d.tower = std::move(tower);
    return d;
}

FieldDesc FieldDesc::from_poly(std::string name, int base_q, std::vector<Poly> coeffs) {
    FieldDesc d;
    d.name = std::move(name);
    d.base_q = base_q;
    if (coeffs.size() < 2 || coeffs.back().degree() != 0 || !coeffs.back().coeff(0).is_one())
        throw std::invalid_argument("polynomial form must be monic of degree >= 1");
    d.poly = std::move(coeffs);
    return d;
}

int FieldDesc::degree() const {
    if (tower) {
        int layers = tower->count() - (base_q == 4 ? 1 : 0);
        return 1 << layers;
    }
    return static_cast<int>(poly.size()) - 1;
}

namespace {

// One prime of the partially-walked tower: its residue field, the image of T
// and the images of the generators absorbed so far.
struct WalkState {
    FqFieldPtr k;
    FqElement t_im;
    std::vector<FqElement> gen_im;
};

// Residue field of the base prime with the T image, and for q = 4 the image
// of the constant-field generator.
WalkState initial_state(const PrimeOfBase& p, const TowerSpecPtr& tower, bool absorb_z) {
    if (p.q == 2) {
        std::vector<uint8_t> mod;
        for (int i = 0; i <= p.gen.degree(); ++i)
            mod.push_back(static_cast<uint8_t>(p.gen.coeff(i).scalar_value()));
        auto k = FqField::make(2, std::move(mod));
        return WalkState{k, k->gen(), {}};
    }
    auto fq = flatten_quotient(base_field(4), p.gen);
    WalkState st{fq.field, fq.root, {}};
    if (absorb_z && tower) st.gen_im.push_back(fq.embed(base_field(4)->gen()));
    return st;
}

}  // namespace

SplittingType splitting_type_tower(const FieldDesc& k, const PrimeOfBase& p) {
    if (!k.tower) throw std::invalid_argument("field has no tower form");
    if (p.q != k.base_q) throw std::invalid_argument("prime base does not match the field base");
    const auto spec = k.tower;
    const int first_layer = k.base_q == 4 ? 1 : 0;
    // Every layer must be Artin-Schreier (or the constant layer), hence
    // unramified at finite places; checked here rather than assumed.
    for (int i = 0; i < spec->count(); ++i)
        different_is_trivial(artin_schreier_xpoly(spec->relation(i)));

    std::vector<WalkState> states{initial_state(p, spec, first_layer == 1)};
    const int base_deg = states[0].k->degree();
    for (int layer = first_layer; layer < spec->count(); ++layer) {
        TowerElement rel = spec->relation(layer);
        std::vector<WalkState> next;
        for (auto& st : states) {
            FqElement c = rel.eval_at(st.t_im, st.gen_im);
            auto roots = artin_schreier_roots(c);
            if (!roots.empty()) {
                for (const auto& r : roots) {
                    WalkState s2 = st;
                    s2.gen_im.push_back(r);
                    next.push_back(std::move(s2));
                }
            } else {
                auto ext = extend_by_artin_schreier(st.k, c);
                WalkState s2;
                s2.k = ext.field;
                s2.t_im = ext.embed(st.t_im);
                for (const auto& g : st.gen_im) s2.gen_im.push_back(ext.embed(g));
                s2.gen_im.push_back(ext.root);
                next.push_back(std::move(s2));
            }
        }
        states = std::move(next);
    }
    std::vector<int> fs;
    fs.reserve(states.size());
    for (const auto& st : states) fs.push_back(st.k->degree() / base_deg);
    return SplittingType(fs);
}

std::optional<SplittingType> splitting_type_dedekind(const std::vector<Poly>& h, const PrimeOfBase& p) {
    if (h.size() < 2) throw std::invalid_argument("polynomial must have degree >= 1");
    const Poly& lead = h.back();
    if (lead.degree() != 0 || !lead.coeff(0).is_one())
        throw std::invalid_argument("polynomial must be monic over F_q[T]");
    WalkState st;
    FqElement z_im;
    if (p.q == 2) {
        st = initial_state(p, nullptr, false);
        z_im = st.k->zero();
    } else {
        auto fq = flatten_quotient(base_field(4), p.gen);
        st = WalkState{fq.field, fq.root, {}};
        z_im = fq.embed(base_field(4)->gen());
    }
    // Reduce coefficients: evaluate each F_q[T] coefficient at the T image.
    std::vector<FqElement> cs;
    cs.reserve(h.size());
    for (const auto& coeff : h) {
        FqElement acc = st.k->zero();
        for (int i = coeff.degree(); i >= 0; --i) {
            acc = acc * st.t_im;
            const FqElement ci = coeff.coeff(i);
            if (ci.is_scalar()) {
                acc = acc + st.k->from_int(ci.scalar_value());
            } else {
                // F_4 coefficient c0 + c1*z.
                acc = acc + st.k->from_int(ci.coords()[0]) + z_im * st.k->from_int(ci.coords()[1]);
            }
        }
        cs.push_back(acc);
    }
    Poly reduced(st.k, std::move(cs));
    if (poly_gcd(reduced, reduced.derivative()).degree() != 0) return std::nullopt;
    std::vector<int> fs;
    for (const auto& [g, mult] : factor(reduced)) {
        (void)mult;
        fs.push_back(g.degree());
    }
    return SplittingType(fs);
}

SplittingType splitting_type(const FieldDesc& k, const PrimeOfBase& p) {
    if (k.tower) return splitting_type_tower(k, p);
    auto st = splitting_type_dedekind(k.poly, p);
    if (!st) throw std::runtime_error("Dedekind reduction inconclusive at " + p.str() +
                                      " and no tower form is available");
    return *st;
}

std::map<int, int> prime_power_counts(const SplittingType& st, int mmax) {
    std::map<int, int> out;
    for (int m = 1; m <= mmax; ++m) out[m] = st.count_of(m);
    return out;
}

namespace {

BigInt binom(const BigInt& n, int k) {
    if (k < 0) return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

// Sum over distinct degrees with multiplicities; deg_list holds the degrees
// m' with C(m') > 0.
BigInt b_rec(const std::map<int, int>& counts, const std::vector<int>& deg_list, size_t idx, int m) {
    if (m == 0) return 1;
    if (idx == deg_list.size()) return 0;
    int d = deg_list[idx];
    BigInt total = 0;
    for (int a = 0; a * d <= m; ++a) {
        BigInt ways = a == 0 ? BigInt(1) : binom(BigInt(counts.at(d)) + a - 1, a);
        if (ways == 0) continue;
        total += ways * b_rec(counts, deg_list, idx + 1, m - a * d);
    }
    return total;
}

}  // namespace

BigInt b_prime_power(const std::map<int, int>& counts, int m) {
    if (m < 0) throw std::invalid_argument("m must be >= 0");
    if (m == 0) return 1;
    std::vector<int> deg_list;
    for (const auto& [d, c] : counts)
        if (c > 0) deg_list.push_back(d);
    return b_rec(counts, deg_list, 0, m);
}

BigInt brute_force_ideal_count(const FieldDesc& k, const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("f must be nonzero");
    if (!f.is_monic()) throw std::invalid_argument("f must be monic");
    if (f.degree() == 0) return 1;
    // Primes of O_K above the prime factors of f, as norm polynomials.
    std::vector<Poly> norms;
    for (const auto& [p, e] : factor(f)) {
        (void)e;
        auto prime = PrimeOfBase::make(k.base_q, p);
        SplittingType st = splitting_type(k, prime);
        for (int deg : st.degrees()) {
            Poly norm = Poly::one(f.field());
            for (int i = 0; i < deg; ++i) norm = norm * p;
            norms.push_back(norm);
        }
    }
    // Count multisets of upstairs primes whose norms multiply to f exactly.
    BigInt count = 0;
    std::vector<size_t> stack;
    std::function<void(size_t, Poly)> dfs = [&](size_t idx, Poly rem) {
        if (rem.degree() == 0) {
            count += 1;
            return;
        }
        if (idx == norms.size()) return;
        // multiplicity 0 for norms[idx]
        dfs(idx + 1, rem);
        Poly cur = rem;
        while (true) {
            auto [q, r] = cur.divmod(norms[idx]);
            if (!r.is_zero()) break;
            cur = q;
            dfs(idx + 1, cur);
            if (cur.degree() == 0) break;
        }
    };
    dfs(0, f);
    return count;
}

IdealCountTable ideal_count_table(const FieldDesc& k, int max_degree, int p) {
    IdealCountTable table;
    table.field_name = k.name;
    table.max_degree = max_degree;
    table.p = p;
    auto base = base_field(k.base_q);
    // Splitting types of all primes up to max_degree, computed once.
    std::map<std::string, std::map<int, int>> counts_by_prime;
    for (const auto& prime : primes_up_to(k.base_q, max_degree)) {
        SplittingType st = splitting_type(k, prime);
        counts_by_prime[format_poly(prime.gen)] = prime_power_counts(st, max_degree);
    }
    for (int d = 0; d <= max_degree; ++d) {
        for (const auto& f : enumerate_monic(base, d)) {
            BigInt b = 1;
            if (d > 0) {
                for (const auto& [q, e] : factor(f)) {
                    auto it = counts_by_prime.find(format_poly(q));
                    if (it == counts_by_prime.end())
                        throw std::runtime_error("missing splitting data for " + format_poly(q));
                    b *= b_prime_power(it->second, e);
                }
            }
            int a = static_cast<int>(b % p);
            table.rows.push_back(IdealCountRow{f, a, std::move(b)});
        }
    }
    return table;
}

const IdealCountRow& IdealCountTable::row_of(const Poly& f) const {
    for (const auto& r : rows)
        if (r.f == f) return r;
    throw std::invalid_argument("no row for this polynomial");
}

SweepReport equivalence_sweep(const FieldDesc& k, const FieldDesc& l, int max_degree) {
    if (k.base_q != l.base_q) throw std::invalid_argument("fields over different bases");
    SweepReport rep;
    rep.left_name = k.name;
    rep.right_name = l.name;
    rep.base_q = k.base_q;
    rep.max_degree = max_degree;
    for (const auto& prime : primes_up_to(k.base_q, max_degree)) {
        SplittingType a = splitting_type(k, prime);
        SplittingType b = splitting_type(l, prime);
        ++rep.primes_checked;
        if (a != b) rep.mismatches.push_back(SweepMismatch{prime, a, b});
    }
    return rep;
}

ChebotarevReport chebotarev_frequencies(const FieldDesc& k, int max_degree) {
    ChebotarevReport rep;
    for (const auto& prime : primes_up_to(k.base_q, max_degree)) {
        rep.counts[splitting_type(k, prime)] += 1;
        ++rep.primes_total;
    }
    return rep;
}

double ChebotarevReport::frequency(const SplittingType& t) const {
    auto it = counts.find(t);
    if (it == counts.end() || primes_total == 0) return 0.0;
    return static_cast<double>(it->second) / primes_total;
}

SplittingCache::SplittingCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded()) continue;
        std::string key = j.at("field").get<std::string>() + "|" + std::to_string(j.at("base_q").get<int>()) +
                          "|" + j.at("prime").get<std::string>();
        mem_.emplace(key, SplittingType(j.at("splitting_type").get<std::vector<int>>()));
    }
}

std::optional<SplittingType> SplittingCache::lookup(const std::string& field, int q,
                                                    const std::string& prime) const {
    auto it = mem_.find(field + "|" + std::to_string(q) + "|" + prime);
    if (it == mem_.end()) return std::nullopt;
    return it->second;
}

void SplittingCache::store(const std::string& field, int q, const std::string& prime,
                           const SplittingType& t) {
    std::string key = field + "|" + std::to_string(q) + "|" + prime;
    if (mem_.count(key)) return;
    mem_.emplace(key, t);
    json j{{"field", field}, {"base_q", q}, {"prime", prime}, {"splitting_type", t.degrees()}};
    std::ofstream out(path_, std::ios::app);
    out << j.dump() << "\n";
}

}  // namespace ffeq
