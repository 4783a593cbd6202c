#include "ffeq/tower_presets.hpp"

#include <stdexcept>

namespace ffeq {

namespace {

F2Poly tpow(int n) { return F2Poly::monomial(n); }

// F_2(T)[z, a, b] with the top relation constant (T^2+z*T)*a + extra.
TowerSpecPtr k_like_tower(const F2Poly& extra) {
    auto s0 = TowerSpec::empty();
    auto s1 = TowerSpec::extend(s0, "z", TowerElement::one(s0));
    auto z1 = TowerElement::generator(s1, 0);
    auto s2 = TowerSpec::extend(s1, "a", z1 * tpow(1));
    auto a2 = TowerElement::generator(s2, 1);
    auto z2 = TowerElement::generator(s2, 0);
    TowerElement rel_b = a2 * tpow(2) + (z2 * a2) * tpow(1) + TowerElement::rational(s2, extra);
    return TowerSpec::extend(s2, "b", rel_b);
}

}  // namespace

SiblingTowers build_sibling_towers() {
    auto K = k_like_tower(F2Poly::zero());
    auto b3 = TowerElement::generator(K, 2);
    auto s4 = TowerSpec::extend(K, "at", TowerElement::rational(K, tpow(1)));
    auto s5 = TowerSpec::extend(s4, "at3", TowerElement::rational(s4, tpow(3)));

    TowerElement z = TowerElement::generator(s5, 0);
    TowerElement a = TowerElement::generator(s5, 1);
    TowerElement b = TowerElement::generator(s5, 2);
    TowerElement at = TowerElement::generator(s5, 3);
    TowerElement at3 = TowerElement::generator(s5, 4);
    auto T = [&](int n) { return TowerElement::rational(s5, tpow(n)); };
    TowerElement one = TowerElement::one(s5);

    // g = a + (z+1)T + (a+T+1)at + at3 solves X^2+X+a*T+(T^2+(z+1)T)*at.
    TowerElement gamma = a + (z + one) * T(1) + (a + T(1) + one) * at + at3;
    TowerElement c_gamma = a * T(1) + (T(2) + (z + one) * T(1)) * at;
    if (gamma * gamma + gamma != c_gamma)
        throw std::runtime_error("derived element g does not satisfy its relation");
    auto N = s5->with_derived("g", gamma);

    auto lift = [&](TowerElement e) { return e.lift_to(N); };
    z = lift(z);
    a = lift(a);
    b = lift(b);
    at = lift(at);
    at3 = lift(at3);
    gamma = lift(gamma);
    one = TowerElement::one(N);
    auto Tn = [&](int n) { return TowerElement::rational(N, tpow(n)); };

    // phi1: b -> b+g+a+T, fixing at+z and at3.
    TowerAut phi1(N,
                  {z + one, a + at + one, b + gamma + a + Tn(1), at + one, at3},
                  "phi1");
    TowerAut psi1(N, {z, a, b, at, at3}, "psi1");
    TowerAut psi3(N, {z, a, b, at + one, at3 + one}, "psi3");
    TowerAut psi5(N, {z, a, b, at, at3 + one}, "psi5");
    TowerAut psi7(N, {z, a, b, at + one, at3}, "psi7");

    int delta = resolve_delta(N);
    return SiblingTowers{N, z, a, b, at, at3, gamma, phi1, psi1, psi3, psi5, psi7, delta};
}

int resolve_delta(const TowerSpecPtr& spec) {
    auto gamma = spec->derived("g");
    if (!gamma) throw std::invalid_argument("spec carries no derived element g");
    int iz = spec->index_of("z"), ia = spec->index_of("a"), ib = spec->index_of("b");
    int iat = spec->index_of("at"), iat3 = spec->index_of("at3");
    if (iz < 0 || ia < 0 || ib < 0 || iat < 0 || iat3 < 0)
        throw std::invalid_argument("spec is missing the expected generators");
    TowerElement one = TowerElement::one(spec);
    TowerElement z = TowerElement::generator(spec, iz);
    TowerElement a = TowerElement::generator(spec, ia);
    TowerElement b = TowerElement::generator(spec, ib);
    TowerElement at = TowerElement::generator(spec, iat);
    TowerElement at3 = TowerElement::generator(spec, iat3);
    TowerElement t = TowerElement::rational(spec, F2Poly::t());

    std::vector<TowerElement> images(spec->count(), one);
    images[iz] = z + one;
    images[ia] = a + at + one;
    images[ib] = b + *gamma + a + t;
    images[iat] = at + one;
    images[iat3] = at3;
    TowerAut phi1(spec, std::move(images), "phi1");
    TowerElement diff = phi1.apply(*gamma) + *gamma + a + t;
    auto bit = diff.as_bit();
    if (!bit)
        throw std::runtime_error("neither candidate image of g is consistent");
    return *bit;
}

TowerSpecPtr preset_tower(const std::string& name) {
    if (name == "paper:K") return k_like_tower(F2Poly::zero());
    if (name == "paper:Kprime") return k_like_tower(tpow(3));
    if (name == "paper:F") return k_like_tower(F2Poly::zero())->prefix(2);
    if (name == "paper:F4T") return k_like_tower(F2Poly::zero())->prefix(1);
    if (name == "paper:N") return build_sibling_towers().N;
    if (name == "paper:L") {
        auto F = k_like_tower(F2Poly::zero())->prefix(2);
        return TowerSpec::extend(F, "at", TowerElement::rational(F, tpow(1)));
    }
    if (name == "paper:M") {
        auto L = preset_tower("paper:L");
        return TowerSpec::extend(L, "at3", TowerElement::rational(L, tpow(3)));
    }
    if (name == "paper:AT") {
        auto s0 = TowerSpec::empty();
        return TowerSpec::extend(s0, "at", TowerElement::rational(s0, tpow(1)));
    }
    if (name == "paper:Kgamma") {
        // F_2(T)(g) presented over the quadratic chain at, w with
        // w^2 = w + at + T and g^2 = g + T*w + (T^2+T)*at.
        auto s0 = TowerSpec::empty();
        auto s1 = TowerSpec::extend(s0, "at", TowerElement::rational(s0, tpow(1)));
        auto at1 = TowerElement::generator(s1, 0);
        auto s2 = TowerSpec::extend(s1, "w", at1 + TowerElement::rational(s1, tpow(1)));
        auto w2 = TowerElement::generator(s2, 1);
        auto at2 = TowerElement::generator(s2, 0);
        TowerElement rel = w2 * tpow(1) + at2 * (tpow(2) + tpow(1));
        return TowerSpec::extend(s2, "g", rel);
    }
    // paper:K(p) / paper:Kprime(p)
    auto family = [&](const std::string& prefix) -> std::optional<int> {
        if (name.size() > prefix.size() + 1 && name.compare(0, prefix.size(), prefix) == 0 &&
            name[prefix.size()] == '(' && name.back() == ')') {
            std::string digits = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
            if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
                return std::nullopt;
            return std::stoi(digits);
        }
        return std::nullopt;
    };
    auto check_prime = [](int p) {
        if (p < 2) throw std::invalid_argument("family parameter must be a prime");
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::invalid_argument("family parameter must be a prime");
    };
    if (auto p = family("paper:K")) {
        check_prime(*p);
        return k_like_tower(tpow(*p));
    }
    if (auto p = family("paper:Kprime")) {
        check_prime(*p);
        return k_like_tower(tpow(*p) + tpow(3));
    }
    throw std::invalid_argument("unknown tower preset: " + name);
}

std::vector<std::string> preset_names() {
    std::vector<std::string> out{"paper:K",  "paper:Kprime", "paper:F",      "paper:F4T",
                                 "paper:AT", "paper:L",      "paper:M",      "paper:N",
                                 "paper:Kgamma"};
    for (int p : {2, 3, 5, 7}) {
        out.push_back("paper:K(" + std::to_string(p) + ")");
        out.push_back("paper:Kprime(" + std::to_string(p) + ")");
    }
    return out;
}

std::string serialize_tower_spec(const TowerSpec& spec) {
    std::string s;
    for (int i = 0; i < spec.count(); ++i) {
        s += "gen " + spec.name(i) + " = " + spec.relation(i).str() + "\n";
    }
    return s;
}

}  // namespace ffeq
