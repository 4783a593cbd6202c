#include "doctest.h"

#include <random>

#include "ffeq/f2poly.hpp"
#include "ffeq/poly.hpp"

using namespace ffeq;

namespace {

F2Poly random_f2(std::mt19937_64& rng, int max_deg) {
    std::vector<int> bits(rng() % (max_deg + 1) + 1);
    for (auto& b : bits) b = static_cast<int>(rng() & 1);
    return F2Poly::from_coeff_bits(bits);
}

}  // namespace

TEST_CASE("duplicate exponents cancel") {
    CHECK(F2Poly::from_exponents({4, 4}).is_zero());
    CHECK(F2Poly::from_exponents({4, 4, 2}) == F2Poly::monomial(2));
}

TEST_CASE("bit-packed arithmetic agrees with the generic field polynomials") {
    // Dual route: every operation is cross-checked against Poly over F_2.
    auto f2 = FqField::prime_field(2);
    std::mt19937_64 rng(0xf2f2);
    for (int i = 0; i < 300; ++i) {
        F2Poly a = random_f2(rng, 90);
        F2Poly b = random_f2(rng, 90);
        Poly pa = a.to_poly(f2), pb = b.to_poly(f2);
        CHECK((a + b).to_poly(f2) == pa + pb);
        CHECK((a * b).to_poly(f2) == pa * pb);
        if (!b.is_zero()) {
            auto [q, r] = a.divmod(b);
            auto [pq, pr] = pa.divmod(pb);
            CHECK(q.to_poly(f2) == pq);
            CHECK(r.to_poly(f2) == pr);
            CHECK(f2_gcd(a, b).to_poly(f2) == poly_gcd(pa, pb));
        }
    }
}

TEST_CASE("degree and shifting across word boundaries") {
    F2Poly t63 = F2Poly::monomial(63);
    F2Poly t64 = t63.shifted(1);
    CHECK(t64.degree() == 64);
    CHECK(t64 == F2Poly::monomial(64));
    CHECK((t64 / t63) == F2Poly::t());
    CHECK(F2Poly::zero().degree() == -1);
}

TEST_CASE("enumeration order") {
    CHECK(F2Poly::t().enum_less(F2Poly::from_exponents({1, 0})));
    CHECK(F2Poly::from_exponents({1, 0}).enum_less(F2Poly::monomial(2)));
}

TEST_CASE("evaluation lifts bits into characteristic-2 fields") {
    auto f4 = FqField::canonical(2, 2);
    F2Poly f = F2Poly::from_exponents({2, 1, 0});  // T^2+T+1
    CHECK(f.eval(f4->gen()).is_zero());            // z^2+z+1 = 0
}
