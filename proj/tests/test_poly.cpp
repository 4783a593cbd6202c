#include "doctest.h"

#include <random>
#include <set>

#include "ffeq/poly.hpp"
#include "ffeq/textio.hpp"

using namespace ffeq;

namespace {

Poly random_poly(const FqFieldPtr& field, int max_deg, std::mt19937_64& rng) {
    int d = static_cast<int>(rng() % (max_deg + 1));
    std::vector<FqElement> cs;
    for (int i = 0; i <= d; ++i) {
        std::vector<uint8_t> coords(field->degree());
        for (auto& c : coords) c = static_cast<uint8_t>(rng() % field->characteristic());
        cs.push_back(field->from_coords(std::move(coords)));
    }
    return Poly(field, std::move(cs));
}

}  // namespace

TEST_CASE("characteristic-2 cancellation in ring ops") {
    auto f2 = FqField::prime_field(2);
    Poly a = parse_poly(f2, "T^2+T");
    Poly b = parse_poly(f2, "T^2+1");
    CHECK(a + b == parse_poly(f2, "T+1"));
    CHECK(poly_gcd(a, b) == parse_poly(f2, "T+1"));  // T^2+1 = (T+1)^2
}

TEST_CASE("euclidean division by a quartic factor leaves remainder 0") {
    auto f4 = FqField::canonical(2, 2);
    Poly f = parse_poly(f4, "T^8+T^6+T^5+T^3+1");
    Poly p = parse_poly(f4, "T^4+z*T^2+(z+1)*T+(z+1)");
    auto [q, r] = f.divmod(p);
    CHECK(r.is_zero());
    CHECK(q * p == f);
    CHECK_THROWS_AS(f.divmod(Poly::zero(f4)), std::invalid_argument);
}

TEST_CASE("irreducibility checks") {
    auto f2 = FqField::prime_field(2);
    CHECK(is_irreducible(parse_poly(f2, "T^8+T^6+T^5+T^3+1")));
    CHECK(is_irreducible(parse_poly(f2, "T^2+T+1")));
    CHECK_FALSE(is_irreducible(parse_poly(f2, "T^2+1")));
    CHECK_THROWS_AS(is_irreducible(Poly::one(f2)), std::invalid_argument);
}

TEST_CASE("factorization over F_4 splits the degree-8 prime into two quartics") {
    auto f4 = FqField::canonical(2, 2);
    Poly f = parse_poly(f4, "T^8+T^6+T^5+T^3+1");
    auto factors = factor(f);
    REQUIRE(factors.size() == 2);
    std::set<std::string> got{format_poly(factors[0].first), format_poly(factors[1].first)};
    CHECK(got == std::set<std::string>{"T^4+z*T^2+(z+1)*T+(z+1)", "T^4+(z+1)*T^2+z*T+z"});
    CHECK(factors[0].second == 1);
    CHECK(factors[1].second == 1);
}

TEST_CASE("factorization basics") {
    auto f2 = FqField::prime_field(2);
    auto factors = factor(parse_poly(f2, "T^2+T"));
    REQUIRE(factors.size() == 2);
    CHECK(format_poly(factors[0].first) == "T");
    CHECK(format_poly(factors[1].first) == "T+1");
    CHECK_THROWS_AS(factor(Poly::zero(f2)), std::invalid_argument);
}

TEST_CASE("quadratic stays irreducible over the degree-8 residue field") {
    // k = F_2[T]/(T^8+T^6+T^5+T^3+1); X^2+X+c with c of trace 1.
    auto k = FqField::make(2, {1, 0, 0, 1, 0, 1, 1, 0, 1});
    auto t = k->gen();
    FqElement c = t.pow(7) + t.pow(5) + t.pow(4) + t.pow(3) + t.pow(2) + t;
    Poly quad(k, {c, k->one(), k->one()});
    auto factors = factor(quad);
    REQUIRE(factors.size() == 1);
    CHECK(factors[0].first.degree() == 2);
    CHECK(factors[0].second == 1);
}

TEST_CASE("factor product reconstructs the input") {
    // 500 random polynomials of degree <= 12 over F_2 and F_4.
    std::mt19937_64 rng(0x9a7f);
    for (int q : {2, 4}) {
        auto field = q == 2 ? FqField::prime_field(2) : FqField::canonical(2, 2);
        for (int i = 0; i < 250; ++i) {
            Poly f = random_poly(field, 12, rng);
            if (f.is_zero()) continue;
            Poly prod = Poly::constant(f.leading());
            int total_deg = 0;
            for (const auto& [g, m] : factor(f)) {
                CHECK(g.is_monic());
                CHECK(is_irreducible(g));
                for (int j = 0; j < m; ++j) prod = prod * g;
                total_deg += g.degree() * m;
            }
            CHECK(prod == f);
            CHECK(total_deg == f.degree());
            if (f.degree() >= 1) {
                auto fs = factor(f);
                bool single = fs.size() == 1 && fs[0].second == 1;
                CHECK(single == is_irreducible(f));
            }
        }
    }
}

TEST_CASE("factorization is reproducible under a fixed seed") {
    auto f2 = FqField::prime_field(2);
    Poly f = parse_poly(f2, "T^12+T^10+T^4+T+1");
    auto a = factor(f, 42);
    auto b = factor(f, 42);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].first == b[i].first);
}

TEST_CASE("artin-schreier roots over F_2") {
    auto f2 = FqField::prime_field(2);
    auto roots = artin_schreier_roots(f2->from_int(0));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == f2->from_int(0));
    CHECK(roots[1] == f2->from_int(1));
}

TEST_CASE("artin-schreier roots in the degree-8 residue field") {
    auto k = FqField::make(2, {1, 0, 0, 1, 0, 1, 1, 0, 1});
    auto t = k->gen();
    FqElement c_inert = t.pow(7) + t.pow(5) + t.pow(4) + t.pow(3) + t.pow(2) + t;
    CHECK(artin_schreier_roots(c_inert).empty());
    FqElement c_split = t.pow(7) + t.pow(5) + t.pow(4) + t.pow(2) + t;
    auto roots = artin_schreier_roots(c_split);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] * roots[0] + roots[0] == c_split);
}

TEST_CASE("artin-schreier root existence is the trace-zero condition") {
    for (int deg : {2, 3, 4, 6}) {
        auto k = FqField::canonical(2, deg);
        for (const auto& c : k->elements()) {
            auto roots = artin_schreier_roots(c);
            CHECK((roots.size() == 2) == (c.trace_to_prime() == 0));
            if (!roots.empty()) {
                CHECK(roots[0] * roots[0] + roots[0] == c);
                CHECK(roots[1] == roots[0] + k->one());
            }
        }
    }
}

TEST_CASE("artin-schreier extension of the rationals of F_2") {
    auto f2 = FqField::prime_field(2);
    auto ext = extend_by_artin_schreier(f2, f2->one());
    CHECK(ext.field->degree() == 2);
    CHECK(ext.root * ext.root == ext.root + ext.field->one());  // zeta^2 = zeta+1
    CHECK_THROWS_AS(extend_by_artin_schreier(f2, f2->from_int(0)), std::invalid_argument);
}

TEST_CASE("artin-schreier extension of F_4 by zeta reaches F_16") {
    auto f4 = FqField::canonical(2, 2);
    auto ext = extend_by_artin_schreier(f4, f4->gen());
    CHECK(ext.field->degree() == 4);
    CHECK(ext.root * ext.root + ext.root == ext.embed(f4->gen()));
}

TEST_CASE("monic enumeration follows the degree-then-value order") {
    auto f2 = FqField::prime_field(2);
    auto d0 = enumerate_monic(f2, 0);
    REQUIRE(d0.size() == 1);
    CHECK(d0[0] == Poly::one(f2));
    auto d1 = enumerate_monic(f2, 1);
    REQUIRE(d1.size() == 2);
    CHECK(format_poly(d1[0]) == "T");
    CHECK(format_poly(d1[1]) == "T+1");
    for (int d : {2, 3, 4, 5}) {
        auto list = enumerate_monic(f2, d);
        CHECK(list.size() == (size_t{1} << d));
        std::set<std::string> dedup;
        for (const auto& f : list) {
            CHECK(f.is_monic());
            CHECK(f.degree() == d);
            dedup.insert(format_poly(f));
        }
        CHECK(dedup.size() == list.size());
        for (size_t i = 1; i < list.size(); ++i) CHECK(list[i - 1].enum_less(list[i]));
    }
}

TEST_CASE("irreducible enumeration agrees with a product sieve") {
    // Oracle: a degree-3 monic is reducible iff it is a product of lower
    // degree monics; sieve those out by brute force.
    auto f2 = FqField::prime_field(2);
    std::set<std::string> products;
    for (const auto& a : enumerate_monic(f2, 1)) {
        for (const auto& b : enumerate_monic(f2, 2)) products.insert(format_poly(a * b));
        for (const auto& b : enumerate_monic(f2, 1))
            for (const auto& c : enumerate_monic(f2, 1)) products.insert(format_poly(a * b * c));
    }
    std::vector<Poly> sieved;
    for (const auto& f : enumerate_monic(f2, 3))
        if (!products.count(format_poly(f))) sieved.push_back(f);
    auto irred = enumerate_irreducible(f2, 3);
    REQUIRE(irred.size() == 2);
    REQUIRE(sieved.size() == 2);
    CHECK(irred[0] == sieved[0]);
    CHECK(irred[1] == sieved[1]);
}

TEST_CASE("polynomial text format round trips") {
    auto f4 = FqField::canonical(2, 2);
    for (const char* text : {"T^4+z*T^2+(z+1)*T+(z+1)", "T^8+T^6+T^5+T^3+1", "z", "1", "0", "T"}) {
        Poly f = parse_poly(f4, text);
        CHECK(format_poly(f) == text);
    }
    CHECK(parse_poly(f4, "  T ^ 2 + ( z + 1 ) * T ") == parse_poly(f4, "T^2+(z+1)*T"));
    CHECK_THROWS_AS(parse_poly(f4, "T^2 +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly(f4, "y+1"), std::invalid_argument);
    auto f2 = FqField::prime_field(2);
    CHECK_THROWS_AS(parse_poly(f2, "z*T"), std::invalid_argument);
}

TEST_CASE("distributivity and divmod reconstruction on random polynomials") {
    std::mt19937_64 rng(0x51);
    auto f4 = FqField::canonical(2, 2);
    for (int i = 0; i < 200; ++i) {
        Poly a = random_poly(f4, 8, rng);
        Poly b = random_poly(f4, 8, rng);
        Poly c = random_poly(f4, 8, rng);
        CHECK((a + b) * c == a * c + b * c);
        if (!b.is_zero()) {
            auto [q, r] = a.divmod(b);
            CHECK(q * b + r == a);
            CHECK(r.degree() < b.degree());
        }
    }
}
