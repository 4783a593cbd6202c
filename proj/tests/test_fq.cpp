#include "doctest.h"

#include "ffeq/fq.hpp"
#include "ffeq/poly.hpp"

using namespace ffeq;

TEST_CASE("canonical F_4 uses u^2+u+1") {
    auto f4 = FqField::canonical(2, 2);
    CHECK(f4->modulus() == std::vector<uint8_t>{1, 1, 1});
    auto z = f4->gen();
    CHECK(z * z == z + f4->one());  // z^2 = z + 1
}

TEST_CASE("prime field arithmetic") {
    auto f7 = FqField::prime_field(7);
    auto a = f7->from_int(3), b = f7->from_int(5);
    CHECK((a * b).scalar_value() == 1);
    CHECK((a + b).scalar_value() == 1);
    CHECK(a.inverse() == f7->from_int(5));
    CHECK((-a).scalar_value() == 4);
}

TEST_CASE("field construction rejects bad moduli") {
    CHECK_THROWS_AS(FqField::make(4, {1, 1, 1}), std::invalid_argument);   // 4 not prime
    CHECK_THROWS_AS(FqField::make(2, {1, 0, 1}), std::invalid_argument);   // (u+1)^2
    CHECK_THROWS_AS(FqField::make(2, {1}), std::invalid_argument);         // degree 0
}

TEST_CASE("inverse and frobenius in F_16") {
    auto f16 = FqField::canonical(2, 4);
    for (const auto& x : f16->elements()) {
        if (x.is_zero()) {
            CHECK_THROWS_AS(x.inverse(), std::invalid_argument);
            continue;
        }
        CHECK(x * x.inverse() == f16->one());
        CHECK(x.frobenius() == x * x);
        CHECK(x.frobenius_iter(4) == x);  // x^(2^4) = x
    }
}

TEST_CASE("absolute trace is F_2-valued and balanced") {
    auto f8 = FqField::canonical(2, 3);
    int zeros = 0;
    for (const auto& x : f8->elements()) {
        int t = x.trace_to_prime();
        CHECK((t == 0 || t == 1));
        zeros += t == 0;
    }
    CHECK(zeros == 4);  // the trace form is surjective, kernel has index 2
}

TEST_CASE("value order matches base-p digit reading") {
    auto f4 = FqField::canonical(2, 2);
    auto elems = f4->elements();
    REQUIRE(elems.size() == 4);
    for (size_t i = 0; i < elems.size(); ++i) CHECK(elems[i].value() == i);
    CHECK(elems[1].value_less(elems[2]));
    CHECK_FALSE(elems[3].value_less(elems[0]));
}

TEST_CASE("operations demand matching fields") {
    auto a = FqField::prime_field(2)->one();
    auto b = FqField::canonical(2, 2)->one();
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("embedding is a ring homomorphism") {
    auto f4 = FqField::canonical(2, 2);
    auto ext = extend_by_artin_schreier(f4, f4->gen());  // trace(z) = 1 in F_4
    CHECK(ext.field->degree() == 4);
    for (const auto& x : f4->elements())
        for (const auto& y : f4->elements()) {
            CHECK(ext.embed(x * y) == ext.embed(x) * ext.embed(y));
            CHECK(ext.embed(x + y) == ext.embed(x) + ext.embed(y));
        }
}
