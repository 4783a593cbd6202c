#include "doctest.h"

#include "ffeq/witt.hpp"

using namespace ffeq;

TEST_CASE("teichmuller lifts") {
    CHECK(WittVector::teichmuller(1, 2, 4).coords() == std::vector<int>{1, 0, 0, 0});
    CHECK(WittVector::teichmuller(0, 2, 4).coords() == std::vector<int>{0, 0, 0, 0});
    CHECK(WittVector::teichmuller(2, 3, 2).coords() == std::vector<int>{2, 0});
}

TEST_CASE("integer coordinates") {
    CHECK(WittVector::from_integer(2, 2, 4).coords() == std::vector<int>{0, 1, 0, 0});
    CHECK(WittVector::from_integer(0, 2, 4).coords() == std::vector<int>{0, 0, 0, 0});
    CHECK(WittVector::from_integer(6, 2, 3).coords() == std::vector<int>{0, 1, 1});
}

TEST_CASE("addition and multiplication route through the residue ring") {
    auto one = WittVector::from_integer(1, 2, 4);
    CHECK((one + one) == WittVector::from_integer(2, 2, 4));
    auto x = WittVector::from_integer(11, 2, 4);
    CHECK((x + WittVector::zero(2, 4)) == x);
    CHECK((WittVector::from_integer(3, 2, 4) * WittVector::from_integer(5, 2, 4)) ==
          WittVector::from_integer(15, 2, 4));
}

TEST_CASE("from_integer is a semiring homomorphism at truncated precision") {
    // Exhaustive for p = 2, N <= 6 over operands < 2^(N-1).
    for (int n = 2; n <= 6; ++n) {
        uint64_t bound = 1ull << (n - 1);
        for (uint64_t a = 0; a < bound; ++a)
            for (uint64_t b = 0; b < bound; ++b) {
                CHECK(WittVector::from_integer(a + b, 2, n) ==
                      WittVector::from_integer(a, 2, n) + WittVector::from_integer(b, 2, n));
                CHECK(WittVector::from_integer(a * b, 2, n) ==
                      WittVector::from_integer(a, 2, n) * WittVector::from_integer(b, 2, n));
            }
    }
}

TEST_CASE("teichmuller is multiplicative") {
    for (int p : {2, 3, 5, 7}) {
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) {
                CHECK(WittVector::teichmuller(a * b % p, p, 4) ==
                      WittVector::teichmuller(a, p, 4) * WittVector::teichmuller(b, p, 4));
            }
    }
}

TEST_CASE("first coordinate reduces mod p") {
    for (int p : {2, 3, 5}) {
        for (uint64_t n = 0; n < 40; ++n)
            CHECK(WittVector::from_integer(n, p, 5).coords()[0] == static_cast<int>(n % p));
    }
}

TEST_CASE("closed-form addition law agrees on all 16 length-2 pairs") {
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            WittVector x(2, 2, {a & 1, a >> 1});
            WittVector y(2, 2, {b & 1, b >> 1});
            auto sum = x + y;
            auto oracle = witt_formula_sum(x, y, 2);
            CHECK(sum.coords()[0] == oracle[0]);
            CHECK(sum.coords()[1] == oracle[1]);
        }
    // Spot values from the law itself.
    WittVector e(2, 2, {1, 0});
    CHECK(witt_formula_sum(e, e, 2) == std::vector<int>{0, 1});
    WittVector f(2, 2, {0, 1});
    CHECK(witt_formula_sum(f, f, 2) == std::vector<int>{0, 0});
}

TEST_CASE("context mismatch and bad inputs throw") {
    CHECK_THROWS_AS(WittVector::from_integer(1, 2, 3) + WittVector::from_integer(1, 2, 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(WittVector::from_integer(1, 2, 3) + WittVector::from_integer(1, 3, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(WittVector(2, 2, {1}), std::invalid_argument);
    WittVector a(2, 3, {1, 0, 1});
    CHECK_THROWS_AS(witt_formula_sum(a, a, 3), std::invalid_argument);
}
