#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "test_util.hpp"
#include "unint/errors.hpp"

using namespace unint;
using testutil::factored;
using testutil::poly;
using testutil::rf;

TEST_CASE("polynomial arithmetic on the stated examples") {
    Polynomial n = Polynomial::variable();
    CHECK(n * n == poly({0, 0, 1}));
    CHECK(poly({-1, 1}) * poly({1, 1}) == poly({-1, 0, 1}));
    CHECK((poly({-1, 0, 1}) - poly({-1, 0, 1})).is_zero());
}

TEST_CASE("trailing zeros are stripped to one canonical zero") {
    CHECK(Polynomial(std::vector<BigInt>{BigInt(0), BigInt(0)}).is_zero());
    CHECK(Polynomial().degree() == -1);
    CHECK(poly({1, 2, 0, 0}).degree() == 1);
}

TEST_CASE("rational function arithmetic on the stated examples") {
    RatFunc a = rf({1}, {-1, 1});  // 1/(n-1)
    RatFunc b = rf({1}, {1, 1});   // 1/(n+1)
    CHECK(a - b == rf({2}, {-1, 0, 1}));

    RatFunc c = factored(-1, {{0, -1}, {-1, -1}, {1, -1}});  // -1/(n(n^2-1))
    CHECK((c * RatFunc()).is_zero());

    RatFunc d = rf({1}, {-1, 0, 1}) + c;
    CHECK(d == factored(1, {{0, -1}, {1, -1}}));  // 1/(n(n+1))
}

TEST_CASE("division by the zero function") {
    CHECK_THROWS_AS(rf({1}, {1}) / RatFunc(), DivisionByZero);
}

TEST_CASE("evaluation at integer points") {
    CHECK(rf({1}, {-1, 0, 1}).evaluate_at(BigInt(3)) == Rational(1, 8));
    // (n+1)/((n-1)n^2(n+2)(n+3)) at n=3 is 4/540 = 1/135
    RatFunc sigma = factored(1, {{1, 1}, {-1, -1}, {0, -2}, {2, -1}, {3, -1}});
    CHECK(sigma.evaluate_at(BigInt(3)) == Rational(1, 135));
    CHECK_THROWS_AS(rf({1}, {-4, 0, 1}).evaluate_at(BigInt(2)), PoleAtValue);
}

TEST_CASE("factored assembly") {
    CHECK(factored(2, {{0, -1}, {1, -1}}) == rf({2}, {0, 1, 1}));
    CHECK(factored(1, {}) == RatFunc(BigInt(1)));
    // 3!/(n(n+1)(n+2))
    CHECK(factored(6, {{0, -1}, {1, -1}, {2, -1}}) == rf({6}, {0, 2, 3, 1}));
}

TEST_CASE("factorial ratios expand to finite products") {
    CHECK(factorial_ratio(2, -1) == rf({0, 2, 3, 1}, {1}));  // (n+2)!/(n-1)! = n(n+1)(n+2)
    CHECK(factorial_ratio(-1, 2) == rf({1}, {0, 2, 3, 1}));
    CHECK(factorial_ratio(1, 1) == RatFunc(BigInt(1)));
    CHECK(factorial_ratio(-1, -2) == rf({-1, 1}, {1}));  // (n-1)!/(n-2)! = n-1
}

namespace {

Polynomial random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 4);
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::vector<BigInt> coeffs;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i) coeffs.emplace_back(coeff(rng));
    return Polynomial(std::move(coeffs));
}

}  // namespace

TEST_CASE("polynomial ring laws on random inputs") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("reduction is idempotent and equality matches cross products") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial num = random_poly(rng), den = random_poly(rng), scale = random_poly(rng);
        if (den.is_zero() || scale.is_zero()) continue;
        RatFunc x(num, den);
        RatFunc y(num * scale, den * scale);
        CHECK(x == y);
        RatFunc again(x.num(), x.den());
        CHECK(again == x);
        CHECK(x.num() * y.den() == y.num() * x.den());
    }
}

TEST_CASE("evaluation respects field operations") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial na = random_poly(rng), da = random_poly(rng);
        Polynomial nb = random_poly(rng), db = random_poly(rng);
        if (da.is_zero() || db.is_zero()) continue;
        RatFunc a(na, da), b(nb, db);
        BigInt point(static_cast<long>(trial % 17) - 8);
        if (a.den().evaluate(point) == 0 || b.den().evaluate(point) == 0) continue;
        CHECK((a + b).evaluate_at(point) == a.evaluate_at(point) + b.evaluate_at(point));
        CHECK((a * b).evaluate_at(point) == a.evaluate_at(point) * b.evaluate_at(point));
        if (!b.is_zero() && (a / b).den().evaluate(point) != 0)
            CHECK((a / b).evaluate_at(point) == a.evaluate_at(point) / b.evaluate_at(point));
    }
}

TEST_CASE("json round trip with decimal-string coefficients") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial num = random_poly(rng), den = random_poly(rng);
        if (den.is_zero()) continue;
        RatFunc x(num, den);
        CHECK(RatFunc::from_json(x.to_json()) == x);
    }
    RatFunc big = rf({1}, {1}) * RatFunc(BigInt("123456789012345678901234567890"));
    CHECK(RatFunc::from_json(big.to_json()) == big);
    CHECK(big.to_json()["num"][0].get<std::string>() == "123456789012345678901234567890");
}

TEST_CASE("canonical form details") {
    // denominator sign is normalized
    RatFunc x(poly({1}), poly({0, -1}));
    CHECK(x.den().leading() > 0);
    CHECK(x == rf({-1}, {0, 1}));
    // shared integer content is removed
    CHECK(rf({2}, {0, 2}) == rf({1}, {0, 1}));
}

TEST_CASE("factored rendering") {
    CHECK(factored(-1, {{0, -1}, {-1, -1}, {1, -1}}).to_string() == "-1/(n(n^2-1))");
    CHECK(factored(6, {{0, -1}, {1, -1}, {2, -1}}).to_string() == "6/(n(n+1)(n+2))");
    CHECK(RatFunc().to_string() == "0");
    CHECK(RatFunc(BigInt(1)).to_string() == "1");
    CHECK(rf({1}, {0, 1}).to_string() == "1/n");
    CHECK(rf({-2, 0, 1}, {0, -4, 0, 1}).to_string() == "(n^2-2)/(n(n^2-4))");
    CHECK(rf({1, 1}, {2}).to_string() == "(n+1)/2");
    CHECK(factored(1, {{1, -2}}).to_string() == "1/(n+1)^2");
    CHECK(rf({8, 4, 2}, {1}).to_string() == "2(n^2+2n+4)");
    CHECK(rf({24, 0, -14, 0, 1}, {1}).to_string() == "(n^4-14n^2+24)");
    CHECK(rf({-24, 0, 14, 0, -1}, {1}).to_string() == "-(n^4-14n^2+24)");
    CHECK(rf({-24, 0, -2}, {1}).to_string() == "-2(n^2+12)");
    CHECK(factored(-1, {{0, -1}, {-1, -1}, {1, -1}}).to_latex() ==
          "-\\frac{1}{n\\left(n^{2}-1\\right)}");
}
