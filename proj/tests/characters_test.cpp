#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "unint/characters.hpp"
#include "unint/errors.hpp"

using namespace unint;
using testutil::partition;
using testutil::rf;

TEST_CASE("character values") {
    CHECK(character(partition({2, 1}), partition({3})) == -1);
    CHECK(character(partition({1, 1}), partition({2})) == -1);
    // totally symmetric representation has character 1 on every class
    for (int p = 1; p <= 6; ++p)
        for (const auto& c : partitions_of(p)) CHECK(character(partition({p}), c) == 1);
    // sign representation: parity of the permutation
    CHECK(character(partition({1, 1, 1}), partition({2, 1})) == -1);
    CHECK(character(partition({1, 1, 1}), partition({3})) == 1);
    CHECK_THROWS_AS(character(partition({2}), partition({3})), WeightMismatch);
}

TEST_CASE("symmetric group dimensions") {
    CHECK(dim_sp(partition({2, 1})) == 2);
    for (int m = 1; m <= 8; ++m) CHECK(dim_sp(partition({m})) == 1);
    CHECK(dim_sp(partition({2, 2})) == 2);
    // dimension equals the character at the identity class
    for (int p = 1; p <= 6; ++p) {
        std::vector<int> ones(static_cast<std::size_t>(p), 1);
        for (const auto& f : partitions_of(p))
            CHECK(dim_sp(f) == character(f, Partition(ones)));
    }
}

TEST_CASE("unitary group dimensions as polynomials in n") {
    CHECK(dim_un(partition({1})) == rf({0, 1}, {1}));          // n
    CHECK(dim_un(partition({1, 1})) == rf({0, -1, 1}, {2}));   // n(n-1)/2
    CHECK(dim_un(partition({2})) == rf({0, 1, 1}, {2}));       // n(n+1)/2
    // totally symmetric: prod_{j<m} (n+j) / m!
    for (long m = 1; m <= 6; ++m) {
        RatFunc expected = factorial_ratio(m - 1, -1) / RatFunc(Rational(factorial(m)));
        CHECK(dim_un(partition({static_cast<int>(m)})) == expected);
    }
}

namespace {

// Independent route: pad f with zeros to n rows and take the ratio of
// Vandermonde determinants of (f_i + n - i) against (n - i), exact integers.
BigInt vandermonde(const std::vector<BigInt>& xs) {
    BigInt prod(1);
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t k = i + 1; k < xs.size(); ++k) prod *= xs[i] - xs[k];
    return prod;
}

Rational dim_un_by_vandermonde(const Partition& f, int n) {
    if (f.size() > n) return Rational(0);
    std::vector<BigInt> top, bottom;
    for (int i = 0; i < n; ++i) {
        int part = i < f.size() ? f[i] : 0;
        top.emplace_back(part + (n - 1 - i));
        bottom.emplace_back(n - 1 - i);
    }
    Rational q(vandermonde(top), vandermonde(bottom));
    q.canonicalize();
    return q;
}

}  // namespace

TEST_CASE("dimension polynomial agrees with the determinant ratio at integer points") {
    for (int p = 1; p <= 5; ++p)
        for (const auto& f : partitions_of(p))
            for (int n = 1; n <= 8; ++n)
                CHECK(dim_un(f).evaluate_at(BigInt(n)) == dim_un_by_vandermonde(f, n));
}

TEST_CASE("dimension polynomial vanishes when the diagram has too many rows") {
    for (int p = 1; p <= 5; ++p)
        for (const auto& f : partitions_of(p)) {
            if (f.size() >= 2)
                CHECK(dim_un(f).evaluate_at(BigInt(f.size() - 1)) == Rational(0));
            CHECK(dim_un(f).evaluate_at(BigInt(1)) == Rational(f.size() == 1 ? 1 : 0));
        }
}

TEST_CASE("character tables for p = 2 and 3 match the classical layout") {
    CharacterTable t2 = character_table(2);
    REQUIRE(t2.rows.size() == 2);
    CHECK(t2.rows[0] == partition({2}));
    CHECK(t2.rows[1] == partition({1, 1}));
    CHECK(t2.cols[0] == partition({1, 1}));
    CHECK(t2.cols[1] == partition({2}));
    CHECK(t2.entries == std::vector<std::vector<long long>>{{1, 1}, {1, -1}});
    CHECK(t2.class_sizes == std::vector<BigInt>{BigInt(1), BigInt(1)});

    CharacterTable t3 = character_table(3);
    REQUIRE(t3.rows.size() == 3);
    CHECK(t3.entries[0] == std::vector<long long>{1, 1, 1});
    CHECK(t3.entries[1] == std::vector<long long>{2, 0, -1});
    CHECK(t3.entries[2] == std::vector<long long>{1, -1, 1});
    CHECK(t3.class_sizes == std::vector<BigInt>{BigInt(1), BigInt(3), BigInt(2)});

    CHECK_THROWS_AS(character_table(kDegreeCap + 1), DegreeTooLarge);
}

TEST_CASE("sum of squared dimensions and orthogonality up to p = 7") {
    for (int p = 1; p <= 7; ++p) {
        CharacterTable table = character_table(p);
        BigInt dim_sum(0);
        for (const auto& f : table.rows) {
            BigInt d(static_cast<long>(dim_sp(f)));
            dim_sum += d * d;
        }
        CHECK(dim_sum == factorial(p));

        // row orthogonality: sum_c n(c) chi_f(c) chi_g(c) = p! delta_fg
        for (std::size_t a = 0; a < table.rows.size(); ++a)
            for (std::size_t b = a; b < table.rows.size(); ++b) {
                BigInt sum(0);
                for (std::size_t j = 0; j < table.cols.size(); ++j)
                    sum += table.class_sizes[j] * static_cast<long>(table.entries[a][j]) *
                           static_cast<long>(table.entries[b][j]);
                CHECK(sum == (a == b ? factorial(p) : BigInt(0)));
            }

        // column orthogonality: sum_f chi_f(c) chi_f(c') = (p!/n(c)) delta_cc'
        for (std::size_t i = 0; i < table.cols.size(); ++i)
            for (std::size_t j = i; j < table.cols.size(); ++j) {
                BigInt sum(0);
                for (std::size_t a = 0; a < table.rows.size(); ++a)
                    sum += BigInt(static_cast<long>(table.entries[a][i])) *
                           static_cast<long>(table.entries[a][j]);
                CHECK(sum == (i == j ? factorial(p) / table.class_sizes[i] : BigInt(0)));
            }
    }
}

TEST_CASE("p = 4 table satisfies the squared-dimension identity") {
    CharacterTable t4 = character_table(4);
    BigInt sum(0);
    for (std::size_t i = 0; i < t4.rows.size(); ++i) {
        BigInt d(static_cast<long>(t4.entries[i][0]));
        sum += d * d;
    }
    CHECK(sum == 24);
}
