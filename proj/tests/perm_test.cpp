#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "test_util.hpp"
#include "unint/errors.hpp"

using namespace unint;
using testutil::partition;

TEST_CASE("composition applies the right factor first") {
    Permutation e = Permutation::identity(3);
    CHECK(e.compose(e) == e);
    Permutation t12 = Permutation::from_cycles("(1 2)", 3);
    CHECK(t12.compose(t12) == e);
    Permutation t23 = Permutation::from_cycles("(2 3)", 3);
    Permutation product = t12.compose(t23);
    // 1->2, 2->3, 3->1
    CHECK(product == Permutation::from_cycles("(1 2 3)", 3));
    CHECK_THROWS_AS(t12.compose(Permutation::identity(4)), DegreeMismatch);
}

TEST_CASE("cycle types") {
    CHECK(Permutation::identity(3).cycle_type() == partition({1, 1, 1}));
    CHECK(Permutation::from_cycles("(1 2 3 4)").cycle_type() == partition({4}));
    CHECK(Permutation::from_cycles("(1 2)(3 4)").cycle_type() == partition({2, 2}));
}

TEST_CASE("cycle notation round trip") {
    CHECK(Permutation::from_cycles("(1 2)(3 4)").to_cycles() == "(1 2)(3 4)");
    CHECK(Permutation::identity(4).to_cycles() == "e");
    CHECK(Permutation::from_cycles("e", 2) == Permutation::identity(2));
    CHECK(Permutation::from_cycles("(2 3)", 4).degree() == 4);
    CHECK_THROWS_AS(Permutation::from_cycles("(1 1)"), ParseError);
}

TEST_CASE("class sizes") {
    CHECK(class_size(partition({2, 1})) == 3);
    CHECK(class_size(partition({3})) == 2);
    CHECK(class_size(partition({2, 2})) == 3);
    // brute-force oracle over S_4
    std::map<Partition, long> counted;
    for (const auto& g : enumerate_sp(4)) ++counted[g.cycle_type()];
    for (const auto& [c, count] : counted) CHECK(class_size(c) == count);
}

TEST_CASE("class sizes sum to p! for p <= 7") {
    for (int p = 1; p <= 7; ++p) {
        BigInt total(0);
        for (const auto& c : partitions_of(p)) total += class_size(c);
        CHECK(total == factorial(p));
    }
}

TEST_CASE("full group enumeration") {
    CHECK(enumerate_sp(0).size() == 1);
    CHECK(enumerate_sp(3).size() == 6);
    auto s5 = enumerate_sp(5);
    CHECK(s5.size() == 120);
    CHECK(enumerate_sp(kEnumerationCap).size() == 40320);
    CHECK(std::set<Permutation>(s5.begin(), s5.end()).size() == 120);
    CHECK_THROWS_AS(enumerate_sp(9), DegreeTooLarge);

    SpStream stream(3);
    Permutation g;
    int count = 0;
    while (stream.next(g)) ++count;
    CHECK(count == 6);
    stream.reset();
    CHECK(stream.next(g));
    CHECK(g.is_identity());
}

TEST_CASE("cycle type is a conjugation invariant") {
    std::mt19937 rng(5);
    auto s6 = enumerate_sp(6);
    std::uniform_int_distribution<std::size_t> pick(0, s6.size() - 1);
    for (int trial = 0; trial < 100; ++trial) {
        const Permutation& g = s6[pick(rng)];
        const Permutation& q = s6[pick(rng)];
        CHECK(g.compose(q).compose(g.inverse()).cycle_type() == q.cycle_type());
    }
}

TEST_CASE("young subgroups of the worked index sets") {
    // I = (b, b, a)
    auto gi = young_subgroup({0, 0, 1});
    CHECK(gi.size() == 2);
    CHECK(std::set<Permutation>(gi.begin(), gi.end()).count(Permutation::from_cycles("(1 2)", 3)));
    // J = (d, c, c)
    auto gj = young_subgroup({1, 0, 0});
    CHECK(gj.size() == 2);
    CHECK(std::set<Permutation>(gj.begin(), gj.end()).count(Permutation::from_cycles("(2 3)", 3)));
    // all distinct values
    CHECK(young_subgroup({3, 1, 4, 2}).size() == 1);
}

TEST_CASE("young subgroups satisfy the subgroup axioms and have the right order") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> value(0, 2);
    std::uniform_int_distribution<int> length(1, 6);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<int> values;
        int len = length(rng);
        for (int i = 0; i < len; ++i) values.push_back(value(rng));
        auto group = young_subgroup(values);
        CHECK(BigInt(static_cast<long>(group.size())) == young_subgroup_order(values));
        std::set<Permutation> members(group.begin(), group.end());
        CHECK(members.size() == group.size());
        for (const auto& g : group) {
            CHECK(members.count(g.inverse()));
            for (const auto& h : group) CHECK(members.count(g.compose(h)));
        }
    }
}

TEST_CASE("partitions in reverse lexicographic order") {
    auto p3 = partitions_of(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == partition({3}));
    CHECK(p3[1] == partition({2, 1}));
    CHECK(p3[2] == partition({1, 1, 1}));
    CHECK(partitions_of(1) == std::vector<Partition>{partition({1})});
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(12).size() == 77);
}

TEST_CASE("partition text io") {
    CHECK(partition({2, 1}).to_string() == "2,1");
    CHECK(Partition::parse("2,1") == partition({2, 1}));
    CHECK(Partition::parse("1,2") == partition({2, 1}));  // sorted on construction
    CHECK(partition({3, 1}).conjugate() == partition({2, 1, 1}));
    CHECK_THROWS(partition({0}));
}
