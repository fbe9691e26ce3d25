#include <catch2/catch_amalgamated.hpp>

#include "catalan/bitset.hpp"
#include "catalan/errors.hpp"
#include "catalan/partition.hpp"

namespace catalan {

  TEST_CASE("partition 001: from_labels", "[quick][partition]") {
    auto p = IndexPartition::from_labels({7, 3, 7, 1});
    REQUIRE(p.size() == 4);
    REQUIRE(p.class_count() == 3);
    // Class ids follow the least member.
    REQUIRE(p.class_of(0) == 0);
    REQUIRE(p.class_of(1) == 1);
    REQUIRE(p.class_of(3) == 2);
    REQUIRE(p.same_class(0, 2));
    REQUIRE(p.class_containing(2) == std::vector<Index>{0, 2});
    REQUIRE(p.max_class_size() == 2);
    REQUIRE(!p.is_discrete());
    REQUIRE(IndexPartition::discrete(5).is_discrete());
    REQUIRE(IndexPartition::from_keys(std::vector<std::string>{"b", "a", "b"})
            == IndexPartition::from_labels({0, 1, 0}));
  }

  TEST_CASE("partition 002: meet and join", "[quick][partition]") {
    auto a = IndexPartition::from_labels({0, 0, 1, 1, 2});
    auto b = IndexPartition::from_labels({0, 1, 1, 2, 2});
    REQUIRE(meet(a, b).is_discrete());
    auto j = join(a, b);
    REQUIRE(j.class_count() == 1);
    REQUIRE(join(a, a) == a);
    REQUIRE(meet(a, a) == a);
  }

  TEST_CASE("partition 003: relation composition", "[quick][partition]") {
    auto a = BinaryRelation::from_partition(IndexPartition::from_labels({0, 0, 1}));
    auto b = BinaryRelation::from_partition(IndexPartition::from_labels({0, 1, 1}));
    REQUIRE(relations_equal(relation_compose(a, a), a));
    auto ab = relation_compose(a, b);
    REQUIRE(ab.contains(0, 2));
    REQUIRE(!ab.contains(2, 0));
    auto ba = relation_compose(b, a);
    REQUIRE(ba.contains(2, 0));
    REQUIRE(!ba.contains(0, 2));
    REQUIRE(ab.pair_count() == 8);
    REQUIRE_THROWS_AS(relation_compose(a, BinaryRelation(4)), ValidationError);
  }

  TEST_CASE("partition 004: DynamicBitset", "[quick][partition]") {
    DynamicBitset x(130), y(130);
    x.set(0);
    x.set(129);
    y.set(129);
    REQUIRE(x.count() == 2);
    REQUIRE(y.is_subset_of(x));
    REQUIRE(!x.is_subset_of(y));
    y |= x;
    REQUIRE(y == x);
    y.reset(0);
    REQUIRE(!y.test(0));
    std::vector<std::size_t> seen;
    x.for_each([&](std::size_t i) { seen.push_back(i); });
    REQUIRE(seen == std::vector<std::size_t>{0, 129});
    DynamicBitset z(130);
    REQUIRE(z.none());
  }

}  // namespace catalan
