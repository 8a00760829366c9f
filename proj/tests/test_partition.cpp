#include "doctest.h"

#include <random>

#include "bisimlab/errors.hpp"
#include "bisimlab/partition.hpp"
#include "bisimlab/partition_ops.hpp"
#include "helpers.hpp"

using namespace bisimlab;

TEST_CASE("partition construction and accessors") {
    Partition p = Partition::from_blocks(5, {{0, 2}, {1, 3, 4}});
    CHECK(p.state_count() == 5);
    CHECK(p.block_count() == 2);
    CHECK(p.block_of(0) == 0);
    CHECK(p.block_of(3) == 1);
    CHECK(p.block_size(1) == 3);
    std::span<const int> m = p.members(1);
    CHECK(std::vector<int>(m.begin(), m.end()) == std::vector<int>{1, 3, 4});

    CHECK(Partition::unit(4).block_count() == 1);
    CHECK(Partition::singletons(4).block_count() == 4);
    CHECK(Partition::singletons(4).block_of(2) == 2);
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}}), InputError);          // missing state
    CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1, 2}, {2}}), InputError);  // overlap
    CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1, 2}, {}}), InputError);   // empty block
    CHECK_THROWS_AS(Partition::from_blocks(2, {{0, 1, 2}}), InputError);       // out of range
    CHECK_THROWS_AS(Partition::from_block_of({0, 2}), InputError);             // not dense
    CHECK_THROWS_AS(Partition::from_block_of({1, 1}), InputError);             // id 0 unused
}

TEST_CASE("same_blocks ignores block numbering") {
    Partition a = Partition::from_block_of({0, 1, 0, 1});
    Partition b = Partition::from_block_of({1, 0, 1, 0});
    Partition c = Partition::from_block_of({0, 1, 1, 0});
    CHECK(a.same_blocks(b));
    CHECK(!a.same_blocks(c));
    CHECK(a.canonical_key() == b.canonical_key());
    CHECK(a.canonical_key() != c.canonical_key());
}

TEST_CASE("refinement predicate") {
    Partition coarse = Partition::from_blocks(4, {{0, 1, 2}, {3}});
    Partition fine = Partition::from_blocks(4, {{0, 1}, {2}, {3}});
    CHECK(is_refinement(fine, coarse));
    CHECK(!is_refinement(coarse, fine));
    CHECK(is_refinement(coarse, coarse));
    Partition cross = Partition::from_blocks(4, {{0, 3}, {1, 2}});
    CHECK(!is_refinement(cross, coarse));
}

TEST_CASE("common refinement properties") {
    std::mt19937 rng(7001);
    for (int round = 0; round < 200; ++round) {
        int n = std::uniform_int_distribution<int>(1, 12)(rng);
        Partition a = testutil::random_partition(rng, n, 4);
        Partition b = testutil::random_partition(rng, n, 4);
        Partition c = common_refinement(a, b);
        CHECK(is_refinement(c, a));
        CHECK(is_refinement(c, b));
        // coarsest: states sharing blocks in both stay together
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t)
                if (a.block_of(s) == a.block_of(t) && b.block_of(s) == b.block_of(t))
                    CHECK(c.block_of(s) == c.block_of(t));
        CHECK(common_refinement(a, a).same_blocks(a));
    }
}

TEST_CASE("refinement cost counts moved states") {
    Partition b0 = Partition::unit(4);
    CHECK(refinement_cost(b0, Partition::from_blocks(4, {{0, 1}, {2, 3}})) == 2);
    CHECK(refinement_cost(b0, Partition::from_blocks(4, {{0, 1, 2}, {3}})) == 1);
    CHECK(refinement_cost(b0, Partition::singletons(4)) == 3);
    CHECK(refinement_cost(b0, b0) == 0);
    CHECK_THROWS_AS(refinement_cost(Partition::singletons(3), Partition::unit(3)), InputError);
}

TEST_CASE("refinement cost matches a direct recount") {
    std::mt19937 rng(7002);
    for (int round = 0; round < 200; ++round) {
        int n = std::uniform_int_distribution<int>(1, 14)(rng);
        Partition from = testutil::random_partition(rng, n, 3);
        // refine by splitting with an independent random partition
        Partition fine = common_refinement(from, testutil::random_partition(rng, n, 3));
        long long expected = 0;
        for (int b = 0; b < from.block_count(); ++b) {
            std::map<int, long long> sizes;
            for (int s : from.members(b))
                ++sizes[fine.block_of(s)];
            long long largest = 0;
            for (auto& [id, sz] : sizes)
                largest = std::max(largest, sz);
            expected += from.block_size(b) - largest;
        }
        CHECK(refinement_cost(from, fine) == expected);
    }
}
