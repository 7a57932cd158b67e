#include "twopart/io.hpp"

#include "doctest.h"
#include "oracles.hpp"
#include "twopart/constructions.hpp"

using namespace twopart;

TEST_CASE("family json round trip") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const SetFamily f = oracle::random_family(rng, n, 0.25);
        const std::optional<int> k =
            trial % 2 ? std::optional<int>(static_cast<int>(rng() % (n + 1))) : std::nullopt;
        const FamilyFile back = parse_family(family_to_json(f, k));
        REQUIRE(back.family == f);
        REQUIRE(back.k == k);
    }
}

TEST_CASE("family compact round trip") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const SetFamily f = oracle::random_family(rng, n, 0.2);
        const std::optional<int> k = trial % 2 ? std::optional<int>(n / 2) : std::nullopt;
        const FamilyFile back = parse_family(family_to_compact(f, k));
        REQUIRE(back.family == f);
        REQUIRE(back.k == k);
    }
    const FamilyFile f = parse_family("n=3 k=1\n3\n5\n");
    CHECK(f.family.masks == std::vector<SubsetMask>{3, 5});
    CHECK(f.k == 1);
}

TEST_CASE("json sets are written in mask order with sorted elements") {
    const SetFamily f = normalize_family({0b110, 0b001}, 3);
    CHECK(family_to_json(f, 1) ==
          R"({"k":1,"n":3,"sets":[[0],[1,2]]})");
}

TEST_CASE("partition round trip") {
    const LabeledPartition p = canonical_partition(4);
    const LabeledPartition back = parse_partition(partition_to_json(p));
    REQUIRE(back.n == p.n);
    REQUIRE(back.complete);
    REQUIRE(back.classes.size() == p.classes.size());
    for (std::size_t i = 0; i < p.classes.size(); ++i) {
        REQUIRE(back.classes[i].label == p.classes[i].label);
        REQUIRE(back.classes[i].family == p.classes[i].family);
    }

    const LabeledPartition m = modified_canonical_partition(4, BigRatio(1));
    const LabeledPartition mback = parse_partition(partition_to_json(m));
    REQUIRE(mback.complete);  // content still covers the power set
    REQUIRE(mback.classes.size() == m.classes.size());
}

TEST_CASE("pair round trip") {
    const FamilyPair p = cross_sperner_pair_example(4, CrossVariant::Threshold, 3);
    const FamilyPair back = parse_pair(pair_to_json(p));
    REQUIRE(back.first == p.first);
    REQUIRE(back.second == p.second);
}

TEST_CASE("parse failures raise invalid-input errors") {
    CHECK_THROWS(parse_family("not a file"));
    CHECK_THROWS(parse_family(""));
    CHECK_THROWS(parse_family(R"({"n":3})"));
    CHECK_THROWS(parse_family(R"({"n":3,"k":null,"sets":[[7]]})"));
    CHECK_THROWS(parse_family("n=2\nff\n"));  // mask outside ground set
    CHECK_THROWS(parse_partition(R"({"n":2,"classes":[{"label":"a","sets":[[0]]},)"
                                 R"({"label":"b","sets":[[0]]}]})"));  // overlap
    CHECK_THROWS(parse_pair(R"({"n":2,"classes":[{"label":"F","sets":[]}]})"));
}
