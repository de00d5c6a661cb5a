#include "polycong/residue.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

namespace {

using namespace polycong;
using u64 = std::uint64_t;

ResidueSet random_set(std::mt19937_64& rng, u64 modulus, double density) {
    ResidueSet set(modulus);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (u64 r = 0; r < modulus; ++r)
        if (coin(rng) < density) set.insert(r);
    return set;
}

ResidueSet sumset_by_definition(const ResidueSet& a, const ResidueSet& b) {
    ResidueSet out(a.modulus());
    for (const u64 x : a.members())
        for (const u64 y : b.members()) out.insert((x + y) % a.modulus());
    return out;
}

}  // namespace

TEST_SUITE("residue") {

TEST_CASE("construction and membership") {
    ResidueSet set(8);
    CHECK(set.modulus() == 8);
    CHECK(set.count() == 0);
    CHECK(set.empty());
    set.insert(0);
    set.insert(5);
    set.insert(5);
    CHECK(set.count() == 2);
    CHECK(set.contains(0));
    CHECK(set.contains(5));
    CHECK_FALSE(set.contains(1));
    CHECK(set.members() == std::vector<u64>{0, 5});
    CHECK_THROWS_AS(set.contains(8), std::out_of_range);
    CHECK_THROWS_AS(set.insert(8), std::out_of_range);
    CHECK_THROWS_AS(ResidueSet(0), std::invalid_argument);

    const auto full = ResidueSet::full(70);
    CHECK(full.count() == 70);
    CHECK(full.contains(69));

    const auto listed = ResidueSet::from_members(8, {0, 1, 2, 4, 5});
    CHECK(listed.count() == 5);
    CHECK(listed == ResidueSet::from_members(8, {5, 4, 2, 1, 0}));
}

TEST_CASE("lift enumerates all preimages") {
    const auto odds = lift(ResidueSet::from_members(2, {1}), 8);
    CHECK(odds.members() == std::vector<u64>{1, 3, 5, 7});
    const auto everything = lift(ResidueSet::from_members(1, {0}), 5);
    CHECK(everything.count() == 5);
    CHECK_THROWS_AS(lift(ResidueSet::from_members(2, {1}), 7), std::invalid_argument);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const u64 m = rng() % 60 + 1;
        const u64 q = rng() % 5 + 1;
        const auto low = random_set(rng, m, 0.4);
        const auto high = lift(low, m * q);
        CHECK(high.count() == low.count() * q);
        for (const u64 r : high.members()) CHECK(low.contains(r % m));
        for (const u64 r : low.members())
            for (u64 j = 0; j < q; ++j) CHECK(high.contains(r + j * m));
    }
}

TEST_CASE("level sets single out unreachable lifts") {
    const auto a4 = ResidueSet::from_members(4, {0, 1, 2});
    const auto a8 = ResidueSet::from_members(8, {0, 1, 2, 4, 5});
    CHECK(n_set(a8, a4).members() == std::vector<u64>{6});
    CHECK_THROWS_AS(n_set(a8, ResidueSet::from_members(3, {0})), std::invalid_argument);
    CHECK_THROWS_AS(n_set(a8, a8), std::invalid_argument);
}

TEST_CASE("scaling embeds a set at a multiple modulus") {
    const auto scaled = scale(ResidueSet::from_members(4, {1, 3}), 4, 16);
    CHECK(scaled.members() == std::vector<u64>{4, 12});
    CHECK(scale(ResidueSet::from_members(4, {1, 3}), 1, 4).members() ==
          std::vector<u64>{1, 3});
    CHECK_THROWS_AS(scale(ResidueSet::from_members(4, {1}), 3, 16), std::invalid_argument);
}

TEST_CASE("cyclic sumsets on fixed values") {
    const auto squares8 = ResidueSet::from_members(8, {0, 1, 4});
    CHECK(cyclic_sumset(squares8, squares8).members() ==
          std::vector<u64>{0, 1, 2, 4, 5});
    const auto squares9 = ResidueSet::from_members(9, {0, 1, 4, 7});
    CHECK(cyclic_sumset(squares9, squares9).members() ==
          std::vector<u64>{0, 1, 2, 4, 5, 7, 8});
    const auto empty = ResidueSet(9);
    CHECK(cyclic_sumset(squares9, empty).empty());
    const auto zero = ResidueSet::from_members(9, {0});
    CHECK(cyclic_sumset(squares9, zero) == squares9);
    CHECK_THROWS_AS(cyclic_sumset(squares9, squares8), std::invalid_argument);
}

TEST_CASE("cyclic sumsets match the definition on random sets") {
    std::mt19937_64 rng(20240401);
    for (int i = 0; i < 60; ++i) {
        const u64 m = rng() % 511 + 2;
        const auto a = random_set(rng, m, 0.15);
        const auto b = random_set(rng, m, 0.15);
        const auto c = random_set(rng, m, 0.15);
        const auto ab = cyclic_sumset(a, b);
        CHECK(ab == sumset_by_definition(a, b));
        CHECK(ab == cyclic_sumset(b, a));
        CHECK(cyclic_sumset(ab, c) == cyclic_sumset(a, cyclic_sumset(b, c)));
    }
}

TEST_CASE("set algebra") {
    const auto a = ResidueSet::from_members(10, {0, 2, 4, 6});
    const auto b = ResidueSet::from_members(10, {4, 5, 6, 7});
    CHECK(set_union(a, b).members() == std::vector<u64>{0, 2, 4, 5, 6, 7});
    CHECK(set_intersection(a, b).members() == std::vector<u64>{4, 6});
    CHECK(set_difference(a, b).members() == std::vector<u64>{0, 2});
    CHECK(is_subset(set_intersection(a, b), a));
    CHECK(is_subset(a, set_union(a, b)));
    CHECK_FALSE(is_subset(b, a));
    CHECK_THROWS_AS(set_union(a, ResidueSet(9)), std::invalid_argument);
}

TEST_CASE("json serialization") {
    const auto set = ResidueSet::from_members(8, {0, 1, 4});
    CHECK(to_json_string(set) == R"({"modulus":8,"members":[0,1,4]})");
    CHECK(residue_set_from_json(to_json_string(set)) == set);
    CHECK(to_json_string(ResidueSet(3)) == R"({"modulus":3,"members":[]})");
    CHECK_THROWS_AS(residue_set_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(residue_set_from_json(R"({"modulus":4})"), std::invalid_argument);
    CHECK_THROWS_AS(residue_set_from_json(R"({"modulus":4,"members":[4]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(residue_set_from_json(R"({"modulus":0,"members":[]})"),
                    std::invalid_argument);
}

TEST_CASE("hex bit serialization") {
    const auto set = ResidueSet::from_members(8, {0, 1, 2, 4, 5});
    CHECK(to_hex_bits(set) == "37");
    CHECK(residue_set_from_hex_bits(8, "37") == set);
    CHECK(to_hex_bits(ResidueSet::full(10)) == "ff03");
    CHECK(residue_set_from_hex_bits(10, "FF03") == ResidueSet::full(10));
    CHECK(to_hex_bits(ResidueSet(1)) == "00");
    CHECK_THROWS_AS(residue_set_from_hex_bits(8, "371"), std::invalid_argument);
    CHECK_THROWS_AS(residue_set_from_hex_bits(8, "3g"), std::invalid_argument);
    CHECK_THROWS_AS(residue_set_from_hex_bits(10, "ff07"), std::invalid_argument);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        const u64 m = rng() % 300 + 1;
        const auto random = random_set(rng, m, 0.3);
        CHECK(residue_set_from_hex_bits(m, to_hex_bits(random)) == random);
        CHECK(residue_set_from_json(to_json_string(random)) == random);
    }
}

TEST_CASE("base profiles refuse missing levels") {
    NSetProfile profile;
    profile.prime = 2;
    profile.degree = 2;
    profile.base_sets.emplace(2, ResidueSet::from_members(4, {3}));
    profile.base_sizes[2] = 1;
    CHECK(profile.set_at(2).members() == std::vector<u64>{3});
    CHECK(profile.size_at(2) == 1);
    CHECK_THROWS_AS(profile.set_at(3), std::invalid_argument);
    CHECK_THROWS_AS(profile.size_at(3), std::invalid_argument);
}

}  // TEST_SUITE
