#include <doctest.h>

#include <stdexcept>
#include "xcartan/heegner.hpp"

using namespace xcartan;

TEST_CASE("decompose_discriminant") {
    auto d = decompose_discriminant(-7);
    CHECK(d.fundamental == -7);
    CHECK(d.conductor == 1);
    d = decompose_discriminant(-12);
    CHECK(d.fundamental == -3);
    CHECK(d.conductor == 2);
    d = decompose_discriminant(-16);
    CHECK(d.fundamental == -4);
    CHECK(d.conductor == 2);
    d = decompose_discriminant(-27);
    CHECK(d.fundamental == -3);
    CHECK(d.conductor == 3);
    d = decompose_discriminant(-8);
    CHECK(d.fundamental == -8);
    CHECK(d.conductor == 1);
}

TEST_CASE("decompose rejects non-discriminants") {
    CHECK_THROWS_AS(decompose_discriminant(0), std::domain_error);
    CHECK_THROWS_AS(decompose_discriminant(5), std::domain_error);
    CHECK_THROWS_AS(decompose_discriminant(-2), std::domain_error);
    CHECK_THROWS_AS(decompose_discriminant(-5), std::domain_error);
    CHECK_THROWS_AS(decompose_discriminant(-6), std::domain_error);
}

TEST_CASE("decompose round trip") {
    for (std::int64_t d = -1; d >= -20000; --d) {
        const std::int64_t m4 = ((d % 4) + 4) % 4;
        if (m4 != 0 && m4 != 1) continue;
        const Discriminant dd = decompose_discriminant(d);
        CHECK(dd.conductor * dd.conductor * dd.fundamental == d);
        // fundamental part is itself fundamental: conductor 1 on re-split
        const Discriminant f = decompose_discriminant(dd.fundamental);
        CHECK(f.conductor == 1);
    }
}

TEST_CASE("unit_count") {
    CHECK(unit_count(decompose_discriminant(-3)) == 6);
    CHECK(unit_count(decompose_discriminant(-4)) == 4);
    CHECK(unit_count(decompose_discriminant(-163)) == 2);
    CHECK(unit_count(decompose_discriminant(-12)) == 2);  // value, not fundamental part
}

TEST_CASE("level validation") {
    CHECK(Level(1, 11).modulus() == 11);
    CHECK(Level(3, 2).modulus() == 6);
    CHECK_THROWS_AS(Level(2, 4), std::domain_error);
    CHECK_THROWS_AS(Level(0, 5), std::domain_error);
}

TEST_CASE("heegner_condition") {
    CHECK(heegner_condition(decompose_discriminant(-115), Level(1, 11)));
    CHECK_FALSE(heegner_condition(decompose_discriminant(-3), Level(1, 3)));
    CHECK_FALSE(heegner_condition(decompose_discriminant(-7), Level(7, 1)));
    // empty conditions at level (1,1)
    for (std::int64_t d : {-3, -4, -7, -8, -11, -15, -20, -24})
        CHECK(heegner_condition(decompose_discriminant(d), Level(1, 1)));
    // mixed level: split at 3, non-split at 2
    CHECK(heegner_condition(decompose_discriminant(-11), Level(3, 2)));
}

TEST_CASE("classify_pair on pinned examples") {
    const Level lv(1, 11);
    auto tag = [&](std::int64_t a, std::int64_t b) {
        return classify_pair(decompose_discriminant(a), decompose_discriminant(b), lv).tag;
    };
    CHECK(tag(-115, -267) == PairTag::fundamental_exact);
    CHECK(tag(-16, -163) == PairTag::non_fundamental_exact);
    CHECK(tag(-3, -12) == PairTag::degenerate_reference_only);
    CHECK(tag(-3, -3) == PairTag::unsupported);
    CHECK(tag(-7, -11) == PairTag::non_heegner);  // (-7|11) = +1
}

TEST_CASE("classify_pair is symmetric") {
    const Level lv(1, 11);
    for (std::int64_t a : {-3, -4, -7, -12, -16, -115})
        for (std::int64_t b : {-3, -8, -27, -163, -267}) {
            const Discriminant da = decompose_discriminant(a);
            const Discriminant db = decompose_discriminant(b);
            CHECK(classify_pair(da, db, lv).tag == classify_pair(db, da, lv).tag);
        }
}
