#include <doctest.h>

#include <stdexcept>
#include <random>

#include "xcartan/padic_model.hpp"

using namespace xcartan;

namespace {

P1Point rand_point(std::mt19937_64& rng, int span) {
    std::uniform_int_distribution<std::int64_t> dist(-span, span);
    while (true) {
        const std::int64_t a = dist(rng), b = dist(rng);
        if (a || b) return p1_normalize(a, b);
    }
}

}  // namespace

TEST_CASE("p1_normalize") {
    CHECK(p1_normalize(0, 5) == P1Point{0, 1});
    CHECK(p1_normalize(-4, 6) == P1Point{2, -3});
    CHECK(p1_normalize(12, 0) == P1Point{1, 0});
    CHECK(p1_normalize(0, -7) == P1Point{0, 1});
    CHECK_THROWS_AS(p1_normalize(0, 0), std::domain_error);
}

TEST_CASE("multiplicity in the standard model") {
    for (std::int64_t q : {2, 3, 5, 7}) {
        const BTVertex std_v = BTVertex::standard(q);
        CHECK(p1_mult_in_model({0, 1}, {q, 1}, std_v, q) == 1);
        CHECK(p1_mult_in_model({1, 0}, {0, 1}, std_v, q) == 0);
        CHECK(p1_mult_in_model({1, 1}, {1 + q * q, 1}, std_v, q) == 2);
        CHECK_THROWS_AS(p1_mult_in_model({1, 1}, {2, 2}, std_v, q), std::domain_error);
    }
    CHECK_THROWS_AS(p1_mult_in_model({0, 1}, {1, 1}, BTVertex::standard(3), 5),
                    std::domain_error);
}

TEST_CASE("multiplicity is symmetric") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const std::int64_t q = std::vector<std::int64_t>{2, 3, 5}[i % 3];
        const P1Point x = rand_point(rng, 30), y = rand_point(rng, 30);
        if (x == y) continue;
        for (const BTVertex& v : vertices_within(q, 2))
            CHECK(p1_mult_in_model(x, y, v, q) == p1_mult_in_model(y, x, v, q));
    }
}

TEST_CASE("model-change covariance under unimodular maps") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::int64_t> gd(-4, 4);
    int done = 0;
    while (done < 150) {
        const std::int64_t q = std::vector<std::int64_t>{2, 3, 5}[done % 3];
        const std::int64_t g00 = gd(rng), g01 = gd(rng), g10 = gd(rng), g11 = gd(rng);
        if (g00 * g11 - g01 * g10 != 1 && g00 * g11 - g01 * g10 != -1) continue;
        const P1Point x = rand_point(rng, 9), y = rand_point(rng, 9);
        if (x == y) continue;
        const P1Point gx = p1_normalize(g00 * x.a + g01 * x.b, g10 * x.a + g11 * x.b);
        const P1Point gy = p1_normalize(g00 * y.a + g01 * y.b, g10 * y.a + g11 * y.b);
        for (const BTVertex& v : vertices_within(q, 2)) {
            const auto m = v.basis();
            const BTVertex gv = BTVertex::from_columns(
                q, {{g00 * m[0][0] + g01 * m[1][0], g10 * m[0][0] + g11 * m[1][0]},
                    {g00 * m[0][1] + g01 * m[1][1], g10 * m[0][1] + g11 * m[1][1]}});
            CHECK(p1_mult_in_model(gx, gy, gv, q) == p1_mult_in_model(x, y, v, q));
        }
        ++done;
    }
}

TEST_CASE("find_model_vertex pinned cases") {
    // three points already in general position: the standard model
    CHECK(find_model_vertex({0, 1}, {1, 0}, {1, 1}, 0, 5) == BTVertex::standard(5));

    for (std::int64_t q : {2, 3, 5}) {
        // x = 0 and y = q^3 branch at depth 3; the model with <x,y> = 1 sits
        // two steps below the standard apartment position: diag(q^2, 1)
        const BTVertex v = find_model_vertex({0, 1}, {q * q * q, 1}, {1, 0}, 1, q);
        const auto b = v.basis();
        CHECK(b[0][0] == q * q);
        CHECK(b[0][1] == 0);
        CHECK(b[1][0] == 0);
        CHECK(b[1][1] == 1);
    }

    // every m >= 0 is realizable, also in the tight configuration
    // x = 0, y = q, z = infinity: m = 0 lands on the branch vertex diag(q,1)
    for (std::int64_t q : {2, 3, 5}) {
        for (int m = 0; m <= 3; ++m) {
            const BTVertex v = find_model_vertex({0, 1}, {q, 1}, {1, 0}, m, q);
            CHECK(p1_mult_in_model({0, 1}, {1, 0}, v, q) == 0);
            CHECK(p1_mult_in_model({q, 1}, {1, 0}, v, q) == 0);
            CHECK(p1_mult_in_model({0, 1}, {q, 1}, v, q) == m);
        }
        const auto b = find_model_vertex({0, 1}, {q, 1}, {1, 0}, 0, q).basis();
        CHECK(b[0][0] == q);
        CHECK(b[1][1] == 1);
    }

    CHECK_THROWS_AS(find_model_vertex({0, 1}, {0, 1}, {1, 0}, 1, 3), std::domain_error);
    CHECK_THROWS_AS(find_model_vertex({0, 1}, {1, 0}, {1, 1}, -1, 3), std::domain_error);
}

TEST_CASE("find_model_vertex is the unique solution (exhaustive search)") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> md(0, 3);
    for (std::int64_t q : {2, 3, 5}) {
        int done = 0;
        while (done < 50) {
            const P1Point x = rand_point(rng, 8), y = rand_point(rng, 8), z = rand_point(rng, 8);
            if (x == y || x == z || y == z) continue;
            const BTVertex v0 = BTVertex::standard(q);
            // keep the configuration within reach of the fixed search radius
            const int depth = std::max({p1_mult_in_model(x, y, v0, q),
                                        p1_mult_in_model(x, z, v0, q),
                                        p1_mult_in_model(y, z, v0, q)});
            if (depth > 3) continue;
            const int m = md(rng);
            const BTVertex got = find_model_vertex(x, y, z, m, q);
            int hits = 0;
            for (const BTVertex& v : vertices_within(q, m + 3)) {
                if (p1_mult_in_model(x, z, v, q) == 0 && p1_mult_in_model(y, z, v, q) == 0 &&
                    p1_mult_in_model(x, y, v, q) == m) {
                    ++hits;
                    CHECK(v == got);
                }
            }
            CHECK(hits == 1);
            ++done;
        }
    }
}

TEST_CASE("distance") {
    const BTVertex v0 = BTVertex::standard(3);
    CHECK(v0.distance(v0) == 0);
    const BTVertex v1 = BTVertex::from_columns(3, {{3, 0}, {0, 1}});
    CHECK(v0.distance(v1) == 1);
    const BTVertex v2 = BTVertex::from_columns(3, {{3, 0}, {1, 3}});
    CHECK(v0.distance(v2) == 2);
    CHECK(v1.distance(v2) == v2.distance(v1));
    // homothety invariance
    CHECK(BTVertex::from_columns(3, {{9, 0}, {0, 9}}) == v0);
}
