#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <set>

#include "abvar/elliptic.hpp"
#include "support/oracles.hpp"

using namespace abvar;
using namespace abvar::ec;

TEST_CASE("parse_curve validates prime, characteristic and discriminant") {
    const auto c = parse_curve(5, 1, 0);
    CHECK(c.p == 5);
    CHECK(c.a == 1);
    CHECK(c.b == 0);
    CHECK_THROWS_AS(parse_curve(5, 0, 0), SingularCurveError);
    CHECK_THROWS_AS(parse_curve(2, 1, 1), SmallCharacteristicError);
    CHECK_THROWS_AS(parse_curve(3, 1, 1), SmallCharacteristicError);
    CHECK_THROWS_AS(parse_curve(9, 1, 1), NotPrimeError);
    CHECK_THROWS_AS(parse_curve(1, 1, 1), NotPrimeError);
    CHECK_THROWS_AS(parse_curve(-7, 1, 1), NotPrimeError);
    // coefficients land in [0, p)
    CHECK(parse_curve(5, -4, 10) == parse_curve(5, 1, 0));
}

TEST_CASE("point counts match the (x,y) enumeration oracle") {
    CHECK(count_points(parse_curve(5, 1, 0)) == 4);
    CHECK(count_points(parse_curve(7, 1, 0)) == 8);
    for (std::int64_t p : {5, 7, 11, 13, 17, 19, 23}) {
        for (std::int64_t a = 0; a < p && a < 5; ++a) {
            for (std::int64_t b = 0; b < p && b < 5; ++b) {
                CurveSpec c;
                try {
                    c = parse_curve(p, a, b);
                } catch (const SingularCurveError&) {
                    continue;
                }
                CHECK(count_points(c) ==
                      testsupport::xy_point_count(c.p, c.a, c.b));
            }
        }
    }
}

TEST_CASE("counting refuses fields beyond the naive cap") {
    CurveSpec c = parse_curve(1'000'003, 1, 0);
    CHECK_THROWS_AS(count_points(c), FieldTooLargeError);
}

TEST_CASE("analysis of y^2 = x^3 + x over F_5 and F_7") {
    const auto r5 = analyze(parse_curve(5, 1, 0));
    CHECK(r5.point_count == 4);
    CHECK(r5.trace == 2);
    CHECK(r5.ordinary);
    CHECK(r5.p_rank == 1);
    CHECK(r5.j == 1728 % 5);
    CHECK(r5.aut_order_geometric == 4);
    CHECK(r5.aut_order_rational == 4); // 5 = 1 mod 4

    const auto r7 = analyze(parse_curve(7, 1, 0));
    CHECK(r7.point_count == 8);
    CHECK(r7.trace == 0);
    CHECK_FALSE(r7.ordinary);
    CHECK(r7.p_rank == 0);
    CHECK(r7.j == 1728 % 7);
    CHECK(r7.aut_order_geometric == 4);
    CHECK(r7.aut_order_rational == 2); // 7 = 3 mod 4
}

TEST_CASE("j-invariant degenerate families") {
    for (std::int64_t p : {5, 7, 11, 13}) {
        for (std::int64_t a = 1; a < p; ++a) {
            CHECK(analyze(parse_curve(p, a, 0)).j == 1728 % p);
        }
        for (std::int64_t b = 1; b < p; ++b) {
            const auto r = analyze(parse_curve(p, 0, b));
            CHECK(r.j == 0);
            CHECK(r.aut_order_geometric == 6);
        }
    }
}

TEST_CASE("derived equivalence is j-equality over one prime field") {
    const auto e = parse_curve(5, 1, 0);
    CHECK(derived_equivalent(e, parse_curve(5, 4, 0))); // both j = 1728
    CHECK(derived_equivalent(e, e));
    CHECK_FALSE(derived_equivalent(e, parse_curve(5, 0, 1))); // j = 0
    CHECK_THROWS_AS(derived_equivalent(e, parse_curve(7, 1, 0)),
                    MixedCharacteristicError);
}

TEST_CASE("product p-rank sums the factors") {
    const auto ordinary = parse_curve(5, 1, 0);      // t = 2
    const auto supersingular = parse_curve(7, 1, 0); // t = 0
    CHECK(product_p_rank({ordinary}) == 1);
    CHECK(product_p_rank({supersingular}) == 0);
    CHECK(product_p_rank({ordinary, parse_curve(5, 0, 1)}) ==
          1 + analyze(parse_curve(5, 0, 1)).p_rank);
    CHECK_THROWS_AS(product_p_rank({}), EmptyListError);
    CHECK_THROWS_AS(product_p_rank({ordinary, supersingular}),
                    MixedCharacteristicError);
    // a supersingular and an ordinary factor over one field
    const auto ss11 = parse_curve(11, 0, 1);  // j = 0, 11 = 2 mod 3
    const auto ord11 = parse_curve(11, 1, 1); // t = -2
    REQUIRE(analyze(ss11).p_rank == 0);
    REQUIRE(analyze(ord11).p_rank == 1);
    CHECK(product_p_rank({ss11, ord11}) == 1);
    CHECK(product_p_rank({ss11, ord11, ord11}) == 2);
}

TEST_CASE("hasse bound holds exhaustively for p <= 200") {
    for (std::uint64_t p = 5; p <= 200; ++p) {
        if (!is_prime(p)) continue;
        const double two_sqrt_p = 2.0 * std::sqrt(static_cast<double>(p));
        for (std::int64_t a = 0; a < static_cast<std::int64_t>(p); ++a) {
            for (std::int64_t b = 0; b < static_cast<std::int64_t>(p); ++b) {
                CurveSpec c;
                try {
                    c = parse_curve(static_cast<std::int64_t>(p), a, b);
                } catch (const SingularCurveError&) {
                    continue;
                }
                const auto r = analyze(c);
                REQUIRE(std::llabs(r.trace) <=
                        static_cast<long long>(two_sqrt_p));
            }
        }
    }
}

TEST_CASE("supersingularity depends only on j") {
    for (std::uint64_t p = 5; p <= 50; ++p) {
        if (!is_prime(p)) continue;
        std::map<std::uint64_t, std::set<int>> ranks_by_j;
        for (std::int64_t a = 0; a < static_cast<std::int64_t>(p); ++a) {
            for (std::int64_t b = 0; b < static_cast<std::int64_t>(p); ++b) {
                CurveSpec c;
                try {
                    c = parse_curve(static_cast<std::int64_t>(p), a, b);
                } catch (const SingularCurveError&) {
                    continue;
                }
                const auto r = analyze(c);
                ranks_by_j[r.j].insert(r.p_rank);
            }
        }
        for (const auto& [j, ranks] : ranks_by_j) {
            INFO("p = " << p << " j = " << j);
            REQUIRE(ranks.size() == 1);
        }
    }
}

TEST_CASE("quadratic twist negates the trace") {
    for (std::uint64_t p : {5ULL, 11ULL, 13ULL, 23ULL, 41ULL}) {
        // find a non-residue
        std::uint64_t nonres = 0;
        for (std::uint64_t c = 2; c < p; ++c) {
            bool square = false;
            for (std::uint64_t y = 1; y < p; ++y) {
                if (y * y % p == c) {
                    square = true;
                    break;
                }
            }
            if (!square) {
                nonres = c;
                break;
            }
        }
        REQUIRE(nonres != 0);
        for (std::int64_t a = 0; a < 4; ++a) {
            for (std::int64_t b = 1; b < 4; ++b) {
                CurveSpec c;
                try {
                    c = parse_curve(static_cast<std::int64_t>(p), a, b);
                } catch (const SingularCurveError&) {
                    continue;
                }
                const std::uint64_t c2 = nonres * nonres % p;
                const std::uint64_t c3 = c2 * nonres % p;
                const auto twist = parse_curve(
                    static_cast<std::int64_t>(p),
                    static_cast<std::int64_t>(c.a * c2 % p),
                    static_cast<std::int64_t>(c.b * c3 % p));
                CHECK(analyze(twist).trace == -analyze(c).trace);
            }
        }
    }
}
