#include <doctest.h>

#include <cstdlib>
#include <numeric>

#include "pretzel/arith.hpp"
#include "pretzel/errors.hpp"
#include "pretzel/plumbing.hpp"

using namespace pretzel;

namespace {

Rational evaluate_cf(const std::vector<long long>& cf) {
    Rational x = Rational::of(cf.back());
    for (auto it = cf.rbegin() + 1; it != cf.rend(); ++it)
        x = Rational::of(*it) - Rational::of(1) / x;
    return x;
}

} // namespace

TEST_CASE("negative continued fraction pinned values") {
    CHECK(negative_continued_fraction(-5, 4) == std::vector<long long>{-2, -2, -2, -2});
    CHECK(negative_continued_fraction(-3, 1) == std::vector<long long>{-3});
    CHECK(negative_continued_fraction(-7, 2) == std::vector<long long>{-4, -2});
}

TEST_CASE("negative continued fraction errors") {
    CHECK_THROWS_AS(negative_continued_fraction(-5, 0), InvalidFraction);
    CHECK_THROWS_AS(negative_continued_fraction(-5, -4), InvalidFraction);
    CHECK_THROWS_AS(negative_continued_fraction(5, 4), InvalidFraction);
    CHECK_THROWS_AS(negative_continued_fraction(-6, 4), InvalidFraction);  // not reduced
    CHECK_THROWS_AS(negative_continued_fraction(-1, 1), InvalidFraction);  // value -1
    CHECK_THROWS_AS(negative_continued_fraction(-3, 4), InvalidFraction);  // value > -1
}

TEST_CASE("negative continued fraction round-trips, |num| <= 50") {
    for (long long num = -50; num < 0; ++num)
        for (long long den = 1; den < -num; ++den) {
            if (std::gcd(-num, den) != 1) continue;
            auto cf = negative_continued_fraction(num, den);
            for (long long c : cf) CHECK(c <= -2);
            CHECK(evaluate_cf(cf) == Rational::of(num, den));
        }
}

TEST_CASE("seifert presentation pinned values") {
    auto pres = seifert_presentation(PretzelParams{4, -3, 5});
    CHECK(pres.seifert.e0 == -2);
    CHECK(pres.seifert.legs ==
          std::vector<SeifertLeg>{{4, 3}, {3, 1}, {5, 4}});
    CHECK_FALSE(pres.mirror);
    CHECK(pres.seifert.euler() == Rational::of(-7, 60));

    pres = seifert_presentation(PretzelParams{4, -3, 13});
    CHECK(pres.seifert.e0 == -1);
    CHECK(pres.seifert.legs ==
          std::vector<SeifertLeg>{{4, 1}, {3, 2}, {13, 1}});
    CHECK(pres.mirror);
    CHECK(pres.seifert.euler().sign() < 0);
}

TEST_CASE("seifert presentation preconditions") {
    CHECK_THROWS_AS(seifert_presentation(PretzelParams{3, 5, 7}), PreconditionViolated);
    CHECK_THROWS_AS(seifert_presentation(PretzelParams{4, 3, 5}), PreconditionViolated);
    CHECK_THROWS_AS(seifert_presentation(PretzelParams{4, -3, 1}), PreconditionViolated);
    CHECK_THROWS_AS(seifert_presentation(PretzelParams{5, -3, 7}), PreconditionViolated);
    CHECK_THROWS_AS(seifert_presentation(PretzelParams{4, -2, 4}), ZeroEuler); // 1/4-1/2+1/4
}

TEST_CASE("plumbing graphs of both branches") {
    auto g = plumbing_graph(SeifertInvariants{-2, {{4, 3}, {3, 1}, {5, 4}}});
    CHECK(g.center == -2);
    CHECK(g.legs == std::vector<std::vector<long long>>{
                        {-2, -2, -2}, {-3}, {-2, -2, -2, -2}});
    CHECK(g.vertex_count() == 9);

    g = plumbing_graph(SeifertInvariants{-1, {{4, 1}, {3, 2}, {13, 1}}});
    CHECK(g.center == -1);
    CHECK(g.legs == std::vector<std::vector<long long>>{{-4}, {-2, -2}, {-13}});

    CHECK_THROWS_AS(plumbing_graph(SeifertInvariants{-2, {{4, 3}}}), InvalidPresentation);
    CHECK_THROWS_AS(plumbing_graph(SeifertInvariants{-2, {{4, 3}, {3, 1}}}), InvalidPresentation);
    CHECK_THROWS_AS(plumbing_graph(SeifertInvariants{-2, {{4, 2}, {3, 1}, {5, 4}}}),
                    InvalidPresentation); // non-coprime leg
}

TEST_CASE("negative definiteness") {
    CHECK(is_negative_definite(plumbing_graph(seifert_presentation(PretzelParams{4, -3, 5}).seifert)));
    PlumbingGraph single{-1, {}};
    CHECK(is_negative_definite(single));
    PlumbingGraph positive{1, {}};
    CHECK_FALSE(is_negative_definite(positive));
}

TEST_CASE("plumbing JSON form") {
    auto g = plumbing_graph(SeifertInvariants{-2, {{4, 3}, {3, 1}, {5, 4}}});
    auto j = g.to_json();
    CHECK(j["center"] == -2);
    CHECK(j["legs"].size() == 3);
    CHECK(j["legs"][1] == nlohmann::json::array({-3}));
}

TEST_CASE("region sweep <= 15: negative definite, determinant triple-agreement") {
    for (long long p = 2; p <= 15; p += 2)
        for (long long q = -15; q <= -3; q += 2)
            for (long long r = 3; r <= 15; r += 2) {
                PretzelParams t{p, q, r};
                auto pres = seifert_presentation(t);
                CHECK(pres.seifert.euler().sign() < 0);
                auto g = plumbing_graph(pres.seifert);
                CHECK(is_negative_definite(g));
                CHECK(std::llabs(matrix_determinant(g.intersection_matrix())) == determinant(t));
                CHECK(std::llabs(matrix_determinant(goeritz_matrix(t))) == determinant(t));
            }
}
