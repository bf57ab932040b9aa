#include <catch2/catch_amalgamated.hpp>

#include "hsum/harmonic.hpp"
#include "hsum/index_vector.hpp"

using namespace hsum;

TEST_CASE("weight and depth") {
    CHECK(IndexVector{1}.weight() == 1);
    CHECK(IndexVector{2, 1, 1, 1, 1}.weight() == 6);
    CHECK((IndexVector{-3, 1, -2}).weight() == 6);
    CHECK((IndexVector{-3, 1, -2}).depth() == 3);
    CHECK_THROWS(IndexVector{2, 0, 1});
}

TEST_CASE("canonical text form round-trips") {
    IndexVector v{-3, 1, -2};
    CHECK(v.str() == "-3,1,-2");
    CHECK(parse_index_vector("-3,1,-2") == v);
    CHECK_THROWS(parse_index_vector(""));
    CHECK_THROWS(parse_index_vector("1,,2"));
}

TEST_CASE("eval_exact on known values") {
    CHECK(eval_exact(IndexVector{1}, 3) == parse_rational("11/6"));
    CHECK(eval_exact(IndexVector{-2}, 2) == parse_rational("-3/4"));
    CHECK(eval_exact(IndexVector{2, 1}, 2) == parse_rational("11/8"));
    CHECK(eval_exact(IndexVector{1}, 1) == 1);
    CHECK_THROWS(eval_exact(IndexVector{1}, 0));
    CHECK_THROWS(eval_exact(IndexVector{1}, -4));
}

TEST_CASE("eval_exact recursion property") {
    // S_{b,a...}(N) - S_{b,a...}(N-1) = sign(b)^N / N^|b| * S_{a...}(N)
    std::vector<IndexVector> probes = {
        {2, 1}, {-3, 1, -2}, {1, 1, 1}, {-2, -2}, {4, -1}, {1, -5}, {2, 2, 1, 1},
    };
    for (const auto& v : probes) {
        for (long N = 2; N <= 12; ++N) {
            Rational lhs = eval_exact(v, N) - eval_exact(v, N - 1);
            Rational rhs = ExactEvaluator::term(v.front(), N) *
                           (v.depth() == 1 ? Rational(1) : eval_exact(v.tail(), N));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("enumerate_weight counts") {
    CHECK(enumerate_weight(6, false).size() == 486);
    CHECK(enumerate_weight(6, true).size() == 99);

    auto w1 = enumerate_weight(1, true);
    REQUIRE(w1.size() == 1);
    CHECK(w1[0] == IndexVector{1});

    for (int w = 1; w <= 6; ++w) {
        long expected = 2;  // 2 * 3^(w-1)
        for (int i = 1; i < w; ++i) expected *= 3;
        CHECK(static_cast<long>(enumerate_weight(w, false).size()) == expected);
    }
}

TEST_CASE("enumerate_weight order is canonical and deterministic") {
    auto words = enumerate_weight(4, false);
    for (std::size_t i = 1; i < words.size(); ++i)
        CHECK(words[i - 1] < words[i]);
    for (const auto& v : words) {
        CHECK(v.weight() == 4);
        for (int a : v.entries()) CHECK(a != 0);
    }
}

TEST_CASE("limit classification") {
    auto c2 = classify_limit(IndexVector{2});
    CHECK(c2.kind == LimitClass::Kind::finite);

    auto c1 = classify_limit(IndexVector{1});
    CHECK(c1.kind == LimitClass::Kind::log_divergent);
    CHECK(c1.log_power == 1);

    auto c21 = classify_limit(IndexVector{2, 1});
    CHECK(c21.kind == LimitClass::Kind::finite);

    auto c112 = classify_limit(IndexVector{1, 1, 2});
    CHECK(c112.kind == LimitClass::Kind::log_divergent);
    CHECK(c112.log_power == 2);
}
