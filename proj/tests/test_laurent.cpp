#include <doctest.h>

#include "helpers.hpp"
#include "novikov/laurent.hpp"

using namespace novikov;

namespace {

LaurentPoly L(std::initializer_list<int> exps) {
    LaurentPoly p(1);
    for (int e : exps) p.toggle({e});
    return p;
}

} // namespace

TEST_SUITE("laurent") {

TEST_CASE("specialize a group ring element") {
    GroupRingElement x({Word{}, Word({{1, 1}, {2, 1}, {1, -1}})}); // 1 + a b a^-1
    CHECK(specialize(x, WeightVector{{1, 0}}).is_zero());
    CHECK(specialize(x, WeightVector{{1, 2}}) == L({0, 2}));

    GroupRingElement y({Word({{1, 1}}), Word({{1, 1}, {2, 1}, {1, -1}, {2, -1}})});
    CHECK(specialize(y, WeightVector{{1, 0}}) == L({0, 1}));
}

TEST_CASE("specialize_abelian") {
    CHECK(specialize_abelian(GroupRingElement::of(Word({{1, 1}})), 2) ==
          LaurentPoly::monomial({1, 0}));
    GroupRingElement x({Word{}, Word({{1, 1}, {2, 1}, {1, -1}})});
    LaurentPoly expect(2);
    expect.toggle({0, 0});
    expect.toggle({0, 1});
    CHECK(specialize_abelian(x, 2) == expect);
    // words with equal exponent vectors cancel mod 2
    GroupRingElement y({Word({{1, 1}, {2, 1}}), Word({{2, 1}, {1, 1}})});
    CHECK(specialize_abelian(y, 2).is_zero());
    CHECK(specialize_abelian(GroupRingElement{}, 2).is_zero());
}

TEST_CASE("ring operations") {
    CHECK((L({0, 1}) + L({0, 1})).is_zero());
    CHECK(L({0, 1}) * L({0, 1}) == L({0, 2}));
    CHECK(L({-1}) * L({1}) == LaurentPoly::one(1));
    CHECK_THROWS_AS(LaurentPoly::one(1) + LaurentPoly::one(2), input_error);
}

TEST_CASE("specialize is a ring homomorphism") {
    testutil::Rng rng(61);
    std::uniform_int_distribution<int> wd(-2, 2);
    for (int i = 0; i < 150; ++i) {
        GroupRingElement x, y;
        for (int k = 0; k < 3; ++k) {
            x.toggle(testutil::random_word(rng, 3, 8));
            y.toggle(testutil::random_word(rng, 3, 8));
        }
        WeightVector u{{wd(rng), wd(rng), wd(rng)}};
        CHECK(specialize(x * y, u) == specialize(x, u) * specialize(y, u));
        CHECK(specialize(x + y, u) == specialize(x, u) + specialize(y, u));
    }
}

TEST_CASE("rank examples") {
    LaurentMatrix a(1, 2, 1);
    a.at(0, 0) = L({0, 1});
    CHECK(rank_over_fraction_field(a) == 1);

    LaurentMatrix b(2, 2, 1);
    b.at(0, 0) = L({0, 1});
    b.at(0, 1) = L({1});
    b.at(1, 0) = L({1, 2});
    b.at(1, 1) = L({2});
    CHECK(rank_over_fraction_field(b) == 1);

    CHECK(rank_over_fraction_field(LaurentMatrix(3, 2, 1)) == 0);
    CHECK(rank_over_fraction_field(LaurentMatrix(0, 4, 1)) == 0);
}

TEST_CASE("rank handles negative exponents") {
    LaurentMatrix m(2, 2, 1);
    m.at(0, 0) = L({-3, -2});
    m.at(0, 1) = L({-3});
    m.at(1, 0) = L({0, 1});
    m.at(1, 1) = L({0});
    // row 2 = t^3 * row 1
    CHECK(rank_over_fraction_field(m) == 1);
}

TEST_CASE("rank matches the cross-multiplication oracle") {
    testutil::Rng rng(67);
    for (int i = 0; i < 150; ++i) {
        int rows = 1 + static_cast<int>(rng() % 5);
        int cols = 1 + static_cast<int>(rng() % 5);
        LaurentMatrix m = testutil::random_laurent_matrix(rng, rows, cols, 3, 4);
        CHECK(rank_over_fraction_field(m) == testutil::naive_rank(m));
    }
}

TEST_CASE("rank is invariant under swaps and monomial scaling") {
    testutil::Rng rng(71);
    for (int i = 0; i < 100; ++i) {
        int rows = 2 + static_cast<int>(rng() % 4);
        int cols = 2 + static_cast<int>(rng() % 4);
        LaurentMatrix m = testutil::random_laurent_matrix(rng, rows, cols, 3, 3);
        int r = rank_over_fraction_field(m);

        LaurentMatrix swapped = m;
        int r1 = static_cast<int>(rng() % rows), r2 = static_cast<int>(rng() % rows);
        for (int j = 0; j < cols; ++j) std::swap(swapped.at(r1, j), swapped.at(r2, j));
        int c1 = static_cast<int>(rng() % cols), c2 = static_cast<int>(rng() % cols);
        for (int k = 0; k < rows; ++k) std::swap(swapped.at(k, c1), swapped.at(k, c2));
        CHECK(rank_over_fraction_field(swapped) == r);

        LaurentMatrix scaled = m;
        int row = static_cast<int>(rng() % rows);
        LaurentPoly mono = LaurentPoly::monomial({static_cast<int>(rng() % 7) - 3});
        for (int j = 0; j < cols; ++j) scaled.at(row, j) = mono * scaled.at(row, j);
        CHECK(rank_over_fraction_field(scaled) == r);
    }
}

TEST_CASE("text form") {
    CHECK(render(L({0, 2, -1})) == "t^-1 + 1 + t^2");
    CHECK(render(LaurentPoly::zero(1)) == "0");
    LaurentPoly multi(2);
    multi.toggle({0, 0});
    multi.toggle({1, -2});
    CHECK(render(multi) == "1 + x1 x2^-2");

    CHECK(parse_laurent("1 + t", 1) == L({0, 1}));
    CHECK(parse_laurent("t^-3", 1) == L({-3}));
    CHECK(parse_laurent("0", 1).is_zero());
    LaurentPoly expect2(2);
    expect2.toggle({0, 0});
    expect2.toggle({2, -1});
    CHECK(parse_laurent("x1^2 x2^-1 + 1", 2) == expect2);
    CHECK_THROWS_AS(parse_laurent("t", 2), parse_error);
    CHECK_THROWS_AS(parse_laurent("x3", 2), parse_error);
    CHECK_THROWS_AS(parse_laurent("t + ", 1), parse_error);
}

TEST_CASE("parse and render round-trip") {
    testutil::Rng rng(73);
    for (int i = 0; i < 100; ++i) {
        LaurentPoly p = testutil::random_laurent(rng, 5, 6);
        CHECK(parse_laurent(render(p), 1) == p);
    }
}

} // TEST_SUITE
