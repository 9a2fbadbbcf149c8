#include <doctest.h>

#include "helpers.hpp"
#include "novikov/chain_complex.hpp"

using namespace novikov;

namespace {

LaurentPoly L(std::initializer_list<int> exps) {
    LaurentPoly p(1);
    for (int e : exps) p.toggle({e});
    return p;
}

const Presentation kTorus = parse_presentation("<a,b|[a,b]>");
const Presentation kCircle = parse_presentation("<a|>");

} // namespace

TEST_SUITE("complexes") {

TEST_CASE("torus complex at u = (1,0)") {
    ChainComplex c = build_presentation_complex(kTorus, WeightVector{{1, 0}});
    CHECK(c.dims() == std::vector<int>{1, 2, 1});
    CHECK(c.boundary(1).at(0, 0) == L({0, 1}));
    CHECK(c.boundary(1).at(0, 1) == LaurentPoly::zero(1));
    CHECK(c.boundary(2).at(0, 0) == LaurentPoly::zero(1));
    CHECK(c.boundary(2).at(1, 0) == L({0, 1}));
}

TEST_CASE("circle complex") {
    ChainComplex c = build_presentation_complex(kCircle, WeightVector{{1}});
    CHECK(c.dims() == std::vector<int>{1, 1});
    CHECK(c.boundary(1).at(0, 0) == L({0, 1}));
}

TEST_CASE("trivial class kills every boundary of the torus complex") {
    ChainComplex c = build_presentation_complex(kTorus, WeightVector{{0, 0}});
    CHECK(c.boundary(1).is_zero());
    CHECK(c.boundary(2).is_zero());
}

TEST_CASE("invalid weights are rejected") {
    CHECK_THROWS_AS(build_presentation_complex(parse_presentation("<a|a^3>"), WeightVector{{1}}),
                    input_error);
}

TEST_CASE("betti numbers of the model spaces") {
    CHECK(novikov_betti(build_presentation_complex(kTorus, WeightVector{{1, 0}})) ==
          BettiVector{0, 0, 0});
    CHECK(novikov_betti(build_presentation_complex(kTorus, WeightVector{{0, 0}})) ==
          BettiVector{1, 2, 1});
    CHECK(novikov_betti(build_presentation_complex(surface_presentation(2, true),
                                                   WeightVector{{1, 0, 0, 0}})) ==
          BettiVector{0, 2, 0});
    CHECK(novikov_betti(build_presentation_complex(parse_presentation("<a,b|>"),
                                                   WeightVector{{1, 0}})) ==
          BettiVector{0, 1});
}

TEST_CASE("euler characteristics") {
    CHECK(euler_characteristic(build_presentation_complex(kTorus, WeightVector{{1, 0}})) == 0);
    CHECK(euler_characteristic(build_presentation_complex(surface_presentation(2, true),
                                                          WeightVector{{0, 0, 0, 0}})) == -2);
    CHECK(euler_characteristic(build_presentation_complex(kCircle, WeightVector{{3}})) == 0);
}

TEST_CASE("cellular input: circle cover") {
    CwComplexData circle;
    circle.vars = 1;
    circle.dims = {1, 1};
    LaurentMatrix d(1, 1, 1);
    d.at(0, 0) = L({0, 1}); // 1 - x mod 2
    circle.boundaries = {d};

    ChainComplex at1 = build_from_cw(circle, {1});
    CHECK(at1.boundary(1).at(0, 0) == L({0, 1}));
    CHECK(novikov_betti(at1) == BettiVector{0, 0});

    ChainComplex at0 = build_from_cw(circle, {0});
    CHECK(at0.boundary(1).is_zero());
    CHECK(novikov_betti(at0) == BettiVector{1, 1});

    CHECK_THROWS_AS(build_from_cw(circle, {1, 2}), input_error);
}

TEST_CASE("cellular input: torus as a Z^2 cover") {
    CwComplexData torus;
    torus.vars = 2;
    torus.dims = {1, 2, 1};
    LaurentMatrix d1(1, 2, 2), d2(2, 1, 2);
    LaurentPoly ex(2), ey(2);
    ex.toggle({0, 0});
    ex.toggle({1, 0}); // 1 + x1
    ey.toggle({0, 0});
    ey.toggle({0, 1}); // 1 + x2
    d1.at(0, 0) = ex;
    d1.at(0, 1) = ey;
    d2.at(0, 0) = ey;
    d2.at(1, 0) = ex;
    torus.boundaries = {d1, d2};

    CHECK(novikov_betti(build_from_cw(torus, {1, 0})) == BettiVector{0, 0, 0});
    CHECK(novikov_betti(build_from_cw(torus, {1, 1})) == BettiVector{0, 0, 0});
    CHECK(novikov_betti(build_from_cw(torus, {2, -3})) == BettiVector{0, 0, 0});
    CHECK(novikov_betti(build_from_cw(torus, {0, 0})) == BettiVector{1, 2, 1});
}

TEST_CASE("cellular input must square to zero") {
    CwComplexData bad;
    bad.vars = 1;
    bad.dims = {1, 1, 1};
    LaurentMatrix one(1, 1, 1);
    one.at(0, 0) = LaurentPoly::one(1);
    bad.boundaries = {one, one};
    CHECK_THROWS_AS(build_from_cw(bad, {1}), invariant_error);
}

TEST_CASE("boundary composition is re-checked on random presentations") {
    testutil::Rng rng(89);
    int built = 0;
    for (int i = 0; i < 60; ++i) {
        Presentation p = testutil::random_presentation(rng, 4, 3, 12);
        for (const WeightVector& u : testutil::valid_nonzero_weights(p, 2)) {
            ChainComplex c = build_presentation_complex(p, u);
            if (c.top_degree() == 2) CHECK((c.boundary(1) * c.boundary(2)).is_zero());
            ++built;
        }
    }
    CHECK(built > 0);
}

TEST_CASE("deficiency bound: b1 >= p - 1 - q under any valid nonzero class") {
    testutil::Rng rng(97);
    int tested = 0;
    while (tested < 40) {
        std::uniform_int_distribution<int> pd(3, 5);
        int p = pd(rng);
        std::uniform_int_distribution<int> qd(1, p - 2);
        int q = qd(rng);
        std::vector<Word> rels;
        for (int j = 0; j < q; ++j) rels.push_back(testutil::random_nonidentity_word(rng, p, 10));
        Presentation pres(testutil::generator_names(p), rels);
        auto weights = testutil::valid_nonzero_weights(pres, 2);
        if (weights.empty()) continue;
        BettiVector b = novikov_betti(build_presentation_complex(pres, weights.front()));
        CHECK(b[1] >= p - 1 - q);
        CHECK(b[1] > 0);
        ++tested;
    }
}

TEST_CASE("tensor with a point complex is the identity") {
    ChainComplex c = build_presentation_complex(kTorus, WeightVector{{1, 1}});
    PlainComplex point({1}, {});
    ChainComplex t = tensor_product(c, point);
    CHECK(t.dims() == c.dims());
    CHECK(novikov_betti(t) == novikov_betti(c));
}

TEST_CASE("circle times circle is the torus") {
    ChainComplex c = build_presentation_complex(kCircle, WeightVector{{1}});
    PlainComplex circle({1, 1}, {{0}});
    ChainComplex t = tensor_product(c, circle);
    CHECK(t.dims() == std::vector<int>{1, 2, 1});
    CHECK(novikov_betti(t) == BettiVector{0, 0, 0});
}

TEST_CASE("genus two surface times circle") {
    ChainComplex c = build_presentation_complex(surface_presentation(2, true),
                                                WeightVector{{1, 0, 0, 0}});
    PlainComplex circle({1, 1}, {{0}});
    CHECK(novikov_betti(tensor_product(c, circle)) == BettiVector{0, 2, 2, 0});
}

TEST_CASE("Kunneth: tensor Betti is the convolution") {
    testutil::Rng rng(101);
    int done = 0;
    while (done < 40) {
        Presentation p = testutil::random_presentation(rng, 3, 2, 8);
        auto weights = testutil::valid_nonzero_weights(p, 2);
        WeightVector u = weights.empty()
                             ? WeightVector{std::vector<int>(static_cast<std::size_t>(p.rank()), 0)}
                             : weights.front();
        ChainComplex c = build_presentation_complex(p, u);
        auto [d, known_betti] = testutil::random_plain_complex(rng, 2, 4);

        BettiVector bd = ordinary_betti(d);
        CHECK(bd == known_betti);

        BettiVector bc = novikov_betti(c);
        BettiVector conv(bc.size() + bd.size() - 1, 0);
        for (std::size_t i = 0; i < bc.size(); ++i)
            for (std::size_t j = 0; j < bd.size(); ++j) conv[i + j] += bc[i] * bd[j];
        CHECK(novikov_betti(tensor_product(c, d)) == conv);
        ++done;
    }
}

TEST_CASE("nonvanishing factors give a nonvanishing tensor") {
    testutil::Rng rng(103);
    int done = 0;
    while (done < 30) {
        Presentation p = testutil::random_presentation(rng, 3, 2, 8);
        auto weights = testutil::valid_nonzero_weights(p, 2);
        if (weights.empty()) continue;
        ChainComplex c = build_presentation_complex(p, weights.front());
        BettiVector bc = novikov_betti(c);
        bool c_nonzero = false;
        for (int v : bc) c_nonzero = c_nonzero || v > 0;
        if (!c_nonzero) continue;
        auto [d, known_betti] = testutil::random_plain_complex(rng, 2, 4);
        bool d_nonzero = false;
        for (int v : known_betti) d_nonzero = d_nonzero || v > 0;
        if (!d_nonzero) continue;
        BettiVector bt = novikov_betti(tensor_product(c, d));
        bool t_nonzero = false;
        for (int v : bt) t_nonzero = t_nonzero || v > 0;
        CHECK(t_nonzero);
        ++done;
    }
}

TEST_CASE("Euler characteristic is independent of the weight") {
    testutil::Rng rng(107);
    for (int i = 0; i < 30; ++i) {
        Presentation p = testutil::random_presentation(rng, 4, 3, 10);
        int expected = 1 - p.rank() + p.relator_count();
        WeightVector zero{std::vector<int>(static_cast<std::size_t>(p.rank()), 0)};
        CHECK(euler_characteristic(build_presentation_complex(p, zero)) == expected);
        for (const WeightVector& u : testutil::valid_nonzero_weights(p, 1))
            CHECK(euler_characteristic(build_presentation_complex(p, u)) == expected);
    }
}

TEST_CASE("malformed complexes are rejected") {
    LaurentMatrix wrong(2, 2, 1);
    CHECK_THROWS_AS(ChainComplex({1, 2}, {wrong}), input_error);
    CHECK_THROWS_AS(PlainComplex({1, 1, 1}, {{1}, {1}}), invariant_error);
    CHECK_THROWS_AS(PlainComplex({2, 1}, {{1}}), input_error);
}

} // TEST_SUITE
