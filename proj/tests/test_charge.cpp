#include "doctest.h"

#include "latreal/charge.hpp"
#include "latreal/errors.hpp"
#include "latreal/groupoid.hpp"
#include "latreal/mfamily.hpp"

#include <random>

using namespace latreal;

namespace {
RationalMatrix mat2(Rational a, Rational b, Rational c) { return {{a, b}, {b, c}}; }
} // namespace

TEST_CASE("background charge basics") {
    CHECK(background_charge({{Rational(2)}}) == std::vector<Rational>{Rational(0)});
    // rank-1 m = [[2r]]: a = (r-1)/(2r)
    for (Rational r : {Rational(1, 3), Rational(-2, 5), Rational(7, 2)}) {
        auto a = background_charge({{2 * r}});
        CHECK(a[0] == (r - 1) / (2 * r));
    }
    CHECK_THROWS_AS(background_charge({{Rational(0)}}), SingularGram);
}

TEST_CASE("background charge of the zeta_12 row, frozen from a hand elimination") {
    // 2x2 Cramer oracle computed by hand: a = (-8, -8)
    auto a = background_charge(mat2(Rational(2, 3), Rational(-7, 12), Rational(2, 3)));
    CHECK(a == std::vector<Rational>{Rational(-8), Rational(-8)});
}

TEST_CASE("central charges of the realising rank-2 lattices") {
    CHECK(central_charge(mat2(Rational(2, 3), Rational(-7, 12), Rational(2, 3))) ==
          Rational(-126));
    CHECK(central_charge(mat2(Rational(2, 5), Rational(-3, 5), Rational(1))) == Rational(-364));
    CHECK(central_charge(mat2(Rational(6, 14), Rational(-9, 14), Rational(1))) == Rational(-962));
    CHECK(central_charge(mat2(Rational(5, 9), Rational(-5, 9), Rational(2, 3))) ==
          Rational(-1088, 5));
    CHECK(central_charge(mat2(Rational(1, 2), Rational(-7, 8), Rational(7, 4))) ==
          Rational(-874, 7));
    CHECK(central_charge(mat2(Rational(1, 2), Rational(-13, 24), Rational(2, 3))) ==
          Rational(-7826, 23));
}

TEST_CASE("rank-2 closed form agrees with the general solve") {
    CHECK(central_charge_rank2(mat2(Rational(2, 3), Rational(-7, 12), Rational(2, 3))) ==
          Rational(-126));
    CHECK(central_charge_rank2(mat2(Rational(6, 14), Rational(-9, 14), Rational(1))) ==
          Rational(-962));
    CHECK(central_charge_rank2(mat2(Rational(5, 9), Rational(-5, 9), Rational(2, 3))) ==
          Rational(-1088, 5));
    std::mt19937 rng(3);
    std::uniform_int_distribution<long long> num(-9, 9), den(1, 7);
    int done = 0;
    while (done < 100) {
        RationalMatrix m =
            mat2(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                 Rational(num(rng), den(rng)));
        if (m[0][0] * m[1][1] - m[0][1] * m[0][1] == 0) continue;
        CHECK(central_charge_rank2(m) == central_charge(m));
        ++done;
    }
}

TEST_CASE("p,p' model values at rank 1") {
    // m = [[2 p'/p]] gives c = 13 - 6 p/p' - 6 p'/p
    for (auto [p, pp] : std::vector<std::pair<long long, long long>>{{2, 1}, {3, 2}, {5, 3}}) {
        Rational r(pp, p);
        Rational c = central_charge({{2 * r}});
        CHECK(c == 13 - Rational(6 * p, pp) - Rational(6 * pp, p));
    }
}

TEST_CASE("central charge is invariant under reflection basis changes") {
    BraidingDiagram q = parse_diagram("rank=2; q[1]=2/3; q[2]=2/3; q[1,2]=5/6");
    GroupoidGraph g = enumerate_groupoid(q);
    RationalMatrix m = mat2(Rational(2, 3), Rational(-7, 12), Rational(2, 3));
    AffineMatrix m0 = constant_matrix(m);
    Rational c = central_charge(m);
    for (const auto& chamber : g.chambers) {
        AffineMatrix t = transport(m0, chamber.basis);
        RationalMatrix tv(2, std::vector<Rational>(2));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) tv[i][j] = t[i][j].constant();
        CHECK(central_charge(tv) == c);
    }
}
