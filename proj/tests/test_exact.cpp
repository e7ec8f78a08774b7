#include "doctest.h"

#include "latreal/affine.hpp"
#include "latreal/constraints.hpp"
#include "latreal/errors.hpp"
#include "latreal/rational.hpp"
#include "latreal/unit_root.hpp"

#include <random>

using namespace latreal;

namespace {

// Independent brute-force order: smallest n >= 1 with n*e ≡ 0 (mod 2).
long long order_by_bruteforce(const Rational& e) {
    for (long long n = 1;; ++n) {
        if (congruent(n * e, 0, 2)) return n;
    }
}

} // namespace

TEST_CASE("reduce_mod2 examples") {
    CHECK(reduce_mod2(Rational(7, 3)) == Rational(1, 3));
    CHECK(reduce_mod2(Rational(-1, 2)) == Rational(3, 2));
    CHECK(reduce_mod2(Rational(2)) == Rational(0));
    CHECK(reduce_mod2(Rational(0)) == Rational(0));
    CHECK(reduce_mod2(Rational(-59, 6)) == Rational(1, 6));
}

TEST_CASE("reduce_mod2 is invariant under integer shifts by 2b") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<long long> num(-40, 40), den(1, 12);
    for (int t = 0; t < 300; ++t) {
        Rational a(num(rng), den(rng));
        Rational b(num(rng)); // shifts by 2·(integer) preserve the class
        CHECK(reduce_mod2(a + 2 * b) == reduce_mod2(a));
        CHECK(congruent(a + 2 * b, a, 2));
        CHECK(reduce_mod2(a) >= 0);
        CHECK(reduce_mod2(a) < 2);
    }
}

TEST_CASE("rational serialization") {
    CHECK(to_string(Rational(-7, 12)) == "-7/12");
    CHECK(to_string(Rational(4)) == "4");
    CHECK(*parse_rational(" -7/12 ") == Rational(-7, 12));
    CHECK(*parse_rational("3") == Rational(3));
    CHECK(!parse_rational("3/0").has_value());
    CHECK(!parse_rational("x").has_value());
}

TEST_CASE("unit root order: closed form vs brute force") {
    CHECK(unit_root_order(UnitRoot(Rational(1))) == 2);  // q = -1
    CHECK(unit_root_order(UnitRoot(Rational(2, 3))) == 3);
    CHECK(unit_root_order(UnitRoot(Rational(1, 2))) == 4); // q = i
    for (long long q = 1; q <= 50; ++q) {
        for (long long p = 0; p < 2 * q; ++p) {
            Rational e(p, q);
            CHECK(unit_root_order(UnitRoot(e)) == order_by_bruteforce(e));
        }
    }
}

TEST_CASE("affine parse/print") {
    AffineExpr e = *parse_affine("8/3 - 2r");
    CHECK(e.constant() == Rational(8, 3));
    CHECK(e.coeff("r") == Rational(-2));
    CHECK(*parse_affine("-r") == AffineExpr::param("r", -1));
    CHECK(*parse_affine("r' + r'' - 1") ==
          AffineExpr::param("r'") + AffineExpr::param("r''") - AffineExpr(Rational(1)));
    CHECK(*parse_affine("-1/2r") == AffineExpr::param("r", Rational(-1, 2)));
    CHECK(!parse_affine("").has_value());
    CHECK(!parse_affine("r r").has_value());
    // round-trip
    for (const char* s : {"2/3", "-7/12", "2r", "8/3 - 2r", "r' + r''", "-r"}) {
        AffineExpr x = *parse_affine(s);
        CHECK(*parse_affine(x.str()) == x);
    }
}

TEST_CASE("affine substitution and evaluation") {
    AffineExpr e = *parse_affine("2r - 2/3");
    Assignment a{{"r", Rational(1, 3)}};
    CHECK(e.evaluate(a) == Rational(0));
    CHECK_THROWS_AS(e.evaluate({}), UnboundParameter);
    AffineExpr g = e.substituted("r", *parse_affine("1 - r'"));
    CHECK(g == *parse_affine("4/3 - 2r'"));
}

TEST_CASE("solve_linear examples") {
    // {r' + r'' - 1 = 0} -> r'' = 1 - r'
    ConstraintSet s = solve_linear({*parse_affine("r' + r'' - 1")});
    CHECK(!s.infeasible());
    REQUIRE(s.solution_for("r''").has_value());
    CHECK(*s.solution_for("r''") == *parse_affine("1 - r'"));

    // {2r - 2/3 = 0, 3r - 1 = 0} -> r = 1/3
    ConstraintSet t = solve_linear({*parse_affine("2r - 2/3"), *parse_affine("3r - 1")});
    CHECK(!t.infeasible());
    CHECK(*t.solution_for("r") == AffineExpr(Rational(1, 3)));

    // {r - 1 = 0, r - 2 = 0} -> infeasible with witness 1 vs 2
    ConstraintSet u = solve_linear({*parse_affine("r - 1"), *parse_affine("r - 2")});
    CHECK(u.infeasible());
    REQUIRE(u.conflict().has_value());
    CHECK(u.conflict()->first_value == Rational(1));
    CHECK(u.conflict()->second_value == Rational(2));
}

TEST_CASE("solve_linear is idempotent and its solution nulls the input") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> coeff(-4, 4);
    const std::vector<std::string> names{"r", "r'", "r''", "m11", "m12", "m22"};
    for (int t = 0; t < 200; ++t) {
        std::vector<AffineExpr> eqs;
        for (int k = 0; k < 4; ++k) {
            AffineExpr e(Rational(coeff(rng), 1 + (t % 3)));
            for (const auto& n : names) e += AffineExpr::param(n, coeff(rng));
            eqs.push_back(e);
        }
        ConstraintSet s = solve_linear(eqs);
        if (s.infeasible()) continue;
        // substituting the solution into each input yields zero
        for (const auto& e : eqs) CHECK(s.substitute(e).is_zero());
        // idempotence: re-adding the solved forms changes nothing
        ConstraintSet s2 = s;
        for (const auto& [p, sol] : s.solved())
            CHECK(s2.add_equality(AffineExpr::param(p) - sol));
        CHECK(s2.canonical_key() == s.canonical_key());
    }
}

TEST_CASE("check_congruence semantics") {
    AffineExpr e = *parse_affine("2r");
    CHECK(congruent(e.evaluate({{"r", Rational(1, 3)}}), Rational(2, 3), 2));
    CHECK(congruent(e.evaluate({{"r", Rational(4, 3)}}), Rational(2, 3), 2)); // 8/3 ≡ 2/3
    CHECK(!congruent(e.evaluate({{"r", Rational(1, 2)}}), Rational(2, 3), 2));
}

TEST_CASE("exclusions and congruences") {
    Exclusion not_pm1{AffineExpr::param("r"), Rational(0), Rational(2)};
    CHECK(not_pm1.violated_by({{"r", Rational(2)}}));
    CHECK(!not_pm1.violated_by({{"r", Rational(1, 3)}}));
    Congruence c{*parse_affine("r - 1/2"), Rational(2)};
    CHECK(c.satisfied_by({{"r", Rational(5, 2)}}));
    CHECK(!c.satisfied_by({{"r", Rational(1)}}));
}
