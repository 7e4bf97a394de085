#include <doctest.h>

#include "aromatic/polynomial.hpp"

using namespace aromatic;

TEST_CASE("polynomial arithmetic")
{
    const auto x = PolyScalar::variable(2, 0), y = PolyScalar::variable(2, 1);
    const auto p = x * x + Rational(3) * x * y - PolyScalar::constant(2, 2);
    CHECK(p.total_degree() == 2);
    CHECK(p.to_string() == "3*x1*x2 + x1^2 + -2");
    CHECK((p - p).is_zero());
    CHECK((p - p).to_string() == "0");
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK(p.derivative(0) == Rational(2) * x + Rational(3) * y);
    CHECK(p.derivative(1) == Rational(3) * x);
    CHECK(PolyScalar::constant(2, 5).derivative(0).is_zero());
    const std::vector<Rational> point{Rational(1) / 2, 2};
    CHECK(p.evaluate(point) == Rational(1) / 4 + 3 - 2);
}

TEST_CASE("polynomial text")
{
    const auto p = PolyScalar::parse("1/2*x1^2*x2 - 3*x2 + 4", 2);
    CHECK(p.evaluate(std::vector<Rational>{2, 1}) == 2 - 3 + 4);
    CHECK(PolyScalar::parse(p.to_string(), 2) == p);
    CHECK(PolyScalar::parse("x1 + -x1", 2).is_zero());
    CHECK(PolyScalar::parse("0", 3).is_zero());
    CHECK(PolyScalar::parse(" x1 * x2 ", 2) == PolyScalar::variable(2, 0) * PolyScalar::variable(2, 1));
    for (const char* bad : {"x3", "x1^", "1/0*x1", "x1 +", "*x1", "y"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(PolyScalar::parse(bad, 2), std::invalid_argument);
    }
}

TEST_CASE("vector fields")
{
    const auto f = PolyVecField::parse({"x1^2", "x2"});
    CHECK(f.dimension() == 2);
    CHECK(f.to_string() == "(x1^2, x2)");
    auto g = f;
    g *= Rational(-1);
    g += f;
    CHECK(g.is_zero());
    CHECK(PolyVecField::zero(3).is_zero());
    CHECK_THROWS(PolyVecField::parse({"x1", "x3"}));
}
