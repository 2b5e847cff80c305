#include <doctest.h>

#include <sstream>

#include "eplab/surd.hpp"

using eplab::Rational;
using eplab::Surd;

TEST_CASE("perfect-square radicands fold into the coefficient")
{
    Surd const s(Rational(3), Rational(12));
    CHECK(s == Surd(Rational(6), Rational(3)));
    CHECK_FALSE(s == Surd(Rational(-6), Rational(3)));
    CHECK_FALSE(s == Surd(Rational(6), Rational(3), true));
    Surd const sq(Rational(3), Rational(49, 4));
    CHECK(sq.is_rational());
    CHECK(sq.coeff() == Rational(21, 2));
    CHECK(Surd::sqrt_of(Rational(16)).is_rational());
    CHECK(Surd::sqrt_of(Rational(16)) == Surd(Rational(4)));
}

TEST_CASE("square roots of negative numbers are imaginary")
{
    Surd const a = Surd::sqrt_of(Rational(-5));
    CHECK(a.imaginary());
    CHECK(a.to_complex().real() == 0.0);
    CHECK(a.to_complex().imag() == doctest::Approx(std::sqrt(5.0)));
    // a * (-a) = 5
    CHECK(a * -a == Surd(Rational(5)));
}

TEST_CASE("products of the same radical are rational")
{
    Surd const r3 = Surd::sqrt_of(Rational(3));
    CHECK((r3 * r3).is_rational());
    CHECK(r3 * r3 == Surd(Rational(3)));
    Surd const prod = Surd::sqrt_of(Rational(5)) * Surd::sqrt_of(Rational(8));
    CHECK(prod == Surd(Rational(2), Rational(10)));
    CHECK(Rational(-60) * prod == Surd(Rational(-60), Rational(40)));
}

TEST_CASE("zero has a canonical form")
{
    Surd const z(Rational(0), Rational(7), true);
    CHECK(z.is_zero());
    CHECK(z == Surd(Rational(0)));
    CHECK(z.is_rational());
}

TEST_CASE("text form")
{
    std::ostringstream os;
    os << Surd(Rational(-6), Rational(3)) << ' ' << Surd(Rational(1), Rational(5), true);
    CHECK(os.str() == "-6*sqrt(3) 1*sqrt(5)*i");
}

TEST_CASE("exact square roots of rationals")
{
    Rational root;
    CHECK(eplab::exact_sqrt(Rational(9, 4), root));
    CHECK(root == Rational(3, 2));
    CHECK_FALSE(eplab::exact_sqrt(Rational(2), root));
}
