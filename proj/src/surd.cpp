#include "eplab/surd.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "eplab/error.hpp"

namespace eplab {

namespace {

bool exact_isqrt(BigInt const& x, BigInt& root)
{
    if (x < 0)
        return false;
    BigInt rem;
    root = boost::multiprecision::sqrt(x, rem);
    return rem == 0;
}

} // namespace

bool exact_sqrt(Rational const& x, Rational& root)
{
    BigInt num, den;
    if (!exact_isqrt(boost::multiprecision::numerator(x), num))
        return false;
    if (!exact_isqrt(boost::multiprecision::denominator(x), den))
        return false;
    root = Rational(num, den);
    return true;
}

Surd::Surd(Rational coeff)
    : coeff_(std::move(coeff))
{}

Surd::Surd(Rational coeff, Rational radicand, bool imaginary)
    : coeff_(std::move(coeff)), radicand_(std::move(radicand)), imaginary_(imaginary)
{
    if (radicand_ < 0)
        throw InvalidArgument("Surd: negative radicand; use the imaginary flag");
    normalize();
}

Surd Surd::sqrt_of(Rational const& z)
{
    if (z < 0)
        return Surd(1, -z, true);
    return Surd(1, z, false);
}

void Surd::normalize()
{
    if (coeff_ == 0 || radicand_ == 0) {
        coeff_ = 0;
        radicand_ = 1;
        imaginary_ = false;
        return;
    }
    Rational root;
    if (radicand_ != 1 && exact_sqrt(radicand_, root)) {
        coeff_ *= root;
        radicand_ = 1;
    }
}

Complex Surd::to_complex() const
{
    double const mag = coeff_.convert_to<double>() * std::sqrt(radicand_.convert_to<double>());
    return imaginary_ ? Complex(0.0, mag) : Complex(mag, 0.0);
}

std::string Surd::to_string() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

Surd Surd::operator-() const
{
    Surd r = *this;
    r.coeff_ = -r.coeff_;
    return r;
}

Surd operator*(Surd const& a, Surd const& b)
{
    Rational coeff = a.coeff_ * b.coeff_;
    bool const both_imag = a.imaginary_ && b.imaginary_;
    if (both_imag)
        coeff = -coeff; // i*i
    Rational radicand;
    if (a.radicand_ == b.radicand_) {
        coeff *= a.radicand_;
        radicand = 1;
    } else {
        radicand = a.radicand_ * b.radicand_;
    }
    return Surd(std::move(coeff), std::move(radicand), a.imaginary_ != b.imaginary_);
}

Surd operator*(Surd const& a, Rational const& r)
{
    Surd out = a;
    out.coeff_ *= r;
    out.normalize();
    return out;
}

bool operator==(Surd const& a, Surd const& b)
{
    if (a.is_zero() || b.is_zero())
        return a.is_zero() && b.is_zero();
    if (a.imaginary_ != b.imaginary_)
        return false;
    if ((a.coeff_ < 0) != (b.coeff_ < 0))
        return false;
    return a.coeff_ * a.coeff_ * a.radicand_ == b.coeff_ * b.coeff_ * b.radicand_;
}

std::ostream& operator<<(std::ostream& os, Surd const& s)
{
    os << s.coeff();
    if (s.radicand() != 1)
        os << "*sqrt(" << s.radicand() << ")";
    if (s.imaginary())
        os << "*i";
    return os;
}

} // namespace eplab
