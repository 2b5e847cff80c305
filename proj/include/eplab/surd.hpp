#pragma once

#include <iosfwd>
#include <string>

#include "eplab/types.hpp"

namespace eplab {

/// Exact number of the form  coeff * sqrt(radicand) * (i if imaginary).
///
/// Products of model couplings a_j = sqrt(z_j) (or i*sqrt(|z_j|)) stay in
/// this form, which is enough to hold every entry of the Hamiltonian and of
/// the Jordan chains built from it without rounding.
class Surd
{
public:
    Surd() = default;
    Surd(Rational coeff); // NOLINT(google-explicit-constructor)
    Surd(Rational coeff, Rational radicand, bool imaginary = false);

    /// sqrt(z) for z >= 0, i*sqrt(|z|) for z < 0.
    static Surd sqrt_of(Rational const& z);

    Rational const& coeff() const noexcept { return coeff_; }
    Rational const& radicand() const noexcept { return radicand_; }
    bool imaginary() const noexcept { return imaginary_; }

    bool is_zero() const noexcept { return coeff_ == 0; }
    /// True when the value is a (real) rational number.
    bool is_rational() const noexcept { return radicand_ == 1 && !imaginary_; }

    Complex to_complex() const;
    std::string to_string() const;

    Surd operator-() const;
    friend Surd operator*(Surd const& a, Surd const& b);
    friend Surd operator*(Surd const& a, Rational const& r);
    friend Surd operator*(Rational const& r, Surd const& a) { return a * r; }

    /// Value equality; independent of how the radical is split between
    /// coefficient and radicand (2*sqrt(3) == sqrt(12)).
    friend bool operator==(Surd const& a, Surd const& b);

private:
    void normalize();

    Rational coeff_{0};
    Rational radicand_{1};
    bool imaginary_{false};
};

std::ostream& operator<<(std::ostream& os, Surd const& s);

/// Exact square root of a nonnegative rational, if it is a perfect square.
bool exact_sqrt(Rational const& x, Rational& root);

} // namespace eplab
