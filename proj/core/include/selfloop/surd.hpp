#pragma once

#include "selfloop/numeric_types.hpp"

namespace selfloop {

/// Exact element a + b·√radicand of Q(√radicand), radicand a non-negative integer.
class QuadraticSurd {
  public:
    QuadraticSurd(Rational a, Rational b, BigInt radicand);
    static QuadraticSurd rational(Rational a, const BigInt& radicand) { return {std::move(a), 0, radicand}; }
    static QuadraticSurd root(const BigInt& radicand) { return {0, 1, radicand}; }

    const Rational& rational_part() const { return a_; }
    const Rational& surd_part() const { return b_; }
    const BigInt& radicand() const { return d_; }

    /// Exact sign: -1, 0 or 1.
    int sign() const;
    QuadraticSurd abs() const { return sign() < 0 ? -*this : *this; }
    double to_double() const;

    QuadraticSurd operator-() const { return {-a_, -b_, d_}; }
    QuadraticSurd& operator+=(const QuadraticSurd& o);
    QuadraticSurd& operator-=(const QuadraticSurd& o) { return *this += -o; }
    QuadraticSurd& operator*=(const Rational& c);
    friend QuadraticSurd operator+(QuadraticSurd x, const QuadraticSurd& y) { return x += y; }
    friend QuadraticSurd operator-(QuadraticSurd x, const QuadraticSurd& y) { return x -= y; }
    friend QuadraticSurd operator*(QuadraticSurd x, const Rational& c) { return x *= c; }
    friend QuadraticSurd operator*(const Rational& c, QuadraticSurd x) { return x *= c; }
    /// Exact equality (radicands must match).
    friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y);

  private:
    void normalize();

    Rational a_;
    Rational b_;
    BigInt d_;
};

} // namespace selfloop
