#pragma once

#include "selfloop/numeric_types.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

namespace selfloop {

/// Polynomial with arbitrary-precision integer coefficients, ascending degree.
/// The zero polynomial has no coefficients and degree -1.
class IntPoly {
  public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long long> ascending);
    explicit IntPoly(std::vector<BigInt> ascending);

    static IntPoly constant(const BigInt& c);
    /// x
    static IntPoly identity();
    /// x - root
    static IntPoly linear_root(long long root);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    /// Coefficient of x^k (zero beyond the degree).
    BigInt coefficient(int k) const;
    const BigInt& leading() const { return coeffs_.back(); }

    /// Sum of absolute coefficient values.
    BigInt l1_norm() const;
    /// Horner evaluation in long double.
    long double evaluate(long double x) const;
    BigInt evaluate(const BigInt& x) const;

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const BigInt& c);
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    /// Human-readable form, e.g. "x^3 - 2*x^2 - x + 2".
    std::string to_string(char var = 'x') const;
    /// Ascending coefficients as decimal strings.
    std::vector<std::string> coefficient_strings() const;

  private:
    void trim();

    std::vector<BigInt> coeffs_;
};

IntPoly pow(const IntPoly& p, unsigned exponent);

/// den^clear_degree · p(num/den) as an exact integer polynomial.
/// Throws DomainError when den is zero or clear_degree < deg p.
IntPoly compose_rational(const IntPoly& p, const IntPoly& num, const IntPoly& den, int clear_degree);
inline IntPoly compose_rational(const IntPoly& p, const IntPoly& num, const IntPoly& den) {
    return compose_rational(p, num, den, std::max(p.degree(), 0));
}

} // namespace selfloop
