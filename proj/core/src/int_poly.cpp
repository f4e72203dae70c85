#include "selfloop/int_poly.hpp"

#include "selfloop/errors.hpp"

#include <algorithm>
#include <sstream>

namespace selfloop {

IntPoly::IntPoly(std::initializer_list<long long> ascending) {
    coeffs_.reserve(ascending.size());
    for (long long c : ascending)
        coeffs_.emplace_back(c);
    trim();
}

IntPoly::IntPoly(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::identity() { return IntPoly{0, 1}; }

IntPoly IntPoly::linear_root(long long root) { return IntPoly{-root, 1}; }

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

BigInt IntPoly::coefficient(int k) const {
    if (k < 0 || k > degree())
        return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

BigInt IntPoly::l1_norm() const {
    BigInt sum = 0;
    for (const auto& c : coeffs_)
        sum += abs(c);
    return sum;
}

long double IntPoly::evaluate(long double x) const {
    long double acc = 0.0L;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + it->convert_to<long double>();
    return acc;
}

BigInt IntPoly::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPoly(std::move(out));
}

IntPoly operator*(IntPoly a, const BigInt& c) {
    for (auto& x : a.coeffs_)
        x *= c;
    a.trim();
    return a;
}

std::string IntPoly::to_string(char var) const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0)
            continue;
        const BigInt mag = abs(c);
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        const bool unit = mag == 1 && k > 0;
        if (!unit)
            out << mag.str();
        if (k > 0) {
            if (!unit)
                out << '*';
            out << var;
            if (k > 1)
                out << '^' << k;
        }
    }
    return out.str();
}

std::vector<std::string> IntPoly::coefficient_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_)
        out.push_back(c.str());
    if (out.empty())
        out.emplace_back("0");
    return out;
}

IntPoly pow(const IntPoly& p, unsigned exponent) {
    IntPoly result{1};
    IntPoly base = p;
    while (exponent > 0) {
        if (exponent & 1U)
            result = result * base;
        exponent >>= 1U;
        if (exponent > 0)
            base = base * base;
    }
    return result;
}

IntPoly compose_rational(const IntPoly& p, const IntPoly& num, const IntPoly& den, int clear_degree) {
    if (den.is_zero())
        throw DomainError("compose_rational: zero denominator polynomial");
    if (clear_degree < p.degree())
        throw DomainError("compose_rational: clearing degree below deg p");
    if (p.is_zero())
        return {};
    // Σ c_k · num^k · den^(d-k), built with running powers of num and den.
    const int d = clear_degree;
    std::vector<IntPoly> den_pows(static_cast<std::size_t>(d) + 1);
    den_pows[0] = IntPoly{1};
    for (int k = 1; k <= d; ++k)
        den_pows[static_cast<std::size_t>(k)] = den_pows[static_cast<std::size_t>(k) - 1] * den;
    IntPoly acc;
    IntPoly num_pow{1};
    for (int k = 0; k <= p.degree(); ++k) {
        const BigInt& c = p.coefficients()[static_cast<std::size_t>(k)];
        if (c != 0)
            acc += (num_pow * den_pows[static_cast<std::size_t>(d - k)]) * c;
        if (k < p.degree())
            num_pow = num_pow * num;
    }
    return acc;
}

} // namespace selfloop
