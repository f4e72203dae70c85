#include "selfloop/surd.hpp"

#include "selfloop/errors.hpp"

#include <cmath>

namespace selfloop {

QuadraticSurd::QuadraticSurd(Rational a, Rational b, BigInt radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(radicand)) {
    if (d_ < 0)
        throw DomainError("quadratic surd needs a non-negative radicand");
    normalize();
}

void QuadraticSurd::normalize() {
    // Perfect squares fold into the rational part so equality stays structural.
    const BigInt r = sqrt(d_);
    if (r * r == d_) {
        a_ += b_ * r;
        b_ = 0;
    }
}

int QuadraticSurd::sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0)
        return sa;
    if (sa == 0 || sa == sb)
        return sb;
    // Opposite signs: compare a² with b²·d.
    const Rational lhs = a_ * a_;
    const Rational rhs = b_ * b_ * Rational(d_);
    if (lhs == rhs)
        return 0;
    return lhs > rhs ? sa : sb;
}

double QuadraticSurd::to_double() const {
    return selfloop::to_double(a_) + selfloop::to_double(b_) * std::sqrt(d_.convert_to<double>());
}

QuadraticSurd& QuadraticSurd::operator+=(const QuadraticSurd& o) {
    if (o.b_ != 0 && b_ != 0 && o.d_ != d_)
        throw DomainError("adding surds over different radicands");
    if (b_ == 0)
        d_ = o.d_;
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadraticSurd& QuadraticSurd::operator*=(const Rational& c) {
    a_ *= c;
    b_ *= c;
    return *this;
}

bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
    if (x.b_ == 0 && y.b_ == 0)
        return x.a_ == y.a_;
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
}

} // namespace selfloop
