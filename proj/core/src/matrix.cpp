#include "selfloop/matrix.hpp"

#include "selfloop/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace selfloop {

SymMatrix::SymMatrix(int order, std::int64_t denominator)
    : order_(order), denominator_(denominator),
      data_(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0) {
    if (order < 0)
        throw DomainError("matrix order must be non-negative");
    if (denominator <= 0)
        throw DomainError("matrix denominator must be positive");
}

SymMatrix::SymMatrix(int order, std::vector<std::int64_t> numerators, std::int64_t denominator)
    : SymMatrix(order, denominator) {
    if (numerators.size() != data_.size())
        throw DomainError("matrix data has wrong size");
    data_ = std::move(numerators);
    for (int i = 0; i < order_; ++i)
        for (int j = i + 1; j < order_; ++j)
            if (data_[index(i, j)] != data_[index(j, i)])
                throw DomainError("matrix is not symmetric");
}

void SymMatrix::set(int i, int j, std::int64_t numerator) {
    data_[index(i, j)] = numerator;
    data_[index(j, i)] = numerator;
}

Rational SymMatrix::trace() const {
    BigInt sum = 0;
    for (int i = 0; i < order_; ++i)
        sum += numerator(i, i);
    return Rational(sum, denominator_);
}

Rational SymMatrix::frobenius_squared() const {
    BigInt sum = 0;
    for (auto v : data_)
        sum += BigInt(v) * v;
    return Rational(sum, BigInt(denominator_) * denominator_);
}

double SymMatrix::norm_inf() const {
    double best = 0.0;
    for (int i = 0; i < order_; ++i) {
        double row = 0.0;
        for (int j = 0; j < order_; ++j)
            row += std::abs(value(i, j));
        best = std::max(best, row);
    }
    return best;
}

std::vector<double> SymMatrix::to_dense() const {
    std::vector<double> out(data_.size());
    const auto den = static_cast<double>(denominator_);
    std::transform(data_.begin(), data_.end(), out.begin(),
                   [den](std::int64_t v) { return static_cast<double>(v) / den; });
    return out;
}

SymMatrix SymMatrix::principal(const std::vector<int>& rows) const {
    const int k = static_cast<int>(rows.size());
    SymMatrix out(k, denominator_);
    for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b)
            out.set(a, b, numerator(rows[static_cast<std::size_t>(a)], rows[static_cast<std::size_t>(b)]));
    return out;
}

IncidenceMatrix::IncidenceMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {}

SymMatrix IncidenceMatrix::gram_columns() const {
    SymMatrix out(cols_);
    for (int a = 0; a < cols_; ++a)
        for (int b = a; b < cols_; ++b) {
            std::int64_t s = 0;
            for (int r = 0; r < rows_; ++r)
                s += at(r, a) * at(r, b);
            out.set(a, b, s);
        }
    return out;
}

SymMatrix IncidenceMatrix::gram_rows() const {
    SymMatrix out(rows_);
    for (int a = 0; a < rows_; ++a)
        for (int b = a; b < rows_; ++b) {
            std::int64_t s = 0;
            for (int c = 0; c < cols_; ++c)
                s += at(a, c) * at(b, c);
            out.set(a, b, s);
        }
    return out;
}

std::vector<double> QuotientMatrix2::eigenvalues() const {
    const double p = to_double(b[0][0]);
    const double q = to_double(b[0][1]);
    const double r = to_double(b[1][0]);
    const double s = to_double(b[1][1]);
    const double half_trace = 0.5 * (p + s);
    const double disc = 0.25 * (p - s) * (p - s) + q * r;
    const double root = std::sqrt(std::max(disc, 0.0));
    return {half_trace + root, half_trace - root};
}

} // namespace selfloop
