#pragma once

#include "selfloop/numeric_types.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace selfloop {

/// Dense symmetric matrix with exact entries numerator(i,j) / denominator.
///
/// Graph matrices use denominator 1. The Nordhaus-Gaddum auxiliary matrix
/// stores its entries scaled by n so that they stay exact.
class SymMatrix {
  public:
    SymMatrix() = default;
    explicit SymMatrix(int order, std::int64_t denominator = 1);
    /// Throws DomainError unless `numerators` is order×order and symmetric.
    SymMatrix(int order, std::vector<std::int64_t> numerators, std::int64_t denominator = 1);

    int order() const { return order_; }
    std::int64_t denominator() const { return denominator_; }
    bool is_integral() const { return denominator_ == 1; }

    std::int64_t numerator(int i, int j) const { return data_[index(i, j)]; }
    /// Sets both (i,j) and (j,i).
    void set(int i, int j, std::int64_t numerator);
    Rational entry(int i, int j) const { return Rational(numerator(i, j), denominator_); }
    double value(int i, int j) const {
        return static_cast<double>(numerator(i, j)) / static_cast<double>(denominator_);
    }

    Rational trace() const;
    /// Sum of squared entries.
    Rational frobenius_squared() const;
    /// Max absolute row sum.
    double norm_inf() const;
    /// Row-major copy as doubles.
    std::vector<double> to_dense() const;

    /// Principal submatrix on `rows` (in the given order).
    SymMatrix principal(const std::vector<int>& rows) const;

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

  private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(j);
    }

    int order_ = 0;
    std::int64_t denominator_ = 1;
    std::vector<std::int64_t> data_;
};

/// 0/1 vertex-by-edge matrix: ordinary edges in canonical order, then loops.
class IncidenceMatrix {
  public:
    IncidenceMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int at(int r, int c) const { return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                                             static_cast<std::size_t>(c)]; }
    void set(int r, int c, int v) {
        data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)] =
            static_cast<std::uint8_t>(v);
    }

    /// Bᵀ·B (column Gram matrix, order = cols).
    SymMatrix gram_columns() const;
    /// B·Bᵀ (row Gram matrix, order = rows).
    SymMatrix gram_rows() const;

  private:
    int rows_;
    int cols_;
    std::vector<std::uint8_t> data_;
};

/// Quotient of a matrix over a two-part equitable partition.
struct QuotientMatrix2 {
    Rational b[2][2];

    /// Both roots of the 2×2 characteristic polynomial, descending.
    std::vector<double> eigenvalues() const;
};

} // namespace selfloop
