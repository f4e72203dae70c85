#pragma once

#include "selfloop/matrix.hpp"

#include <span>
#include <vector>

namespace selfloop {

/// Real eigenvalues sorted descending, plus the tolerance they were computed to.
struct Spectrum {
    std::vector<double> values;
    double tolerance = 1e-9;

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
    double largest() const { return values.front(); }
    double smallest() const { return values.back(); }
    double sum() const;
    double sum_of_squares() const;
};

struct EigenDecomposition {
    Spectrum spectrum;
    /// Column-major: column i is the unit eigenvector for spectrum.values[i].
    std::vector<double> vectors;
    /// max_i ‖A·v_i − λ_i·v_i‖∞ from the verification pass (0 when skipped).
    double residual = 0.0;
};

struct EigOptions {
    /// Recompute A·v − λv for every pair and reject residuals above 1e-9·max(1, ‖A‖∞).
    bool verify = true;
    /// Total QL iterations allowed = sweep_factor · order.
    int sweep_factor = 50;
};

/// 1e-9 absolute up to order 64, scaled by ‖A‖∞ beyond that.
double default_tolerance(int order, double norm_inf);

/// Householder tridiagonalisation followed by implicit-shift QL.
/// Throws DomainError on an empty matrix, NumericError on non-convergence or a
/// failed verification pass.
EigenDecomposition eig_sym_vectors(const SymMatrix& mat, const EigOptions& options = {});
Spectrum eig_sym(const SymMatrix& mat, const EigOptions& options = {});
/// Same solver on a row-major symmetric array of doubles.
EigenDecomposition eig_sym_dense(std::span<const double> a, int order, const EigOptions& options = {});

/// Last and first entries of eig_sym(mat).
double min_eigenvalue(const SymMatrix& mat);
double spectral_radius(const SymMatrix& mat);

/// Largest pairwise gap after sorting both lists; +inf when sizes differ.
double multiset_distance(std::span<const double> a, std::span<const double> b);
inline bool multiset_equal(std::span<const double> a, std::span<const double> b, double tol) {
    return multiset_distance(a, b) <= tol;
}

} // namespace selfloop
