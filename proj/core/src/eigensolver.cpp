#include "selfloop/errors.hpp"
#include "selfloop/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace selfloop {

namespace {

// Row-major n×n working array.
class Dense {
  public:
    explicit Dense(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0) {}
    double& operator()(int i, int j) {
        return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)];
    }
    double operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)];
    }

  private:
    int n_;
    std::vector<double> a_;
};

// Householder reduction to tridiagonal form. On return `d` holds the diagonal,
// `e[1..n-1]` the subdiagonal and `v` the accumulated orthogonal transform.
void tridiagonalize(Dense& v, std::vector<double>& d, std::vector<double>& e, int n) {
    for (int j = 0; j < n; ++j)
        d[j] = v(n - 1, j);

    for (int i = n - 1; i > 0; --i) {
        double scale = 0.0;
        double h = 0.0;
        for (int k = 0; k < i; ++k)
            scale += std::abs(d[k]);
        if (scale == 0.0) {
            e[i] = d[i - 1];
            for (int j = 0; j < i; ++j) {
                d[j] = v(i - 1, j);
                v(i, j) = 0.0;
                v(j, i) = 0.0;
            }
        } else {
            for (int k = 0; k < i; ++k) {
                d[k] /= scale;
                h += d[k] * d[k];
            }
            double f = d[i - 1];
            double g = std::sqrt(h);
            if (f > 0)
                g = -g;
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for (int j = 0; j < i; ++j)
                e[j] = 0.0;

            for (int j = 0; j < i; ++j) {
                f = d[j];
                v(j, i) = f;
                g = e[j] + v(j, j) * f;
                for (int k = j + 1; k <= i - 1; ++k) {
                    g += v(k, j) * d[k];
                    e[k] += v(k, j) * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for (int j = 0; j < i; ++j) {
                e[j] /= h;
                f += e[j] * d[j];
            }
            const double hh = f / (h + h);
            for (int j = 0; j < i; ++j)
                e[j] -= hh * d[j];
            for (int j = 0; j < i; ++j) {
                f = d[j];
                g = e[j];
                for (int k = j; k <= i - 1; ++k)
                    v(k, j) -= (f * e[k] + g * d[k]);
                d[j] = v(i - 1, j);
                v(i, j) = 0.0;
            }
        }
        d[i] = h;
    }

    for (int i = 0; i < n - 1; ++i) {
        v(n - 1, i) = v(i, i);
        v(i, i) = 1.0;
        const double h = d[i + 1];
        if (h != 0.0) {
            for (int k = 0; k <= i; ++k)
                d[k] = v(k, i + 1) / h;
            for (int j = 0; j <= i; ++j) {
                double g = 0.0;
                for (int k = 0; k <= i; ++k)
                    g += v(k, i + 1) * v(k, j);
                for (int k = 0; k <= i; ++k)
                    v(k, j) -= g * d[k];
            }
        }
        for (int k = 0; k <= i; ++k)
            v(k, i + 1) = 0.0;
    }
    for (int j = 0; j < n; ++j) {
        d[j] = v(n - 1, j);
        v(n - 1, j) = 0.0;
    }
    v(n - 1, n - 1) = 1.0;
    e[0] = 0.0;
}

// Implicit-shift QL on the tridiagonal (d, e), rotating the columns of v.
void ql_iterate(Dense& v, std::vector<double>& d, std::vector<double>& e, int n, int max_iterations) {
    for (int i = 1; i < n; ++i)
        e[i - 1] = e[i];
    e[n - 1] = 0.0;

    double f = 0.0;
    double tst1 = 0.0;
    const double eps = std::numeric_limits<double>::epsilon();
    int total = 0;
    for (int l = 0; l < n; ++l) {
        tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
        int m = l;
        while (m < n - 1 && std::abs(e[m]) > eps * tst1)
            ++m;

        if (m > l) {
            do {
                if (++total > max_iterations) {
                    std::ostringstream msg;
                    msg << "symmetric eigensolver did not converge: order " << n << ", " << max_iterations
                        << " QL iterations exhausted at index " << l << ", |e| = " << std::abs(e[l]);
                    throw NumericError(msg.str());
                }
                double g = d[l];
                double p = (d[l + 1] - g) / (2.0 * e[l]);
                double r = std::hypot(p, 1.0);
                if (p < 0)
                    r = -r;
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                const double dl1 = d[l + 1];
                double h = g - d[l];
                for (int i = l + 2; i < n; ++i)
                    d[i] -= h;
                f += h;

                p = d[m];
                double c = 1.0;
                double c2 = c;
                double c3 = c;
                const double el1 = e[l + 1];
                double s = 0.0;
                double s2 = 0.0;
                for (int i = m - 1; i >= l; --i) {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = std::hypot(p, e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    for (int k = 0; k < n; ++k) {
                        h = v(k, i + 1);
                        v(k, i + 1) = s * v(k, i) + c * h;
                        v(k, i) = c * v(k, i) - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
            } while (std::abs(e[l]) > eps * tst1);
        }
        d[l] += f;
        e[l] = 0.0;
    }
}

double norm_inf_dense(std::span<const double> a, int n) {
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j)
            row += std::abs(a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]);
        best = std::max(best, row);
    }
    return best;
}

} // namespace

double Spectrum::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

double Spectrum::sum_of_squares() const {
    return std::accumulate(values.begin(), values.end(), 0.0, [](double acc, double x) { return acc + x * x; });
}

double default_tolerance(int order, double norm_inf) {
    return order <= 64 ? 1e-9 : 1e-9 * std::max(1.0, norm_inf);
}

EigenDecomposition eig_sym_dense(std::span<const double> a, int n, const EigOptions& options) {
    if (n <= 0)
        throw DomainError("eigensolver needs a matrix of order >= 1");
    if (a.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw DomainError("eigensolver input has wrong size");

    Dense v(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            v(i, j) = a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
    std::vector<double> d(static_cast<std::size_t>(n));
    std::vector<double> e(static_cast<std::size_t>(n));
    tridiagonalize(v, d, e, n);
    ql_iterate(v, d, e, n, options.sweep_factor * n);

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&d](int x, int y) { return d[x] > d[y]; });

    const double norm = norm_inf_dense(a, n);
    EigenDecomposition out;
    out.spectrum.tolerance = default_tolerance(n, norm);
    out.spectrum.values.resize(static_cast<std::size_t>(n));
    out.vectors.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
        const int src = order[static_cast<std::size_t>(c)];
        out.spectrum.values[static_cast<std::size_t>(c)] = d[static_cast<std::size_t>(src)];
        for (int r = 0; r < n; ++r)
            out.vectors[static_cast<std::size_t>(c) * static_cast<std::size_t>(n) + static_cast<std::size_t>(r)] =
                v(r, src);
    }

    if (options.verify) {
        const double limit = 1e-9 * std::max(1.0, norm);
        for (int c = 0; c < n; ++c) {
            const double lambda = out.spectrum.values[static_cast<std::size_t>(c)];
            const double* vec = out.vectors.data() + static_cast<std::size_t>(c) * static_cast<std::size_t>(n);
            for (int r = 0; r < n; ++r) {
                double av = 0.0;
                for (int k = 0; k < n; ++k)
                    av += a[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) + static_cast<std::size_t>(k)] *
                          vec[k];
                out.residual = std::max(out.residual, std::abs(av - lambda * vec[r]));
            }
        }
        if (!(out.residual <= limit)) {
            std::ostringstream msg;
            msg << "eigen residual " << out.residual << " exceeds " << limit << " (order " << n << ")";
            throw NumericError(msg.str());
        }
    }
    return out;
}

EigenDecomposition eig_sym_vectors(const SymMatrix& mat, const EigOptions& options) {
    const auto dense = mat.to_dense();
    return eig_sym_dense(dense, mat.order(), options);
}

Spectrum eig_sym(const SymMatrix& mat, const EigOptions& options) {
    return eig_sym_vectors(mat, options).spectrum;
}

double min_eigenvalue(const SymMatrix& mat) { return eig_sym(mat).smallest(); }

double spectral_radius(const SymMatrix& mat) { return eig_sym(mat).largest(); }

double multiset_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        return std::numeric_limits<double>::infinity();
    std::vector<double> x(a.begin(), a.end());
    std::vector<double> y(b.begin(), b.end());
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        worst = std::max(worst, std::abs(x[i] - y[i]));
    return worst;
}

} // namespace selfloop
