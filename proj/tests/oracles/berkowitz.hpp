#pragma once

// Berkowitz's division-free characteristic polynomial, used to cross-check the
// library's Faddeev–LeVerrier implementation.

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace oracle {

using Big = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<long long>>;

// Ascending coefficients of det(xI - A).
inline std::vector<Big> berkowitz_charpoly(const IntMatrix& a) {
    const std::size_t n = a.size();
    // c holds the char poly of the leading r×r block, descending (c[0] = 1).
    std::vector<Big> c{1};
    for (std::size_t r = 0; r < n; ++r) {
        // Block [[A_r, col], [row, a_rr]]; Toeplitz column is
        // (1, -a_rr, -row·col, -row·A_r·col, ..., -row·A_r^{r-1}·col).
        std::vector<Big> t{1, -Big(a[r][r])};
        std::vector<Big> v(r);
        for (std::size_t i = 0; i < r; ++i)
            v[i] = a[i][r];
        for (std::size_t k = 0; k < r; ++k) {
            Big dot = 0;
            for (std::size_t i = 0; i < r; ++i)
                dot += Big(a[r][i]) * v[i];
            t.push_back(-dot);
            std::vector<Big> next(r, 0);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j)
                    next[i] += Big(a[i][j]) * v[j];
            v = std::move(next);
        }
        std::vector<Big> out(r + 2, 0);
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = 0; j <= i && j < c.size(); ++j)
                if (i - j < t.size())
                    out[i] += t[i - j] * c[j];
        c = std::move(out);
    }
    return {c.rbegin(), c.rend()};
}

} // namespace oracle
