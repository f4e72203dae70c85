#include "selfloop/charpoly.hpp"

#include "selfloop/construct.hpp"
#include "selfloop/errors.hpp"

#include <cstdint>
#include <type_traits>
#include <utility>

namespace selfloop {

__extension__ using Int128 = __int128;
__extension__ using UInt128 = unsigned __int128;

namespace {

struct Overflow {};

template <class T>
constexpr bool is_big_v = std::is_same_v<T, BigInt>;

template <class T>
T checked_add(const T& a, const T& b) {
    if constexpr (is_big_v<T>) {
        return a + b;
    } else {
        T r;
        if (__builtin_add_overflow(a, b, &r))
            throw Overflow{};
        return r;
    }
}

template <class T>
T checked_mul(const T& a, const T& b) {
    if constexpr (is_big_v<T>) {
        return a * b;
    } else {
        T r;
        if (__builtin_mul_overflow(a, b, &r))
            throw Overflow{};
        return r;
    }
}

template <class T>
BigInt widen(const T& v) {
    if constexpr (is_big_v<T>) {
        return v;
    } else if constexpr (std::is_same_v<T, Int128>) {
        // cpp_int has no direct Int128 constructor on every toolchain.
        const bool neg = v < 0;
        UInt128 mag = neg ? static_cast<UInt128>(-(v + 1)) + 1 : static_cast<UInt128>(v);
        BigInt out = static_cast<std::uint64_t>(mag >> 64);
        out <<= 64;
        out += static_cast<std::uint64_t>(mag);
        return neg ? BigInt(-out) : out;
    } else {
        return BigInt(v);
    }
}

// Sparse rows of the integer matrix: (column, value) with value != 0.
using SparseRows = std::vector<std::vector<std::pair<int, std::int64_t>>>;

SparseRows sparse_rows(const SymMatrix& a) {
    SparseRows rows(static_cast<std::size_t>(a.order()));
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < a.order(); ++j)
            if (a.numerator(i, j) != 0)
                rows[static_cast<std::size_t>(i)].emplace_back(j, a.numerator(i, j));
    return rows;
}

// M_1 = I;  c_{n-k} = -tr(A·M_k)/k;  M_{k+1} = A·M_k + c_{n-k}·I.
template <class T>
std::vector<BigInt> faddeev_leverrier(const SparseRows& rows, int n) {
    const auto un = static_cast<std::size_t>(n);
    std::vector<T> m(un * un, T(0));
    std::vector<T> am(un * un, T(0));
    for (std::size_t i = 0; i < un; ++i)
        m[i * un + i] = T(1);

    std::vector<BigInt> coeffs(un + 1);
    coeffs[un] = 1;
    for (int k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < un; ++i) {
            T* out = am.data() + i * un;
            for (std::size_t j = 0; j < un; ++j)
                out[j] = T(0);
            for (const auto& [col, val] : rows[i]) {
                const T* src = m.data() + static_cast<std::size_t>(col) * un;
                const T tv = T(val);
                for (std::size_t j = 0; j < un; ++j)
                    if (src[j] != 0)
                        out[j] = checked_add(out[j], checked_mul(tv, src[j]));
            }
        }
        T trace(0);
        for (std::size_t i = 0; i < un; ++i)
            trace = checked_add(trace, am[i * un + i]);
        if (trace % T(k) != 0)
            throw NumericError("Faddeev-LeVerrier: inexact division at step " + std::to_string(k));
        const T c = T(0) - trace / T(k);
        coeffs[un - static_cast<std::size_t>(k)] = widen(c);
        if (k < n) {
            std::swap(m, am);
            for (std::size_t i = 0; i < un; ++i)
                m[i * un + i] = checked_add(m[i * un + i], c);
        }
    }
    return coeffs;
}

} // namespace

IntPoly charpoly_exact(const SymMatrix& mat, CharpolyArithmetic arithmetic) {
    if (!mat.is_integral())
        throw DomainError("exact characteristic polynomial needs an integral matrix");
    const auto rows = sparse_rows(mat);
    const int n = mat.order();
    if (arithmetic == CharpolyArithmetic::Tiered) {
        try {
            return IntPoly(faddeev_leverrier<std::int64_t>(rows, n));
        } catch (const Overflow&) {
        }
        try {
            return IntPoly(faddeev_leverrier<Int128>(rows, n));
        } catch (const Overflow&) {
        }
    }
    return IntPoly(faddeev_leverrier<BigInt>(rows, n));
}

LineGraphIdentity verify_linegraph_identity(const SimpleGraph& g) {
    const int n = g.order();
    const int m = g.size();
    if (m == 0)
        throw DomainError("line graph identity needs at least one edge");

    LineGraphIdentity out;
    out.line_charpoly = charpoly_exact(adjacency(line_graph(make_looped(g)).graph));
    out.full_loop_line_charpoly = charpoly_exact(adjacency(line_graph(make_looped(g, LoopSet::all(n))).graph));

    const IntPoly x_minus_one = IntPoly::linear_root(1);
    const IntPoly shifted = compose_rational(out.line_charpoly, IntPoly{-2, -1, 1}, IntPoly::identity(), m);
    out.lhs = pow(x_minus_one, static_cast<unsigned>(std::max(m - n, 0))) * out.full_loop_line_charpoly;
    out.rhs = pow(x_minus_one, static_cast<unsigned>(std::max(n - m, 0))) * shifted;
    out.equal = out.lhs == out.rhs;
    return out;
}

} // namespace selfloop
