#pragma once

#include "selfloop/graph.hpp"
#include "selfloop/int_poly.hpp"
#include "selfloop/matrix.hpp"

namespace selfloop {

enum class CharpolyArithmetic {
    /// 64-bit, then 128-bit checked arithmetic, falling back to big integers on overflow.
    Tiered,
    BigIntegerOnly,
};

/// det(xI − A) for an integral symmetric matrix via the Faddeev–LeVerrier
/// recurrence. Every division in the recurrence is exact over the integers and
/// is checked. Throws DomainError for non-integral matrices.
IntPoly charpoly_exact(const SymMatrix& mat, CharpolyArithmetic arithmetic = CharpolyArithmetic::Tiered);

/// Both sides of P_{L(Ĝ)}(λ) = (λ−1)^{n−m} λ^m P_{L(G)}((λ²−λ−2)/λ), with the
/// negative power of (λ−1) moved across so that both sides are polynomials.
struct LineGraphIdentity {
    bool equal = false;
    IntPoly lhs;
    IntPoly rhs;
    /// P_{L(G)}
    IntPoly line_charpoly;
    /// P_{L(Ĝ)}
    IntPoly full_loop_line_charpoly;
};

/// Throws DomainError when g has no edges.
LineGraphIdentity verify_linegraph_identity(const SimpleGraph& g);

} // namespace selfloop
