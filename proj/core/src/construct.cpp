#include "selfloop/construct.hpp"

#include "selfloop/errors.hpp"

namespace selfloop {

SymMatrix adjacency(const SimpleGraph& g) {
    SymMatrix a(g.order());
    for (const auto& e : g.edges())
        a.set(e.u, e.v, 1);
    return a;
}

SymMatrix adjacency(const LoopedGraph& gs) {
    SymMatrix a = adjacency(gs.base());
    for (int v : gs.loops().members())
        a.set(v, v, 1);
    return a;
}

LoopedGraph complement(const LoopedGraph& gs, ComplementConvention convention) {
    auto base = gs.base().complement();
    if (convention == ComplementConvention::SameLoops)
        return make_looped(std::move(base), gs.loops());
    std::vector<int> rest;
    for (int v = 0; v < gs.order(); ++v)
        if (!gs.has_loop(v))
            rest.push_back(v);
    return make_looped(std::move(base), LoopSet(std::move(rest)));
}

LoopedLineGraph line_graph(const LoopedGraph& gs) {
    const auto& edges = gs.base().edges();
    const int m = gs.size();
    const int sigma = gs.sigma();
    if (m + sigma == 0)
        throw DomainError("line graph of a graph with no edges and no loops is empty");

    std::vector<Edge> out;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            const auto& ea = edges[static_cast<std::size_t>(a)];
            const auto& eb = edges[static_cast<std::size_t>(b)];
            // Distinct simple edges share at most one endpoint.
            if (ea.u == eb.u || ea.u == eb.v || ea.v == eb.u || ea.v == eb.v)
                out.push_back({a, b});
        }
    const auto& loop_base = gs.loops().members();
    for (int j = 0; j < sigma; ++j) {
        const int v = loop_base[static_cast<std::size_t>(j)];
        for (int a = 0; a < m; ++a) {
            const auto& e = edges[static_cast<std::size_t>(a)];
            if (e.u == v || e.v == v)
                out.push_back({a, m + j});
        }
    }
    LoopedLineGraph lg;
    lg.edge_count = m;
    lg.loop_count = sigma;
    lg.loop_base = loop_base;
    std::vector<int> looped(static_cast<std::size_t>(sigma));
    for (int j = 0; j < sigma; ++j)
        looped[static_cast<std::size_t>(j)] = m + j;
    lg.graph = make_looped(SimpleGraph(m + sigma, std::move(out)), LoopSet(std::move(looped)));
    return lg;
}

IncidenceMatrix incidence(const LoopedGraph& gs) {
    const auto& edges = gs.base().edges();
    const int m = gs.size();
    IncidenceMatrix b(gs.order(), m + gs.sigma());
    for (int c = 0; c < m; ++c) {
        b.set(edges[static_cast<std::size_t>(c)].u, c, 1);
        b.set(edges[static_cast<std::size_t>(c)].v, c, 1);
    }
    int c = m;
    for (int v : gs.loops().members())
        b.set(v, c++, 1);
    return b;
}

SymMatrix signless_laplacian(const LoopedGraph& gs) {
    SymMatrix q = adjacency(gs.base());
    const auto d = gs.base().degrees();
    for (int v = 0; v < gs.order(); ++v)
        q.set(v, v, d[static_cast<std::size_t>(v)] + (gs.has_loop(v) ? 1 : 0));
    return q;
}

SymMatrix ng_energy_aux_matrix(int n, int sigma) {
    if (n < 2)
        throw DomainError("auxiliary matrix needs n >= 2");
    if (sigma < 0 || sigma > n)
        throw DomainError("auxiliary matrix needs 0 <= sigma <= n");
    // Scaled by n: off-diagonal n, looped diagonal 2n - 2σ, other diagonal -2σ.
    SymMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            m.set(i, j, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, i < sigma ? 2 * n - 2 * sigma : -2 * sigma);
    return m;
}

QuotientMatrix2 quotient_2block(const SymMatrix& mat, const std::vector<bool>& in_first) {
    const int n = mat.order();
    if (static_cast<int>(in_first.size()) != n)
        throw DomainError("partition size does not match matrix order");
    QuotientMatrix2 out;
    bool seen[2] = {false, false};
    for (int i = 0; i < n; ++i) {
        const int bi = in_first[static_cast<std::size_t>(i)] ? 0 : 1;
        std::int64_t sums[2] = {0, 0};
        for (int j = 0; j < n; ++j)
            sums[in_first[static_cast<std::size_t>(j)] ? 0 : 1] += mat.numerator(i, j);
        for (int bj = 0; bj < 2; ++bj) {
            const Rational s(sums[bj], mat.denominator());
            if (!seen[bi])
                out.b[bi][bj] = s;
            else if (out.b[bi][bj] != s)
                throw DomainError("partition is not equitable: block (" + std::to_string(bi) + "," +
                                  std::to_string(bj) + ") has non-constant row sums");
        }
        seen[bi] = true;
    }
    if (!seen[0] || !seen[1])
        throw DomainError("quotient needs two non-empty parts");
    return out;
}

QuotientMatrix2 quotient_2block(const SymMatrix& mat, const LoopSet& first_part) {
    std::vector<bool> in_first(static_cast<std::size_t>(mat.order()), false);
    for (int v : first_part.members()) {
        if (v >= mat.order())
            throw DomainError("partition index out of range");
        in_first[static_cast<std::size_t>(v)] = true;
    }
    return quotient_2block(mat, in_first);
}

} // namespace selfloop
