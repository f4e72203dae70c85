#include "selfloop/graph.hpp"

#include "selfloop/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace selfloop {

namespace {

std::size_t cell(int n, int a, int b) {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b);
}

} // namespace

SimpleGraph::SimpleGraph(int n) : n_(n) {
    if (n < 0)
        throw DomainError("graph order must be non-negative, got " + std::to_string(n));
    adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

SimpleGraph::SimpleGraph(int n, std::vector<Edge> edges) : SimpleGraph(n) {
    for (auto& e : edges) {
        if (e.u == e.v)
            throw DomainError("self pair (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              ") in a simple graph");
        check_vertex(e.u);
        check_vertex(e.v);
        if (e.u > e.v)
            std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw DomainError("duplicate edge in a simple graph");
    for (const auto& e : edges) {
        adj_[cell(n_, e.u, e.v)] = 1;
        adj_[cell(n_, e.v, e.u)] = 1;
    }
    edges_ = std::move(edges);
}

SimpleGraph SimpleGraph::from_adjacency(int n, std::span<const char> adjacency) {
    if (adjacency.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw DomainError("adjacency array has wrong size");
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const bool ab = adjacency[cell(n, a, b)] != 0;
            if (ab != (adjacency[cell(n, b, a)] != 0))
                throw DomainError("adjacency array is not symmetric");
            if (ab)
                edges.push_back({a, b});
        }
    return SimpleGraph(n, std::move(edges));
}

void SimpleGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw DomainError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

bool SimpleGraph::adjacent(int a, int b) const {
    check_vertex(a);
    check_vertex(b);
    return adj_[cell(n_, a, b)] != 0;
}

int SimpleGraph::degree(int v) const {
    check_vertex(v);
    const auto row = adj_.begin() + static_cast<std::ptrdiff_t>(cell(n_, v, 0));
    return static_cast<int>(std::count(row, row + n_, char{1}));
}

std::vector<int> SimpleGraph::degrees() const {
    std::vector<int> d(static_cast<std::size_t>(n_), 0);
    for (const auto& e : edges_) {
        ++d[static_cast<std::size_t>(e.u)];
        ++d[static_cast<std::size_t>(e.v)];
    }
    return d;
}

std::vector<int> SimpleGraph::neighbours(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int w = 0; w < n_; ++w)
        if (adj_[cell(n_, v, w)])
            out.push_back(w);
    return out;
}

SimpleGraph SimpleGraph::complement() const {
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ > 0 ? n_ - 1 : 0) / 2 -
                  edges_.size());
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (!adj_[cell(n_, a, b)])
                edges.push_back({a, b});
    return SimpleGraph(n_, std::move(edges));
}

SimpleGraph SimpleGraph::induced(std::span<const int> vertices) const {
    const int k = static_cast<int>(vertices.size());
    for (int v : vertices)
        check_vertex(v);
    std::vector<Edge> edges;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            const int va = vertices[static_cast<std::size_t>(a)];
            const int vb = vertices[static_cast<std::size_t>(b)];
            if (va == vb)
                throw DomainError("repeated vertex in induced subgraph selection");
            if (adj_[cell(n_, va, vb)])
                edges.push_back({a, b});
        }
    return SimpleGraph(k, std::move(edges));
}

LoopSet::LoopSet(std::vector<int> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (!members_.empty() && members_.front() < 0)
        throw DomainError("negative loop index " + std::to_string(members_.front()));
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw DomainError("duplicate loop index");
}

LoopSet LoopSet::all(int n) { return first(n); }

LoopSet LoopSet::first(int count) {
    std::vector<int> m(static_cast<std::size_t>(std::max(count, 0)));
    std::iota(m.begin(), m.end(), 0);
    return LoopSet(std::move(m));
}

bool LoopSet::contains(int v) const { return std::binary_search(members_.begin(), members_.end(), v); }

LoopedGraph make_looped(SimpleGraph base, LoopSet loops) {
    const int n = base.order();
    if (!loops.empty() && loops.members().back() >= n)
        throw DomainError("loop index " + std::to_string(loops.members().back()) + " out of range for order " +
                          std::to_string(n));
    LoopedGraph gs;
    gs.in_s_.assign(static_cast<std::size_t>(n), 0);
    for (int v : loops.members())
        gs.in_s_[static_cast<std::size_t>(v)] = 1;
    gs.base_ = std::move(base);
    gs.loops_ = std::move(loops);
    return gs;
}

DegreeSummary summarize(const LoopedGraph& gs) {
    DegreeSummary s;
    s.base_degrees = gs.base().degrees();
    s.looped_degrees = s.base_degrees;
    for (int v : gs.loops().members())
        s.looped_degrees[static_cast<std::size_t>(v)] += 2;
    s.edges = gs.size();
    s.sigma = gs.sigma();
    if (!s.base_degrees.empty()) {
        const auto [lo, hi] = std::minmax_element(s.base_degrees.begin(), s.base_degrees.end());
        s.min_degree = *lo;
        s.max_degree = *hi;
        s.average_degree = 2.0 * s.edges / gs.order();
    }
    return s;
}

bool is_connected(const SimpleGraph& g) {
    const int n = g.order();
    if (n == 0)
        throw DomainError("connectivity is undefined for the empty graph");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<int> todo;
    todo.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!todo.empty()) {
        const int v = todo.front();
        todo.pop();
        for (int w = 0; w < n; ++w)
            if (!seen[static_cast<std::size_t>(w)] && g.adjacent(v, w)) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                todo.push(w);
            }
    }
    return reached == n;
}

bool is_independent_set(const SimpleGraph& g, const LoopSet& s) {
    const auto& m = s.members();
    for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = a + 1; b < m.size(); ++b)
            if (g.adjacent(m[a], m[b]))
                return false;
    return true;
}

bool is_clique(const SimpleGraph& g, const LoopSet& s) {
    const auto& m = s.members();
    for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = a + 1; b < m.size(); ++b)
            if (!g.adjacent(m[a], m[b]))
                return false;
    return true;
}

bool is_bipartite(const SimpleGraph& g) {
    const int n = g.order();
    std::vector<int> colour(static_cast<std::size_t>(n), -1);
    for (int start = 0; start < n; ++start) {
        if (colour[static_cast<std::size_t>(start)] >= 0)
            continue;
        colour[static_cast<std::size_t>(start)] = 0;
        std::queue<int> todo;
        todo.push(start);
        while (!todo.empty()) {
            const int v = todo.front();
            todo.pop();
            for (int w : g.neighbours(v)) {
                auto& cw = colour[static_cast<std::size_t>(w)];
                if (cw < 0) {
                    cw = 1 - colour[static_cast<std::size_t>(v)];
                    todo.push(w);
                } else if (cw == colour[static_cast<std::size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_regular(const SimpleGraph& g) {
    const auto d = g.degrees();
    return std::adjacent_find(d.begin(), d.end(), std::not_equal_to<>{}) == d.end();
}

DegreeClass classify_bidegreed(const LoopedGraph& gs) {
    DegreeClass out;
    const int n = gs.order();
    if (n == 0)
        return out;
    const auto d = gs.base().degrees();
    const auto [lo_it, hi_it] = std::minmax_element(d.begin(), d.end());
    const int lo = *lo_it;
    const int hi = *hi_it;
    const int sigma = gs.sigma();
    out.regular = lo == hi;
    out.bipartite = is_bipartite(gs.base());

    // S-aligned: a single k with d = k on S and d = k + 1 off S.
    std::optional<int> aligned_k;
    if (sigma == n) {
        aligned_k = out.regular ? std::optional<int>(lo) : std::nullopt;
    } else if (sigma == 0) {
        if (out.regular && lo >= 1)
            aligned_k = lo - 1;
    } else {
        const int ks = d[static_cast<std::size_t>(gs.loops().members().front())];
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            ok = d[static_cast<std::size_t>(v)] == (gs.has_loop(v) ? ks : ks + 1);
        if (ok)
            aligned_k = ks;
    }
    out.s_aligned = aligned_k.has_value();

    if (out.regular) {
        out.bidegreed = sigma == 0 || sigma == n;
        out.k = aligned_k;
    } else if (hi == lo + 1) {
        out.bidegreed = true;
        out.k = lo;
    }
    out.semiregular_aligned = out.bipartite && out.bidegreed && out.s_aligned;
    return out;
}

std::optional<std::vector<int>> detect_complete_multipartite(const SimpleGraph& g) {
    const int n = g.order();
    if (n == 0)
        return std::nullopt;
    // Non-adjacency must be an equivalence relation; its classes are the parts.
    std::vector<int> part(static_cast<std::size_t>(n), -1);
    std::vector<int> sizes;
    for (int v = 0; v < n; ++v) {
        if (part[static_cast<std::size_t>(v)] >= 0)
            continue;
        const int id = static_cast<int>(sizes.size());
        sizes.push_back(0);
        for (int w = v; w < n; ++w)
            if (w == v || !g.adjacent(v, w)) {
                if (part[static_cast<std::size_t>(w)] >= 0)
                    return std::nullopt;
                part[static_cast<std::size_t>(w)] = id;
                ++sizes.back();
            }
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (g.adjacent(a, b) == (part[static_cast<std::size_t>(a)] == part[static_cast<std::size_t>(b)]))
                return std::nullopt;
    return sizes;
}

std::optional<std::pair<int, int>> detect_regular_complete_multipartite(const SimpleGraph& g) {
    const auto parts = detect_complete_multipartite(g);
    if (!parts)
        return std::nullopt;
    const int p = parts->front();
    if (std::any_of(parts->begin(), parts->end(), [p](int s) { return s != p; }))
        return std::nullopt;
    return std::pair{static_cast<int>(parts->size()), p};
}

SimpleGraph delete_vertices(const SimpleGraph& g, const LoopSet& s) {
    std::vector<int> keep;
    for (int v = 0; v < g.order(); ++v)
        if (!s.contains(v))
            keep.push_back(v);
    return g.induced(keep);
}

} // namespace selfloop
