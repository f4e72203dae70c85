#include "selfloop/families.hpp"

#include "selfloop/errors.hpp"

#include <algorithm>
#include <cctype>

namespace selfloop {

namespace {

std::string lowercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

void require(bool ok, const std::string& what) {
    if (!ok)
        throw DomainError(what);
}

LoopSet prefix_or_explicit(const FamilyParams& params, int n) {
    if (params.loops)
        return LoopSet(*params.loops);
    require(params.sigma >= 0 && params.sigma <= n, "sigma must lie in [0, n]");
    return LoopSet::first(params.sigma);
}

} // namespace

SimpleGraph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            edges.push_back({a, b});
    return SimpleGraph(n, std::move(edges));
}

SimpleGraph complete_multipartite_graph(const std::vector<int>& parts) {
    std::vector<int> part_of;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        require(parts[i] >= 1, "multipartite part sizes must be >= 1");
        part_of.insert(part_of.end(), static_cast<std::size_t>(parts[i]), static_cast<int>(i));
    }
    const int n = static_cast<int>(part_of.size());
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (part_of[static_cast<std::size_t>(a)] != part_of[static_cast<std::size_t>(b)])
                edges.push_back({a, b});
    return SimpleGraph(n, std::move(edges));
}

SimpleGraph path_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v)
        edges.push_back({v, v + 1});
    return SimpleGraph(n, std::move(edges));
}

SimpleGraph cycle_graph(int n) {
    require(n >= 3, "cycle needs at least 3 vertices");
    auto edges = path_graph(n).edges();
    edges.push_back({0, n - 1});
    return SimpleGraph(n, std::move(edges));
}

std::vector<std::string> family_names() {
    return {"kn_sigma", "kn_hat", "complete_multipartite", "kkxp", "edgeless_full_loop", "k32_s"};
}

LoopedGraph family(std::string_view name, const FamilyParams& params) {
    const auto id = lowercase(name);
    if (id == "kn_sigma") {
        require(params.n >= 1, "kn_sigma needs n >= 1");
        require(params.sigma >= 0 && params.sigma <= params.n, "kn_sigma needs 0 <= sigma <= n");
        return make_looped(complete_graph(params.n), LoopSet::first(params.sigma));
    }
    if (id == "kn_hat") {
        require(params.n >= 1, "kn_hat needs n >= 1");
        return make_looped(complete_graph(params.n), LoopSet::all(params.n));
    }
    if (id == "complete_multipartite") {
        require(!params.parts.empty(), "complete_multipartite needs at least one part");
        auto g = complete_multipartite_graph(params.parts);
        const int n = g.order();
        return make_looped(std::move(g), prefix_or_explicit(params, n));
    }
    if (id == "kkxp") {
        require(params.k >= 1 && params.p >= 1, "kkxp needs k >= 1 and p >= 1");
        auto g = complete_multipartite_graph(std::vector<int>(static_cast<std::size_t>(params.k), params.p));
        const int n = g.order();
        return make_looped(std::move(g), prefix_or_explicit(params, n));
    }
    if (id == "edgeless_full_loop") {
        require(params.n >= 1, "edgeless_full_loop needs n >= 1");
        return make_looped(SimpleGraph(params.n), LoopSet::all(params.n));
    }
    if (id == "k32_s") {
        // Vertices 0..2 form the degree-2 side and carry the loops.
        return make_looped(complete_multipartite_graph({3, 2}), LoopSet({0, 1, 2}));
    }
    throw DomainError("unknown family '" + std::string(name) + "'");
}

} // namespace selfloop
