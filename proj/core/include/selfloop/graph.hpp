#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace selfloop {

/// Unordered vertex pair, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    auto operator<=>(const Edge&) const = default;
};

/// Finite simple graph on vertices 0..n-1.
///
/// Edges are kept in canonical (lexicographically sorted) order; that order
/// fixes column layouts of incidence matrices and vertex order of line graphs.
class SimpleGraph {
  public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);
    /// Throws DomainError on self pairs, out-of-range endpoints or duplicates.
    SimpleGraph(int n, std::vector<Edge> edges);
    /// Builds from a symmetric 0/1 adjacency row-major array (diagonal ignored).
    static SimpleGraph from_adjacency(int n, std::span<const char> adjacency);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool adjacent(int a, int b) const;
    int degree(int v) const;
    std::vector<int> degrees() const;
    std::vector<int> neighbours(int v) const;

    SimpleGraph complement() const;
    /// Subgraph induced on `vertices`, relabelled 0..k-1 in the given order.
    SimpleGraph induced(std::span<const int> vertices) const;

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

  private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<char> adj_;
};

/// Set of looped vertices: sorted, duplicate-free.
class LoopSet {
  public:
    LoopSet() = default;
    /// Sorts the members; throws DomainError on negatives or duplicates.
    explicit LoopSet(std::vector<int> members);
    static LoopSet all(int n);
    static LoopSet first(int count);

    const std::vector<int>& members() const { return members_; }
    int sigma() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    bool contains(int v) const;

    friend bool operator==(const LoopSet&, const LoopSet&) = default;

  private:
    std::vector<int> members_;
};

/// The self-loop graph G_S: a simple graph with one loop on each vertex of S.
class LoopedGraph {
  public:
    LoopedGraph() = default;

    const SimpleGraph& base() const { return base_; }
    const LoopSet& loops() const { return loops_; }
    int order() const { return base_.order(); }
    /// Ordinary edges only; loops are not counted.
    int size() const { return base_.size(); }
    int sigma() const { return loops_.sigma(); }
    bool has_loop(int v) const { return in_s_[static_cast<std::size_t>(v)] != 0; }
    /// Degree in G_S: a loop adds 2.
    int degree(int v) const { return base_.degree(v) + (has_loop(v) ? 2 : 0); }

    friend bool operator==(const LoopedGraph& a, const LoopedGraph& b) {
        return a.base_ == b.base_ && a.loops_ == b.loops_;
    }

  private:
    friend LoopedGraph make_looped(SimpleGraph base, LoopSet loops);

    SimpleGraph base_;
    LoopSet loops_;
    std::vector<char> in_s_;
};

/// Attaches loops at `loops`; throws DomainError if a loop index is >= n.
LoopedGraph make_looped(SimpleGraph base, LoopSet loops);
inline LoopedGraph make_looped(SimpleGraph base) { return make_looped(std::move(base), LoopSet{}); }

struct DegreeSummary {
    std::vector<int> base_degrees;
    std::vector<int> looped_degrees;
    int max_degree = 0; // Δ(G)
    int min_degree = 0; // δ(G)
    int edges = 0;
    int sigma = 0;
    double average_degree = 0.0;
};

DegreeSummary summarize(const LoopedGraph& gs);

bool is_connected(const SimpleGraph& g);
bool is_independent_set(const SimpleGraph& g, const LoopSet& s);
bool is_clique(const SimpleGraph& g, const LoopSet& s);
/// Two-colourability; the empty graph counts as bipartite.
bool is_bipartite(const SimpleGraph& g);
bool is_regular(const SimpleGraph& g);

/// Degree structure relevant to the radius lower bounds.
struct DegreeClass {
    bool regular = false;
    /// Every degree is k or k+1 (regular graphs only when σ ∈ {0, n}).
    bool bidegreed = false;
    /// d_G(v) = k on S and k+1 off S.
    bool s_aligned = false;
    bool bipartite = false;
    /// Bipartite, bidegreed and S-aligned.
    bool semiregular_aligned = false;
    std::optional<int> k;
};

DegreeClass classify_bidegreed(const LoopedGraph& gs);

/// (k, p) when g is K_{k×p}, i.e. its complement is k disjoint copies of K_p.
std::optional<std::pair<int, int>> detect_regular_complete_multipartite(const SimpleGraph& g);
/// Part sizes when the complement of g is a disjoint union of cliques.
std::optional<std::vector<int>> detect_complete_multipartite(const SimpleGraph& g);

/// Graph with the vertices of `s` removed, remaining vertices relabelled in order.
SimpleGraph delete_vertices(const SimpleGraph& g, const LoopSet& s);

} // namespace selfloop
