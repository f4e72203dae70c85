#pragma once

#include "selfloop/graph.hpp"
#include "selfloop/matrix.hpp"

#include <vector>

namespace selfloop {

/// A(G_S) = A(G) + diag(1 on S).
SymMatrix adjacency(const LoopedGraph& gs);
SymMatrix adjacency(const SimpleGraph& g);

enum class ComplementConvention {
    /// complement of G with the same loop set S (involutive, recovers the loopless case)
    SameLoops,
    /// complement of G with loops on V \ S
    SwappedLoops,
};

LoopedGraph complement(const LoopedGraph& gs, ComplementConvention convention = ComplementConvention::SameLoops);

/// Line graph of G_S. Vertex i < edge_count stands for the i-th ordinary edge
/// (canonical order); vertex edge_count + j for the j-th loop (ascending base
/// vertex). Loop-vertices carry loops and are mutually non-adjacent.
struct LoopedLineGraph {
    LoopedGraph graph;
    int edge_count = 0;
    int loop_count = 0;
    /// Base vertex of each loop-vertex.
    std::vector<int> loop_base;
};

/// Throws DomainError when G_S has neither edges nor loops.
LoopedLineGraph line_graph(const LoopedGraph& gs);

/// B(G_S) = (B(G) | N).
IncidenceMatrix incidence(const LoopedGraph& gs);

/// Q(G_S): A(G) off the diagonal, d_G(v) + [v ∈ S] on it.
SymMatrix signless_laplacian(const LoopedGraph& gs);

/// J + 2·I_S - (1 + 2σ/n)·I with S the first σ vertices, stored with denominator n.
SymMatrix ng_energy_aux_matrix(int n, int sigma);

/// Quotient over the partition (part, rest). `in_first[v]` marks membership of
/// the first part. Throws DomainError if a part is empty or a block has
/// non-constant row sums.
QuotientMatrix2 quotient_2block(const SymMatrix& mat, const std::vector<bool>& in_first);
QuotientMatrix2 quotient_2block(const SymMatrix& mat, const LoopSet& first_part);

} // namespace selfloop
