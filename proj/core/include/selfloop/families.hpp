#pragma once

#include "selfloop/graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace selfloop {

/// Parameters for the named constructions. Which fields matter depends on the family:
///
///   kn_sigma               n, sigma        complete graph, loops on vertices 0..sigma-1
///   kn_hat                 n               complete graph, every vertex looped
///   complete_multipartite  parts, sigma    K_{n1,...,nk}; loops on the first sigma vertices
///   kkxp                   k, p, sigma     K_{k×p}
///   edgeless_full_loop     n               n isolated looped vertices
///   k32_s                  (none)          K_{3,2} looped on its 3-vertex side
///
/// `loops`, when set, replaces the sigma-prefix loop set (multipartite families only).
struct FamilyParams {
    int n = 0;
    int sigma = 0;
    int k = 0;
    int p = 0;
    std::vector<int> parts;
    std::optional<std::vector<int>> loops;
};

/// Family ids are matched case-insensitively. Throws DomainError on an unknown
/// id or inconsistent parameters.
LoopedGraph family(std::string_view name, const FamilyParams& params = {});

std::vector<std::string> family_names();

SimpleGraph complete_graph(int n);
SimpleGraph complete_multipartite_graph(const std::vector<int>& parts);
SimpleGraph path_graph(int n);
SimpleGraph cycle_graph(int n);

} // namespace selfloop
