#pragma once

#include "selfloop/graph.hpp"

#include <string>
#include <string_view>

namespace selfloop::io {

/// Largest order the single-byte graph6 header can carry.
inline constexpr int kMaxGraph6Order = 62;

/// Standard graph6: one header byte n+63, then the upper triangle read column by
/// column (x(0,1), x(0,2), x(1,2), ...) packed into 6-bit groups offset by 63.
/// Throws ParseError on bytes outside 63..126, wrong length, non-zero padding
/// or multi-byte headers.
SimpleGraph parse_graph6(std::string_view text);
/// Throws DomainError when the order exceeds kMaxGraph6Order.
std::string print_graph6(const SimpleGraph& g);

/// `<graph6> | <loops>` where loops is `-`, `*` or a comma-separated index list.
/// The separator is the last '|' on the line, since graph6 itself may contain
/// that byte. Surrounding whitespace is ignored. Throws ParseError on malformed input,
/// duplicate or out-of-range indices.
LoopedGraph parse_loopline(std::string_view line);
/// Canonical form: `<graph6> | <loops>` with ascending indices, `-` when empty.
std::string print_loopline(const LoopedGraph& gs);

/// Loop line when the order fits graph6, otherwise an explicit edge listing.
std::string instance_digest(const LoopedGraph& gs);

} // namespace selfloop::io
