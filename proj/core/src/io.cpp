#include "selfloop/io.hpp"

#include "selfloop/errors.hpp"

#include <charconv>
#include <sstream>

namespace selfloop::io {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::size_t triangle_bits(int n) { return static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2; }

} // namespace

SimpleGraph parse_graph6(std::string_view text) {
    if (text.empty())
        throw ParseError("graph6: empty string");
    for (char c : text) {
        const auto u = static_cast<unsigned char>(c);
        if (u < 63 || u > 126)
            throw ParseError("graph6: byte " + std::to_string(u) + " outside 63..126");
    }
    const int n = static_cast<unsigned char>(text[0]) - 63;
    if (n > kMaxGraph6Order)
        throw ParseError("graph6: multi-byte order headers (n > 62) are not supported");

    const std::size_t bits = triangle_bits(n);
    const std::size_t groups = (bits + 5) / 6;
    if (text.size() - 1 != groups)
        throw ParseError("graph6: expected " + std::to_string(groups) + " data bytes for n=" + std::to_string(n) +
                         ", got " + std::to_string(text.size() - 1));

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            const int group = static_cast<unsigned char>(text[1 + k / 6]) - 63;
            if (group & (1 << (5 - k % 6)))
                edges.push_back({i, j});
        }
    for (; k < groups * 6; ++k) {
        const int group = static_cast<unsigned char>(text[1 + k / 6]) - 63;
        if (group & (1 << (5 - k % 6)))
            throw ParseError("graph6: non-zero padding bits");
    }
    return SimpleGraph(n, std::move(edges));
}

std::string print_graph6(const SimpleGraph& g) {
    const int n = g.order();
    if (n > kMaxGraph6Order)
        throw DomainError("graph6: order " + std::to_string(n) + " exceeds " + std::to_string(kMaxGraph6Order));
    const std::size_t bits = triangle_bits(n);
    std::string out(1 + (bits + 5) / 6, static_cast<char>(63));
    out[0] = static_cast<char>(n + 63);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (g.adjacent(i, j))
                out[1 + k / 6] = static_cast<char>(out[1 + k / 6] + (1 << (5 - k % 6)));
    return out;
}

LoopedGraph parse_loopline(std::string_view line) {
    // '|' (byte 124) is a legal graph6 character, so the separator is the last
    // one on the line; the loop specification never contains it.
    const auto bar = line.rfind('|');
    if (bar == std::string_view::npos)
        throw ParseError("loop line: missing '|' separator");
    auto graph = parse_graph6(trim(line.substr(0, bar)));
    const auto spec = trim(line.substr(bar + 1));
    const int n = graph.order();

    if (spec == "-")
        return make_looped(std::move(graph));
    if (spec == "*")
        return make_looped(std::move(graph), LoopSet::all(n));
    if (spec.empty())
        throw ParseError("loop line: empty loop specification (use '-' for no loops)");

    std::vector<int> members;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        const auto comma = std::min(spec.find(',', pos), spec.size());
        const auto token = trim(spec.substr(pos, comma - pos));
        int value = 0;
        const auto* begin = token.data();
        const auto* end = token.data() + token.size();
        const auto [ptr, ec] = std::from_chars(begin, end, value);
        if (token.empty() || ec != std::errc{} || ptr != end || value < 0)
            throw ParseError("loop line: bad loop index '" + std::string(token) + "'");
        if (value >= n)
            throw ParseError("loop line: loop index " + std::to_string(value) + " out of range for order " +
                             std::to_string(n));
        members.push_back(value);
        pos = comma + 1;
    }
    try {
        return make_looped(std::move(graph), LoopSet(std::move(members)));
    } catch (const DomainError& e) {
        throw ParseError(std::string("loop line: ") + e.what());
    }
}

std::string print_loopline(const LoopedGraph& gs) {
    std::string out = print_graph6(gs.base());
    out += " | ";
    if (gs.loops().empty()) {
        out += '-';
        return out;
    }
    bool first = true;
    for (int v : gs.loops().members()) {
        if (!first)
            out += ',';
        first = false;
        out += std::to_string(v);
    }
    return out;
}

std::string instance_digest(const LoopedGraph& gs) {
    if (gs.order() <= kMaxGraph6Order)
        return print_loopline(gs);
    std::ostringstream out;
    out << "n=" << gs.order() << " edges=";
    for (const auto& e : gs.base().edges())
        out << e.u << '-' << e.v << ';';
    out << " loops=";
    for (int v : gs.loops().members())
        out << v << ';';
    return out.str();
}

} // namespace selfloop::io
