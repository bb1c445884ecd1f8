#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ricci/graph.hpp"

namespace ricci {

// graph6 encoding, restricted to n < 63 (single size byte): byte n+63, then
// the upper-triangle bits x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian
// into 6-bit groups, each group + 63. Trailing padding bits must be zero.

inline Graph parse_graph6(std::string_view text)
{
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty()) fail(errc::malformed_graph6, "empty graph6 line");
    for (char c : text)
        if (c < 63 || c > 126)
            fail(errc::malformed_graph6, "graph6 byte outside 63..126");
    if (text[0] == 126) fail(errc::unsupported_size, "graph6 with n >= 63 is not supported");

    int n = text[0] - 63;
    std::size_t nbits = static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2;
    std::size_t expected = 1 + (nbits + 5) / 6;
    if (text.size() != expected)
        fail(errc::malformed_graph6, "graph6 line has wrong length for its size byte");

    std::vector<std::pair<int, int>> edges;
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit) {
            int group = text[1 + bit / 6] - 63;
            if ((group >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
        }
    for (std::size_t pad = nbits; pad < 6 * (expected - 1); ++pad) {
        int group = text[1 + pad / 6] - 63;
        if ((group >> (5 - pad % 6)) & 1)
            fail(errc::malformed_graph6, "nonzero padding bits");
    }
    return Graph::from_edges(n, edges);
}

inline std::string emit_graph6(const Graph& g)
{
    int n = g.order();
    if (n >= 63) fail(errc::unsupported_size, "graph6 with n >= 63 is not supported");
    std::size_t nbits = static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2;
    std::string out;
    out.reserve(1 + (nbits + 5) / 6);
    out.push_back(static_cast<char>(n + 63));

    int group = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

/// Edge-list text format: first non-comment line "n m", then m lines "u v"
/// with 0-based endpoints. Lines starting with '#' are comments.
inline Graph parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    auto next_data_line = [&]() -> bool {
        while (std::getline(in, line)) {
            std::size_t pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos) continue;
            if (line[pos] == '#') continue;
            return true;
        }
        return false;
    };

    if (!next_data_line()) fail(errc::malformed_edge_list, "missing 'n m' header line");
    long long n = -1;
    long long m = -1;
    {
        std::istringstream header(line);
        if (!(header >> n >> m) || n < 0 || m < 0)
            fail(errc::malformed_edge_list, "header line must be 'n m'");
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line()) fail(errc::malformed_edge_list, "fewer edge lines than declared");
        std::istringstream row(line);
        long long u = -1;
        long long v = -1;
        if (!(row >> u >> v)) fail(errc::malformed_edge_list, "edge line must be 'u v'");
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(errc::malformed_edge_list, "edge endpoint out of range");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

inline std::string emit_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

} // namespace ricci
