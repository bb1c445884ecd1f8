#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "ricci/error.hpp"

namespace ricci {

/// Immutable simple undirected graph on dense 0-based vertex indices.
/// Adjacency lists are kept sorted; all queries are pure and thread-safe.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges)
    {
        if (n < 0) fail(errc::invalid_params, "negative vertex count");
        Graph g;
        g.n_ = n;
        g.adj_.assign(static_cast<std::size_t>(n), {});
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                fail(errc::index_out_of_range, "edge endpoint out of range");
            if (u == v) fail(errc::invalid_params, "self-loop is not a simple graph");
            g.adj_[static_cast<std::size_t>(u)].push_back(v);
            g.adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& nbrs : g.adj_) {
            std::sort(nbrs.begin(), nbrs.end());
            if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
                fail(errc::invalid_params, "duplicate edge is not a simple graph");
        }
        return g;
    }

    int order() const { return n_; }

    int degree(int v) const
    {
        check_vertex(v);
        return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
    }

    const std::vector<int>& neighbors(int v) const
    {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    bool has_edge(int u, int v) const
    {
        check_vertex(u);
        check_vertex(v);
        const auto& nbrs = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    std::size_t edge_count() const
    {
        std::size_t deg_sum = 0;
        for (const auto& nbrs : adj_) deg_sum += nbrs.size();
        return deg_sum / 2;
    }

    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const
    {
        std::vector<std::pair<int, int>> result;
        result.reserve(edge_count());
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[static_cast<std::size_t>(u)])
                if (u < v) result.emplace_back(u, v);
        return result;
    }

    /// Degree if every vertex has the same one; nullopt otherwise (or if empty).
    std::optional<int> regular_degree() const
    {
        if (n_ == 0) return std::nullopt;
        int d = degree(0);
        for (int v = 1; v < n_; ++v)
            if (degree(v) != d) return std::nullopt;
        return d;
    }

    bool is_connected() const
    {
        if (n_ <= 1) return true;
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj_[static_cast<std::size_t>(u)])
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    ++count;
                    stack.push_back(v);
                }
        }
        return count == n_;
    }

    void check_vertex(int v) const
    {
        if (v < 0 || v >= n_) fail(errc::index_out_of_range, "vertex index out of range");
    }

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
};

namespace detail {

/// BFS from s, stopping at depth cap (cap < 0 means unbounded).
/// Writes distances into dist (-1 for unreached); dist must have size n.
inline void bfs_fill(const Graph& g, int s, int cap, std::vector<int>& dist)
{
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    std::queue<int> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
        int u = frontier.front();
        frontier.pop();
        int du = dist[static_cast<std::size_t>(u)];
        if (cap >= 0 && du == cap) continue;
        for (int v : g.neighbors(u))
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = du + 1;
                frontier.push(v);
            }
    }
}

} // namespace detail

/// Shortest-path distance; nullopt when t is unreachable from s.
inline std::optional<int> distance(const Graph& g, int s, int t)
{
    g.check_vertex(s);
    g.check_vertex(t);
    if (s == t) return 0;
    std::vector<int> dist(static_cast<std::size_t>(g.order()));
    detail::bfs_fill(g, s, -1, dist);
    int d = dist[static_cast<std::size_t>(t)];
    if (d < 0) return std::nullopt;
    return d;
}

/// All vertices within distance cap of s, with their distances.
inline std::map<int, int> bounded_distances(const Graph& g, int s, int cap)
{
    g.check_vertex(s);
    if (cap < 0) fail(errc::invalid_params, "negative distance cap");
    std::vector<int> dist(static_cast<std::size_t>(g.order()));
    detail::bfs_fill(g, s, cap, dist);
    std::map<int, int> result;
    for (int v = 0; v < g.order(); ++v)
        if (dist[static_cast<std::size_t>(v)] >= 0) result[v] = dist[static_cast<std::size_t>(v)];
    return result;
}

/// Length of a shortest cycle; nullopt for forests.
inline std::optional<int> girth(const Graph& g)
{
    // BFS from every vertex; a non-tree edge seen from root s closes a cycle of
    // length dist[u] + dist[v] + 1. The minimum over all roots is exact.
    int best = -1;
    int n = g.order();
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> frontier;
        dist[static_cast<std::size_t>(s)] = 0;
        frontier.push(s);
        while (!frontier.empty()) {
            int u = frontier.front();
            frontier.pop();
            for (int v : g.neighbors(u)) {
                if (dist[static_cast<std::size_t>(v)] < 0) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(v)] = u;
                    frontier.push(v);
                } else if (v != parent[static_cast<std::size_t>(u)]) {
                    int len = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(v)] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

/// Longest shortest path; nullopt when the graph is disconnected.
inline std::optional<int> diameter(const Graph& g)
{
    int n = g.order();
    if (n == 0) fail(errc::invalid_params, "diameter of the empty graph");
    int best = 0;
    std::vector<int> dist(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        detail::bfs_fill(g, s, -1, dist);
        for (int v = 0; v < n; ++v) {
            if (dist[static_cast<std::size_t>(v)] < 0) return std::nullopt;
            best = std::max(best, dist[static_cast<std::size_t>(v)]);
        }
    }
    return best;
}

/// Decomposition of the two neighborhoods of an edge x ~ y:
/// triangle = common neighbors, rx / ry = remaining exclusive neighbors,
/// cost[i][j] = d(rx[i], ry[j]) in the full graph (always in {1,2,3}).
struct EdgeContext {
    int x = 0;
    int y = 0;
    int deg_x = 0;
    int deg_y = 0;
    std::vector<int> triangle;
    std::vector<int> rx;
    std::vector<int> ry;
    std::vector<std::vector<int>> cost;
};

/// Builds EdgeContext values for many edges of one graph, caching the
/// depth-3 BFS frontier of each source vertex across calls.
class EdgeContextBuilder {
public:
    explicit EdgeContextBuilder(const Graph& g) : g_(&g), bfs3_(static_cast<std::size_t>(g.order())) {}

    EdgeContext build(int x, int y)
    {
        const Graph& g = *g_;
        if (!g.has_edge(x, y)) fail(errc::not_an_edge, "edge_context requires adjacent vertices");
        EdgeContext ctx;
        ctx.x = x;
        ctx.y = y;
        ctx.deg_x = g.degree(x);
        ctx.deg_y = g.degree(y);
        const auto& nx = g.neighbors(x);
        const auto& ny = g.neighbors(y);
        std::set_intersection(nx.begin(), nx.end(), ny.begin(), ny.end(),
                              std::back_inserter(ctx.triangle));
        for (int v : nx)
            if (v != y && !std::binary_search(ctx.triangle.begin(), ctx.triangle.end(), v))
                ctx.rx.push_back(v);
        for (int v : ny)
            if (v != x && !std::binary_search(ctx.triangle.begin(), ctx.triangle.end(), v))
                ctx.ry.push_back(v);

        ctx.cost.assign(ctx.rx.size(), std::vector<int>(ctx.ry.size(), 0));
        for (std::size_t i = 0; i < ctx.rx.size(); ++i) {
            const std::vector<int>& dist = bfs3(ctx.rx[static_cast<std::size_t>(i)]);
            for (std::size_t j = 0; j < ctx.ry.size(); ++j) {
                int d = dist[static_cast<std::size_t>(ctx.ry[j])];
                // The path rx[i] - x - y - ry[j] bounds the distance by 3, so a
                // depth-3 BFS always reaches every ry vertex.
                ctx.cost[i][j] = d;
            }
        }
        return ctx;
    }

private:
    const std::vector<int>& bfs3(int v)
    {
        auto& slot = bfs3_[static_cast<std::size_t>(v)];
        if (slot.empty()) {
            slot.resize(static_cast<std::size_t>(g_->order()));
            detail::bfs_fill(*g_, v, 3, slot);
        }
        return slot;
    }

    const Graph* g_;
    std::vector<std::vector<int>> bfs3_;
};

inline EdgeContext edge_context(const Graph& g, int x, int y)
{
    EdgeContextBuilder builder(g);
    return builder.build(x, y);
}

} // namespace ricci
