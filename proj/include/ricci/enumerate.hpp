#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "ricci/curvature.hpp"
#include "ricci/graph.hpp"
#include "ricci/graph6.hpp"

namespace ricci {

namespace detail {

// Per-vertex isomorphism-invariant signature: triangle count plus the
// histogram of distances to all other vertices.
inline std::vector<std::vector<int>> vertex_signatures(const Graph& g)
{
    int n = g.order();
    std::vector<std::vector<int>> sigs(static_cast<std::size_t>(n));
    std::vector<int> dist(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        int triangles = 0;
        for (int a : g.neighbors(v))
            for (int b : g.neighbors(v))
                if (a < b && g.has_edge(a, b)) ++triangles;
        std::vector<int> sig{triangles};
        bfs_fill(g, v, -1, dist);
        std::vector<int> hist(static_cast<std::size_t>(n) + 1, 0);
        for (int u = 0; u < n; ++u)
            ++hist[static_cast<std::size_t>(dist[static_cast<std::size_t>(u)] < 0
                                                ? n
                                                : dist[static_cast<std::size_t>(u)])];
        sig.insert(sig.end(), hist.begin(), hist.end());
        sigs[static_cast<std::size_t>(v)] = std::move(sig);
    }
    return sigs;
}

/// Exact isomorphism test by backtracking, guided by signature classes.
inline bool isomorphic(const Graph& a, const Graph& b)
{
    int n = a.order();
    if (n != b.order() || a.edge_count() != b.edge_count()) return false;

    auto sig_a = vertex_signatures(a);
    auto sig_b = vertex_signatures(b);
    std::map<std::vector<int>, int> classes;
    auto class_of = [&classes](const std::vector<int>& sig) {
        return classes.emplace(sig, static_cast<int>(classes.size())).first->second;
    };
    std::vector<int> color_a(static_cast<std::size_t>(n));
    std::vector<int> color_b(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) color_a[static_cast<std::size_t>(v)] = class_of(sig_a[static_cast<std::size_t>(v)]);
    for (int v = 0; v < n; ++v) color_b[static_cast<std::size_t>(v)] = class_of(sig_b[static_cast<std::size_t>(v)]);
    {
        auto ca = color_a;
        auto cb = color_b;
        std::sort(ca.begin(), ca.end());
        std::sort(cb.begin(), cb.end());
        if (ca != cb) return false;
    }

    // Map a's vertices rarest color first; adjacency with the already-mapped
    // prefix must match exactly.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> freq(classes.size(), 0);
    for (int c : color_a) ++freq[static_cast<std::size_t>(c)];
    std::sort(order.begin(), order.end(), [&](int u, int v) {
        return std::pair(freq[static_cast<std::size_t>(color_a[static_cast<std::size_t>(u)])], u) <
               std::pair(freq[static_cast<std::size_t>(color_a[static_cast<std::size_t>(v)])], v);
    });

    std::vector<int> image(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    auto dfs = [&](auto&& self, int k) -> bool {
        if (k == n) return true;
        int u = order[static_cast<std::size_t>(k)];
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            if (color_b[static_cast<std::size_t>(v)] != color_a[static_cast<std::size_t>(u)]) continue;
            bool ok = true;
            for (int t = 0; t < k && ok; ++t) {
                int w = order[static_cast<std::size_t>(t)];
                ok = a.has_edge(u, w) == b.has_edge(v, image[static_cast<std::size_t>(w)]);
            }
            if (!ok) continue;
            image[static_cast<std::size_t>(u)] = v;
            used[static_cast<std::size_t>(v)] = 1;
            if (self(self, k + 1)) return true;
            image[static_cast<std::size_t>(u)] = -1;
            used[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    };
    return dfs(dfs, 0);
}

// Branch-and-bound canonical labeling: maximizes the upper-triangle adjacency
// bitstring in graph6 bit order. Positions are assigned one vertex at a time;
// each assignment appends one bit column. The incumbent `best_` is extended
// or overwritten whenever the current path exceeds its defined prefix, so on
// return it holds the maximum over all n! labelings. The maximal orientation
// anchors the search on edges, which prunes well on sparse regular graphs.
class Canonicalizer {
public:
    explicit Canonicalizer(const Graph& g) : g_(&g), n_(g.order()) {}

    Graph run()
    {
        if (n_ <= 1) return *g_;
        best_.assign(static_cast<std::size_t>(n_) * (static_cast<std::size_t>(n_) - 1) / 2, 0);
        best_len_ = 0;
        mapping_.assign(static_cast<std::size_t>(n_), -1);
        used_.assign(static_cast<std::size_t>(n_), 0);
        dfs(0);

        std::vector<std::pair<int, int>> edges;
        std::size_t bit = 0;
        for (int v = 1; v < n_; ++v)
            for (int u = 0; u < v; ++u, ++bit)
                if (best_[bit]) edges.emplace_back(u, v);
        return Graph::from_edges(n_, edges);
    }

private:
    void dfs(int k)
    {
        if (k == n_) return;
        std::size_t seg_begin = static_cast<std::size_t>(k) * (static_cast<std::size_t>(k) - 1) / 2;

        struct Candidate {
            int vertex;
            std::vector<char> col;
        };
        std::vector<Candidate> cands;
        for (int v = 0; v < n_; ++v) {
            if (used_[static_cast<std::size_t>(v)]) continue;
            Candidate c;
            c.vertex = v;
            c.col.resize(static_cast<std::size_t>(k));
            for (int t = 0; t < k; ++t)
                c.col[static_cast<std::size_t>(t)] =
                    g_->has_edge(v, mapping_[static_cast<std::size_t>(t)]) ? 1 : 0;
            cands.push_back(std::move(c));
        }
        std::stable_sort(cands.begin(), cands.end(),
                         [](const Candidate& a, const Candidate& b) { return a.col > b.col; });

        for (const Candidate& c : cands) {
            int cmp = 0; // vs incumbent; bits past best_len_ count as greater
            for (std::size_t t = 0; t < c.col.size() && cmp == 0; ++t) {
                std::size_t pos = seg_begin + t;
                if (pos >= best_len_)
                    cmp = 1;
                else if (c.col[t] != best_[pos])
                    cmp = c.col[t] > best_[pos] ? 1 : -1;
            }
            if (cmp < 0) continue;
            if (cmp > 0) {
                std::copy(c.col.begin(), c.col.end(),
                          best_.begin() + static_cast<std::ptrdiff_t>(seg_begin));
                best_len_ = seg_begin + c.col.size();
            }
            mapping_[static_cast<std::size_t>(k)] = c.vertex;
            used_[static_cast<std::size_t>(c.vertex)] = 1;
            dfs(k + 1);
            used_[static_cast<std::size_t>(c.vertex)] = 0;
            mapping_[static_cast<std::size_t>(k)] = -1;
        }
    }

    const Graph* g_;
    int n_;
    std::vector<char> best_;
    std::size_t best_len_ = 0;
    std::vector<int> mapping_;
    std::vector<char> used_;
};

} // namespace detail

/// Relabeling of g whose upper-triangle adjacency bitstring (graph6 bit
/// order) is lexicographically maximal; a complete isomorphism invariant.
inline Graph canonical_form(const Graph& g)
{
    return detail::Canonicalizer(g).run();
}

/// Desk-scale census envelope: d = 3 up to n = 10, d = 4 up to n = 9.
struct CensusRequest {
    int n = 0;
    int d = 0;

    void validate() const
    {
        bool supported = (d == 3 && n >= 4 && n <= 10) || (d == 4 && n >= 5 && n <= 9);
        if (!supported)
            fail(errc::out_of_supported_range,
                 "supported cells: d=3 with 4 <= n <= 10, d=4 with 5 <= n <= 9");
        if (n * d % 2 != 0)
            fail(errc::out_of_supported_range, "no regular graph exists with n*d odd");
    }
};

namespace detail {

class RegularEnumerator {
public:
    RegularEnumerator(int n, int d) : n_(n), d_(d) {}

    std::vector<Graph> run()
    {
        deg_.assign(static_cast<std::size_t>(n_), 0);
        edges_.clear();
        // Every class has a labeling in which vertex 0 is adjacent to exactly
        // 1..d, so restricting the search to those labelings loses nothing.
        for (int j = 1; j <= d_; ++j) add_edge(0, j);
        extend(1, 2);

        std::vector<Graph> out;
        for (auto& [key, reps] : buckets_)
            for (Graph& g : reps) out.push_back(canonical_form(g));
        std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
            return emit_graph6(a) < emit_graph6(b);
        });
        return out;
    }

private:
    void add_edge(int u, int v)
    {
        ++deg_[static_cast<std::size_t>(u)];
        ++deg_[static_cast<std::size_t>(v)];
        edges_.emplace_back(u, v);
    }

    void remove_edge(int u, int v)
    {
        --deg_[static_cast<std::size_t>(u)];
        --deg_[static_cast<std::size_t>(v)];
        edges_.pop_back();
    }

    // Completes vertex i, choosing its remaining neighbors among j >= from.
    void extend(int i, int from)
    {
        if (deg_[static_cast<std::size_t>(i)] == d_) {
            advance(i + 1);
            return;
        }
        int need = d_ - deg_[static_cast<std::size_t>(i)];
        for (int j = from; j < n_; ++j) {
            if (n_ - j < need) break;
            if (deg_[static_cast<std::size_t>(j)] == d_) continue;
            add_edge(i, j);
            extend(i, j + 1);
            remove_edge(i, j);
        }
    }

    void advance(int i)
    {
        if (i == n_) {
            emit();
            return;
        }
        // Residual degrees must still be pairable among the open vertices.
        int open = 0;
        int residual = 0;
        for (int k = i; k < n_; ++k)
            if (deg_[static_cast<std::size_t>(k)] < d_) {
                ++open;
                residual += d_ - deg_[static_cast<std::size_t>(k)];
            }
        if (residual % 2 != 0) return;
        for (int k = i; k < n_; ++k) {
            int rem = d_ - deg_[static_cast<std::size_t>(k)];
            if (rem > 0 && rem > open - 1) return;
        }
        extend(i, i + 1);
    }

    void emit()
    {
        Graph g = Graph::from_edges(n_, edges_);
        if (!g.is_connected()) return;

        auto sigs = vertex_signatures(g);
        std::vector<int> key;
        {
            std::sort(sigs.begin(), sigs.end());
            for (const auto& sig : sigs) key.insert(key.end(), sig.begin(), sig.end());
        }
        auto& reps = buckets_[key];
        for (const Graph& rep : reps)
            if (isomorphic(rep, g)) return;
        reps.push_back(std::move(g));
    }

    int n_;
    int d_;
    std::vector<int> deg_;
    std::vector<std::pair<int, int>> edges_;
    std::map<std::vector<int>, std::vector<Graph>> buckets_;
};

} // namespace detail

/// Exactly one representative (in canonical form) per isomorphism class of
/// connected d-regular graphs on n vertices, sorted by canonical bitstring.
inline std::vector<Graph> enumerate_regular(const CensusRequest& req)
{
    req.validate();
    return detail::RegularEnumerator(req.n, req.d).run();
}

struct CensusTable {
    int total = 0;
    int ric_positive = 0;
    int bone_idle = 0;
    int ricci_flat = 0;
};

inline CensusTable census_with_classification(const CensusRequest& req)
{
    CensusTable table;
    for (const Graph& g : enumerate_regular(req)) {
        GraphClass cls = classify_graph(g);
        ++table.total;
        if (cls.ric_min > Rational(0)) ++table.ric_positive;
        if (cls.bone_idle) ++table.bone_idle;
        if (cls.ricci_flat) ++table.ricci_flat;
    }
    return table;
}

} // namespace ricci
