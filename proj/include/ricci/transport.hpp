#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "ricci/graph.hpp"
#include "ricci/rational.hpp"

namespace ricci {

struct Atom {
    int vertex = 0;
    Rational mass;
};

/// Finitely supported probability measure: positive masses on distinct
/// vertices, summing to exactly 1. Atoms are kept sorted by vertex.
struct DiscreteMeasure {
    std::vector<Atom> atoms;

    static DiscreteMeasure make(std::vector<Atom> atoms)
    {
        std::sort(atoms.begin(), atoms.end(),
                  [](const Atom& a, const Atom& b) { return a.vertex < b.vertex; });
        Rational sum = 0;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (atoms[i].mass.sign() <= 0)
                fail(errc::not_probability, "measure atoms must carry positive mass");
            if (i > 0 && atoms[i].vertex == atoms[i - 1].vertex)
                fail(errc::not_probability, "measure atoms must sit on distinct vertices");
            sum += atoms[i].mass;
        }
        if (sum != Rational(1)) fail(errc::not_probability, "measure masses must sum to 1");
        DiscreteMeasure mu;
        mu.atoms = std::move(atoms);
        return mu;
    }

    Rational mass_at(int v) const
    {
        for (const Atom& a : atoms)
            if (a.vertex == v) return a.mass;
        return 0;
    }
};

/// Lazy-random-walk measure: mass alpha at x, (1-alpha)/deg(x) at each
/// neighbor. Zero-mass atoms (alpha in {0,1}) are omitted.
inline DiscreteMeasure vertex_measure(const Graph& g, int x, const Rational& alpha)
{
    g.check_vertex(x);
    if (alpha < Rational(0) || alpha > Rational(1))
        fail(errc::alpha_out_of_range, "idleness must lie in [0,1]");
    std::vector<Atom> atoms;
    if (alpha != Rational(1)) {
        int d = g.degree(x);
        if (d == 0) fail(errc::isolated_vertex, "isolated vertex has no neighbor mass");
        Rational share = (Rational(1) - alpha) / Rational(d);
        for (int v : g.neighbors(x)) atoms.push_back({v, share});
    }
    if (!alpha.is_zero()) atoms.push_back({x, alpha});
    return DiscreteMeasure::make(std::move(atoms));
}

/// One arc of a transport plan: `mass` moved from `from` to `to` across
/// graph distance `dist`.
struct TransportMove {
    int from = 0;
    int to = 0;
    Rational mass;
    int dist = 0;
};

struct TransportResult {
    Rational cost;
    std::vector<TransportMove> moves;
};

namespace detail {

// Successive-shortest-path min-cost flow on a tiny bipartite network,
// all-integer arithmetic.
class MinCostFlow {
public:
    explicit MinCostFlow(int nodes) : head_(static_cast<std::size_t>(nodes), -1) {}

    void add_arc(int from, int to, std::int64_t cap, std::int64_t cost)
    {
        arcs_.push_back({to, head_[static_cast<std::size_t>(from)], cap, cost});
        head_[static_cast<std::size_t>(from)] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[static_cast<std::size_t>(to)], 0, -cost});
        head_[static_cast<std::size_t>(to)] = static_cast<int>(arcs_.size()) - 1;
    }

    // Sends as much flow as possible from s to t; returns its total cost.
    std::int64_t run(int s, int t)
    {
        const std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
        int n = static_cast<int>(head_.size());
        std::int64_t total = 0;
        while (true) {
            std::vector<std::int64_t> dist(static_cast<std::size_t>(n), kInf);
            std::vector<int> in_arc(static_cast<std::size_t>(n), -1);
            std::vector<char> in_queue(static_cast<std::size_t>(n), 0);
            std::vector<int> queue{s};
            dist[static_cast<std::size_t>(s)] = 0;
            in_queue[static_cast<std::size_t>(s)] = 1;
            while (!queue.empty()) { // Bellman-Ford over the residual network
                int u = queue.back();
                queue.pop_back();
                in_queue[static_cast<std::size_t>(u)] = 0;
                for (int e = head_[static_cast<std::size_t>(u)]; e >= 0; e = arcs_[static_cast<std::size_t>(e)].next) {
                    const Arc& a = arcs_[static_cast<std::size_t>(e)];
                    if (a.cap <= 0) continue;
                    std::int64_t nd = dist[static_cast<std::size_t>(u)] + a.cost;
                    if (nd < dist[static_cast<std::size_t>(a.to)]) {
                        dist[static_cast<std::size_t>(a.to)] = nd;
                        in_arc[static_cast<std::size_t>(a.to)] = e;
                        if (!in_queue[static_cast<std::size_t>(a.to)]) {
                            in_queue[static_cast<std::size_t>(a.to)] = 1;
                            queue.push_back(a.to);
                        }
                    }
                }
            }
            if (in_arc[static_cast<std::size_t>(t)] < 0) break;
            std::int64_t push = kInf;
            for (int e = in_arc[static_cast<std::size_t>(t)]; e >= 0;) {
                push = std::min(push, arcs_[static_cast<std::size_t>(e)].cap);
                int prev = arcs_[static_cast<std::size_t>(e ^ 1)].to;
                e = (prev == s) ? -1 : in_arc[static_cast<std::size_t>(prev)];
            }
            for (int e = in_arc[static_cast<std::size_t>(t)]; e >= 0;) {
                arcs_[static_cast<std::size_t>(e)].cap -= push;
                arcs_[static_cast<std::size_t>(e ^ 1)].cap += push;
                total += push * arcs_[static_cast<std::size_t>(e)].cost;
                int prev = arcs_[static_cast<std::size_t>(e ^ 1)].to;
                e = (prev == s) ? -1 : in_arc[static_cast<std::size_t>(prev)];
            }
        }
        return total;
    }

    std::int64_t flow_on(int arc_index) const
    {
        return arcs_[static_cast<std::size_t>(arc_index) * 2 + 1].cap; // reverse cap = pushed flow
    }

private:
    struct Arc {
        int to;
        int next;
        std::int64_t cap;
        std::int64_t cost;
    };

    std::vector<int> head_;
    std::vector<Arc> arcs_;
};

inline std::int64_t lcm_checked(std::int64_t a, std::int64_t b)
{
    detail::int128 l = static_cast<detail::int128>(a) / std::gcd(a, b) * b;
    return detail::narrow128(l);
}

} // namespace detail

/// Exact 1-Wasserstein distance between mu and nu on g. Mass shared between
/// the measures stays in place (an optimal plan with that property always
/// exists); the residuals are scaled to integers by their common denominator
/// and routed by min-cost flow with graph distances as arc costs.
inline TransportResult wasserstein1_detailed(const Graph& g, const DiscreteMeasure& mu,
                                             const DiscreteMeasure& nu,
                                             bool clear_shared_mass = true)
{
    // Residual masses after cancelling the shared part.
    std::vector<Atom> sources;
    std::vector<Atom> sinks;
    {
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < mu.atoms.size() || j < nu.atoms.size()) {
            if (j == nu.atoms.size() ||
                (i < mu.atoms.size() && mu.atoms[i].vertex < nu.atoms[j].vertex)) {
                sources.push_back(mu.atoms[i++]);
            } else if (i == mu.atoms.size() || nu.atoms[j].vertex < mu.atoms[i].vertex) {
                sinks.push_back(nu.atoms[j++]);
            } else if (clear_shared_mass) {
                Rational rem = mu.atoms[i].mass - nu.atoms[j].mass;
                if (rem.sign() > 0) sources.push_back({mu.atoms[i].vertex, rem});
                if (rem.sign() < 0) sinks.push_back({nu.atoms[j].vertex, -rem});
                ++i;
                ++j;
            } else {
                sources.push_back(mu.atoms[i++]);
                sinks.push_back(nu.atoms[j++]);
            }
        }
    }
    if (sources.empty() && sinks.empty()) return {Rational(0), {}};

    std::int64_t denom = 1;
    for (const Atom& a : sources) denom = detail::lcm_checked(denom, a.mass.den());
    for (const Atom& a : sinks) denom = detail::lcm_checked(denom, a.mass.den());
    auto units = [denom](const Rational& mass) {
        return detail::narrow128(static_cast<detail::int128>(mass.num()) * (denom / mass.den()));
    };

    int ns = static_cast<int>(sources.size());
    int nt = static_cast<int>(sinks.size());
    std::vector<std::vector<int>> dist(static_cast<std::size_t>(ns));
    {
        std::vector<int> all(static_cast<std::size_t>(g.order()));
        for (int i = 0; i < ns; ++i) {
            detail::bfs_fill(g, sources[static_cast<std::size_t>(i)].vertex, -1, all);
            dist[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(nt));
            for (int j = 0; j < nt; ++j) {
                int d = all[static_cast<std::size_t>(sinks[static_cast<std::size_t>(j)].vertex)];
                if (d < 0)
                    fail(errc::unreachable_mass, "measures live in different components");
                dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = d;
            }
        }
    }

    // Network layout: 0 = source, 1 = sink, 2.. = source atoms, 2+ns.. = sink atoms.
    detail::MinCostFlow flow(2 + ns + nt);
    std::vector<int> cross_arc(static_cast<std::size_t>(ns) * static_cast<std::size_t>(nt));
    int arc_counter = 0;
    for (int i = 0; i < ns; ++i, ++arc_counter)
        flow.add_arc(0, 2 + i, units(sources[static_cast<std::size_t>(i)].mass), 0);
    for (int i = 0; i < ns; ++i)
        for (int j = 0; j < nt; ++j, ++arc_counter) {
            cross_arc[static_cast<std::size_t>(i) * static_cast<std::size_t>(nt) + static_cast<std::size_t>(j)] = arc_counter;
            flow.add_arc(2 + i, 2 + ns + j, std::numeric_limits<std::int64_t>::max() / 8,
                         dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
    for (int j = 0; j < nt; ++j, ++arc_counter)
        flow.add_arc(2 + ns + j, 1, units(sinks[static_cast<std::size_t>(j)].mass), 0);

    std::int64_t total = flow.run(0, 1);

    TransportResult result;
    result.cost = Rational(total, denom);
    for (int i = 0; i < ns; ++i)
        for (int j = 0; j < nt; ++j) {
            std::int64_t f = flow.flow_on(cross_arc[static_cast<std::size_t>(i) * static_cast<std::size_t>(nt) + static_cast<std::size_t>(j)]);
            if (f > 0)
                result.moves.push_back({sources[static_cast<std::size_t>(i)].vertex,
                                        sinks[static_cast<std::size_t>(j)].vertex, Rational(f, denom),
                                        dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]});
        }
    return result;
}

inline Rational wasserstein1(const Graph& g, const DiscreteMeasure& mu, const DiscreteMeasure& nu)
{
    return wasserstein1_detailed(g, mu, nu).cost;
}

/// kappa_alpha(x,y) = 1 - W1(mu_x^alpha, mu_y^alpha) / d(x,y), evaluated by
/// the flow engine. Works for non-adjacent pairs and unequal degrees.
inline Rational kappa_alpha_direct(const Graph& g, int x, int y, const Rational& alpha)
{
    if (x == y) fail(errc::same_vertex, "curvature needs two distinct vertices");
    std::optional<int> d = distance(g, x, y);
    if (!d) fail(errc::unreachable_mass, "vertices in different components");
    Rational w = wasserstein1(g, vertex_measure(g, x, alpha), vertex_measure(g, y, alpha));
    return Rational(1) - w / Rational(*d);
}

/// Lin-Lu-Yau curvature of an edge: kappa_alpha / (1 - alpha) evaluated on the
/// last linear part, at alpha = 1/(max{d_x,d_y}+1).
inline Rational kappa_lly_direct(const Graph& g, int x, int y)
{
    if (!g.has_edge(x, y)) fail(errc::not_an_edge, "Lin-Lu-Yau curvature is defined on edges");
    Rational alpha(1, std::max(g.degree(x), g.degree(y)) + 1);
    return kappa_alpha_direct(g, x, y, alpha) / (Rational(1) - alpha);
}

} // namespace ricci
