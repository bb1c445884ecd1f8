#pragma once

#include <string>
#include <vector>

#include "ricci/graph.hpp"

namespace ricci {

enum class Family {
    cycle,
    path,
    star,
    complete,
    complete_bipartite,
    hypercube,
    cocktail_party,
    petersen,
    dodecahedral,
    prism,
    moebius_ladder,
    bone_idle_ring,
    sharpness,
    figure,
};

/// A named generator plus its integer parameters; figure fixtures carry an id
/// string instead.
struct FamilySpec {
    Family kind = Family::cycle;
    std::vector<int> params;
    std::string fixture_id;
};

namespace detail {

inline void require(bool ok, const std::string& what)
{
    if (!ok) fail(errc::invalid_params, what);
}

inline Graph cycle_graph(int n)
{
    require(n >= 3, "cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

inline Graph path_graph(int n)
{
    require(n >= 1, "path needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

inline Graph star_graph(int leaves)
{
    require(leaves >= 1, "star needs at least one leaf");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, edges);
}

inline Graph complete_graph(int n)
{
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

inline Graph complete_bipartite_graph(int a, int b)
{
    require(a >= 1 && b >= 1, "complete bipartite graph needs both parts nonempty");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph::from_edges(a + b, edges);
}

inline Graph hypercube_graph(int dim)
{
    require(dim >= 1 && dim <= 16, "hypercube dimension must be in 1..16");
    int n = 1 << dim;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int bit = 0; bit < dim; ++bit) {
            int v = u ^ (1 << bit);
            if (u < v) edges.emplace_back(u, v);
        }
    return Graph::from_edges(n, edges);
}

// K_{m x 2}: complete graph on 2m vertices minus the perfect matching
// (2i, 2i+1).
inline Graph cocktail_party_graph(int m)
{
    require(m >= 2, "cocktail party graph needs m >= 2");
    int n = 2 * m;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!(u / 2 == v / 2)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

inline Graph petersen_graph()
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5); // outer 5-cycle
        edges.emplace_back(i, i + 5);       // spokes
        edges.emplace_back(i + 5, (i + 2) % 5 + 5); // inner pentagram
    }
    return Graph::from_edges(10, edges);
}

// Generalized Petersen graph GP(10,2).
inline Graph dodecahedral_graph()
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 10; ++i) {
        edges.emplace_back(i, (i + 1) % 10);
        edges.emplace_back(i, i + 10);
        edges.emplace_back(i + 10, (i + 2) % 10 + 10);
    }
    return Graph::from_edges(20, edges);
}

// Y_n: two n-cycles 0..n-1 and n..2n-1 joined by rungs i ~ n+i.
inline Graph prism_graph(int n)
{
    require(n >= 3, "prism graph needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(n + i, n + (i + 1) % n);
        edges.emplace_back(i, n + i);
    }
    return Graph::from_edges(2 * n, edges);
}

// M_n: the cycle C_2n plus all antipodal chords i ~ i+n.
inline Graph moebius_ladder_graph(int n)
{
    require(n >= 2, "Moebius ladder needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 2 * n; ++i) edges.emplace_back(i, (i + 1) % (2 * n));
    for (int i = 0; i < n; ++i) edges.emplace_back(i, i + n);
    return Graph::from_edges(2 * n, edges);
}

// BI_n: inner n-cycle x_0..x_{n-1} (indices 0..n-1) inside an outer n-cycle
// y_0..y_{n-1} (indices n..2n-1), with y_k joined to x_{(k-1) mod n} and
// x_{(k+1) mod n}. 4-regular; bone idle for n >= 6.
inline Graph bone_idle_ring_graph(int n)
{
    require(n >= 6, "bone idle ring needs n >= 6");
    std::vector<std::pair<int, int>> edges;
    for (int k = 0; k < n; ++k) {
        edges.emplace_back(k, (k + 1) % n);
        edges.emplace_back(n + k, n + (k + 1) % n);
        edges.emplace_back(n + k, (k - 1 + n) % n);
        edges.emplace_back(n + k, (k + 1) % n);
    }
    return Graph::from_edges(2 * n, edges);
}

// d-regular graph on n = (3d+8)/2 vertices whose designated edge (0,1) has
// kappa = 0 and kappa_0 = -1/d. Requires d even, d >= 12. Layout:
//   0 = x, 1 = y, 2..l-1 = z_0..z_{l-3}, l..2l = x_0..x_l,
//   2l+1..3l+1 = y_0..y_l, 3l+2 = v1, 3l+3 = v2, with l = d/2.
inline Graph sharpness_graph(int d)
{
    require(d >= 12, "sharpness construction needs d >= 12");
    require(d % 2 == 0, "sharpness construction needs even d");
    int l = d / 2;
    int x = 0;
    int y = 1;
    auto zv = [](int i) { return 2 + i; };
    auto xv = [l](int i) { return l + i; };
    auto yv = [l](int i) { return 2 * l + 1 + i; };
    int v1 = 3 * l + 2;
    int v2 = 3 * l + 3;
    int n = 3 * l + 4;

    std::vector<std::pair<int, int>> edges;
    edges.emplace_back(x, y);
    for (int i = 0; i <= l - 3; ++i) {
        edges.emplace_back(x, zv(i));
        edges.emplace_back(y, zv(i));
    }
    for (int i = 0; i <= l; ++i) {
        edges.emplace_back(x, xv(i));
        edges.emplace_back(y, yv(i));
    }
    for (int i = 0; i <= l - 3; ++i) {
        for (int j = 0; j <= l - 1; ++j)
            if (j != i) edges.emplace_back(zv(i), xv(j));
        int skip1 = (2 * i) % (l + 1);
        int skip2 = (2 * i + 1) % (l + 1);
        for (int j = 0; j <= l; ++j)
            if (j != skip1 && j != skip2) edges.emplace_back(zv(i), yv(j));
    }
    for (int i = 0; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j) {
            if (!(i == l - 2 && j == l - 1)) edges.emplace_back(xv(i), xv(j));
            edges.emplace_back(yv(i), yv(j));
        }
    for (int j = 0; j <= l - 2; ++j) edges.emplace_back(xv(l), yv(j));
    for (int i = 0; i <= l - 1; ++i) {
        edges.emplace_back(v1, xv(i));
        edges.emplace_back(v2, xv(i));
    }
    for (int i = 0; i <= l - 6; ++i) {
        edges.emplace_back(v1, yv(i));
        edges.emplace_back(v2, yv(i));
    }
    for (int i : {l - 1, l}) {
        edges.emplace_back(v1, yv(i));
        edges.emplace_back(v2, yv(i));
    }
    edges.emplace_back(v1, yv(l - 5));
    edges.emplace_back(v1, yv(l - 4));
    edges.emplace_back(v2, yv(l - 3));
    edges.emplace_back(v2, yv(l - 2));
    edges.emplace_back(v1, v2);
    Graph g = Graph::from_edges(n, edges);
    if (g.regular_degree() != d)
        fail(errc::invalid_params, "sharpness construction failed its regularity check");
    return g;
}

} // namespace detail

/// Vertex set A x B with (a1,b1) ~ (a2,b2) iff the pairs agree in one
/// coordinate and are adjacent in the other; index = a*|B| + b.
inline Graph cartesian_product(const Graph& a, const Graph& b)
{
    if (a.order() == 0 || b.order() == 0)
        fail(errc::empty_graph, "Cartesian product of an empty graph");
    int nb = b.order();
    std::vector<std::pair<int, int>> edges;
    for (int av = 0; av < a.order(); ++av)
        for (int bv = 0; bv < nb; ++bv) {
            for (int bw : b.neighbors(bv))
                if (bv < bw) edges.emplace_back(av * nb + bv, av * nb + bw);
            for (int aw : a.neighbors(av))
                if (av < aw) edges.emplace_back(av * nb + bv, aw * nb + bv);
        }
    return Graph::from_edges(a.order() * nb, edges);
}

/// Hardcoded graphs transcribed from figures; the designated special edge is
/// always (0, 1). Ids: example1, example2, counterexample_9v4r, petersen,
/// dodecahedral.
inline Graph figure_fixture(const std::string& id)
{
    if (id == "example1") {
        // 6 vertices, 7 edges; edge (0,1) has degrees (2,3), kappa = 1/6,
        // kappa_0 = -1/6.
        return Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {5, 2}, {5, 3}, {5, 4}});
    }
    if (id == "example2") {
        // 9 vertices, 12 edges; edge (0,1) has degrees (3,4), kappa = 1/12,
        // kappa_0 = -1/6.
        return Graph::from_edges(9, {{0, 1},
                                     {0, 2},
                                     {0, 4},
                                     {1, 8},
                                     {1, 3},
                                     {2, 3},
                                     {1, 5},
                                     {4, 6},
                                     {5, 6},
                                     {2, 7},
                                     {4, 7},
                                     {7, 8}});
    }
    if (id == "counterexample_9v4r") {
        // 4-regular on 9 vertices with d = 2n/3 - 2; edge (0,1) has kappa = 0.
        return Graph::from_edges(9, {{0, 1},
                                     {0, 2},
                                     {0, 3},
                                     {0, 4},
                                     {1, 5},
                                     {1, 6},
                                     {1, 7},
                                     {2, 3},
                                     {2, 4},
                                     {3, 4},
                                     {5, 6},
                                     {5, 7},
                                     {6, 7},
                                     {8, 2},
                                     {8, 3},
                                     {8, 6},
                                     {8, 5},
                                     {4, 7}});
    }
    if (id == "petersen") return detail::petersen_graph();
    if (id == "dodecahedral") return detail::dodecahedral_graph();
    fail(errc::unknown_fixture, "unknown figure fixture '" + id + "'");
}

inline Graph generate(const FamilySpec& spec)
{
    auto arity = [&](std::size_t want) {
        if (spec.params.size() != want)
            fail(errc::invalid_params, "family takes " + std::to_string(want) + " parameter(s)");
    };
    switch (spec.kind) {
    case Family::cycle: arity(1); return detail::cycle_graph(spec.params[0]);
    case Family::path: arity(1); return detail::path_graph(spec.params[0]);
    case Family::star: arity(1); return detail::star_graph(spec.params[0]);
    case Family::complete: arity(1); return detail::complete_graph(spec.params[0]);
    case Family::complete_bipartite: arity(2); return detail::complete_bipartite_graph(spec.params[0], spec.params[1]);
    case Family::hypercube: arity(1); return detail::hypercube_graph(spec.params[0]);
    case Family::cocktail_party: arity(1); return detail::cocktail_party_graph(spec.params[0]);
    case Family::petersen: arity(0); return detail::petersen_graph();
    case Family::dodecahedral: arity(0); return detail::dodecahedral_graph();
    case Family::prism: arity(1); return detail::prism_graph(spec.params[0]);
    case Family::moebius_ladder: arity(1); return detail::moebius_ladder_graph(spec.params[0]);
    case Family::bone_idle_ring: arity(1); return detail::bone_idle_ring_graph(spec.params[0]);
    case Family::sharpness: arity(1); return detail::sharpness_graph(spec.params[0]);
    case Family::figure: return figure_fixture(spec.fixture_id);
    }
    fail(errc::invalid_params, "unknown family kind");
}

} // namespace ricci
