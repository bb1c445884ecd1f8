#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ricci/ricci.hpp"

namespace testutil {

using ricci::Graph;

inline Graph random_graph(int n, double p, std::mt19937& gen)
{
    std::bernoulli_distribution edge(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(gen)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

// Pairing model with legal-pair selection (Steger-Wormald style): stubs are
// matched uniformly among pairs that create neither a loop nor a parallel
// edge; the attempt restarts when no legal pair is left.
inline std::optional<Graph> try_random_regular(int n, int d, std::mt19937& gen)
{
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < d; ++k) stubs.push_back(v);
    std::vector<std::vector<char>> seen(static_cast<std::size_t>(n),
                                        std::vector<char>(static_cast<std::size_t>(n), 0));
    std::vector<std::pair<int, int>> edges;
    while (!stubs.empty()) {
        bool paired = false;
        for (int tries = 0; tries < 60 && !paired; ++tries) {
            std::uniform_int_distribution<std::size_t> pick(0, stubs.size() - 1);
            std::size_t i = pick(gen);
            std::size_t j = pick(gen);
            if (i == j) continue;
            int u = stubs[i];
            int v = stubs[j];
            if (u == v || seen[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) continue;
            seen[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
            seen[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
            edges.emplace_back(u, v);
            if (i < j) std::swap(i, j);
            stubs.erase(stubs.begin() + static_cast<std::ptrdiff_t>(i));
            stubs.erase(stubs.begin() + static_cast<std::ptrdiff_t>(j));
            paired = true;
        }
        if (!paired) return std::nullopt; // in all likelihood stuck; restart
    }
    Graph g = Graph::from_edges(n, edges);
    if (!g.is_connected()) return std::nullopt;
    return g;
}

inline Graph random_connected_regular(int n, int d, std::mt19937& gen)
{
    for (int attempt = 0; attempt < 5000; ++attempt)
        if (auto g = try_random_regular(n, d, gen)) return *g;
    throw std::runtime_error("pairing model failed to produce a graph");
}

inline ricci::CostMatrix random_cost_matrix(int n, int lo, int hi, std::mt19937& gen)
{
    std::uniform_int_distribution<int> entry(lo, hi);
    ricci::CostMatrix c = ricci::CostMatrix::zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c.set(i, j, entry(gen));
    return c;
}

struct NamedGraph {
    std::string name;
    Graph g;
};

/// The standing fixture set: every graph the named examples and audits touch.
inline const std::vector<NamedGraph>& fixture_graphs()
{
    using namespace ricci;
    static const std::vector<NamedGraph> fixtures = [] {
        std::vector<NamedGraph> out;
        auto add = [&out](std::string name, Graph g) { out.push_back({std::move(name), std::move(g)}); };
        for (int n = 3; n <= 14; ++n) add("C_" + std::to_string(n), generate({Family::cycle, {n}, ""}));
        for (int n = 3; n <= 8; ++n) add("K_" + std::to_string(n), generate({Family::complete, {n}, ""}));
        for (int n = 2; n <= 5; ++n)
            add("K_" + std::to_string(n) + "," + std::to_string(n),
                generate({Family::complete_bipartite, {n, n}, ""}));
        for (int k = 2; k <= 4; ++k) add("Q_" + std::to_string(k), generate({Family::hypercube, {k}, ""}));
        for (int m = 2; m <= 6; ++m) add("cocktail_" + std::to_string(m), generate({Family::cocktail_party, {m}, ""}));
        for (int n = 3; n <= 7; ++n) add("Y_" + std::to_string(n), generate({Family::prism, {n}, ""}));
        for (int n = 2; n <= 7; ++n) add("M_" + std::to_string(n), generate({Family::moebius_ladder, {n}, ""}));
        for (int n = 6; n <= 8; ++n) add("BI_" + std::to_string(n), generate({Family::bone_idle_ring, {n}, ""}));
        add("petersen", figure_fixture("petersen"));
        add("dodecahedral", figure_fixture("dodecahedral"));
        add("example1", figure_fixture("example1"));
        add("example2", figure_fixture("example2"));
        add("counterexample_9v4r", figure_fixture("counterexample_9v4r"));
        Graph c5 = generate({Family::cycle, {5}, ""});
        add("C5xC5", cartesian_product(c5, c5));
        Graph k3 = generate({Family::complete, {3}, ""});
        add("rook_3x3", cartesian_product(k3, k3));
        add("sharpness_12", generate({Family::sharpness, {12}, ""}));
        return out;
    }();
    return fixtures;
}

} // namespace testutil
