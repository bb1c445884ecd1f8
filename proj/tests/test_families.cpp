#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "ricci/ricci.hpp"

using namespace ricci;

namespace {

Graph family(Family kind, std::vector<int> params = {})
{
    return generate({kind, std::move(params), ""});
}

bool same_canonical(const Graph& a, const Graph& b)
{
    return emit_graph6(canonical_form(a)) == emit_graph6(canonical_form(b));
}

} // namespace

TEST_CASE("bone idle rings")
{
    Graph bi6 = family(Family::bone_idle_ring, {6});
    CHECK(bi6.order() == 12);
    CHECK(bi6.edge_count() == 24);
    CHECK(bi6.regular_degree() == 4);
    GraphClass cls = classify_graph(bi6);
    CHECK(cls.bone_idle);

    for (int n = 6; n <= 9; ++n) {
        Graph bi = family(Family::bone_idle_ring, {n});
        CHECK(bi.order() == 2 * n);
        CHECK(bi.regular_degree() == 4);
        CHECK(classify_graph(bi).bone_idle);
    }
    CHECK_THROWS_AS(family(Family::bone_idle_ring, {5}), error);
}

TEST_CASE("cocktail party graphs")
{
    Graph octahedron = family(Family::cocktail_party, {3});
    CHECK(octahedron.order() == 6);
    CHECK(octahedron.regular_degree() == 4);
    GraphClass cls = classify_graph(octahedron);
    CHECK(cls.ric_min == Rational(1));
    for (auto [x, y] : octahedron.edges()) CHECK(edge_report(octahedron, x, y).kappa == Rational(1));

    for (int m = 2; m <= 6; ++m) {
        Graph party = family(Family::cocktail_party, {m});
        CHECK(party.order() == 2 * m);
        CHECK(party.regular_degree() == 2 * m - 2);
    }
}

TEST_CASE("prisms and Moebius ladders")
{
    for (int n = 3; n <= 7; ++n) {
        Graph y = family(Family::prism, {n});
        CHECK(y.order() == 2 * n);
        CHECK(y.regular_degree() == 3);
    }
    for (int n = 2; n <= 7; ++n) {
        Graph m = family(Family::moebius_ladder, {n});
        CHECK(m.order() == 2 * n);
        CHECK(m.regular_degree() == 3);
    }
    CHECK(same_canonical(family(Family::prism, {4}), family(Family::hypercube, {3})));
    CHECK(same_canonical(family(Family::moebius_ladder, {2}), family(Family::complete, {4})));

    // positive curvature exactly up to the classification cutoffs
    for (int n : {3, 4, 5}) CHECK(classify_graph(family(Family::prism, {n})).ric_min > Rational(0));
    for (int n : {6, 7}) CHECK(classify_graph(family(Family::prism, {n})).ric_min <= Rational(0));
    for (int n : {2, 3, 4}) CHECK(classify_graph(family(Family::moebius_ladder, {n})).ric_min > Rational(0));
    for (int n : {5, 6, 7}) CHECK(classify_graph(family(Family::moebius_ladder, {n})).ric_min <= Rational(0));
}

TEST_CASE("sharpness construction")
{
    for (int d : {12, 18, 24}) {
        Graph g = family(Family::sharpness, {d});
        CHECK(g.order() == (3 * d + 8) / 2);
        CHECK(g.regular_degree() == d);
        CurvatureReport report = edge_report(g, 0, 1);
        CHECK(report.kappa == Rational(0));
        CHECK(report.kappa0 == Rational(-1, d));
    }
    CHECK_THROWS_AS(family(Family::sharpness, {10}), error);
    CHECK_THROWS_AS(family(Family::sharpness, {13}), error);
}

TEST_CASE("cartesian products")
{
    Graph c5 = family(Family::cycle, {5});
    Graph torus = cartesian_product(c5, c5);
    CHECK(torus.order() == 25);
    CHECK(torus.regular_degree() == 4);
    CHECK(classify_graph(torus).ric_min == Rational(1, 4));

    Graph k2 = family(Family::complete, {2});
    CHECK(same_canonical(cartesian_product(k2, k2), family(Family::cycle, {4})));

    Graph q3 = cartesian_product(cartesian_product(k2, k2), k2);
    CHECK(same_canonical(q3, family(Family::hypercube, {3})));
    for (auto [x, y] : q3.edges()) CHECK(edge_report(q3, x, y).kappa == Rational(2, 3));

    CHECK_THROWS_AS(cartesian_product(Graph::from_edges(0, {}), k2), error);
}

TEST_CASE("figure fixtures")
{
    Graph ex1 = figure_fixture("example1");
    CHECK(ex1.order() == 6);
    CHECK(ex1.edge_count() == 7);
    CHECK(ex1.degree(0) == 2);
    CHECK(ex1.degree(1) == 3);

    Graph ex2 = figure_fixture("example2");
    CHECK(ex2.order() == 9);
    CHECK(ex2.edge_count() == 12);
    CHECK(ex2.degree(0) == 3);
    CHECK(ex2.degree(1) == 4);

    Graph counter = figure_fixture("counterexample_9v4r");
    CHECK(counter.order() == 9);
    CHECK(counter.regular_degree() == 4);
    CHECK(edge_report(counter, 0, 1).kappa == Rational(0));

    Graph pet = figure_fixture("petersen");
    CHECK(pet.regular_degree() == 3);
    CHECK(girth(pet) == 5);
    // srg(10,3,0,1)
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v) {
            int common = 0;
            for (int w : pet.neighbors(u)) common += pet.has_edge(v, w) ? 1 : 0;
            CHECK(common == (pet.has_edge(u, v) ? 0 : 1));
        }

    Graph dodeca = figure_fixture("dodecahedral");
    CHECK(dodeca.order() == 20);
    CHECK(dodeca.regular_degree() == 3);
    CHECK(girth(dodeca) == 5);
    CHECK(classify_graph(dodeca).ricci_flat);

    CHECK_THROWS_AS(figure_fixture("triplex"), error);
}

TEST_CASE("basic family parameter validation")
{
    CHECK_THROWS_AS(family(Family::cycle, {2}), error);
    CHECK_THROWS_AS(family(Family::complete_bipartite, {0, 3}), error);
    CHECK_THROWS_AS(family(Family::hypercube, {0}), error);
    CHECK_THROWS_AS(family(Family::cocktail_party, {1}), error);
    CHECK_THROWS_AS(family(Family::prism, {2}), error);
    CHECK_THROWS_AS(family(Family::cycle, {3, 4}), error);
}
