#pragma once

#include <optional>
#include <vector>

#include "ricci/graph.hpp"
#include "ricci/lap.hpp"
#include "ricci/rational.hpp"
#include "ricci/transport.hpp"

namespace ricci {

namespace detail {

inline void require_equal_degrees(const EdgeContext& ctx)
{
    if (ctx.deg_x != ctx.deg_y)
        fail(errc::unequal_degrees, "closed-form curvature requires equal endpoint degrees");
}

inline CostMatrix r_cost_matrix(const EdgeContext& ctx)
{
    int m = static_cast<int>(ctx.rx.size());
    CostMatrix c = CostMatrix::zero(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            c.set(i, j, ctx.cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return c;
}

// Assignment cost between S1(x)\triangle and S1(y)\triangle. These sets extend
// R_x by y and R_y by x; every added pair sits at distance exactly 1 (each
// R-vertex is adjacent to its own endpoint, and x ~ y), so the extension adds
// an all-ones row and column to the R cost matrix.
inline std::int64_t extended_assignment_cost(const EdgeContext& ctx)
{
    int m = static_cast<int>(ctx.rx.size());
    CostMatrix c = CostMatrix::zero(m + 1);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            c.set(i, j, ctx.cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    for (int i = 0; i <= m; ++i) {
        c.set(i, m, 1);
        c.set(m, i, 1);
    }
    return solve_auction(c).total_cost;
}

} // namespace detail

/// Lin-Lu-Yau curvature of an equal-degree edge:
/// kappa = (d + 1 - optimal R_x -> R_y assignment cost) / d.
inline Rational kappa_lly_formula(const EdgeContext& ctx)
{
    detail::require_equal_degrees(ctx);
    if (ctx.rx.empty()) return Rational(ctx.deg_x + 1, ctx.deg_x); // |triangle| = d-1
    std::int64_t opt = solve_auction(detail::r_cost_matrix(ctx)).total_cost;
    return Rational(ctx.deg_x + 1 - opt, ctx.deg_x);
}

struct ModifiedKappa {
    Rational kappa;
    int square_count = 0;   // distance-1 legs (4-cycles through the edge)
    int pentagon_count = 0; // distance-2 legs (5-cycles through the edge)
};

/// Same curvature as kappa_lly_formula, plus the leg profile of one optimal
/// assignment. Among optima the counts are reported for the assignment with
/// the most distance-1 legs, found exactly via a lexicographic secondary
/// objective; this makes the reported pair canonical.
inline ModifiedKappa kappa_lly_modified(const EdgeContext& ctx)
{
    detail::require_equal_degrees(ctx);
    int m = static_cast<int>(ctx.rx.size());
    std::int64_t scale = m + 1;
    CostMatrix weighted = CostMatrix::zero(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            std::int64_t base = ctx.cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            weighted.set(i, j, base * scale + (base != 1 ? 1 : 0));
        }
    AssignmentSolution sol = solve_auction(weighted);

    ModifiedKappa result;
    std::int64_t opt = 0;
    for (int i = 0; i < m; ++i) {
        int leg = ctx.cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(sol.perm[static_cast<std::size_t>(i)])];
        opt += leg;
        if (leg == 1) ++result.square_count;
        if (leg == 2) ++result.pentagon_count;
    }
    result.kappa = Rational(ctx.deg_x + 1 - opt, ctx.deg_x);
    return result;
}

/// 0-idleness curvature of an equal-degree edge, by the direct assignment
/// between S1(x)\triangle(x,y) and S1(y)\triangle(x,y).
inline Rational kappa_zero_from_context(const EdgeContext& ctx)
{
    detail::require_equal_degrees(ctx);
    if (ctx.rx.empty()) return Rational(ctx.deg_x - 1, ctx.deg_x); // |triangle| = d-1
    return Rational(ctx.deg_x - detail::extended_assignment_cost(ctx), ctx.deg_x);
}

inline Rational kappa_zero_formula(const Graph& g, int x, int y)
{
    if (!g.has_edge(x, y)) fail(errc::not_an_edge, "kappa_0 formula is defined on edges");
    return kappa_zero_from_context(edge_context(g, x, y));
}

/// kappa_0 from kappa and the largest leg over all optimal R-assignments:
/// kappa_0 = kappa - (3 - max leg)/d, degenerating to kappa - 2/d when
/// R_x is empty. Cross-check for kappa_zero_formula.
inline Rational kappa_zero_via_relation(const EdgeContext& ctx)
{
    detail::require_equal_degrees(ctx);
    int d = ctx.deg_x;
    Rational kappa = kappa_lly_formula(ctx);
    if (static_cast<int>(ctx.triangle.size()) == d - 1) return kappa - Rational(2, d);
    MaxLegResult legs = min_assignment_cost_with_max_leg(detail::r_cost_matrix(ctx));
    return kappa - Rational(3 - legs.max_leg, d);
}

/// alpha-Ollivier-Ricci curvature of an equal-degree edge, exact on both
/// linear parts: (1-alpha)*kappa for alpha >= 1/(d+1), otherwise
/// (1-alpha)*kappa_0 + alpha*d*(kappa - kappa_0).
inline Rational kappa_alpha_formula(const EdgeContext& ctx, const Rational& alpha)
{
    detail::require_equal_degrees(ctx);
    if (alpha < Rational(0) || alpha > Rational(1))
        fail(errc::alpha_out_of_range, "idleness must lie in [0,1]");
    int d = ctx.deg_x;
    Rational kappa = kappa_lly_formula(ctx);
    if (alpha >= Rational(1, d + 1)) return (Rational(1) - alpha) * kappa;
    Rational kappa0 = kappa_zero_from_context(ctx);
    return (Rational(1) - alpha) * kappa0 + alpha * Rational(d) * (kappa - kappa0);
}

/// kappa_alpha of an edge by whichever route applies: the closed form when
/// the endpoint degrees agree, the flow engine otherwise.
inline Rational kappa_alpha(const Graph& g, int x, int y, const Rational& alpha)
{
    if (!g.has_edge(x, y)) fail(errc::not_an_edge, "kappa_alpha requires adjacent vertices");
    if (g.degree(x) == g.degree(y)) return kappa_alpha_formula(edge_context(g, x, y), alpha);
    return kappa_alpha_direct(g, x, y, alpha);
}

/// Piecewise-linear description of alpha -> kappa_alpha on [0,1]:
/// two segments meeting at 1/(d+1), ending at kappa_1 = 0.
struct IdlenessProfile {
    Rational breakpoint;
    Rational value_at_zero; // kappa_0
    Rational slope_first;
    Rational slope_last; // equals -kappa

    bool single_segment() const { return slope_first == slope_last; }

    Rational at(const Rational& alpha) const
    {
        if (alpha <= breakpoint) return value_at_zero + slope_first * alpha;
        return -slope_last * (Rational(1) - alpha); // anchored at kappa_1 = 0
    }
};

inline IdlenessProfile idleness_profile(const EdgeContext& ctx)
{
    detail::require_equal_degrees(ctx);
    int d = ctx.deg_x;
    Rational kappa = kappa_lly_formula(ctx);
    Rational kappa0 = kappa_zero_from_context(ctx);
    IdlenessProfile profile;
    profile.breakpoint = Rational(1, d + 1);
    profile.value_at_zero = kappa0;
    profile.slope_first = Rational(d) * (kappa - kappa0) - kappa0;
    profile.slope_last = -kappa;
    return profile;
}

/// Per-edge curvature summary. Equal-degree edges are computed via the closed
/// forms; unequal-degree edges fall back to the flow engine.
struct CurvatureReport {
    int x = 0;
    int y = 0;
    int deg_x = 0;
    int deg_y = 0;
    bool equal_degree = false;
    Rational kappa;
    Rational kappa0;
    std::optional<int> gap_numerator; // c with kappa - kappa0 = c/d; equal-degree only
    Rational breakpoint;              // 1/(max{d_x,d_y}+1)
    int triangle_count = 0;
    bool is_ricci_flat_edge = false;
    bool is_zero_ricci_flat_edge = false;
    bool is_bone_idle_edge = false;
};

inline CurvatureReport edge_report_from_context(const Graph& g, const EdgeContext& ctx)
{
    CurvatureReport report;
    report.x = ctx.x;
    report.y = ctx.y;
    report.deg_x = ctx.deg_x;
    report.deg_y = ctx.deg_y;
    report.equal_degree = ctx.deg_x == ctx.deg_y;
    report.triangle_count = static_cast<int>(ctx.triangle.size());
    report.breakpoint = Rational(1, std::max(ctx.deg_x, ctx.deg_y) + 1);
    if (report.equal_degree) {
        report.kappa = kappa_lly_formula(ctx);
        report.kappa0 = kappa_zero_from_context(ctx);
        Rational gap = (report.kappa - report.kappa0) * Rational(ctx.deg_x);
        report.gap_numerator = static_cast<int>(gap.num()); // gap*d is integral here
    } else {
        report.kappa = kappa_lly_direct(g, ctx.x, ctx.y);
        report.kappa0 = kappa_alpha_direct(g, ctx.x, ctx.y, Rational(0));
    }
    report.is_ricci_flat_edge = report.kappa.is_zero();
    report.is_zero_ricci_flat_edge = report.kappa0.is_zero();
    report.is_bone_idle_edge = report.kappa.is_zero() && report.kappa0.is_zero();
    return report;
}

inline CurvatureReport edge_report(const Graph& g, int x, int y)
{
    if (!g.has_edge(x, y)) fail(errc::not_an_edge, "edge report requires adjacent vertices");
    return edge_report_from_context(g, edge_context(g, x, y));
}

struct GraphClass {
    Rational ric_min;
    bool ricci_flat = false;
    bool zero_ricci_flat = false;
    bool bone_idle = false;
};

/// Whole-graph classification over every edge. The optional out-parameter
/// receives the per-edge reports in sorted edge order.
inline GraphClass classify_graph(const Graph& g, std::vector<CurvatureReport>* details = nullptr)
{
    if (!g.is_connected()) fail(errc::disconnected, "classification requires a connected graph");
    auto edge_list = g.edges();
    if (edge_list.empty()) fail(errc::no_edges, "classification requires at least one edge");

    GraphClass cls;
    cls.ricci_flat = true;
    cls.zero_ricci_flat = true;
    cls.bone_idle = true;
    bool first = true;
    EdgeContextBuilder builder(g);
    for (auto [u, v] : edge_list) {
        CurvatureReport report = edge_report_from_context(g, builder.build(u, v));
        if (first || report.kappa < cls.ric_min) cls.ric_min = report.kappa;
        first = false;
        cls.ricci_flat = cls.ricci_flat && report.is_ricci_flat_edge;
        cls.zero_ricci_flat = cls.zero_ricci_flat && report.is_zero_ricci_flat_edge;
        cls.bone_idle = cls.bone_idle && report.is_bone_idle_edge;
        if (details) details->push_back(report);
    }
    return cls;
}

struct PositivityAudit {
    bool applies = false;             // d > 2n/3 - 2
    bool conclusion_verified = false; // Ric(G) > 0, checked when applies
};

/// Audits the degree condition guaranteeing positive curvature on regular
/// graphs: d > 2n/3 - 2 implies Ric(G) > 0.
inline PositivityAudit check_positivity_bound(const Graph& g)
{
    std::optional<int> d = g.regular_degree();
    if (!d) fail(errc::not_regular, "positivity bound applies to regular graphs");
    PositivityAudit audit;
    audit.applies = 3 * *d > 2 * g.order() - 6; // d > 2n/3 - 2 in integers
    if (audit.applies) audit.conclusion_verified = classify_graph(g).ric_min > Rational(0);
    return audit;
}

} // namespace ricci
