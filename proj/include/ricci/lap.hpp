#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "ricci/error.hpp"

namespace ricci {

namespace detail {

// Debug-build check that a solver returned a bijection.
inline bool perm_is_bijection(const std::vector<int>& perm)
{
    std::vector<char> hit(perm.size(), 0);
    for (int j : perm) {
        if (j < 0 || j >= static_cast<int>(perm.size()) || hit[static_cast<std::size_t>(j)])
            return false;
        hit[static_cast<std::size_t>(j)] = 1;
    }
    return true;
}

} // namespace detail

/// Square matrix of nonnegative integer costs for the assignment problem.
class CostMatrix {
public:
    CostMatrix() = default;

    explicit CostMatrix(const std::vector<std::vector<std::int64_t>>& rows)
    {
        n_ = static_cast<int>(rows.size());
        entries_.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != n_)
                fail(errc::non_square, "cost matrix must be square");
            for (std::int64_t v : row) {
                if (v < 0) fail(errc::negative_cost, "cost matrix entries must be nonnegative");
                entries_.push_back(v);
            }
        }
    }

    CostMatrix(std::initializer_list<std::vector<std::int64_t>> rows)
        : CostMatrix(std::vector<std::vector<std::int64_t>>(rows))
    {
    }

    static CostMatrix zero(int n)
    {
        if (n < 0) fail(errc::invalid_params, "negative matrix size");
        CostMatrix c;
        c.n_ = n;
        c.entries_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
        return c;
    }

    int size() const { return n_; }

    std::int64_t at(int i, int j) const
    {
        return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                        static_cast<std::size_t>(j)];
    }

    void set(int i, int j, std::int64_t v)
    {
        if (v < 0) fail(errc::negative_cost, "cost matrix entries must be nonnegative");
        entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                 static_cast<std::size_t>(j)] = v;
    }

    /// Matrix with row i and column j removed.
    CostMatrix minor(int i, int j) const
    {
        CostMatrix m = zero(n_ - 1);
        for (int r = 0, mr = 0; r < n_; ++r) {
            if (r == i) continue;
            for (int c = 0, mc = 0; c < n_; ++c) {
                if (c == j) continue;
                m.set(mr, mc, at(r, c));
                ++mc;
            }
            ++mr;
        }
        return m;
    }

private:
    int n_ = 0;
    std::vector<std::int64_t> entries_;
};

/// perm[i] = column assigned to row i; total_cost = sum of chosen entries.
struct AssignmentSolution {
    std::vector<int> perm;
    std::int64_t total_cost = 0;
};

struct AuctionStats {
    long long bids = 0;
};

/// Forward auction with integer bookkeeping: all costs are scaled by (n+1) and
/// the minimum bid increment is 1, so the termination gap n*eps = n stays below
/// one original cost unit and the result is exactly optimal on integer inputs.
inline AssignmentSolution solve_auction(const CostMatrix& cost, AuctionStats* stats = nullptr)
{
    int n = cost.size();
    AssignmentSolution sol;
    if (n == 0) return sol;

    const std::int64_t scale = n + 1;
    const std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

    std::vector<std::int64_t> price(static_cast<std::size_t>(n), 0);
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    sol.perm.assign(static_cast<std::size_t>(n), -1);

    std::vector<int> unassigned(static_cast<std::size_t>(n));
    std::iota(unassigned.begin(), unassigned.end(), 0);
    std::reverse(unassigned.begin(), unassigned.end()); // pop_back serves lowest index first

    long long bids = 0;
    while (!unassigned.empty()) {
        int bidder = unassigned.back();
        unassigned.pop_back();

        int best_item = -1;
        std::int64_t best = kInf;
        std::int64_t second = kInf;
        for (int j = 0; j < n; ++j) {
            std::int64_t value = cost.at(bidder, j) * scale + price[static_cast<std::size_t>(j)];
            if (value < best) {
                second = best;
                best = value;
                best_item = j;
            } else if (value < second) {
                second = value;
            }
        }

        price[static_cast<std::size_t>(best_item)] += (second - best) + 1;
        int evicted = owner[static_cast<std::size_t>(best_item)];
        if (evicted >= 0) {
            sol.perm[static_cast<std::size_t>(evicted)] = -1;
            unassigned.push_back(evicted);
        }
        owner[static_cast<std::size_t>(best_item)] = bidder;
        sol.perm[static_cast<std::size_t>(bidder)] = best_item;
        ++bids;
    }

    assert(detail::perm_is_bijection(sol.perm));
    for (int i = 0; i < n; ++i) sol.total_cost += cost.at(i, sol.perm[static_cast<std::size_t>(i)]);
    if (stats) stats->bids = bids;
    return sol;
}

/// O(n^3) Hungarian method (potentials form), exact on integer costs.
inline AssignmentSolution solve_hungarian(const CostMatrix& cost)
{
    int n = cost.size();
    AssignmentSolution sol;
    if (n == 0) return sol;

    const std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
    std::vector<std::int64_t> u(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::int64_t> v(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> p(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> way(static_cast<std::size_t>(n) + 1, 0);

    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<std::int64_t> minv(static_cast<std::size_t>(n) + 1, kInf);
        std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
        do {
            used[static_cast<std::size_t>(j0)] = 1;
            int i0 = p[static_cast<std::size_t>(j0)];
            int j1 = 0;
            std::int64_t delta = kInf;
            for (int j = 1; j <= n; ++j)
                if (!used[static_cast<std::size_t>(j)]) {
                    std::int64_t cur = cost.at(i0 - 1, j - 1) - u[static_cast<std::size_t>(i0)] -
                                       v[static_cast<std::size_t>(j)];
                    if (cur < minv[static_cast<std::size_t>(j)]) {
                        minv[static_cast<std::size_t>(j)] = cur;
                        way[static_cast<std::size_t>(j)] = j0;
                    }
                    if (minv[static_cast<std::size_t>(j)] < delta) {
                        delta = minv[static_cast<std::size_t>(j)];
                        j1 = j;
                    }
                }
            for (int j = 0; j <= n; ++j) {
                if (used[static_cast<std::size_t>(j)]) {
                    u[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] += delta;
                    v[static_cast<std::size_t>(j)] -= delta;
                } else {
                    minv[static_cast<std::size_t>(j)] -= delta;
                }
            }
            j0 = j1;
        } while (p[static_cast<std::size_t>(j0)] != 0);
        do {
            int j1 = way[static_cast<std::size_t>(j0)];
            p[static_cast<std::size_t>(j0)] = p[static_cast<std::size_t>(j1)];
            j0 = j1;
        } while (j0);
    }

    sol.perm.assign(static_cast<std::size_t>(n), -1);
    for (int j = 1; j <= n; ++j)
        if (p[static_cast<std::size_t>(j)]) sol.perm[static_cast<std::size_t>(p[static_cast<std::size_t>(j)]) - 1] = j - 1;
    assert(detail::perm_is_bijection(sol.perm));
    for (int i = 0; i < n; ++i) sol.total_cost += cost.at(i, sol.perm[static_cast<std::size_t>(i)]);
    return sol;
}

/// Exhaustive minimum over all n! permutations; ground-truth oracle, n <= 10.
inline AssignmentSolution solve_bruteforce(const CostMatrix& cost)
{
    int n = cost.size();
    if (n > 10) fail(errc::too_large, "brute-force assignment capped at n = 10");
    AssignmentSolution sol;
    if (n == 0) return sol;

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::vector<int> best_perm;
    do {
        std::int64_t total = 0;
        for (int i = 0; i < n; ++i) total += cost.at(i, perm[static_cast<std::size_t>(i)]);
        if (total < best) {
            best = total;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    sol.perm = best_perm;
    sol.total_cost = best;
    assert(detail::perm_is_bijection(sol.perm));
    return sol;
}

struct MaxLegResult {
    std::int64_t total = 0;
    int max_leg = 0;
    bool empty = false; // set for the 0x0 matrix, where no leg exists
};

/// Optimal assignment cost plus the largest single-pair cost over *all*
/// optimal assignments. A cell (i,j) participates in some optimum iff the
/// optimum of the minor without row i / column j plus cost(i,j) equals the
/// full optimum; candidate values are probed in descending order.
inline MaxLegResult min_assignment_cost_with_max_leg(const CostMatrix& cost)
{
    int n = cost.size();
    if (n == 0) return {0, 0, true};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (cost.at(i, j) < 1 || cost.at(i, j) > 3)
                fail(errc::entry_out_of_range, "max-leg search expects entries in {1,2,3}");

    std::int64_t total = solve_auction(cost).total_cost;
    for (std::int64_t leg = 3; leg >= 1; --leg)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (cost.at(i, j) != leg) continue;
                std::int64_t rest = solve_auction(cost.minor(i, j)).total_cost;
                if (rest + leg == total) return {total, static_cast<int>(leg), false};
            }
    fail(errc::invalid_params, "max-leg search found no usable cell"); // unreachable
}

} // namespace ricci
