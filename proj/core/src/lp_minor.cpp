#include "srk/lp_minor.hpp"

#include <stdexcept>

namespace srk {

std::vector<Rat> divided_difference_row(const std::vector<Int>& thetas, int s) {
    if (s < 1 || s >= int(thetas.size()))
        throw std::domain_error("divided_difference_row: s out of range");
    std::vector<Rat> coeffs(s + 1);
    for (int i = 0; i <= s; ++i) {
        Int prod = 1;
        for (int j = 0; j <= s; ++j) {
            if (j == i) continue;
            Int diff = thetas[i] - thetas[j];
            if (diff == 0) throw std::domain_error("divided_difference_row: repeated node");
            prod *= diff;
        }
        coeffs[i] = make_rat(1, prod);
    }
    return coeffs;
}

minor_lp_problem build_minor_lp(const spectrum& s, int k) {
    int r = s.r();
    if (k < 1 || k > r) throw std::domain_error("build_minor_lp: k out of range");
    minor_lp_problem p;
    p.k = k;
    for (const auto& [eigen, mult] : s.entries) {
        p.thetas.push_back(eigen);
        p.mults.push_back(mult);
    }
    for (int i = 1; i <= r; ++i) p.objective.emplace_back(p.mults[i]);
    p.objective_constant = Rat(p.mults[0]);
    for (int ord = k + 1; ord <= r; ++ord) {
        auto c = divided_difference_row(p.thetas, ord);
        std::vector<Rat> row(r, Rat(0));
        for (int i = 1; i <= ord; ++i) row[i - 1] = c[i];
        p.rows.push_back(std::move(row));
        p.rhs.push_back(-c[0]);
    }
    return p;
}

namespace {

// Dense two-phase simplex in exact rationals: min c.x  s.t.  A x = b, x >= 0.
// Bland's rule (lowest eligible index) for both entering and leaving
// variables excludes cycling and makes the result deterministic.
struct simplex_tableau {
    int nrows, ncols;                // constraint rows, structural columns
    std::vector<std::vector<Rat>> a; // nrows x ncols
    std::vector<Rat> b;              // nrows
    std::vector<int> basis;          // basic column per row

    void pivot(int row, int col) {
        Rat inv = Rat(1) / a[row][col];
        for (auto& v : a[row]) v *= inv;
        b[row] *= inv;
        for (int i = 0; i < nrows; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (int j = 0; j < ncols; ++j) a[i][j] -= f * a[row][j];
            b[i] -= f * b[row];
        }
        basis[row] = col;
    }

    // Minimize cost over the current basis. Returns false on unbounded.
    bool run(const std::vector<Rat>& cost, Rat& value) {
        for (;;) {
            // reduced costs: z_j = c_j - c_B . B^{-1} A_j
            std::vector<Rat> y(nrows);  // multipliers c_B (basis costs)
            for (int i = 0; i < nrows; ++i) y[i] = cost[basis[i]];
            int enter = -1;
            for (int j = 0; j < ncols && enter < 0; ++j) {
                Rat red = cost[j];
                for (int i = 0; i < nrows; ++i)
                    if (a[i][j] != 0) red -= y[i] * a[i][j];
                if (red < 0) enter = j;  // Bland: first negative reduced cost
            }
            if (enter < 0) {
                value = 0;
                for (int i = 0; i < nrows; ++i) value += cost[basis[i]] * b[i];
                return true;
            }
            int leave = -1;
            Rat best_ratio;
            for (int i = 0; i < nrows; ++i) {
                if (a[i][enter] <= 0) continue;
                Rat ratio = b[i] / a[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return false;  // unbounded direction
            pivot(leave, enter);
        }
    }
};

}  // namespace

lp_solution solve_exact(const minor_lp_problem& problem) {
    int m = int(problem.rows.size());
    int n = int(problem.objective.size());
    lp_solution sol;
    if (m == 0) {
        // nonnegative objective coefficients, no constraints: optimum at 0
        sol.status = lp_status::optimal;
        sol.x.assign(n, Rat(0));
        sol.objective_value = problem.objective_constant;
        return sol;
    }

    simplex_tableau t;
    t.nrows = m;
    t.ncols = n + m;  // structural + artificial columns
    t.a.assign(m, std::vector<Rat>(t.ncols, Rat(0)));
    t.b.resize(m);
    t.basis.resize(m);
    for (int i = 0; i < m; ++i) {
        Rat sign = problem.rhs[i] < 0 ? Rat(-1) : Rat(1);
        for (int j = 0; j < n; ++j) t.a[i][j] = sign * problem.rows[i][j];
        t.b[i] = sign * problem.rhs[i];
        t.a[i][n + i] = 1;
        t.basis[i] = n + i;
    }

    // phase 1: minimize the sum of artificials
    std::vector<Rat> phase1(t.ncols, Rat(0));
    for (int j = n; j < t.ncols; ++j) phase1[j] = 1;
    Rat p1value;
    if (!t.run(phase1, p1value)) throw std::logic_error("solve_exact: phase 1 unbounded");
    if (p1value != 0) {
        sol.status = lp_status::infeasible;
        return sol;
    }
    // drive leftover artificials out of the basis (degenerate rows)
    for (int i = 0; i < m; ++i) {
        if (t.basis[i] < n) continue;
        int col = -1;
        for (int j = 0; j < n && col < 0; ++j)
            if (t.a[i][j] != 0) col = j;
        if (col >= 0) t.pivot(i, col);
        // an all-zero row is a redundant constraint; its artificial stays
        // basic at value 0 and never re-enters (phase 2 cost below blocks it)
    }

    // phase 2: original objective; artificials priced out of contention
    std::vector<Rat> phase2(t.ncols, Rat(0));
    for (int j = 0; j < n; ++j) phase2[j] = problem.objective[j];
    // forbid artificial columns from re-entering by zeroing them in every row
    for (int i = 0; i < m; ++i)
        for (int j = n; j < t.ncols; ++j)
            if (t.basis[i] != j) t.a[i][j] = 0;
    Rat p2value;
    if (!t.run(phase2, p2value)) {
        sol.status = lp_status::unbounded;
        return sol;
    }
    sol.status = lp_status::optimal;
    sol.x.assign(n, Rat(0));
    for (int i = 0; i < m; ++i)
        if (t.basis[i] < n) sol.x[t.basis[i]] = t.b[i];
    sol.objective_value = problem.objective_constant + p2value;
    return sol;
}

Int lp_bound(const spectrum& s, int k) {
    auto sol = solve_exact(build_minor_lp(s, k));
    if (sol.status != lp_status::optimal)
        throw std::logic_error("lp_bound: minor LP should always be feasible and bounded");
    return floor_rat(sol.objective_value);
}

}  // namespace srk
