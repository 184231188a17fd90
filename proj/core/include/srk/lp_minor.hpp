#pragma once

#include <vector>

#include "srk/spectrum.hpp"

namespace srk {

// Exact linear program behind the minor-polynomial bound on alpha_k:
//   minimize   sum_i m(theta_i) x_i
//   subject to f[theta_0, ..., theta_s] = 0   for s = k+1, ..., r
//              x_i >= 0                       for i = 1, ..., r
// with x_0 fixed to 1 and eliminated by substitution. The equality rows
// are Newton divided differences, linear in the values x_i.
struct minor_lp_problem {
    std::vector<Int> thetas;  // strictly decreasing
    std::vector<Int> mults;
    int k = 0;
    std::vector<std::vector<Rat>> rows;  // coefficients of x_1..x_r, one row per s
    std::vector<Rat> rhs;                // -c_0^(s) after substituting x_0 = 1
    std::vector<Rat> objective;          // m(theta_1), ..., m(theta_r)
    Rat objective_constant;              // m(theta_0) * x_0
};

// Coefficients c_0..c_s of the divided difference f[theta_0,...,theta_s] as
// a linear form in x_0..x_s, via the product closed form
//   c_i = prod_{j <= s, j != i} 1 / (theta_i - theta_j).
// The recursive definition is equivalent; tests check both routes.
std::vector<Rat> divided_difference_row(const std::vector<Int>& thetas, int s);

minor_lp_problem build_minor_lp(const spectrum& s, int k);

enum class lp_status { optimal, infeasible, unbounded };

struct lp_solution {
    lp_status status = lp_status::infeasible;
    std::vector<Rat> x;  // values of x_1..x_r when optimal
    Rat objective_value; // includes the constant term
};

// Exact rational two-phase simplex with Bland's pivoting rule; deterministic
// for a given problem. Infeasibility and unboundedness are statuses.
lp_solution solve_exact(const minor_lp_problem& problem);

// Floor of the optimal objective. Upper-bounds alpha_k: the optimal values
// p(theta_i) = x_i are nonnegative, so lambda(p) >= 0 and the ratio-type
// bound with this p is at most n * W(p) = the objective.
Int lp_bound(const spectrum& s, int k);

}  // namespace srk
