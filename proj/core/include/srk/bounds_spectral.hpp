#pragma once

#include <vector>

#include "srk/spectrum.hpp"

namespace srk {

// Polynomial with exact rational coefficients, coefficients[i] multiplying x^i.
using rational_poly = std::vector<Rat>;

Rat eval_poly(const rational_poly& p, const Int& x);

// One evaluation of the ratio-type eigenvalue bound
//   alpha_k <= n * (W(p) - lambda(p)) / (p(theta_0) - lambda(p))
// for a walk-regular graph, where W(p) = (1/n) sum_i m(theta_i) p(theta_i)
// (the constant diagonal of p(A)) and lambda(p) = min_{i>=1} p(theta_i).
struct ratio_type_eval {
    Rat w;            // W(p)
    Rat lam;          // lambda(p)
    Rat bound;        // exact value of the bound
    Int bound_floor;  // floor(bound)
};

// Throws std::domain_error when p(theta_0) = lambda(p) (degenerate ratio).
ratio_type_eval ratio_type_generic(const spectrum& s, const rational_poly& p);

// Optimal degree-2 instance: with theta_i the largest eigenvalue <= -1 and
// theta_{i-1} its predecessor,
//   alpha_2 <= n (theta_0 + theta_i theta_{i-1}) /
//              ((theta_0 - theta_i)(theta_0 - theta_{i-1})),
// floored. Requires at least three distinct eigenvalues.
Int ratio_type_d3(const spectrum& s);

// Optimal degree-3 instance: Delta is the per-vertex closed 3-walk count,
// s the largest index with theta_s >= -(theta_0^2 + theta_0 theta_r - Delta)
// / (theta_0 (theta_r + 1)); the bound is
//   n (Delta - theta_0(theta_s + theta_{s+1} + theta_r)
//      - theta_s theta_{s+1} theta_r) /
//   ((theta_0-theta_s)(theta_0-theta_{s+1})(theta_0-theta_r)),
// floored. Requires at least four distinct eigenvalues.
Int ratio_type_d4(const spectrum& s);

// Closed form of the d=3 ratio-type bound for the family
// n = (n,1,...,1), m = (m,1,...,1) with m >= n >= 1, m >= 2, t >= 2,
// using eps = (t-1) mod q. Agrees with ratio_type_d3 on the family.
Int closed_form_family_d3(long q, int n, int m, int t);

// k-independence bound for a Cartesian product from per-factor values:
// min over l of alpha[l] * prod_{i != l} sizes[i].
Int cartesian_product_bound(const std::vector<Int>& block_alphas,
                            const std::vector<Int>& block_sizes);

}  // namespace srk
