#include "srk/bounds_spectral.hpp"

#include <stdexcept>

namespace srk {

Rat eval_poly(const rational_poly& p, const Int& x) {
    Rat acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * Rat(x) + *it;
    return acc;
}

ratio_type_eval ratio_type_generic(const spectrum& s, const rational_poly& p) {
    if (s.distinct() < 2) throw std::domain_error("ratio_type_generic: need >= 2 eigenvalues");
    Rat w = 0;
    for (const auto& [eigen, mult] : s.entries) w += Rat(mult) * eval_poly(p, eigen);
    w /= Rat(s.vertex_count);

    Rat lam = eval_poly(p, s.theta(1));
    for (int i = 2; i < s.distinct(); ++i) lam = std::min(lam, eval_poly(p, s.theta(i)));

    Rat top = eval_poly(p, s.theta(0));
    if (top == lam) throw std::domain_error("ratio_type_generic: degenerate denominator");
    Rat bound = Rat(s.vertex_count) * (w - lam) / (top - lam);
    return {w, lam, bound, floor_rat(bound)};
}

Int ratio_type_d3(const spectrum& s) {
    if (s.r() < 2) throw std::domain_error("ratio_type_d3: need >= 3 distinct eigenvalues");
    int i = -1;  // position of the largest eigenvalue <= -1
    for (int j = 1; j <= s.r(); ++j) {
        if (s.theta(j) <= -1) {
            i = j;
            break;
        }
    }
    if (i < 1) throw std::domain_error("ratio_type_d3: no eigenvalue <= -1");
    const Int &t0 = s.theta(0), &ti = s.theta(i), &tp = s.theta(i - 1);
    Rat bound = Rat(s.vertex_count * (t0 + ti * tp), (t0 - ti) * (t0 - tp));
    return floor_rat(bound);
}

Int ratio_type_d4(const spectrum& s) {
    if (s.r() < 3) throw std::domain_error("ratio_type_d4: need >= 4 distinct eigenvalues");
    const Int &t0 = s.theta(0), &tr = s.theta(s.r());
    if (tr == -1) throw std::domain_error("ratio_type_d4: theta_r = -1");
    Int delta3 = exact_div(closed_walk_count(s, 3), s.vertex_count);  // walk-regular diagonal

    // threshold -(theta_0^2 + theta_0 theta_r - Delta) / (theta_0 (theta_r + 1))
    Rat threshold = -make_rat(t0 * t0 + t0 * tr - delta3, t0 * (tr + 1));
    int idx = -1;
    for (int j = 0; j <= s.r(); ++j) {
        if (Rat(s.theta(j)) >= threshold) idx = j;
    }
    if (idx < 0 || idx >= s.r()) throw std::domain_error("ratio_type_d4: threshold index out of range");
    const Int &ts = s.theta(idx), &ts1 = s.theta(idx + 1);
    Rat bound = Rat(s.vertex_count * (delta3 - t0 * (ts + ts1 + tr) - ts * ts1 * tr),
                    (t0 - ts) * (t0 - ts1) * (t0 - tr));
    return floor_rat(bound);
}

Int closed_form_family_d3(long q, int n, int m, int t) {
    if (!(m >= 2 && n >= 1 && m >= n && t >= 2))
        throw std::domain_error("closed_form_family_d3: parameters outside the family");
    Int qi(q);
    Int eps((t - 1) % q);
    Int qm1 = qi - 1;
    Int block = (ipow(qi, m) - 1) * (ipow(qi, n) - 1);  // (q^m-1)(q^n-1)

    Int num_inner = qm1 * (eps + 1) * (eps - qi + 1) + block + qm1 * qm1 * (t - 1);
    Int num = ipow(qi, long(m) * n + t - 1) * qm1 * num_inner;
    Int den = (eps * qm1 + block + qm1 * qm1 * (t - 1) + 1) *
              (eps * qm1 + block + qm1 * qm1 * (t - 2));
    return floor_rat(Rat(num, den));
}

Int cartesian_product_bound(const std::vector<Int>& block_alphas,
                            const std::vector<Int>& block_sizes) {
    if (block_alphas.size() != block_sizes.size() || block_alphas.empty())
        throw std::domain_error("cartesian_product_bound: length mismatch");
    Int total = 1;
    for (const Int& v : block_sizes) total *= v;
    std::optional<Int> best;
    for (size_t l = 0; l < block_alphas.size(); ++l) {
        Int candidate = block_alphas[l] * exact_div(total, block_sizes[l]);
        if (!best || candidate < *best) best = candidate;
    }
    return *best;
}

}  // namespace srk
