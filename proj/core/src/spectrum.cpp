#include "srk/spectrum.hpp"

#include <map>
#include <stdexcept>

namespace srk {

spectrum bilinear_spectrum(int n, int m, long q) {
    if (n < 1 || n > m) throw std::domain_error("bilinear_spectrum: requires 1 <= n <= m");
    Int qi(q);
    spectrum s;
    s.vertex_count = ipow(qi, long(n) * m);
    Int mult = 1;
    for (int i = 0; i <= n; ++i) {
        Int eigen = exact_div((ipow(qi, n - i) - 1) * (ipow(qi, m) - ipow(qi, i)) - ipow(qi, i) + 1,
                              qi - 1);
        s.entries.emplace_back(eigen, mult);
        if (i < n)  // extend the multiplicity product by the s = i factor
            mult = exact_div(mult * (ipow(qi, n - i) - 1) * (ipow(qi, m) - ipow(qi, i)),
                             ipow(qi, i + 1) - 1);
    }
    return s;  // eigenvalues are strictly decreasing in i by construction
}

spectrum product_spectrum(const spectrum& a, const spectrum& b) {
    std::map<Int, Int, std::greater<Int>> sums;
    for (const auto& [ea, ma] : a.entries)
        for (const auto& [eb, mb] : b.entries) sums[ea + eb] += ma * mb;
    spectrum s;
    s.vertex_count = a.vertex_count * b.vertex_count;
    s.entries.assign(sums.begin(), sums.end());
    return s;
}

spectrum srk_spectrum(const params& p) {
    spectrum acc = bilinear_spectrum(p.n[0], p.m[0], p.q);
    for (int i = 1; i < p.t(); ++i)
        acc = product_spectrum(acc, bilinear_spectrum(p.n[i], p.m[i], p.q));
    return acc;
}

Int regularity_delta(const params& p) {
    Int qi(p.q), sum = 0;
    for (int i = 0; i < p.t(); ++i) sum += (ipow(qi, p.n[i]) - 1) * (ipow(qi, p.m[i]) - 1);
    return exact_div(sum, qi - 1);
}

Int closed_walk_count(const spectrum& s, int l) {
    if (l < 0) throw std::domain_error("closed_walk_count: l must be >= 0");
    Int total = 0;
    for (const auto& [eigen, mult] : s.entries) total += mult * ipow(eigen, l);
    return total;
}

drg_classification classify_distance_regular(const params& p) {
    Int qi(p.q);
    if (p.t() == 1) {
        int n = p.n[0], m = p.m[0];
        intersection_array arr;
        arr.diameter = n;
        for (int i = 0; i < n; ++i)
            arr.b.push_back(exact_div(ipow(qi, 2 * i) * (ipow(qi, m - i) - 1) * (ipow(qi, n - i) - 1),
                                      qi - 1));
        for (int i = 1; i <= n; ++i)
            arr.c.push_back(exact_div(ipow(qi, i - 1) * (ipow(qi, i) - 1), qi - 1));
        return {true, std::move(arr)};
    }
    bool hamming_like = true;
    for (int i = 0; i < p.t(); ++i)
        if (p.n[i] != 1 || p.m[i] != p.m[0]) hamming_like = false;
    if (!hamming_like) return {false, std::nullopt};

    int t = p.t(), m = p.m[0];
    intersection_array arr;
    arr.diameter = t;
    for (int i = 0; i < t; ++i) arr.b.push_back(Int(t - i) * (ipow(qi, m) - 1));
    for (int i = 1; i <= t; ++i) arr.c.push_back(i);
    return {true, std::move(arr)};
}

}  // namespace srk
