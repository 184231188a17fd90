#include "srk/msrd.hpp"

#include <algorithm>
#include <stdexcept>

#include "srk/bounds_spectral.hpp"
#include "srk/spectrum.hpp"

namespace srk {

Int msrd_threshold_t(long q, int m, int n) {
    if (!(m >= 2 && n >= 1 && m >= n)) throw std::domain_error("msrd_threshold_t: need m >= max(2, n)");
    if (!is_prime_power(q)) throw std::domain_error("msrd_threshold_t: q must be a prime power");
    Int qi(q);
    if (n == 1) return 1 + ipow(qi, m);
    if (n == 2)
        return exact_div(ipow(qi, 2 * m) - ipow(qi, m + 1) - ipow(qi, m) + 2 * qi - 1, qi - 1);
    return exact_div(ipow(qi, 2 * m + 1) - ipow(qi, 2 * m) - ipow(qi, m + n) + ipow(qi, m) +
                         ipow(qi, n) + qi * qi - 3 * qi + 1,
                     (qi - 1) * (qi - 1));
}

const std::vector<std::string> msrd_default_methods = {
    "rt", "is", "ih", "ip", "ie", "sp", "psp_blockwise", "td"};

msrd_verdict msrd_exclusion(const params& p, int d, const std::vector<std::string>& methods) {
    msrd_verdict v;
    v.par = p;
    v.d = d;
    v.singleton_size = *singleton(p, d).value;

    spectrum spec;  // computed lazily, only when a spectral bound is requested
    bool have_spec = false;
    for (const auto& name : methods) {
        std::optional<Int> value;
        if (name == "rt") {
            if (!have_spec) {
                spec = srk_spectrum(p);
                have_spec = true;
            }
            if (d == 3 && spec.r() >= 2) value = ratio_type_d3(spec);
            else if (d == 4 && spec.r() >= 3) value = ratio_type_d4(spec);
        } else if (name == "is") value = induced_singleton(p, d).value;
        else if (name == "ih") value = induced_hamming(p, d).value;
        else if (name == "ip") value = induced_plotkin(p, d).value;
        else if (name == "ie") value = induced_elias(p, d).value;
        else if (name == "sp") value = sphere_packing(p, d).value;
        else if (name == "psp") value = projective_sphere_packing(p, d).value;
        else if (name == "psp_blockwise") value = projective_sphere_packing_blockwise(p, d).value;
        else if (name == "td") value = total_distance(p, d).value;
        else throw std::domain_error("msrd_exclusion: unknown bound name " + name);
        v.bounds[name] = value;
    }

    bool first = true;
    bool others_hold = true;  // every non-rt applicable bound >= singleton
    for (const auto& [name, value] : v.bounds) {
        if (!value) continue;
        if (first || *value < v.best_value) {
            v.best_name = name;
            v.best_value = *value;
            first = false;
        }
        if (name != "rt" && *value < v.singleton_size) others_hold = false;
    }
    v.excluded = !first && v.best_value < v.singleton_size;
    auto rt = v.bounds.find("rt");
    bool rt_excludes =
        rt != v.bounds.end() && rt->second && *rt->second < v.singleton_size;
    v.only_spectral = rt_excludes && others_hold;
    return v;
}

namespace {

// canonical block shapes (m, n) with n <= m, heaviest first
std::vector<std::pair<int, int>> block_types(long q, const Int& max_vertices) {
    std::vector<std::pair<int, int>> types;
    for (int m = 1;; ++m) {
        if (ipow(Int(q), m) > max_vertices) break;
        for (int n = 1; n <= m; ++n)
            if (ipow(Int(q), long(n) * m) <= max_vertices) types.emplace_back(m, n);
    }
    std::sort(types.rbegin(), types.rend());
    return types;
}

void enumerate_shapes(long q, const std::vector<std::pair<int, int>>& types, size_t from,
                      long budget, std::vector<int>& n, std::vector<int>& m,
                      std::vector<params>& out) {
    if (!n.empty()) {
        params p;
        p.q = q;
        p.n = n;
        p.m = m;
        out.push_back(std::move(p));
    }
    for (size_t i = from; i < types.size(); ++i) {
        long w = long(types[i].first) * types[i].second;
        if (w > budget) continue;
        m.push_back(types[i].first);
        n.push_back(types[i].second);
        enumerate_shapes(q, types, i, budget - w, n, m, out);
        m.pop_back();
        n.pop_back();
    }
}

}  // namespace

std::vector<msrd_verdict> msrd_scan(long q, const std::vector<int>& ds, const Int& max_vertices,
                                    bool only_spectral_only,
                                    const std::vector<std::string>& methods) {
    if (!is_prime_power(q)) throw std::domain_error("msrd_scan: q must be a prime power");
    long budget = 0;
    while (ipow(Int(q), budget + 1) <= max_vertices) ++budget;

    auto types = block_types(q, max_vertices);
    std::vector<params> shapes;
    std::vector<int> n, m;
    enumerate_shapes(q, types, 0, budget, n, m, shapes);

    std::vector<msrd_verdict> out;
    for (const auto& p : shapes) {
        bool all_ones = std::all_of(p.n.begin(), p.n.end(), [](int v) { return v == 1; });
        bool const_m = std::all_of(p.m.begin(), p.m.end(), [&](int v) { return v == p.m[0]; });
        if (all_ones || const_m) continue;  // reducible to known settings
        for (int d : ds) {
            if (d < 3 || d > p.N()) continue;
            msrd_verdict v = msrd_exclusion(p, d, methods);
            if (only_spectral_only && !(v.excluded && v.only_spectral)) continue;
            out.push_back(std::move(v));
        }
    }
    std::sort(out.begin(), out.end(), [](const msrd_verdict& a, const msrd_verdict& b) {
        Int va = a.par.space_size(), vb = b.par.space_size();
        if (va != vb) return va < vb;
        if (a.par.n != b.par.n) return a.par.n < b.par.n;
        if (a.par.m != b.par.m) return a.par.m < b.par.m;
        return a.d < b.d;
    });
    return out;
}

}  // namespace srk
