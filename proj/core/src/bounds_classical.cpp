#include "srk/bounds_classical.hpp"

#include <stdexcept>

#include "srk/qcomb.hpp"
#include "srk/spectrum.hpp"

namespace srk {

namespace {

void check_d(const params& p, int d) {
    if (d < 1 || d > p.N()) throw std::domain_error("distance d out of range [1, N]");
}

Int cap_at_space(Int v, const params& p) { return std::min(v, p.space_size()); }

// Hamming ball volume in F_{Q}^N of radius w, Q = q^m.
Int hamming_ball(long N, const Int& Q, long w) {
    Int vol = 0;
    for (long i = 0; i <= w; ++i) vol += binomial(N, i) * ipow(Q - 1, i);
    return vol;
}

}  // namespace

singleton_decomposition singleton_decompose(const params& p, int d) {
    check_d(p, d);
    int rem = d - 1;
    for (int j = 1; j <= p.t(); ++j) {
        if (rem <= p.n[j - 1] - 1) return {j, rem};
        rem -= p.n[j - 1];
    }
    throw std::logic_error("singleton_decompose: unreachable for d <= N");
}

std::optional<projective_decomposition> projective_decompose(const params& p, int d) {
    if (d < 3 || d > p.N()) return std::nullopt;
    int rem = d - 3;
    for (int ell = 0; ell < p.t(); ++ell) {
        if (rem <= p.n[ell] - 1) {
            projective_decomposition out;
            out.ell = ell;
            out.delta_prime = rem;
            out.n_prime.push_back(p.n[ell] - rem);
            for (int i = ell + 1; i < p.t(); ++i) out.n_prime.push_back(p.n[i]);
            for (int i = ell; i < p.t(); ++i) out.m_prime.push_back(p.m[i]);
            return out;
        }
        rem -= p.n[ell];
    }
    return std::nullopt;  // cannot happen for d <= N, kept for safety
}

bound_value induced_singleton(const params& p, int d) {
    check_d(p, d);
    Int v = ipow(Int(p.q), long(p.max_m()) * (p.N() - d + 1));
    return {"is", cap_at_space(v, p)};
}

bound_value induced_hamming(const params& p, int d) {
    check_d(p, d);
    long N = p.N();
    Int Q = ipow(Int(p.q), p.max_m());
    Int v = ipow(Q, N) / hamming_ball(N, Q, (d - 1) / 2);
    return {"ih", cap_at_space(v, p)};
}

bound_value induced_plotkin(const params& p, int d) {
    long N = p.N();
    Int Q = ipow(Int(p.q), p.max_m());
    // applicable iff d > (Q-1)N/Q, compared exactly
    if (Rat(d) <= Rat((Q - 1) * N, Q)) return {"ip", std::nullopt};
    Int v = floor_rat(Rat(Q * d, Q * d - (Q - 1) * N));
    return {"ip", cap_at_space(v, p)};
}

bound_value induced_elias(const params& p, int d) {
    long N = p.N();
    Int Q = ipow(Int(p.q), p.max_m());
    Int full = ipow(Q, N);
    // w runs over the integers in [0, N(Q-1)/Q] with positive denominator
    Int w_max = floor_rat(Rat(N * (Q - 1), Q));
    std::optional<Int> best;
    for (Int w = 0; w <= w_max; ++w) {
        Int den = Q * w * w - 2 * N * w * (Q - 1) + (Q - 1) * N * d;
        if (den <= 0) continue;
        Rat v = Rat(N * d * (Q - 1), den) * Rat(full, hamming_ball(N, Q, w.convert_to<long>()));
        Int fl = floor_rat(v);
        if (!best || fl < *best) best = fl;
    }
    if (!best) return {"ie", std::nullopt};
    return {"ie", cap_at_space(*best, p)};
}

bound_value singleton(const params& p, int d) {
    auto [j, delta] = singleton_decompose(p, d);
    long exp = 0;
    for (int i = j; i <= p.t(); ++i) exp += long(p.n[i - 1]) * p.m[i - 1];
    exp -= long(p.m[j - 1]) * delta;
    return {"singleton", ipow(Int(p.q), exp)};
}

Int ball_volume(const params& p, int r) {
    if (r < 0 || r > p.N()) throw std::domain_error("ball_volume: radius out of range");
    // distribution of sum-rank, by convolution over blocks
    std::vector<Int> dist{1};
    for (int i = 0; i < p.t(); ++i) {
        int cap = std::min(p.n[i], p.m[i]);
        std::vector<Int> by_rank(cap + 1);
        for (int s = 0; s <= cap; ++s) by_rank[s] = rank_count(p.n[i], p.m[i], p.q, s);
        std::vector<Int> next(dist.size() + cap, 0);
        for (size_t w = 0; w < dist.size(); ++w) {
            if (dist[w] == 0) continue;
            for (int s = 0; s <= cap; ++s) next[w + s] += dist[w] * by_rank[s];
        }
        dist = std::move(next);
    }
    Int vol = 0;
    for (int w = 0; w <= r && w < int(dist.size()); ++w) vol += dist[w];
    return vol;
}

bound_value sphere_packing(const params& p, int d) {
    if (d < 1) throw std::domain_error("sphere_packing: d must be >= 1");
    int r = std::min((d - 1) / 2, int(p.N()));
    return {"sp", p.space_size() / ball_volume(p, r)};
}

namespace {

// radius-1 ball (1 + degree) of the space with the given block shapes;
// blocks with zero rows contribute nothing
Int reduced_ball1(long q, const std::vector<int>& n, const std::vector<int>& m) {
    Int qi(q), sum = 0;
    for (size_t i = 0; i < n.size(); ++i) {
        if (n[i] <= 0) continue;
        sum += (ipow(qi, n[i]) - 1) * (ipow(qi, m[i]) - 1);
    }
    return 1 + exact_div(sum, qi - 1);
}

Int reduced_space_size(long q, const std::vector<int>& n, const std::vector<int>& m) {
    long exp = 0;
    for (size_t i = 0; i < n.size(); ++i)
        if (n[i] > 0) exp += long(n[i]) * m[i];
    return ipow(Int(q), exp);
}

}  // namespace

bound_value projective_sphere_packing(const params& p, int d) {
    auto dec = projective_decompose(p, d);
    if (!dec) return {"psp", std::nullopt};
    Int space = reduced_space_size(p.q, dec->n_prime, dec->m_prime);
    return {"psp", space / reduced_ball1(p.q, dec->n_prime, dec->m_prime)};
}

bound_value projective_sphere_packing_blockwise(const params& p, int d) {
    auto dec = projective_decompose(p, d);
    if (!dec) return {"psp_blockwise", std::nullopt};
    std::vector<int> shrunk;  // every remaining block loses delta' rows
    shrunk.reserve(dec->m_prime.size());
    for (int i = dec->ell; i < p.t(); ++i) shrunk.push_back(p.n[i] - dec->delta_prime);
    Int space = reduced_space_size(p.q, dec->n_prime, dec->m_prime);
    return {"psp_blockwise", space / reduced_ball1(p.q, shrunk, dec->m_prime)};
}

bound_value total_distance(const params& p, int d) {
    Rat Q = 0;
    for (int i = 0; i < p.t(); ++i) Q += Rat(1, ipow(Int(p.q), p.m[i]));
    long N = p.N();
    if (Rat(d) <= Rat(N) - Q) return {"td", std::nullopt};
    return {"td", floor_rat(Rat(d - N + p.t()) / (Rat(d - N) + Q))};
}

bound_report all_classical(const params& p, int d) {
    return {induced_singleton(p, d),
            induced_hamming(p, d),
            induced_plotkin(p, d),
            induced_elias(p, d),
            singleton(p, d),
            sphere_packing(p, d),
            projective_sphere_packing(p, d),
            projective_sphere_packing_blockwise(p, d),
            total_distance(p, d)};
}

}  // namespace srk
