#pragma once

#include <optional>
#include <string>
#include <vector>

#include "srk/params.hpp"

namespace srk {

// A named cardinality bound. `value` is absent when the bound's
// applicability condition fails; applicable values are >= 1.
struct bound_value {
    std::string name;
    std::optional<Int> value;

    bool applicable() const { return value.has_value(); }
};

using bound_report = std::vector<bound_value>;

// Decomposition behind the Singleton bound: the unique (j, delta) with
// d-1 = n_1 + ... + n_{j-1} + delta and 0 <= delta <= n_j - 1.
struct singleton_decomposition {
    int j = 0;  // 1-based block index
    int delta = 0;
};
singleton_decomposition singleton_decompose(const params& p, int d);

// Decomposition behind the projective sphere-packing bound: the unique
// (ell, delta') with d-3 = n_1 + ... + n_ell + delta' and
// 0 <= delta' <= n_{ell+1} - 1. ell = 0 and delta' = 0 are allowed.
struct projective_decomposition {
    int ell = 0;
    int delta_prime = 0;
    std::vector<int> n_prime;  // (n_{ell+1} - delta', n_{ell+2}, ..., n_t)
    std::vector<int> m_prime;  // (m_{ell+1}, ..., m_t)
};
std::optional<projective_decomposition> projective_decompose(const params& p, int d);

// Bounds inherited from Hamming-metric codes over F_{q^m}, m = max m_i,
// of length N = sum n_i. Each is capped at the actual space size
// q^(sum n_i m_i), which the embedding argument cannot exceed.
bound_value induced_singleton(const params& p, int d);
bound_value induced_hamming(const params& p, int d);
bound_value induced_plotkin(const params& p, int d);
bound_value induced_elias(const params& p, int d);

bound_value singleton(const params& p, int d);

// Number of matrix tuples with sum-rank <= r (exact ball cardinality),
// via convolution of per-block rank counts.
Int ball_volume(const params& p, int r);

bound_value sphere_packing(const params& p, int d);

// Projective sphere-packing, reduction as stated: puncture blocks
// 1..ell and delta' rows of block ell+1, then pack radius-1 balls of the
// reduced space Mat(n', m').
bound_value projective_sphere_packing(const params& p, int d);

// Variant matching the published comparison tables: the packing
// denominator is the radius-1 ball of the space whose every block is
// shrunk by delta' rows (blocks reaching zero rows drop out). Never
// smaller than projective_sphere_packing.
bound_value projective_sphere_packing_blockwise(const params& p, int d);

bound_value total_distance(const params& p, int d);

// All classical bounds for one (params, d) in canonical order:
// is, ih, ip, ie, singleton, sp, psp, psp_blockwise, td.
bound_report all_classical(const params& p, int d);

}  // namespace srk
