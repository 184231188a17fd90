#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "srk/bounds_classical.hpp"
#include "srk/params.hpp"

namespace srk {

// Largest block count t for which a maximum (Singleton-meeting) code of
// minimum distance 3 can exist in the family n = (n,1,...,1),
// m = (m,1,...,1), m >= n >= 1, m >= 2:
//   n = 1:  1 + q^m
//   n = 2:  (q^{2m} - q^{m+1} - q^m + 2q - 1) / (q - 1)
//   n > 2:  (q^{2m+1} - q^{2m} - q^{m+n} + q^m + q^n + q^2 - 3q + 1) / (q-1)^2
// The divisions are exact; an inexact division would indicate a
// transcription bug and throws.
Int msrd_threshold_t(long q, int m, int n);

struct msrd_verdict {
    params par;
    int d = 0;
    Int singleton_size;
    std::map<std::string, std::optional<Int>> bounds;  // every evaluated bound
    std::string best_name;
    Int best_value;
    bool excluded = false;       // some bound is strictly below the Singleton value
    bool only_spectral = false;  // only the ratio-type bound is
};

// Default comparison set: the ratio-type bound plus the classical catalog
// (projective sphere-packing in the blockwise variant that matches the
// published comparison tables).
extern const std::vector<std::string> msrd_default_methods;

msrd_verdict msrd_exclusion(const params& p, int d,
                            const std::vector<std::string>& methods = msrd_default_methods);

// Scans all canonical parameter shapes with q^(sum n_i m_i) <= max_vertices
// for the given q and distances, skipping shapes where every n_i = 1 and
// shapes with constant m. Rows where the ratio-type bound is the only
// bound beating the Singleton value are flagged. Output is sorted by
// vertex count, then lexicographically by (n, m, d).
std::vector<msrd_verdict> msrd_scan(long q, const std::vector<int>& ds, const Int& max_vertices,
                                    bool only_spectral_only = true,
                                    const std::vector<std::string>& methods = msrd_default_methods);

}  // namespace srk
