#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "srk/exact.hpp"

namespace srk {

// Ambient-space descriptor: t matrix blocks of shape n_i x m_i over F_q.
// Canonical form (established by normalize_params):
//   * every block satisfies n_i <= m_i (blocks are transposed as needed,
//     rank is transpose invariant so the metric space is isometric),
//   * blocks sorted by m descending, ties broken by n descending.
struct params {
    long q = 2;
    std::vector<int> n;
    std::vector<int> m;

    int t() const { return static_cast<int>(n.size()); }

    // sum of row counts; the maximum possible sum-rank (= graph diameter)
    long N() const {
        long s = 0;
        for (int v : n) s += v;
        return s;
    }

    // sum of n_i * m_i; the space has q^weight elements
    long weight() const {
        long s = 0;
        for (size_t i = 0; i < n.size(); ++i) s += long(n[i]) * m[i];
        return s;
    }

    int max_m() const {
        int best = 0;
        for (int v : m) best = std::max(best, v);
        return best;
    }

    Int space_size() const { return ipow(Int(q), weight()); }

    bool operator==(const params&) const = default;
};

enum class param_error {
    not_prime_power,
    empty_sequence,
    non_positive_entry,
    length_mismatch,
};

struct validation_error : std::invalid_argument {
    param_error code;
    validation_error(param_error c, const std::string& what)
        : std::invalid_argument(what), code(c) {}
};

// true iff q = p^e for a prime p and e >= 1; outputs p and e when requested
bool is_prime_power(long q, long* p_out = nullptr, int* e_out = nullptr);

// Validates (q, n, m) and brings the blocks into canonical form.
// Throws validation_error on non-prime-power q, empty or mismatched
// sequences, or non-positive entries.
params normalize_params(long q, std::vector<int> n, std::vector<int> m);

std::string to_string(const params& p);

}  // namespace srk
