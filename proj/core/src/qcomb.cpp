#include "srk/qcomb.hpp"

#include <stdexcept>

namespace srk {

Int gaussian_binomial(long n, long k, long q) {
    if (n < 0 || k < 0) throw std::domain_error("gaussian_binomial: negative argument");
    if (q < 2) throw std::domain_error("gaussian_binomial: q must be >= 2");
    if (k > n) return 0;
    // [n k]_q = prod_{i=0}^{k-1} (q^{n-i} - 1) / (q^{i+1} - 1)
    Int num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= ipow(Int(q), n - i) - 1;
        den *= ipow(Int(q), i + 1) - 1;
    }
    return exact_div(num, den);
}

Int rank_count(int n, int m, long q, int r) {
    if (r < 0 || r > std::min(n, m)) throw std::domain_error("rank_count: r out of range");
    Int count = gaussian_binomial(n, r, q);
    for (int i = 0; i < r; ++i) count *= ipow(Int(q), m) - ipow(Int(q), i);
    return count;
}

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is a binomial coefficient at every step
    }
    return r;
}

}  // namespace srk
