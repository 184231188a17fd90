#pragma once

#include "srk/exact.hpp"

namespace srk {

// Gaussian binomial coefficient [n k]_q: the number of k-dimensional
// subspaces of F_q^n. Returns 0 for k > n and 1 for k = 0.
Int gaussian_binomial(long n, long k, long q);

// Number of n x m matrices over F_q of rank exactly r,
//   [n r]_q * prod_{i=0}^{r-1} (q^m - q^i).
// Requires 0 <= r <= min(n, m); summed over r this gives q^(n*m).
Int rank_count(int n, int m, long q, int r);

// Ordinary binomial coefficient as an exact integer.
Int binomial(long n, long k);

}  // namespace srk
