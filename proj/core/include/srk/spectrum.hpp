#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "srk/params.hpp"

namespace srk {

// Adjacency spectrum of a sum-rank-metric graph: distinct integer
// eigenvalues with big-integer multiplicities, eigenvalues strictly
// decreasing. theta(0) is the degree of the (connected, regular) graph and
// has multiplicity 1; multiplicities sum to the vertex count and the
// weighted eigenvalue sum (the trace) is zero.
struct spectrum {
    std::vector<std::pair<Int, Int>> entries;  // (eigenvalue, multiplicity)
    Int vertex_count = 0;

    int distinct() const { return static_cast<int>(entries.size()); }
    int r() const { return distinct() - 1; }
    const Int& theta(int i) const { return entries[i].first; }
    const Int& mult(int i) const { return entries[i].second; }
};

// Spectrum of the rank-metric (bilinear forms) graph on n x m matrices
// over F_q, 1 <= n <= m: the n+1 eigenvalues
//   theta_i = ((q^{n-i}-1)(q^m-q^i) - q^i + 1) / (q-1)
// with multiplicities prod_{s<i} (q^{n-s}-1)(q^m-q^s)/(q^{s+1}-1).
spectrum bilinear_spectrum(int n, int m, long q);

// Spectrum of the Cartesian product of two graphs given by spectra:
// all pairwise eigenvalue sums, multiplicities of colliding sums added.
spectrum product_spectrum(const spectrum& a, const spectrum& b);

// Full spectrum of the sum-rank-metric graph for the given parameters
// (iterated product of the block spectra).
spectrum srk_spectrum(const params& p);

// Degree of the sum-rank-metric graph:
//   delta = (1/(q-1)) * sum_i (q^{n_i}-1)(q^{m_i}-1).
Int regularity_delta(const params& p);

// Total number of closed walks of length l, sum_i m(theta_i) * theta_i^l.
// Divisible by the vertex count for walk-regular graphs.
Int closed_walk_count(const spectrum& s, int l);

struct intersection_array {
    std::vector<Int> b;  // b_0 .. b_{D-1}
    std::vector<Int> c;  // c_1 .. c_D
    int diameter = 0;
};

struct drg_classification {
    bool is_drg = false;
    std::optional<intersection_array> array;
};

// Distance-regularity of the sum-rank-metric graph. For t >= 2 the graph is
// distance-regular iff all n_i = 1 and all m_i are equal (then b_i =
// (t-i)(q^m-1), c_i = i, diameter t). For t = 1 it always is, with
//   b_i = q^{2i}(q^{m-i}-1)(q^{n-i}-1)/(q-1),  c_i = q^{i-1}(q^i-1)/(q-1)
// and diameter n.
drg_classification classify_distance_regular(const params& p);

}  // namespace srk
