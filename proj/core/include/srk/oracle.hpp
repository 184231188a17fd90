#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "srk/params.hpp"
#include "srk/spectrum.hpp"

namespace srk {

// Explicit arithmetic tables for F_q, q = p^e. Element indices 0..q-1; index
// 0 is the field zero. For e >= 2 an index encodes the base-p coefficient
// vector of a polynomial of degree < e, and arithmetic is modulo the
// lexicographically smallest primitive polynomial of degree e. The modulus
// choice only relabels elements; ranks and counts are unaffected.
struct field_table {
    long q = 0;
    long p = 0;
    int e = 1;
    std::vector<uint16_t> add_t;  // q*q
    std::vector<uint16_t> mul_t;  // q*q
    std::vector<uint16_t> neg_t;  // q
    std::vector<uint16_t> inv_t;  // q, inv_t[0] unused
    std::vector<int> modulus;     // coefficients c_0..c_e of the modulus (e >= 2)

    uint16_t add(uint16_t a, uint16_t b) const { return add_t[size_t(a) * q + b]; }
    uint16_t mul(uint16_t a, uint16_t b) const { return mul_t[size_t(a) * q + b]; }
    uint16_t neg(uint16_t a) const { return neg_t[a]; }
    uint16_t inv(uint16_t a) const { return inv_t[a]; }
    uint16_t sub(uint16_t a, uint16_t b) const { return add(a, neg(b)); }
};

// Builds the tables; q must be a prime power <= 4096.
field_table make_field(long q);

// One element of the matrix-tuple space: per block, a row-major array of
// field element indices.
struct matrix_tuple {
    std::vector<std::vector<uint16_t>> blocks;
};

// Rank of one block by Gaussian elimination over the field tables.
int matrix_rank(const field_table& f, std::vector<uint16_t> mat, int rows, int cols);

// Sum of the block ranks.
int srk_weight(const field_table& f, const params& p, const matrix_tuple& x);

// srk weight of the blockwise difference.
int srk_distance(const field_table& f, const params& p, const matrix_tuple& x,
                 const matrix_tuple& y);

struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The explicit sum-rank-metric graph. Vertices are the q^(sum n_i m_i)
// matrix tuples in a fixed mixed-radix enumeration (blocks in normalized
// order, row-major within a block). Adjacency is built by translating the
// connecting set S = { tuples of sum-rank 1 }: this is a Cayley graph over
// the additive group, so x ~ y iff y = x + s for some s in S.
struct oracle_graph {
    params par;
    field_table field;
    uint32_t vcount = 0;
    std::vector<uint32_t> connecting;    // vertex ids of the sum-rank-1 tuples
    std::vector<uint8_t> weight_of;      // srk weight per vertex
    std::vector<uint16_t> digits;        // vcount * ndigits element indices
    int ndigits = 0;
    size_t words = 0;                    // 64-bit words per adjacency row
    std::vector<uint64_t> adj;           // vcount rows

    bool adjacent(uint32_t u, uint32_t v) const {
        return (adj[size_t(u) * words + (v >> 6)] >> (v & 63)) & 1;
    }
    long degree(uint32_t v) const;

    matrix_tuple decode(uint32_t id) const;
    uint32_t encode(const matrix_tuple& x) const;
    // digit-wise field addition of vertex ids (the Cayley translation)
    uint32_t translate(uint32_t v, uint32_t s) const;

    Int edge_count() const;
};

// Builds the explicit graph; throws cap_exceeded if the space has more than
// `limit` elements.
oracle_graph build_graph(const params& p, uint64_t limit = uint64_t(1) << 16);

// BFS distances from a source over the explicit adjacency.
std::vector<int> geodesic_distances(const oracle_graph& g, uint32_t source);

struct alpha_result {
    long value = 0;  // exact alpha_k, or the best lower bound found
    bool exact = false;
};

// Maximum k-independent set size: builds the k-th power graph (adjacent iff
// distance <= k) and runs branch-and-bound with a greedy colouring upper
// bound on its complement. Deterministic; budget exhaustion returns the
// best set found with exact = false.
alpha_result exact_alpha_k(const oracle_graph& g, int k, double budget_seconds = 60.0);

// Per-vertex closed walk counts for lengths 0..L (L <= 6).
std::vector<Int> closed_walks_from(const oracle_graph& g, uint32_t v, int L);

struct regularity_report {
    bool degrees_ok = false;
    bool walk_regular_ok = false;          // diagonal of A^l constant, l <= L
    bool trace_matches_spectrum = false;   // V * diagonal == spectral walk count
    bool drg_matches_classification = false;
    std::string detail;                    // witness description on failure

    bool all_ok() const {
        return degrees_ok && walk_regular_ok && trace_matches_spectrum &&
               drg_matches_classification;
    }
};

// Checks delta-regularity, walk-regularity up to length L against the
// spectrum, and the distance-regularity classification against a layered
// distance partition (with a witness when 2-partial regularity fails).
regularity_report verify_regularities(const oracle_graph& g, const spectrum& s, int L);

// Wrapper used by the distance-partition check: constancy of c_i/a_i/b_i
// per distance layer from one source (source choice is immaterial for a
// Cayley graph). Returns either the per-layer arrays or a witness pair.
struct partition_check {
    bool regular = false;
    std::vector<Int> b, c;            // when regular
    uint32_t witness_u = 0, witness_v = 0;  // layer-mates with differing counts
    int witness_layer = 0;
};
partition_check distance_partition_check(const oracle_graph& g, uint32_t source);

// Edge list dump: header "srk-graph q=<q> n=<csv> m=<csv> V=<count>",
// then one "u v" line per edge with u < v.
void dump_graph(const oracle_graph& g, std::ostream& os);

}  // namespace srk
