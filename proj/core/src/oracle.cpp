#include "srk/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <ostream>
#include <stdexcept>

namespace srk {

// ---------------------------------------------------------------- fields

namespace {

// polynomial multiplication modulo the degree-e modulus, coefficients mod p
int poly_mul(const std::vector<int>& mod_poly, long p, int e, int a, int b) {
    std::vector<int> da(e), db(e), prod(2 * e - 1, 0);
    for (int i = 0; i < e; ++i, a /= p) da[i] = a % p;
    for (int i = 0; i < e; ++i, b /= p) db[i] = b % p;
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = int((prod[i + j] + long(da[i]) * db[j]) % p);
    // reduce: x^e = -(c_{e-1} x^{e-1} + ... + c_0)
    for (int d = 2 * e - 2; d >= e; --d) {
        long coeff = prod[d];
        if (coeff == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < e; ++i)
            prod[d - e + i] = int(((prod[d - e + i] - coeff * mod_poly[i]) % p + p) % p);
    }
    int out = 0;
    for (int i = e - 1; i >= 0; --i) out = int(out * p + prod[i]);
    return out;
}

}  // namespace

field_table make_field(long q) {
    long p = 0;
    int e = 0;
    if (!is_prime_power(q, &p, &e)) throw std::domain_error("make_field: q is not a prime power");
    if (q > 4096) throw std::domain_error("make_field: q too large for explicit tables");

    field_table f;
    f.q = q;
    f.p = p;
    f.e = e;
    f.add_t.assign(size_t(q) * q, 0);
    f.mul_t.assign(size_t(q) * q, 0);
    f.neg_t.assign(q, 0);
    f.inv_t.assign(q, 0);

    // addition is coefficient-wise mod p in base-p digits of the index
    for (long a = 0; a < q; ++a) {
        for (long b = 0; b < q; ++b) {
            long s = 0, pw = 1, x = a, y = b;
            for (int i = 0; i < e; ++i, x /= p, y /= p, pw *= p) s += ((x + y) % p) * pw;
            f.add_t[size_t(a) * q + b] = uint16_t(s);
        }
        long s = 0, pw = 1, x = a;
        for (int i = 0; i < e; ++i, x /= p, pw *= p) s += ((p - x % p) % p) * pw;
        f.neg_t[a] = uint16_t(s);
    }

    if (e == 1) {
        for (long a = 0; a < q; ++a)
            for (long b = 0; b < q; ++b) f.mul_t[size_t(a) * q + b] = uint16_t(a * b % p);
    } else {
        // smallest monic modulus (by base-p encoding of the low coefficients)
        // whose powers of x run through all q-1 nonzero elements
        std::vector<int> mod_poly(e);
        bool found = false;
        for (long enc = 0; enc < q && !found; ++enc) {
            long v = enc;
            for (int i = 0; i < e; ++i, v /= p) mod_poly[i] = int(v % p);
            std::vector<char> seen(q, 0);
            int x = int(p);  // the element "x"
            int cur = 1;
            long order = 0;
            bool ok = true;
            for (long i = 1; i <= q - 1; ++i) {
                cur = poly_mul(mod_poly, p, e, cur, x);
                if (cur == 0 || seen[cur]) {
                    ok = false;
                    break;
                }
                seen[cur] = 1;
                if (cur == 1) {
                    order = i;
                    break;
                }
            }
            if (ok && order == q - 1) {
                found = true;
                f.modulus.assign(mod_poly.begin(), mod_poly.end());
                f.modulus.push_back(1);  // leading x^e coefficient
            }
        }
        if (!found) throw std::logic_error("make_field: no primitive polynomial found");
        std::vector<int> low(f.modulus.begin(), f.modulus.end() - 1);
        for (long a = 0; a < q; ++a)
            for (long b = a; b < q; ++b) {
                uint16_t v = uint16_t(poly_mul(low, p, e, int(a), int(b)));
                f.mul_t[size_t(a) * q + b] = v;
                f.mul_t[size_t(b) * q + a] = v;
            }
    }
    for (long a = 1; a < q; ++a)
        for (long b = 1; b < q; ++b)
            if (f.mul(uint16_t(a), uint16_t(b)) == 1) {
                f.inv_t[a] = uint16_t(b);
                break;
            }
    return f;
}

int matrix_rank(const field_table& f, std::vector<uint16_t> mat, int rows, int cols) {
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (mat[size_t(r) * cols + col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        for (int c = 0; c < cols; ++c)
            std::swap(mat[size_t(rank) * cols + c], mat[size_t(piv) * cols + c]);
        uint16_t inv = f.inv(mat[size_t(rank) * cols + col]);
        for (int r = rank + 1; r < rows; ++r) {
            uint16_t factor = f.mul(mat[size_t(r) * cols + col], inv);
            if (factor == 0) continue;
            for (int c = col; c < cols; ++c) {
                uint16_t sub = f.mul(factor, mat[size_t(rank) * cols + c]);
                mat[size_t(r) * cols + c] = f.sub(mat[size_t(r) * cols + c], sub);
            }
        }
        ++rank;
    }
    return rank;
}

int srk_weight(const field_table& f, const params& p, const matrix_tuple& x) {
    if (int(x.blocks.size()) != p.t()) throw std::domain_error("srk_weight: shape mismatch");
    int total = 0;
    for (int i = 0; i < p.t(); ++i) {
        if (int(x.blocks[i].size()) != p.n[i] * p.m[i])
            throw std::domain_error("srk_weight: block shape mismatch");
        total += matrix_rank(f, x.blocks[i], p.n[i], p.m[i]);
    }
    return total;
}

int srk_distance(const field_table& f, const params& p, const matrix_tuple& x,
                 const matrix_tuple& y) {
    if (x.blocks.size() != y.blocks.size()) throw std::domain_error("srk_distance: shape mismatch");
    matrix_tuple diff;
    diff.blocks.resize(x.blocks.size());
    for (size_t i = 0; i < x.blocks.size(); ++i) {
        if (x.blocks[i].size() != y.blocks[i].size())
            throw std::domain_error("srk_distance: shape mismatch");
        diff.blocks[i].resize(x.blocks[i].size());
        for (size_t j = 0; j < x.blocks[i].size(); ++j)
            diff.blocks[i][j] = f.sub(x.blocks[i][j], y.blocks[i][j]);
    }
    return srk_weight(f, p, diff);
}

// ---------------------------------------------------------------- graph

long oracle_graph::degree(uint32_t v) const {
    long d = 0;
    const uint64_t* row = adj.data() + size_t(v) * words;
    for (size_t w = 0; w < words; ++w) d += __builtin_popcountll(row[w]);
    return d;
}

matrix_tuple oracle_graph::decode(uint32_t id) const {
    matrix_tuple x;
    x.blocks.resize(par.t());
    const uint16_t* d = digits.data() + size_t(id) * ndigits;
    int pos = 0;
    for (int i = 0; i < par.t(); ++i) {
        x.blocks[i].assign(d + pos, d + pos + par.n[i] * par.m[i]);
        pos += par.n[i] * par.m[i];
    }
    return x;
}

uint32_t oracle_graph::encode(const matrix_tuple& x) const {
    uint64_t id = 0;
    uint64_t place = 1;
    for (int i = 0; i < par.t(); ++i)
        for (uint16_t v : x.blocks[i]) {
            id += uint64_t(v) * place;
            place *= uint64_t(par.q);
        }
    return uint32_t(id);
}

uint32_t oracle_graph::translate(uint32_t v, uint32_t s) const {
    if (field.p == 2) return v ^ s;  // base-p digits pack into disjoint bits
    const uint16_t* dv = digits.data() + size_t(v) * ndigits;
    const uint16_t* ds = digits.data() + size_t(s) * ndigits;
    uint64_t id = 0, place = 1;
    for (int j = 0; j < ndigits; ++j, place *= uint64_t(par.q))
        id += uint64_t(field.add(dv[j], ds[j])) * place;
    return uint32_t(id);
}

Int oracle_graph::edge_count() const {
    Int total = 0;
    for (uint32_t v = 0; v < vcount; ++v) total += degree(v);
    return total / 2;
}

oracle_graph build_graph(const params& p, uint64_t limit) {
    Int size = p.space_size();
    if (size > limit)
        throw cap_exceeded("build_graph: space size " + size.str() + " exceeds vertex cap " +
                           std::to_string(limit));
    oracle_graph g;
    g.par = p;
    g.field = make_field(p.q);
    g.vcount = size.convert_to<uint32_t>();
    g.ndigits = int(p.weight());

    // mixed-radix odometer over element indices
    g.digits.assign(size_t(g.vcount) * g.ndigits, 0);
    for (uint32_t v = 1; v < g.vcount; ++v) {
        const uint16_t* prev = g.digits.data() + size_t(v - 1) * g.ndigits;
        uint16_t* cur = g.digits.data() + size_t(v) * g.ndigits;
        std::copy(prev, prev + g.ndigits, cur);
        for (int j = 0; j < g.ndigits; ++j) {
            if (++cur[j] < p.q) break;
            cur[j] = 0;
        }
    }

    // per-vertex sum-rank weight; the connecting set is the weight-1 sphere
    g.weight_of.assign(g.vcount, 0);
    std::vector<uint16_t> scratch;
    for (uint32_t v = 0; v < g.vcount; ++v) {
        const uint16_t* d = g.digits.data() + size_t(v) * g.ndigits;
        int total = 0, pos = 0;
        for (int i = 0; i < p.t(); ++i) {
            scratch.assign(d + pos, d + pos + p.n[i] * p.m[i]);
            total += matrix_rank(g.field, scratch, p.n[i], p.m[i]);
            pos += p.n[i] * p.m[i];
        }
        g.weight_of[v] = uint8_t(total);
        if (total == 1) g.connecting.push_back(v);
    }

    g.words = (size_t(g.vcount) + 63) / 64;
    g.adj.assign(size_t(g.vcount) * g.words, 0);
    for (uint32_t v = 0; v < g.vcount; ++v) {
        uint64_t* row = g.adj.data() + size_t(v) * g.words;
        for (uint32_t s : g.connecting) {
            uint32_t u = g.translate(v, s);
            row[u >> 6] |= uint64_t(1) << (u & 63);
        }
    }
    return g;
}

std::vector<int> geodesic_distances(const oracle_graph& g, uint32_t source) {
    std::vector<int> dist(g.vcount, -1);
    std::deque<uint32_t> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        uint32_t v = queue.front();
        queue.pop_front();
        const uint64_t* row = g.adj.data() + size_t(v) * g.words;
        for (size_t w = 0; w < g.words; ++w) {
            uint64_t bits = row[w];
            while (bits) {
                uint32_t u = uint32_t(w * 64 + __builtin_ctzll(bits));
                bits &= bits - 1;
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
    }
    return dist;
}

// ------------------------------------------------------ independence number

namespace {

// Branch-and-bound maximum clique (run on the complement of the power
// graph, where a clique is a k-independent set). Candidates are coloured
// greedily; a branch is cut when depth + colour bound cannot beat the
// incumbent. Vertex order and tie-breaks are fixed, so results are
// reproducible run to run.
struct clique_solver {
    uint32_t n;
    size_t words;
    std::vector<uint64_t> rows;  // adjacency of the (relabelled) complement
    long best = 0;
    bool aborted = false;
    uint64_t nodes = 0;
    std::chrono::steady_clock::time_point deadline;
    // per-depth scratch; deques keep references stable while deeper
    // recursion levels extend them
    std::deque<std::vector<uint64_t>> pool;
    std::deque<std::vector<uint32_t>> order_pool;
    std::deque<std::vector<long>> bound_pool;

    const uint64_t* row(uint32_t v) const { return rows.data() + size_t(v) * words; }

    bool empty(const std::vector<uint64_t>& set) const {
        for (uint64_t w : set)
            if (w) return false;
        return true;
    }

    void expand(int depth, const std::vector<uint64_t>& cand) {
        if (((++nodes) & 1023) == 0 && std::chrono::steady_clock::now() > deadline) {
            aborted = true;
            return;
        }
        if (empty(cand)) {
            best = std::max(best, long(depth));
            return;
        }
        while (int(pool.size()) <= depth) {
            pool.emplace_back(words);
            order_pool.emplace_back();
            bound_pool.emplace_back();
        }
        auto& order = order_pool[depth];
        auto& bound = bound_pool[depth];
        order.clear();
        bound.clear();

        // greedy colouring: peel independent classes off the candidate set
        std::vector<uint64_t> todo = cand;
        std::vector<uint64_t> cls(words);
        long colour = 0;
        while (!empty(todo)) {
            ++colour;
            cls = todo;
            while (true) {
                uint32_t v = UINT32_MAX;
                for (size_t w = 0; w < words && v == UINT32_MAX; ++w)
                    if (cls[w]) v = uint32_t(w * 64 + __builtin_ctzll(cls[w]));
                if (v == UINT32_MAX) break;
                order.push_back(v);
                bound.push_back(colour);
                todo[v >> 6] &= ~(uint64_t(1) << (v & 63));
                cls[v >> 6] &= ~(uint64_t(1) << (v & 63));
                const uint64_t* rv = row(v);
                for (size_t w = 0; w < words; ++w) cls[w] &= ~rv[w];
            }
        }

        std::vector<uint64_t> local = cand;
        auto& next = pool[depth];
        for (size_t idx = order.size(); idx-- > 0;) {
            if (aborted) return;
            if (depth + bound[idx] <= best) return;  // colour bound prune
            uint32_t v = order[idx];
            const uint64_t* rv = row(v);
            for (size_t w = 0; w < words; ++w) next[w] = local[w] & rv[w];
            expand(depth + 1, next);
            local[v >> 6] &= ~(uint64_t(1) << (v & 63));
        }
    }
};

}  // namespace

alpha_result exact_alpha_k(const oracle_graph& g, int k, double budget_seconds) {
    if (k < 1) throw std::domain_error("exact_alpha_k: k must be >= 1");
    const uint32_t V = g.vcount;
    const size_t words = g.words;

    std::vector<int> dist0 = geodesic_distances(g, 0);
    std::vector<uint32_t> ball;  // nonzero vertices within distance k of 0
    for (uint32_t v = 1; v < V; ++v)
        if (dist0[v] >= 0 && dist0[v] <= k) ball.push_back(v);

    // power graph rows by Cayley translation: u ~ v iff v - u is in the ball
    std::vector<uint64_t> power(size_t(V) * words, 0);
    for (uint32_t v = 0; v < V; ++v) {
        uint64_t* row = power.data() + size_t(v) * words;
        for (uint32_t x : ball) {
            uint32_t u = g.translate(v, x);
            row[u >> 6] |= uint64_t(1) << (u & 63);
        }
    }

    // order by descending power-graph degree, ties by vertex index
    std::vector<long> pdeg(V, 0);
    for (uint32_t v = 0; v < V; ++v) {
        const uint64_t* row = power.data() + size_t(v) * words;
        for (size_t w = 0; w < words; ++w) pdeg[v] += __builtin_popcountll(row[w]);
    }
    std::vector<uint32_t> perm(V);
    for (uint32_t v = 0; v < V; ++v) perm[v] = v;
    std::stable_sort(perm.begin(), perm.end(),
                     [&](uint32_t a, uint32_t b) { return pdeg[a] > pdeg[b]; });

    // complement of the power graph in the new labels
    clique_solver solver;
    solver.n = V;
    solver.words = words;
    solver.rows.assign(size_t(V) * words, 0);
    for (uint32_t i = 0; i < V; ++i) {
        const uint64_t* prow = power.data() + size_t(perm[i]) * words;
        uint64_t* crow = solver.rows.data() + size_t(i) * words;
        for (uint32_t j = 0; j < V; ++j) {
            if (i == j) continue;
            uint32_t pj = perm[j];
            bool in_power = (prow[pj >> 6] >> (pj & 63)) & 1;
            if (!in_power) crow[j >> 6] |= uint64_t(1) << (j & 63);
        }
    }

    // greedy warm start
    {
        std::vector<uint64_t> avail(words, ~uint64_t(0));
        if (V & 63) avail[words - 1] = (uint64_t(1) << (V & 63)) - 1;
        long size = 0;
        for (uint32_t v = 0; v < V; ++v) {
            if (!((avail[v >> 6] >> (v & 63)) & 1)) continue;
            ++size;
            const uint64_t* rv = solver.rows.data() + size_t(v) * words;
            for (size_t w = 0; w < words; ++w) avail[w] &= rv[w];
        }
        solver.best = size;
    }

    solver.deadline = std::chrono::steady_clock::now() +
                      std::chrono::microseconds(long(budget_seconds * 1e6));
    std::vector<uint64_t> all(words, 0);
    for (uint32_t v = 0; v < V; ++v) all[v >> 6] |= uint64_t(1) << (v & 63);
    solver.expand(0, all);

    return {solver.best, !solver.aborted};
}

// --------------------------------------------------------- regularity checks

std::vector<Int> closed_walks_from(const oracle_graph& g, uint32_t v, int L) {
    if (L < 0 || L > 6) throw std::domain_error("closed_walks_from: L must be in [0, 6]");
    std::vector<Int> out(L + 1, Int(0));
    out[0] = 1;
    if (L == 0) return out;
    // counts of 2-walks from v; supports everything up to L = 6
    std::vector<int64_t> cnt2(g.vcount, 0);
    std::vector<uint32_t> neigh;
    {
        const uint64_t* row = g.adj.data() + size_t(v) * g.words;
        for (size_t w = 0; w < g.words; ++w) {
            uint64_t bits = row[w];
            while (bits) {
                neigh.push_back(uint32_t(w * 64 + __builtin_ctzll(bits)));
                bits &= bits - 1;
            }
        }
    }
    std::vector<uint32_t> support;
    for (uint32_t u : neigh) {
        const uint64_t* row = g.adj.data() + size_t(u) * g.words;
        for (size_t w = 0; w < g.words; ++w) {
            uint64_t bits = row[w];
            while (bits) {
                uint32_t x = uint32_t(w * 64 + __builtin_ctzll(bits));
                bits &= bits - 1;
                if (cnt2[x]++ == 0) support.push_back(x);
            }
        }
    }
    out[1] = 0;
    if (L >= 2) out[2] = int64_t(neigh.size());
    if (L >= 3) {
        Int w3 = 0;
        for (uint32_t u : neigh) w3 += cnt2[u];
        out[3] = w3;
    }
    if (L >= 4) {
        Int w4 = 0;
        for (uint32_t u : support) w4 += Int(cnt2[u]) * cnt2[u];
        out[4] = w4;
    }
    if (L >= 5) {
        Int w5 = 0;
        for (uint32_t u : support) {
            // sum of cnt2 over the neighbourhood of u
            int64_t s = 0;
            const uint64_t* row = g.adj.data() + size_t(u) * g.words;
            for (size_t w = 0; w < g.words; ++w) {
                uint64_t bits = row[w];
                while (bits) {
                    s += cnt2[w * 64 + __builtin_ctzll(bits)];
                    bits &= bits - 1;
                }
            }
            w5 += Int(cnt2[u]) * s;
        }
        out[5] = w5;
    }
    if (L >= 6) {
        std::vector<int64_t> cnt3(g.vcount, 0);
        for (uint32_t u : support) {
            const uint64_t* row = g.adj.data() + size_t(u) * g.words;
            for (size_t w = 0; w < g.words; ++w) {
                uint64_t bits = row[w];
                while (bits) {
                    cnt3[w * 64 + __builtin_ctzll(bits)] += cnt2[u];
                    bits &= bits - 1;
                }
            }
        }
        Int w6 = 0;
        for (uint32_t u = 0; u < g.vcount; ++u)
            if (cnt3[u]) w6 += Int(cnt3[u]) * cnt3[u];
        out[6] = w6;
    }
    return out;
}

partition_check distance_partition_check(const oracle_graph& g, uint32_t source) {
    partition_check out;
    std::vector<int> dist = geodesic_distances(g, source);
    int diameter = 0;
    for (int d : dist) diameter = std::max(diameter, d);

    // per-layer (c, a, b) counts; vertex-transitivity (Cayley graph) makes a
    // single source representative
    std::vector<std::array<long, 3>> layer_counts(diameter + 1, {-1, -1, -1});
    for (uint32_t v = 0; v < g.vcount; ++v) {
        int i = dist[v];
        long c = 0, a = 0, b = 0;
        const uint64_t* row = g.adj.data() + size_t(v) * g.words;
        for (size_t w = 0; w < g.words; ++w) {
            uint64_t bits = row[w];
            while (bits) {
                uint32_t u = uint32_t(w * 64 + __builtin_ctzll(bits));
                bits &= bits - 1;
                if (dist[u] == i - 1) ++c;
                else if (dist[u] == i) ++a;
                else ++b;
            }
        }
        auto& ref = layer_counts[i];
        if (ref[0] < 0) {
            ref = {c, a, b};
        } else if (ref[0] != c || ref[1] != a || ref[2] != b) {
            out.regular = false;
            out.witness_layer = i;
            out.witness_v = v;
            // find an earlier layer-mate for the witness pair
            for (uint32_t u = 0; u < v; ++u)
                if (dist[u] == i) {
                    out.witness_u = u;
                    break;
                }
            return out;
        }
    }
    out.regular = true;
    for (int i = 0; i < diameter; ++i) out.b.emplace_back(layer_counts[i][2]);
    for (int i = 1; i <= diameter; ++i) out.c.emplace_back(layer_counts[i][0]);
    return out;
}

regularity_report verify_regularities(const oracle_graph& g, const spectrum& s, int L) {
    if (L < 2) throw std::domain_error("verify_regularities: L must be >= 2");
    regularity_report rep;
    Int delta = regularity_delta(g.par);

    rep.degrees_ok = true;
    for (uint32_t v = 0; v < g.vcount; ++v)
        if (Int(g.degree(v)) != delta) {
            rep.degrees_ok = false;
            rep.detail += "degree mismatch at vertex " + std::to_string(v) + "; ";
            break;
        }

    int cap = std::min(L, 6);
    rep.walk_regular_ok = true;
    rep.trace_matches_spectrum = true;
    std::vector<Int> reference = closed_walks_from(g, 0, cap);
    for (uint32_t v = 1; v < g.vcount && rep.walk_regular_ok; ++v) {
        std::vector<Int> walks = closed_walks_from(g, v, cap);
        if (walks != reference) {
            rep.walk_regular_ok = false;
            rep.detail += "walk count mismatch at vertex " + std::to_string(v) + "; ";
        }
    }
    for (int l = 0; l <= cap; ++l) {
        if (reference[l] * s.vertex_count != closed_walk_count(s, l)) {
            rep.trace_matches_spectrum = false;
            rep.detail += "trace mismatch at l=" + std::to_string(l) + "; ";
        }
    }

    auto classified = classify_distance_regular(g.par);
    auto empirical = distance_partition_check(g, 0);
    if (classified.is_drg != empirical.regular) {
        rep.drg_matches_classification = false;
        rep.detail += "distance-regularity classification disagrees with partition; ";
    } else if (classified.is_drg) {
        rep.drg_matches_classification =
            classified.array->b == empirical.b && classified.array->c == empirical.c;
        if (!rep.drg_matches_classification) rep.detail += "intersection array mismatch; ";
    } else {
        rep.drg_matches_classification = true;
        rep.detail += "partition witness: vertices " + std::to_string(empirical.witness_u) + "," +
                      std::to_string(empirical.witness_v) + " at layer " +
                      std::to_string(empirical.witness_layer) + "; ";
    }
    return rep;
}

void dump_graph(const oracle_graph& g, std::ostream& os) {
    os << "srk-graph q=" << g.par.q << " n=";
    for (int i = 0; i < g.par.t(); ++i) os << (i ? "," : "") << g.par.n[i];
    os << " m=";
    for (int i = 0; i < g.par.t(); ++i) os << (i ? "," : "") << g.par.m[i];
    os << " V=" << g.vcount << "\n";
    for (uint32_t v = 0; v < g.vcount; ++v) {
        const uint64_t* row = g.adj.data() + size_t(v) * g.words;
        for (size_t w = 0; w < g.words; ++w) {
            uint64_t bits = row[w];
            while (bits) {
                uint32_t u = uint32_t(w * 64 + __builtin_ctzll(bits));
                bits &= bits - 1;
                if (u > v) os << v << " " << u << "\n";
            }
        }
    }
}

}  // namespace srk
