#include "srk/params.hpp"

#include <algorithm>
#include <sstream>

namespace srk {

bool is_prime_power(long q, long* p_out, int* e_out) {
    if (q < 2) return false;
    long p = 0;
    for (long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q;  // q itself is prime
    long r = q;
    int e = 0;
    while (r % p == 0) {
        r /= p;
        ++e;
    }
    if (r != 1) return false;
    if (p_out) *p_out = p;
    if (e_out) *e_out = e;
    return true;
}

params normalize_params(long q, std::vector<int> n, std::vector<int> m) {
    if (n.empty() || m.empty())
        throw validation_error(param_error::empty_sequence, "block sequences must be non-empty");
    if (n.size() != m.size())
        throw validation_error(param_error::length_mismatch, "n and m must have the same length");
    for (size_t i = 0; i < n.size(); ++i)
        if (n[i] < 1 || m[i] < 1)
            throw validation_error(param_error::non_positive_entry, "block dimensions must be >= 1");
    if (!is_prime_power(q))
        throw validation_error(param_error::not_prime_power,
                               std::to_string(q) + " is not a prime power");

    std::vector<std::pair<int, int>> blocks(n.size());  // (m_i, n_i)
    for (size_t i = 0; i < n.size(); ++i) {
        int a = n[i], b = m[i];
        if (a > b) std::swap(a, b);  // transpose the block
        blocks[i] = {b, a};
    }
    std::sort(blocks.begin(), blocks.end(), std::greater<>());

    params out;
    out.q = q;
    out.n.reserve(blocks.size());
    out.m.reserve(blocks.size());
    for (auto [mi, ni] : blocks) {
        out.m.push_back(mi);
        out.n.push_back(ni);
    }
    return out;
}

std::string to_string(const params& p) {
    std::ostringstream os;
    os << "q=" << p.q << " n=(";
    for (int i = 0; i < p.t(); ++i) os << (i ? "," : "") << p.n[i];
    os << ") m=(";
    for (int i = 0; i < p.t(); ++i) os << (i ? "," : "") << p.m[i];
    os << ")";
    return os.str();
}

}  // namespace srk
