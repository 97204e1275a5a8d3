#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "bigint.hpp"
#include "cograph.hpp"

namespace cograph {

// A conjugacy class of S_n: cycle lengths (descending) and the number of
// permutations of that shape.
struct CycleType {
    std::vector<int> parts;
    Int weight;
};

inline void integer_partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                                   std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        integer_partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> integer_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    integer_partitions_rec(n, n, cur, out);
    return out;
}

inline Int permutation_count_of_type(int n, const std::vector<int>& parts) {
    Int denom = 1;
    std::map<int, int> mult;
    for (int p : parts) ++mult[p];
    for (auto [len, m] : mult) denom *= int_pow(Int(len), m) * factorial(m);
    return factorial(n) / denom;
}

inline std::vector<CycleType> cycle_types(int n) {
    std::vector<CycleType> out;
    for (auto& parts : integer_partitions(n))
        out.push_back({parts, permutation_count_of_type(n, parts)});
    return out;
}

// Cycle lengths of the permutation induced on unordered pairs by a point
// permutation of the given cycle type. Pairs inside an a-cycle split into
// (a-1)/2 cycles of length a when a is odd, and (a/2-1) of length a plus one
// of length a/2 when a is even; pairs across an a- and a b-cycle form
// gcd(a,b) cycles of length lcm(a,b).
inline std::map<int, int> pair_action_cycles(const std::vector<int>& parts) {
    std::map<int, int> cyc; // length -> count
    for (size_t u = 0; u < parts.size(); ++u) {
        int a = parts[u];
        if (a % 2 == 1) {
            if (a >= 3) cyc[a] += (a - 1) / 2;
        } else {
            cyc[a / 2] += 1;
            if (a / 2 - 1 > 0) cyc[a] += a / 2 - 1;
        }
        for (size_t v = u + 1; v < parts.size(); ++v) {
            int b = parts[v];
            int g = std::gcd(a, b);
            cyc[a / g * b] += g;
        }
    }
    return cyc;
}

// Exact count of cographs on n points: set partitions of the edge set of K_n
// up to the induced point-permutation action. Computed as a power-group
// (double Burnside) average over S_n x S_k with k = C(n,2) interchangeable
// colors; all arithmetic exact.
inline Int count_cographs(int n) {
    if (n < 2) throw std::domain_error("count_cographs needs n >= 2");
    int k = pair_count(n);

    auto point_types = cycle_types(n);
    std::vector<std::map<int, int>> pair_types;
    pair_types.reserve(point_types.size());
    for (auto& pt : point_types) pair_types.push_back(pair_action_cycles(pt.parts));

    auto color_types = cycle_types(k);

    std::vector<Int> per_point_type(point_types.size(), 0);
    std::vector<Int> fix(k + 1);
    for (auto& ct : color_types) {
        std::map<int, int> mult;
        for (int p : ct.parts) ++mult[p];
        for (int L = 1; L <= k; ++L) {
            Int f = 0;
            for (auto [d, m] : mult)
                if (L % d == 0) f += Int(d) * m;
            fix[L] = f;
        }
        for (size_t t = 0; t < point_types.size(); ++t) {
            Int prod = 1;
            for (auto [L, m] : pair_types[t]) {
                if (fix[L] == 0) {
                    prod = 0;
                    break;
                }
                prod *= int_pow(fix[L], m);
            }
            if (prod != 0) per_point_type[t] += ct.weight * prod;
        }
    }

    Int total = 0;
    for (size_t t = 0; t < point_types.size(); ++t)
        total += point_types[t].weight * per_point_type[t];

    Int denom = factorial(n) * factorial(k);
    if (total % denom != 0)
        throw std::logic_error("Burnside sum not divisible by group order");
    return total / denom;
}

// Visits every set partition of {0..k-1} as a restricted-growth string.
inline void for_each_set_partition(int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> rgs(k, 0);
    std::function<void(int, int)> rec = [&](int i, int max_used) {
        if (i == k) {
            fn(rgs);
            return;
        }
        for (int c = 0; c <= max_used + 1; ++c) {
            rgs[i] = c;
            rec(i + 1, std::max(max_used, c));
        }
    };
    if (k == 0) {
        fn(rgs);
        return;
    }
    rgs[0] = 0;
    rec(1, 0);
}

// Exhaustive generation: all partitions of the pair set, canonicalized and
// deduplicated. Independent of count_cographs, which it cross-checks.
inline std::vector<CanonicalKey> enumerate_cographs(int n, bool force = false) {
    if (n < 2) throw std::domain_error("enumerate_cographs needs n >= 2");
    if (n > 5 && !force)
        throw std::domain_error("enumerate_cographs beyond n=5 requires force");
    std::set<std::string> keys;
    for_each_set_partition(pair_count(n), [&](const std::vector<int>& rgs) {
        Cograph c(n, rgs);
        keys.insert(canonical_form(c).bytes);
    });
    std::vector<CanonicalKey> out;
    out.reserve(keys.size());
    for (auto& s : keys) out.push_back(CanonicalKey{s});
    return out;
}

} // namespace cograph
