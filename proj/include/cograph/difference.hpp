#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "cograph.hpp"

namespace cograph::diff {

// Point values in Z (modulus 0) or Z_m; edges are absolute or circular
// distances.
struct DiffLabeling {
    long long modulus = 0;
    std::vector<long long> values;
};

inline long long diff_edge(long long p, long long q, long long m) {
    if (p == q) throw std::invalid_argument("degenerate point pair");
    if (m == 0) return p > q ? p - q : q - p;
    long long d = ((p - q) % m + m) % m;
    return std::min(d, m - d);
}

inline Cograph pattern_of(const DiffLabeling& lab) {
    int n = (int)lab.values.size();
    std::vector<long long> vals(pair_count(n));
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            vals[pair_index(i, j)] = diff_edge(lab.values[i], lab.values[j], lab.modulus);
    return Cograph::from_edge_values(n, vals);
}

namespace detail {

// Lexicographically first labeling matching the pattern exactly; same
// propagation idea as the sum searcher but with distance edges.
struct DiffSearch {
    Cograph c;
    int n;
    long long m;     // 0 = integers
    long long bound; // inclusive value cap (m-1 for finite)
    bool fix_first;  // pin value 0 on point 0 (sound for Z_m by relabeling)
    std::vector<long long> val;
    std::vector<long long> class_val;
    std::vector<char> class_has;
    std::map<long long, int> val_owner;

    DiffSearch(const Cograph& cg, long long modulus, long long b, bool fix0)
        : c(cg), n(cg.points()), m(modulus), bound(b), fix_first(fix0), val(cg.points(), 0),
          class_val(cg.class_count(), 0), class_has(cg.class_count(), 0) {}

    bool run(DiffLabeling& out) {
        if (dfs(0)) {
            out.modulus = m;
            out.values = val;
            return true;
        }
        return false;
    }

    bool dfs(int t) {
        if (t == n) return true;
        long long lo = 0, hi = (fix_first && t == 0) ? 0 : bound;
        for (long long v = lo; v <= hi; ++v) {
            bool ok = true;
            for (int s = 0; s < t && ok; ++s)
                if (val[s] == v) ok = false;
            std::vector<int> claimed;
            for (int s = 0; s < t && ok; ++s) {
                long long d = diff_edge(v, val[s], m);
                int cls = c.class_of(s, t);
                if (class_has[cls]) {
                    if (class_val[cls] != d) ok = false;
                } else {
                    auto it = val_owner.find(d);
                    if (it != val_owner.end())
                        ok = false;
                    else {
                        val_owner.emplace(d, cls);
                        class_val[cls] = d;
                        class_has[cls] = 1;
                        claimed.push_back(cls);
                    }
                }
            }
            if (ok) {
                val[t] = v;
                if (dfs(t + 1)) return true;
            }
            for (int cls : claimed) {
                val_owner.erase(class_val[cls]);
                class_has[cls] = 0;
            }
        }
        return false;
    }
};

} // namespace detail

struct RealizeVerdict {
    enum class Kind { TorsionFree, Torsion, NotRealizable } kind;
    std::optional<DiffLabeling> witness;
};

// Searches integer labelings in [0,bound] first, then Z_m labelings for
// m <= max_modulus; the witness is the first found in that order.
inline RealizeVerdict realize_difference(const Cograph& pattern, long long max_modulus = 40,
                                         long long bound = 64) {
    if (pattern.points() > 6)
        throw std::domain_error("realizability search supports up to 6 points");
    DiffLabeling w;
    detail::DiffSearch zs(pattern, 0, bound, false);
    if (zs.run(w)) return {RealizeVerdict::Kind::TorsionFree, w};
    for (long long m = std::max(2, pattern.points()); m <= max_modulus; ++m) {
        detail::DiffSearch ms(pattern, m, m - 1, true);
        if (ms.run(w)) return {RealizeVerdict::Kind::Torsion, w};
    }
    return {RealizeVerdict::Kind::NotRealizable, std::nullopt};
}

struct QRecord {
    Pair first, second; // the two disjoint equal pairs
    int type = 0;       // 1..5
};

struct MotifCensus {
    int v = 0, q = 0, t = 0;
    std::vector<QRecord> qs;
};

// Decides the shape of one Q from the labeled values: a monochrome 3-path
// whose skip pairs are the Q gives shapes 3/4/5 (split on the long edge),
// otherwise a second repeated pair must exist and the diagonals separate
// shapes 1 and 2.
inline void classify_q(const DiffLabeling& lab, QRecord& rec) {
    long long m = lab.modulus;
    auto ev = [&](int i, int j) { return diff_edge(lab.values[i], lab.values[j], m); };
    int w = rec.first.first, x = rec.first.second;
    int y = rec.second.first, z = rec.second.second;
    long long e = ev(w, x);

    int type_from_chain = 0;
    auto try_chain = [&](int p1, int p2, int p3, int p4) {
        long long a = ev(p1, p2);
        if (ev(p2, p3) != a || ev(p3, p4) != a) return;
        long long diag = ev(p1, p4);
        int ty = diag == a ? 5 : (diag == e ? 4 : 3);
        if (type_from_chain && type_from_chain != ty)
            throw std::logic_error("ambiguous chain classification of a Q");
        type_from_chain = ty;
    };
    for (auto [p1, p3] : {std::pair{w, x}, {x, w}})
        for (auto [p2, p4] : {std::pair{y, z}, {z, y}}) {
            try_chain(p1, p2, p3, p4);
            try_chain(p2, p1, p4, p3);
        }
    if (type_from_chain) {
        rec.type = type_from_chain;
        return;
    }

    if (ev(w, y) == ev(x, z)) {
        rec.type = ev(w, z) == ev(x, y) ? 2 : 1;
        return;
    }
    if (ev(w, z) == ev(x, y)) {
        rec.type = 1; // diagonals w,y / x,z already known unequal
        return;
    }
    throw std::logic_error("Q outside the five classified shapes");
}

// V / Q / T counts plus the five-way classification of every Q, decided from
// the labeled values. A Q that fits none of the five shapes trips a hard
// error; none exists in a valid difference labeling.
inline MotifCensus motif_census(const DiffLabeling& lab) {
    int n = (int)lab.values.size();
    long long m = lab.modulus;
    auto ev = [&](int i, int j) { return diff_edge(lab.values[i], lab.values[j], m); };
    MotifCensus out;

    int pc = pair_count(n);
    for (int p = 0; p < pc; ++p)
        for (int q2 = p + 1; q2 < pc; ++q2) {
            auto [a, b] = pair_at(p);
            auto [c, d] = pair_at(q2);
            if (ev(a, b) != ev(c, d)) continue;
            if (pairs_disjoint({a, b}, {c, d})) {
                QRecord rec{{a, b}, {c, d}, 0};
                classify_q(lab, rec);
                out.qs.push_back(rec);
                ++out.q;
            } else {
                ++out.v;
            }
        }

    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (ev(a, b) == ev(b, c) && ev(b, c) == ev(a, c)) ++out.t;

    return out;
}

enum class DiffForcerKind { MonochromeCycle, FilledQuadrangle, DoublingEdgeCycle };

struct DiffFinding {
    DiffForcerKind kind;
    std::vector<int> points;
    std::string note;
};

// Pattern-level detectors for the torsion-forcing shapes: closed monochrome
// cycles, the fully matched quadrangle (second Q shape), and cycles in the
// edge-doubling relation produced by Vs.
inline std::vector<DiffFinding> detect_diff_torsion_forcers(const Cograph& c) {
    int n = c.points();
    std::vector<DiffFinding> out;
    std::set<std::vector<int>> seen;
    auto emit = [&](DiffForcerKind kind, std::vector<int> pts, std::vector<int> key,
                    std::string note) {
        key.insert(key.begin(), (int)kind);
        if (seen.insert(key).second) out.push_back({kind, std::move(pts), std::move(note)});
    };

    // monochrome cycles, length 3..n
    for (int L = 3; L <= n; ++L) {
        std::vector<int> tup;
        std::vector<char> used(n, 0);
        std::function<void(int)> rec = [&](int depth) {
            if (depth == L) {
                int cls = c.class_of(std::min(tup[0], tup[1]), std::max(tup[0], tup[1]));
                for (int i = 1; i < L; ++i) {
                    int a = tup[i], b = tup[(i + 1) % L];
                    if (c.class_of(std::min(a, b), std::max(a, b)) != cls) return;
                }
                std::vector<int> key;
                for (int r = 0; r < L; ++r)
                    for (int refl = 0; refl < 2; ++refl) {
                        std::vector<int> cand = tup;
                        if (refl) std::reverse(cand.begin(), cand.end());
                        std::rotate(cand.begin(), cand.begin() + r, cand.end());
                        if (key.empty() || cand < key) key = cand;
                    }
                emit(DiffForcerKind::MonochromeCycle, tup, key,
                     "monochrome " + std::to_string(L) + "-cycle");
                return;
            }
            for (int p = 0; p < n; ++p) {
                if (used[p]) continue;
                used[p] = 1;
                tup.push_back(p);
                rec(depth + 1);
                tup.pop_back();
                used[p] = 0;
            }
        };
        rec(0);
    }

    // filled quadrangle: all three opposite pairings monochrome
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int cc = b + 1; cc < n; ++cc)
                for (int d = cc + 1; d < n; ++d) {
                    auto cl = [&](int i, int j) {
                        return c.class_of(std::min(i, j), std::max(i, j));
                    };
                    bool p1 = cl(a, b) == cl(cc, d);
                    bool p2 = cl(a, cc) == cl(b, d);
                    bool p3 = cl(a, d) == cl(b, cc);
                    if (p1 && p2 && p3)
                        emit(DiffForcerKind::FilledQuadrangle, {a, b, cc, d}, {a, b, cc, d},
                             "fully matched quadrangle");
                }

    // doubling digraph: class of a V -> class of its outer pair
    int k = c.class_count();
    std::vector<std::set<int>> dbl(k);
    std::map<std::pair<int, int>, std::vector<int>> witness_pts;
    auto members = c.class_members();
    for (int cls = 0; cls < k; ++cls)
        for (size_t i = 0; i < members[cls].size(); ++i)
            for (size_t j = i + 1; j < members[cls].size(); ++j) {
                auto [a, b] = members[cls][i];
                auto [cc, d] = members[cls][j];
                int shared = -1, u = -1, v = -1;
                if (a == cc) shared = a, u = b, v = d;
                else if (a == d) shared = a, u = b, v = cc;
                else if (b == cc) shared = b, u = a, v = d;
                else if (b == d) shared = b, u = a, v = cc;
                if (shared < 0) continue;
                int outer = c.class_of(std::min(u, v), std::max(u, v));
                dbl[cls].insert(outer);
                witness_pts.try_emplace({cls, outer}, std::vector<int>{shared, u, v});
            }
    // any directed cycle in dbl forces torsion
    std::vector<int> color(k, 0);
    std::vector<int> stack;
    std::function<bool(int)> cyc = [&](int u) -> bool {
        color[u] = 1;
        stack.push_back(u);
        for (int w : dbl[u]) {
            if (color[w] == 1) {
                auto it = std::find(stack.begin(), stack.end(), w);
                std::vector<int> cycle(it, stack.end());
                std::vector<int> pts;
                for (size_t i = 0; i < cycle.size(); ++i) {
                    auto wit = witness_pts[{cycle[i], cycle[(i + 1) % cycle.size()]}];
                    pts.insert(pts.end(), wit.begin(), wit.end());
                }
                std::vector<int> key = cycle;
                std::rotate(key.begin(), std::min_element(key.begin(), key.end()), key.end());
                emit(DiffForcerKind::DoublingEdgeCycle, pts, key,
                     "edge doubling cycle of length " + std::to_string(cycle.size()));
                continue;
            }
            if (color[w] == 0 && cyc(w)) return true;
        }
        stack.pop_back();
        color[u] = 2;
        return false;
    };
    for (int u = 0; u < k; ++u)
        if (color[u] == 0) cyc(u);

    return out;
}

struct DiffCatalogueEntry {
    CanonicalKey key;
    Cograph pattern; // the raw pattern of the stored witness
    DiffLabeling witness;
    bool torsion_free = false;
    MotifCensus census;
};

// Exhaustive catalogue: integer labelings 0=v0<...<v_{n-1}<=bound and Z_m
// labelings (v0=0) for m<=max_modulus, mapped to patterns and deduplicated
// up to isomorphism. An entry is torsion-free iff some Z labeling hits its
// class; the stored witness prefers the first Z labeling found.
inline std::vector<DiffCatalogueEntry> enumerate_difference_cographs(int n = 5,
                                                                     long long max_modulus = 40,
                                                                     long long bound = 64) {
    if (n < 2 || n > 6) throw std::domain_error("difference catalogue supports 2 <= n <= 6");

    std::map<std::string, std::pair<DiffLabeling, bool>> raw_first; // raw key -> witness, is_Z
    auto visit = [&](const DiffLabeling& lab, bool is_z) {
        Cograph pat = pattern_of(lab);
        std::string raw(pat.class_assignment().begin(), pat.class_assignment().end());
        for (auto& ch : raw) ch = char('a' + ch);
        auto it = raw_first.find(raw);
        if (it == raw_first.end())
            raw_first.emplace(std::move(raw), std::make_pair(lab, is_z));
        else if (is_z && !it->second.second)
            it->second = {lab, is_z};
    };

    // ascending integer tuples starting at 0
    {
        std::vector<long long> v(n, 0);
        std::function<void(int)> rec = [&](int t) {
            if (t == n) {
                visit({0, v}, true);
                return;
            }
            for (long long x = v[t - 1] + 1; x <= bound; ++x) {
                v[t] = x;
                rec(t + 1);
            }
        };
        rec(1);
    }
    // ascending residue tuples starting at 0 for each modulus
    for (long long m = n; m <= max_modulus; ++m) {
        std::vector<long long> v(n, 0);
        std::function<void(int)> rec = [&](int t) {
            if (t == n) {
                visit({m, v}, false);
                return;
            }
            for (long long x = v[t - 1] + 1; x < m; ++x) {
                v[t] = x;
                rec(t + 1);
            }
        };
        rec(1);
    }

    struct Agg {
        DiffLabeling witness;
        bool torsion_free = false;
        bool witness_is_z = false;
    };
    std::map<std::string, Agg> classes;
    for (auto& [raw, wz] : raw_first) {
        Cograph pat = pattern_of(wz.first);
        std::string key = canonical_form(pat).bytes;
        auto [it, fresh] = classes.try_emplace(key);
        Agg& agg = it->second;
        if (fresh || (wz.second && !agg.witness_is_z)) {
            agg.witness = wz.first;
            agg.witness_is_z = wz.second;
        }
        agg.torsion_free |= wz.second;
    }

    std::vector<DiffCatalogueEntry> out;
    for (auto& [key, agg] : classes)
        out.push_back(DiffCatalogueEntry{CanonicalKey{key}, pattern_of(agg.witness),
                                         agg.witness, agg.torsion_free,
                                         motif_census(agg.witness)});
    return out;
}

} // namespace cograph::diff
