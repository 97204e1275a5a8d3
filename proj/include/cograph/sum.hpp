#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "cograph.hpp"
#include "snf.hpp"

namespace cograph::sum {

// A Cograph read as an edge-equality pattern: pairs in one class must get
// equal point sums, pairs in distinct classes distinct sums, points distinct.
using SumPattern = Cograph;

// Point values in Z (moduli empty) or in a finite abelian product
// Z_m1 (+) Z_m2 (+) ...; one coordinate vector per point. Cyclic witnesses
// use a single modulus; a few six-point patterns provably need rank 2 or 3
// (their point differences span (Z_2)^3, which no one- or two-generator
// group contains).
struct Labeling {
    std::vector<long long> moduli;
    std::vector<std::vector<long long>> values;

    bool is_integer() const { return moduli.empty(); }
    long long modulus() const { return moduli.size() == 1 ? moduli[0] : 0; }
};

inline Labeling integer_labeling(std::vector<long long> vals) {
    Labeling l;
    for (long long v : vals) l.values.push_back({v});
    return l;
}

inline Labeling cyclic_labeling(long long m, std::vector<long long> vals) {
    Labeling l;
    l.moduli = {m};
    for (long long v : vals) l.values.push_back({((v % m) + m) % m});
    return l;
}

inline long long mod_reduce(long long v, long long m) {
    if (m == 0) return v;
    v %= m;
    if (v < 0) v += m;
    return v;
}

inline std::vector<long long> elem_add(const Labeling& lab, const std::vector<long long>& a,
                                       const std::vector<long long>& b) {
    std::vector<long long> s(a.size());
    for (size_t c = 0; c < a.size(); ++c)
        s[c] = mod_reduce(a[c] + b[c], lab.moduli.empty() ? 0 : lab.moduli[c]);
    return s;
}

// Exact check that a labeling reproduces the pattern: equal class <=> equal
// sum, all point values distinct.
inline bool witness_matches(const Cograph& pattern, const Labeling& lab) {
    int n = pattern.points();
    if ((int)lab.values.size() != n) return false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (lab.values[i] == lab.values[j]) return false;
    std::map<std::vector<long long>, int> sum_class;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            auto s = elem_add(lab, lab.values[i], lab.values[j]);
            int cls = pattern.class_of(i, j);
            auto it = sum_class.find(s);
            if (it == sum_class.end())
                sum_class.emplace(s, cls);
            else if (it->second != cls)
                return false;
        }
    // same class must give one sum: count distinct sums == class count
    return (int)sum_class.size() == pattern.class_count();
}

enum class Outcome { TorsionFree, RequiresTorsion, Unsolvable, ForcesExtraEdges };

inline const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::TorsionFree: return "torsion-free";
        case Outcome::RequiresTorsion: return "requires-torsion";
        case Outcome::Unsolvable: return "unsolvable";
        case Outcome::ForcesExtraEdges: return "forces-extra-edges";
    }
    return "?";
}

// d * (combination . x) = 0 holds in every realization.
struct TorsionRelation {
    Int denominator;
    std::vector<Int> combination;
};

struct Verdict {
    Outcome outcome;
    std::vector<Pair> forced_point_equalities;
    std::vector<std::pair<Pair, Pair>> forced_edge_equalities;
    std::vector<TorsionRelation> torsion_relations;
    std::optional<Labeling> witness;
};

// One row per non-representative pair of each class: e_P+e_Q-e_R-e_S with
// (R,S) the lexicographically least pair of the class.
struct System {
    IntMatrix rows;
    SmithNormalForm snf;
    int n = 0;
};

inline System build_system(const Cograph& pattern) {
    System sys;
    sys.n = pattern.points();
    auto members = pattern.class_members();
    for (auto& m : members) std::sort(m.begin(), m.end());
    for (auto& m : members) {
        for (size_t i = 1; i < m.size(); ++i) {
            std::vector<Int> row(sys.n, 0);
            row[m[i].first] += 1;
            row[m[i].second] += 1;
            row[m[0].first] -= 1;
            row[m[0].second] -= 1;
            sys.rows.push_back(std::move(row));
        }
    }
    sys.snf = smith_normal_form(sys.rows, sys.n);
    return sys;
}

namespace detail {

// Lexicographically first labeling with coordinates in [0,bound] per point
// (all residues for finite groups), consistent with the full pattern
// semantics. Deterministic; reproduces the small hand-picked witnesses used
// in the worked examples.
struct WitnessSearch {
    Cograph c;
    int n;
    std::vector<long long> moduli; // empty = integers
    long long bound;               // per-coordinate cap (integers only)
    int coords;
    std::vector<std::vector<long long>> val;
    std::vector<std::vector<long long>> class_sum;
    std::vector<char> class_has_sum;
    std::map<std::vector<long long>, int> sum_owner;

    WitnessSearch(const Cograph& cg, std::vector<long long> mods, long long b)
        : c(cg), n(cg.points()), moduli(std::move(mods)), bound(b),
          coords(moduli.empty() ? 1 : (int)moduli.size()), val(cg.points()),
          class_sum(cg.class_count()), class_has_sum(cg.class_count(), 0) {}

    bool run(Labeling& out) {
        if (dfs(0)) {
            out.moduli = moduli;
            out.values = val;
            return true;
        }
        return false;
    }

    bool next_value(std::vector<long long>& v) const { // odometer, lexicographic
        for (int k = coords - 1; k >= 0; --k) {
            long long cap = moduli.empty() ? bound : moduli[k] - 1;
            if (v[k] < cap) {
                ++v[k];
                return true;
            }
            v[k] = 0;
        }
        return false;
    }

    bool dfs(int t) {
        if (t == n) return true;
        std::vector<long long> v(coords, 0);
        do {
            bool ok = true;
            for (int s = 0; s < t && ok; ++s)
                if (val[s] == v) ok = false;
            std::vector<int> claimed;
            std::vector<long long> sv(coords);
            for (int s = 0; s < t && ok; ++s) {
                for (int k = 0; k < coords; ++k)
                    sv[k] = mod_reduce(v[k] + val[s][k], moduli.empty() ? 0 : moduli[k]);
                int cls = c.class_of(s, t);
                if (class_has_sum[cls]) {
                    if (class_sum[cls] != sv) ok = false;
                } else {
                    auto it = sum_owner.find(sv);
                    if (it != sum_owner.end())
                        ok = false; // sum already belongs to a different class
                    else {
                        sum_owner.emplace(sv, cls);
                        class_sum[cls] = sv;
                        class_has_sum[cls] = 1;
                        claimed.push_back(cls);
                    }
                }
            }
            if (ok) {
                val[t] = v;
                if (dfs(t + 1)) return true;
                val[t].clear();
            }
            for (int cls : claimed) {
                sum_owner.erase(class_sum[cls]);
                class_has_sum[cls] = 0;
            }
        } while (next_value(v));
        return false;
    }
};

inline std::optional<Labeling> find_integer_witness(const Cograph& pattern) {
    for (long long bound : {15LL, 63LL, 255LL}) {
        WitnessSearch ws(pattern, {}, bound);
        Labeling out;
        if (ws.run(out)) return out;
    }
    return std::nullopt;
}

// Cyclic groups on multiples of the torsion lcm first, then rank-2 and
// rank-3 squares: some patterns have point differences spanning (Z_k)^2 or
// (Z_2)^3 and admit no cyclic witness at all.
inline std::optional<Labeling> find_torsion_witness(const Cograph& pattern, long long base) {
    long long n = pattern.points();
    for (int mult = 1; mult <= 10; ++mult) {
        long long m = base * mult;
        if (m < 2 || m < n) continue;
        WitnessSearch ws(pattern, {m}, 0);
        Labeling out;
        if (ws.run(out)) return out;
    }
    for (int mult = 1; mult <= 4; ++mult) {
        long long k = base * mult;
        if (k < 2 || k * k < n) continue;
        WitnessSearch ws(pattern, {k, k}, 0);
        Labeling out;
        if (ws.run(out)) return out;
    }
    for (int mult = 1; mult <= 2; ++mult) {
        long long k = base * mult;
        if (k < 2) continue;
        WitnessSearch ws(pattern, {k, k, k}, 0);
        Labeling out;
        if (ws.run(out)) return out;
    }
    return std::nullopt;
}

} // namespace detail

// The four-outcome classifier. Forced equalities are integer row-lattice
// memberships; torsion relations are rational memberships with clearing
// denominator > 1; all decided through the Smith normal form of the system.
inline Verdict classify(const Cograph& pattern) {
    int n = pattern.points();
    System sys = build_system(pattern);
    Verdict v;

    auto membership = [&](const std::vector<Int>& target) {
        return row_space_membership(sys.snf, target);
    };
    std::set<std::pair<Int, std::vector<Int>>> seen_relations;
    auto add_relation = [&](const Int& d, const std::vector<Int>& combo) {
        if (seen_relations.insert({d, combo}).second)
            v.torsion_relations.push_back({d, combo});
    };

    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            std::vector<Int> target(n, 0);
            target[i] = 1;
            target[j] = -1;
            auto r = membership(target);
            if (!r.in_rational_span) continue;
            if (r.denominator == 1)
                v.forced_point_equalities.push_back({i, j});
            else
                add_relation(r.denominator, target);
        }

    int pc = pair_count(n);
    for (int p = 0; p < pc; ++p)
        for (int q = p + 1; q < pc; ++q) {
            if (pattern.class_of_pair(p) == pattern.class_of_pair(q)) continue;
            auto [a, b] = pair_at(p);
            auto [cc, d] = pair_at(q);
            std::vector<Int> target(n, 0);
            target[a] += 1;
            target[b] += 1;
            target[cc] -= 1;
            target[d] -= 1;
            auto r = membership(target);
            if (!r.in_rational_span) continue;
            if (r.denominator == 1)
                v.forced_edge_equalities.push_back({pair_at(p), pair_at(q)});
            else
                add_relation(r.denominator, target);
        }

    if (!v.forced_point_equalities.empty()) {
        v.outcome = Outcome::Unsolvable;
        return v;
    }
    if (!v.forced_edge_equalities.empty()) {
        v.outcome = Outcome::ForcesExtraEdges;
        return v;
    }
    if (!v.torsion_relations.empty()) {
        v.outcome = Outcome::RequiresTorsion;
        Int base = 1;
        for (auto& tr : v.torsion_relations) base = int_lcm(base, tr.denominator);
        v.witness = detail::find_torsion_witness(pattern, base.convert_to<long long>());
        return v;
    }
    v.outcome = Outcome::TorsionFree;
    v.witness = detail::find_integer_witness(pattern);
    return v;
}

// Renaming move: point X -> X - P + K, edge e -> e - 2P + 2K; the
// pattern is untouched and P takes the value K.
inline Labeling renormalize(const Labeling& lab, int point, std::vector<long long> K) {
    Labeling out = lab;
    int coords = lab.moduli.empty() ? 1 : (int)lab.moduli.size();
    std::vector<long long> shift(coords);
    for (int c = 0; c < coords; ++c) shift[c] = K[c] - lab.values[point][c];
    for (auto& x : out.values)
        for (int c = 0; c < coords; ++c)
            x[c] = mod_reduce(x[c] + shift[c], lab.moduli.empty() ? 0 : lab.moduli[c]);
    return out;
}

inline Labeling renormalize(const Labeling& lab, int point, long long K) {
    return renormalize(lab, point, std::vector<long long>{K});
}

enum class ObstructionKind {
    VAtPoint,
    AlternatingPolygon,
    ForcedHexagonSide,
    AlternatingCycleTorsion,
    TwoIdenticalOddCycles,
};

struct Finding {
    ObstructionKind kind;
    std::vector<int> points;
    std::string note;
};

// Forbidden/forcing configuration census of the elementary corollaries:
// V at a point, alternating (4k+1)-gon, forced hexagon side, alternating
// even cycle (n/2-torsion) and duplicated odd cycles (2-torsion).
inline std::vector<Finding> detect_obstructions(const Cograph& c) {
    int n = c.points();
    std::vector<Finding> out;
    std::set<std::vector<int>> seen;

    auto emit = [&](ObstructionKind kind, std::vector<int> pts, std::vector<int> dedupe_key,
                    std::string note) {
        dedupe_key.insert(dedupe_key.begin(), (int)kind);
        if (seen.insert(dedupe_key).second)
            out.push_back({kind, std::move(pts), std::move(note)});
    };

    // V: two same-class pairs at one point
    auto members = c.class_members();
    for (int cls = 0; cls < (int)members.size(); ++cls) {
        auto& mem = members[cls];
        for (size_t i = 0; i < mem.size(); ++i)
            for (size_t j = i + 1; j < mem.size(); ++j) {
                if (pairs_disjoint(mem[i], mem[j])) continue;
                std::vector<int> pts = {mem[i].first, mem[i].second, mem[j].first,
                                        mem[j].second};
                std::sort(pts.begin(), pts.end());
                pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
                emit(ObstructionKind::VAtPoint, pts, pts, "equal edges share a point");
            }
    }

    // alternating (4k+1)-gon with an extra edge of the middle class at v1
    for (int L : {5, 9}) {
        if (L > n) break;
        std::vector<int> tup;
        std::vector<char> used(n, 0);
        std::function<void(int)> rec = [&](int depth) {
            if (depth == L) {
                // edge classes must satisfy cls(e_j) == cls(e_{j+2k+1}) for the
                // 2k edges before the middle one; the alternating sum then
                // collapses to the middle class.
                auto edge_cls = [&](int a) {
                    return c.class_of(tup[a % L], tup[(a + 1) % L]);
                };
                int twok = (L - 1) / 2;
                for (int j = 0; j < twok; ++j)
                    if (edge_cls(j) != edge_cls(j + twok + 1)) return;
                int middle = edge_cls(twok);
                for (int w = 0; w < n; ++w) {
                    if (w == tup[0]) continue;
                    if (c.class_of(std::min(w, tup[0]), std::max(w, tup[0])) != middle)
                        continue;
                    std::vector<int> pts = tup;
                    pts.push_back(w);
                    std::vector<int> key = tup;
                    if (key[1] > key[L - 1]) { // direction normalization
                        std::reverse(key.begin() + 1, key.end());
                    }
                    key.push_back(w);
                    emit(ObstructionKind::AlternatingPolygon, pts, key,
                         "alternating " + std::to_string(L) + "-gon forces point equality");
                }
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

    // forced hexagon side: opposite pairs (v1v2,v4v5) and (v3v4,v6v1) equal
    if (n >= 6) {
        std::vector<int> tup;
        std::vector<char> used(n, 0);
        std::function<void(int)> rec = [&](int depth) {
            if (depth == 6) {
                auto cl = [&](int a, int b) { return c.class_of(tup[a], tup[b]); };
                if (cl(0, 1) == cl(3, 4) && cl(2, 3) == cl(5, 0) && cl(1, 2) != cl(4, 5)) {
                    Pair f1{std::min(tup[1], tup[2]), std::max(tup[1], tup[2])};
                    Pair f2{std::min(tup[4], tup[5]), std::max(tup[4], tup[5])};
                    std::vector<int> key = {std::min(f1.first, f2.first), f1.first, f1.second,
                                            f2.first, f2.second};
                    std::vector<int> given = {tup[0], tup[1], tup[3], tup[4], tup[2], tup[5]};
                    std::sort(given.begin(), given.end());
                    key.insert(key.end(), given.begin(), given.end());
                    if (f2 < f1) std::swap(f1, f2);
                    key[1] = f1.first;
                    key[2] = f1.second;
                    key[3] = f2.first;
                    key[4] = f2.second;
                    emit(ObstructionKind::ForcedHexagonSide, tup, key,
                         "hexagon forces side classes equal");
                }
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

    // alternating even cycle: edges alternate two distinct classes
    for (int L = 4; L <= n; L += 2) {
        std::vector<int> tup;
        std::vector<char> used(n, 0);
        std::function<void(int)> rec = [&](int depth) {
            if (depth == L) {
                auto cl = [&](int a) { return c.class_of(tup[a % L], tup[(a + 1) % L]); };
                int a = cl(0), b = cl(1);
                if (a == b) return;
                for (int i = 2; i < L; ++i)
                    if (cl(i) != (i % 2 == 0 ? a : b)) return;
                // dihedral-minimal form of the cycle as dedupe key
                std::vector<int> key;
                for (int refl = 0; refl < 2; ++refl)
                    for (int r = 0; r < L; ++r) {
                        std::vector<int> cand = tup;
                        if (refl) std::reverse(cand.begin(), cand.end());
                        std::rotate(cand.begin(), cand.begin() + r, cand.end());
                        if (key.empty() || cand < key) key = cand;
                    }
                emit(ObstructionKind::AlternatingCycleTorsion, tup, key,
                     std::to_string(L / 2) + "-torsion required");
            }
            for (int p = 0; p < n && depth < L; ++p) {
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

    // two aligned odd cycles with identical class sequences
    for (int L : {3, 5}) {
        if (L > n) break;
        std::vector<std::vector<int>> cycles;
        std::vector<int> tup;
        std::vector<char> used(n, 0);
        std::function<void(int)> gen = [&](int depth) {
            if (depth == L) {
                cycles.push_back(tup);
                return;
            }
            for (int p = 0; p < n; ++p) {
                if (used[p]) continue;
                used[p] = 1;
                tup.push_back(p);
                gen(depth + 1);
                tup.pop_back();
                used[p] = 0;
            }
        };
        gen(0);
        auto cls_seq = [&](const std::vector<int>& cy) {
            std::vector<int> s(L);
            for (int i = 0; i < L; ++i) s[i] = c.class_of(cy[i], cy[(i + 1) % L]);
            return s;
        };
        for (size_t x = 0; x < cycles.size(); ++x)
            for (size_t y = x + 1; y < cycles.size(); ++y) {
                if (cycles[x] == cycles[y]) continue;
                if (cls_seq(cycles[x]) != cls_seq(cycles[y])) continue;
                std::vector<int> pts = cycles[x];
                pts.insert(pts.end(), cycles[y].begin(), cycles[y].end());
                // joint normalization: rotations/reflections applied to both
                std::vector<int> best;
                for (int r = 0; r < L; ++r)
                    for (int refl = 0; refl < 2; ++refl)
                        for (int swap2 = 0; swap2 < 2; ++swap2) {
                            auto tf = [&](std::vector<int> cy) {
                                if (refl) std::reverse(cy.begin(), cy.end());
                                std::rotate(cy.begin(), cy.begin() + r, cy.end());
                                return cy;
                            };
                            auto ca = tf(cycles[x]), cb = tf(cycles[y]);
                            if (swap2) std::swap(ca, cb);
                            std::vector<int> key = ca;
                            key.insert(key.end(), cb.begin(), cb.end());
                            if (best.empty() || key < best) best = key;
                        }
                emit(ObstructionKind::TwoIdenticalOddCycles, pts, best,
                     "duplicated odd cycle forces 2-torsion");
            }
    }

    return out;
}

struct CatalogueEntry {
    CanonicalKey key;
    Cograph pattern;
    Verdict verdict;
};

namespace detail {

// enumerate all matchings of size >= 2 in K_n as sorted pair-index lists
inline std::vector<std::vector<int>> matchings_of_kn(int n) {
    int pc = pair_count(n);
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int start, int usedmask) {
        if ((int)cur.size() >= 2) out.push_back(cur);
        for (int p = start; p < pc; ++p) {
            auto [i, j] = pair_at(p);
            if (usedmask & ((1 << i) | (1 << j))) continue;
            cur.push_back(p);
            rec(p + 1, usedmask | (1 << i) | (1 << j));
            cur.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

} // namespace detail

// Isomorph-free generation of the six-point (or smaller) sum-cograph
// catalogue: candidate repeated-edge patterns are collections of disjoint
// matchings (a V is never realizable); candidates forcing extra edges are
// closed by merging and retried; unsolvable candidates are dropped.
inline std::vector<CatalogueEntry> enumerate_sum_cographs(int n = 6, bool force = false) {
    if (n > 6 && !force)
        throw std::domain_error("sum catalogue beyond n=6 requires force");
    int pc = pair_count(n);

    auto matchings = detail::matchings_of_kn(n);
    std::vector<int> edge_mask(matchings.size(), 0);
    for (size_t i = 0; i < matchings.size(); ++i)
        for (int p : matchings[i]) edge_mask[i] |= 1 << p;

    // unique multi-edge patterns up to isomorphism
    std::map<std::string, Cograph> reps;
    auto record = [&](const std::vector<int>& chosen) {
        std::vector<int> cls(pc, -1);
        int next = 0;
        for (int mi : chosen) {
            for (int p : matchings[mi]) cls[p] = next;
            ++next;
        }
        for (int p = 0; p < pc; ++p)
            if (cls[p] == -1) cls[p] = next++;
        Cograph pat(n, cls);
        Cograph canon = canonical_cograph(pat);
        reps.emplace(serialize(canon), canon);
    };

    std::vector<int> chosen;
    std::function<void(int, int)> rec = [&](int start, int used_mask) {
        record(chosen);
        for (int i = start; i < (int)matchings.size(); ++i) {
            if (edge_mask[i] & used_mask) continue;
            chosen.push_back(i);
            rec(i + 1, used_mask | edge_mask[i]);
            chosen.pop_back();
        }
    };
    rec(0, 0);

    // classify representatives; close forced-edge candidates and retry on
    // the canonicalized merge so verdicts always refer to the stored pattern
    std::map<std::string, CatalogueEntry> accepted;
    for (auto& [key, pat] : reps) {
        Cograph cur = pat;
        Verdict verdict = classify(cur);
        int guard = 0;
        while (verdict.outcome == Outcome::ForcesExtraEdges && guard++ < pc) {
            std::vector<int> cls(cur.class_assignment());
            std::vector<int> parent(cur.class_count());
            for (size_t i = 0; i < parent.size(); ++i) parent[i] = (int)i;
            std::function<int(int)> find = [&](int x) {
                return parent[x] == x ? x : parent[x] = find(parent[x]);
            };
            for (auto& [p1, p2] : verdict.forced_edge_equalities) {
                int a = find(cur.class_of(p1.first, p1.second));
                int b = find(cur.class_of(p2.first, p2.second));
                if (a != b) parent[a] = b;
            }
            for (auto& cl : cls) cl = find(cl);
            cur = canonical_cograph(Cograph(n, cls));
            verdict = classify(cur);
        }
        if (verdict.outcome == Outcome::Unsolvable ||
            verdict.outcome == Outcome::ForcesExtraEdges)
            continue;
        std::string ckey = serialize(cur);
        if (!accepted.count(ckey))
            accepted.emplace(ckey, CatalogueEntry{CanonicalKey{ckey}, cur, verdict});
    }

    std::vector<CatalogueEntry> out;
    for (auto& [k, e] : accepted) out.push_back(e);
    return out;
}

} // namespace cograph::sum
