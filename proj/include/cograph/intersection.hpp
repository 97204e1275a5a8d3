#pragma once

#include <optional>
#include <set>
#include <string>

#include "cograph.hpp"
#include "enumeration.hpp"

namespace cograph::isect {

using AtomSet = std::vector<int>; // sorted, unique

inline AtomSet set_intersect(const AtomSet& a, const AtomSet& b) {
    AtomSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline AtomSet set_union(const AtomSet& a, const AtomSet& b) {
    AtomSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool set_subset(const AtomSet& a, const AtomSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

struct RuleViolation {
    enum class Kind { Triangle, Quadrilateral } kind;
    std::vector<int> points;
};

struct RuleReport {
    std::vector<RuleViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Triangle rule: the three pairwise intersections of a triangle's edge sets
// agree. Quadrilateral rule: for any four points, the three opposite-pair
// intersections agree. Labels are per class; distinct classes must carry
// distinct sets.
inline RuleReport check_rules(const Cograph& pattern, const std::vector<AtomSet>& class_sets) {
    int n = pattern.points();
    if ((int)class_sets.size() != pattern.class_count())
        throw std::invalid_argument("need one set per class");
    for (size_t i = 0; i < class_sets.size(); ++i)
        for (size_t j = i + 1; j < class_sets.size(); ++j)
            if (class_sets[i] == class_sets[j])
                throw std::invalid_argument("distinct classes must have distinct sets");

    auto edge = [&](int i, int j) -> const AtomSet& {
        return class_sets[pattern.class_of(std::min(i, j), std::max(i, j))];
    };

    RuleReport rep;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                AtomSet ab = set_intersect(edge(i, j), edge(j, k));
                AtomSet bc = set_intersect(edge(j, k), edge(i, k));
                AtomSet ac = set_intersect(edge(i, j), edge(i, k));
                if (!(ab == bc && bc == ac))
                    rep.violations.push_back({RuleViolation::Kind::Triangle, {i, j, k}});
            }
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            for (int r = q + 1; r < n; ++r)
                for (int s = r + 1; s < n; ++s) {
                    AtomSet i1 = set_intersect(edge(p, q), edge(r, s));
                    AtomSet i2 = set_intersect(edge(p, r), edge(q, s));
                    AtomSet i3 = set_intersect(edge(p, s), edge(q, r));
                    if (!(i1 == i2 && i2 == i3))
                        rep.violations.push_back({RuleViolation::Kind::Quadrilateral, {p, q, r, s}});
                }
    return rep;
}

inline int label_atom(int point) { return -(point + 1); }

struct UieResult {
    std::vector<AtomSet> points;    // P' = {label} U union of incident edges
    std::vector<AtomSet> realized;  // label atoms as fresh positive ints, only where needed
};

// Union-of-incident-edges construction; requires the rule report to be
// empty and verifies P' ^ Q' == C(P,Q) for every pair.
inline UieResult uie_construct(const Cograph& pattern, const std::vector<AtomSet>& class_sets) {
    RuleReport rep = check_rules(pattern, class_sets);
    if (!rep.ok())
        throw std::invalid_argument("edge sets violate the triangle/quadrilateral rules");
    int n = pattern.points();
    auto edge = [&](int i, int j) -> const AtomSet& {
        return class_sets[pattern.class_of(std::min(i, j), std::max(i, j))];
    };

    UieResult out;
    std::vector<AtomSet> raw(n);
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q)
            if (q != p) raw[p] = set_union(raw[p], edge(p, q));
        AtomSet with_label = raw[p];
        with_label.insert(with_label.begin(), label_atom(p));
        std::sort(with_label.begin(), with_label.end());
        out.points.push_back(with_label);
    }
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            if (set_intersect(out.points[p], out.points[q]) != edge(p, q))
                throw std::logic_error("UIE postcondition failed");

    int fresh = 0;
    for (auto& s : class_sets)
        for (int a : s) fresh = std::max(fresh, a);
    std::set<AtomSet> used;
    for (int p = 0; p < n; ++p) {
        AtomSet s = raw[p];
        if (!used.insert(s).second) {
            s.push_back(++fresh); // realized label to split identical incidence sets
            used.insert(s);
        }
        out.realized.push_back(s);
    }
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            if (set_intersect(out.realized[p], out.realized[q]) != edge(p, q))
                throw std::logic_error("realized UIE postcondition failed");
    return out;
}

struct FatRepresentation {
    std::vector<AtomSet> points;       // P* with one atom per incident pair plus a label
    std::vector<AtomSet> family;       // intersection-closed family S (without empty/universe)
    AtomSet universe;
    std::vector<int> family_class;     // class represented by each family member
};

// Every cograph is a fat intersection cograph: give each pair its own atom,
// gather each class's atoms into one family member, and round intersections
// up to the smallest containing member.
inline FatRepresentation fat_intersection_represent(const Cograph& c) {
    int n = c.points();
    FatRepresentation out;
    for (int p = 0; p < n; ++p) {
        AtomSet s = {label_atom(p)};
        for (int q = 0; q < n; ++q)
            if (q != p) s.push_back(pair_index(std::min(p, q), std::max(p, q)));
        std::sort(s.begin(), s.end());
        out.points.push_back(s);
        out.universe = set_union(out.universe, s);
    }
    auto members = c.class_members();
    for (int cls = 0; cls < (int)members.size(); ++cls) {
        AtomSet s;
        for (auto [i, j] : members[cls]) s.push_back(pair_index(i, j));
        std::sort(s.begin(), s.end());
        out.family.push_back(s);
        out.family_class.push_back(cls);
    }

    // verification: the smallest family member (including the universe)
    // containing P* ^ Q* recovers the class of {P,Q}
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            AtomSet t = set_intersect(out.points[p], out.points[q]);
            if (t != AtomSet{pair_index(p, q)})
                throw std::logic_error("fat representation: point intersection is not the pair atom");
            int best = -1;
            size_t best_size = out.universe.size() + 1;
            for (size_t f = 0; f < out.family.size(); ++f)
                if (set_subset(t, out.family[f]) && out.family[f].size() < best_size) {
                    best = (int)f;
                    best_size = out.family[f].size();
                }
            if (best < 0 || out.family_class[best] != c.class_of(p, q))
                throw std::logic_error("fat representation: smallest member misses the class");
        }
    return out;
}

enum class ForbiddenKind { InclusionCycle2, InclusionCycle3, TwoTriangleContradiction };

struct ForbiddenFinding {
    ForbiddenKind kind;
    std::vector<int> classes;
    std::string note;
};

namespace detail {

// Derived strict inclusions between classes: a triangle with sides (x,x,y)
// forces y to contain x; a quadrilateral with one opposite pair equal forces
// the other two sides to contain it.
inline std::vector<std::vector<char>> derived_inclusions(const Cograph& c) {
    int n = c.points();
    int k = c.class_count();
    std::vector<std::vector<char>> inc(k, std::vector<char>(k, 0)); // inc[b][a]: a contains b
    auto cl = [&](int i, int j) { return c.class_of(std::min(i, j), std::max(i, j)); };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int l = j + 1; l < n; ++l) {
                int x = cl(i, j), y = cl(j, l), z = cl(i, l);
                if (x == y && x != z) inc[x][z] = 1;
                if (x == z && x != y) inc[x][y] = 1;
                if (y == z && y != x) inc[y][x] = 1;
            }
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            for (int r = q + 1; r < n; ++r)
                for (int s = r + 1; s < n; ++s) {
                    int pts[4] = {p, q, r, s};
                    // three matchings of the 4-subset
                    int mt[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
                    for (auto& m : mt) {
                        int e1 = cl(pts[m[0]], pts[m[1]]);
                        int e2 = cl(pts[m[2]], pts[m[3]]);
                        if (e1 != e2) continue;
                        // remaining four sides each contain e1
                        for (int a = 0; a < 2; ++a)
                            for (int b = 2; b < 4; ++b) {
                                int side = cl(pts[m[a]], pts[m[b]]);
                                if (side != e1) inc[e1][side] = 1;
                            }
                    }
                }
    return inc;
}

} // namespace detail

// Pattern-level obstructions to intersection representability: inclusion
// cycles of length 2 or 3 and the chained-triangle contradiction
// b = a^b = a^c = c.
inline std::vector<ForbiddenFinding> find_forbidden(const Cograph& c) {
    int n = c.points();
    int k = c.class_count();
    auto inc = detail::derived_inclusions(c);
    std::vector<ForbiddenFinding> out;

    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (inc[a][b] && inc[b][a])
                out.push_back({ForbiddenKind::InclusionCycle2, {a, b},
                               "classes force mutual strict inclusion"});
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int cc = 0; cc < k; ++cc) {
                if (a == b || b == cc || a == cc) continue;
                if (a < b && a < cc && inc[a][b] && inc[b][cc] && inc[cc][a])
                    out.push_back({ForbiddenKind::InclusionCycle3, {a, b, cc},
                                   "three classes force an inclusion cycle"});
            }

    // transitive closure for the chained-triangle contradiction
    auto closed = inc;
    for (int m = 0; m < k; ++m)
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                if (closed[a][m] && closed[m][b]) closed[a][b] = 1;
    auto cl = [&](int i, int j) { return c.class_of(std::min(i, j), std::max(i, j)); };
    std::set<std::vector<int>> seen;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int l = j + 1; l < n; ++l) {
                int sides[3] = {cl(i, j), cl(j, l), cl(i, l)};
                for (int big = 0; big < 3; ++big) {
                    int a = sides[big], b = sides[(big + 1) % 3], cc = sides[(big + 2) % 3];
                    if (b == cc || a == b || a == cc) continue;
                    if (closed[b][a] && closed[cc][a]) {
                        std::vector<int> key = {a, std::min(b, cc), std::max(b, cc)};
                        if (seen.insert(key).second)
                            out.push_back({ForbiddenKind::TwoTriangleContradiction, key,
                                           "triangle with both small sides inside the third"});
                    }
                }
            }
    return out;
}

// Exact representability: an atom is usable iff its class-membership column
// satisfies every triangle and quadrilateral rule pointwise; the pattern is
// an intersection cograph iff the usable columns separate all classes.
inline bool representable(const Cograph& c, std::vector<AtomSet>* out_sets = nullptr) {
    int n = c.points();
    int k = c.class_count();
    auto cl = [&](int i, int j) { return c.class_of(std::min(i, j), std::max(i, j)); };

    std::vector<unsigned> columns;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        bool ok = true;
        auto in = [&](int cls) { return (mask >> cls) & 1u; };
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                for (int l = j + 1; l < n && ok; ++l) {
                    bool x = in(cl(i, j)), y = in(cl(j, l)), z = in(cl(i, l));
                    if ((x && y) != (y && z) || (y && z) != (x && z)) ok = false;
                }
        for (int p = 0; p < n && ok; ++p)
            for (int q = p + 1; q < n && ok; ++q)
                for (int r = q + 1; r < n && ok; ++r)
                    for (int s = r + 1; s < n && ok; ++s) {
                        bool i1 = in(cl(p, q)) && in(cl(r, s));
                        bool i2 = in(cl(p, r)) && in(cl(q, s));
                        bool i3 = in(cl(p, s)) && in(cl(q, r));
                        if (i1 != i2 || i2 != i3) ok = false;
                    }
        if (ok && mask != 0) columns.push_back(mask);
    }

    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            bool separated = false;
            for (unsigned col : columns)
                if (((col >> a) & 1u) != ((col >> b) & 1u)) {
                    separated = true;
                    break;
                }
            if (!separated) return false;
        }

    if (out_sets) {
        out_sets->assign(k, {});
        for (size_t ci = 0; ci < columns.size(); ++ci)
            for (int cls = 0; cls < k; ++cls)
                if ((columns[ci] >> cls) & 1u) (*out_sets)[cls].push_back((int)ci + 1);
    }
    return true;
}

struct IsectEntry {
    CanonicalKey key;
    Cograph pattern;
    std::vector<AtomSet> class_sets;
};

// Filter the n-point cograph catalogue by constructive representability;
// every survivor carries verified edge sets and passes the UIE construction.
inline std::vector<IsectEntry> enumerate_intersection_cographs(int n = 4) {
    if (n < 2 || n > 4)
        throw std::domain_error("intersection catalogue supports 2 <= n <= 4");
    std::vector<IsectEntry> out;
    for (auto& key : enumerate_cographs(n)) {
        Cograph c = parse(key.bytes);
        std::vector<AtomSet> sets;
        if (!representable(c, &sets)) continue;
        uie_construct(c, sets); // throws if the construction failed
        out.push_back({key, c, sets});
    }
    return out;
}

} // namespace cograph::isect
