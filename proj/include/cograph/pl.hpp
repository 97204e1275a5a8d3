#pragma once

#include <functional>
#include <thread>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "cograph.hpp"

namespace cograph::pl {

struct PlCheck {
    bool ok = true;
    int rule = 0;              // 1 or 2 when violated
    std::vector<int> witness;  // violating triple or quadruple
};

// Rule 1: two equal edges at a point complete the triangle. Rule 2: one
// equal disjoint pair completes all four cross edges.
inline PlCheck is_pl(const Cograph& c) {
    int n = c.points();
    auto cl = [&](int i, int j) { return c.class_of(std::min(i, j), std::max(i, j)); };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                int x = cl(i, j), y = cl(j, k), z = cl(i, k);
                int eq = (x == y) + (y == z) + (x == z);
                if (eq == 1) return {false, 1, {i, j, k}};
            }
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            for (int r = q + 1; r < n; ++r)
                for (int s = r + 1; s < n; ++s) {
                    int pts[4] = {p, q, r, s};
                    int mt[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
                    for (auto& m : mt) {
                        int e = cl(pts[m[0]], pts[m[1]]);
                        if (e != cl(pts[m[2]], pts[m[3]])) continue;
                        for (int a = 0; a < 2; ++a)
                            for (int b = 2; b < 4; ++b)
                                if (cl(pts[m[a]], pts[m[b]]) != e)
                                    return {false, 2, {p, q, r, s}};
                    }
                }
    return {};
}

inline std::vector<std::vector<int>> blocks(const Cograph& c) {
    std::vector<std::vector<int>> out;
    for (int cls = 0; cls < c.class_count(); ++cls)
        out.push_back(color_block(c, cls).vertices);
    return out;
}

inline bool pairwise_intersection_check(const Cograph& c) {
    auto bl = blocks(c);
    for (size_t i = 0; i < bl.size(); ++i)
        for (size_t j = i + 1; j < bl.size(); ++j) {
            std::vector<int> common;
            std::set_intersection(bl[i].begin(), bl[i].end(), bl[j].begin(), bl[j].end(),
                                  std::back_inserter(common));
            if (common.size() > 1) return false;
        }
    return true;
}

inline bool every_block_complete(const Cograph& c) {
    auto bl = blocks(c);
    for (int cls = 0; cls < c.class_count(); ++cls) {
        auto& b = bl[cls];
        for (size_t i = 0; i < b.size(); ++i)
            for (size_t j = i + 1; j < b.size(); ++j)
                if (c.class_of(b[i], b[j]) != cls) return false;
    }
    return true;
}

struct LinearSpace {
    int n = 0;
    std::vector<std::vector<int>> lines; // every line, sorted; each has >= 2 points
    bool operator==(const LinearSpace&) const = default;
};

struct AxiomViolation : std::runtime_error {
    int axiom;
    std::vector<int> witness;
    AxiomViolation(int ax, std::vector<int> w, const std::string& msg)
        : std::runtime_error(msg), axiom(ax), witness(std::move(w)) {}
};

inline void validate_linear_space(const LinearSpace& s) {
    std::vector<int> cover(pair_count(s.n), 0);
    for (auto& line : s.lines) {
        if (line.size() < 2)
            throw AxiomViolation(2, line, "a line has fewer than two points");
        for (int p : line)
            if (p < 0 || p >= s.n) throw AxiomViolation(2, line, "line point out of range");
        for (size_t i = 0; i < line.size(); ++i)
            for (size_t j = i + 1; j < line.size(); ++j)
                ++cover[pair_index(line[i], line[j])];
    }
    for (int p = 0; p < pair_count(s.n); ++p) {
        auto [i, j] = pair_at(p);
        if (cover[p] == 0)
            throw AxiomViolation(1, {i, j}, "two points lie on no common line");
        if (cover[p] > 1)
            throw AxiomViolation(1, {i, j}, "two points lie on more than one line");
    }
}

inline LinearSpace to_linear_space(const Cograph& c) {
    auto check = is_pl(c);
    if (!check.ok) throw std::invalid_argument("cograph violates the point-line rules");
    if (!every_block_complete(c)) throw std::logic_error("a block is not complete");
    LinearSpace s;
    s.n = c.points();
    for (auto& b : blocks(c)) s.lines.push_back(b);
    std::sort(s.lines.begin(), s.lines.end());
    validate_linear_space(s);
    return s;
}

inline Cograph from_linear_space(const LinearSpace& s) {
    validate_linear_space(s);
    std::vector<int> cls(pair_count(s.n), -1);
    for (size_t li = 0; li < s.lines.size(); ++li)
        for (size_t i = 0; i < s.lines[li].size(); ++i)
            for (size_t j = i + 1; j < s.lines[li].size(); ++j)
                cls[pair_index(s.lines[li][i], s.lines[li][j])] = (int)li;
    return Cograph(s.n, cls);
}

// Interchange format, 1-indexed, only lines with three or more points shown
// (two-point lines are implicit).
inline std::string serialize_space(const LinearSpace& s) {
    std::string out = "points=" + std::to_string(s.n) + ";lines=[";
    bool first = true;
    for (auto& line : s.lines) {
        if (line.size() < 3) continue;
        if (!first) out += ',';
        first = false;
        out += '{';
        for (size_t i = 0; i < line.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(line[i] + 1);
        }
        out += '}';
    }
    out += ']';
    return out;
}

inline LinearSpace parse_space(const std::string& text) {
    size_t pos = 0;
    auto fail = [&](const std::string& msg) {
        return ParseError(msg, 1, (int)pos + 1);
    };
    auto expect = [&](const std::string& tok) {
        if (text.compare(pos, tok.size(), tok) != 0) throw fail("expected '" + tok + "'");
        pos += tok.size();
    };
    auto read_int = [&]() {
        size_t start = pos;
        while (pos < text.size() && isdigit((unsigned char)text[pos])) ++pos;
        if (pos == start) throw fail("expected number");
        return std::stoi(text.substr(start, pos - start));
    };
    expect("points=");
    LinearSpace s;
    s.n = read_int();
    if (s.n < 2) throw fail("need at least two points");
    expect(";lines=[");
    if (pos < text.size() && text[pos] == ']') {
        ++pos;
    } else {
        while (true) {
            expect("{");
            std::vector<int> line;
            while (true) {
                int v = read_int();
                if (v < 1 || v > s.n) throw fail("line point out of range");
                line.push_back(v - 1);
                if (pos < text.size() && text[pos] == ',') {
                    ++pos;
                    continue;
                }
                break;
            }
            expect("}");
            std::sort(line.begin(), line.end());
            if (line.size() < 3) throw fail("listed lines must have three or more points");
            s.lines.push_back(line);
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            break;
        }
        expect("]");
    }
    if (pos != text.size()) throw fail("trailing characters");

    // complete with the implicit two-point lines
    std::vector<char> covered(pair_count(s.n), 0);
    for (auto& line : s.lines)
        for (size_t i = 0; i < line.size(); ++i)
            for (size_t j = i + 1; j < line.size(); ++j) {
                int p = pair_index(line[i], line[j]);
                if (covered[p]) {
                    throw AxiomViolation(1, {line[i], line[j]},
                                         "two points lie on more than one listed line");
                }
                covered[p] = 1;
            }
    for (int p = 0; p < pair_count(s.n); ++p)
        if (!covered[p]) {
            auto [i, j] = pair_at(p);
            s.lines.push_back({i, j});
        }
    std::sort(s.lines.begin(), s.lines.end());
    validate_linear_space(s);
    return s;
}

struct CoordLabel {
    bool is_pair = false;
    int a = -1, b = -1; // classes: (C(P,X), C(P,Y)) or (C(P,O), -1)
    bool operator==(const CoordLabel&) const = default;
    auto operator<=>(const CoordLabel&) const = default;
};

struct Coordinatization {
    int X = -1, Y = -1, O = -1;
    std::map<int, CoordLabel> labels; // for every point other than X and Y
};

// Labels each point by its edges to the two anchors, falling back to the
// edge toward O when those coincide; the labeling is provably injective.
inline Coordinatization coordinatize(const Cograph& c, int X, int Y, int O = -1) {
    auto check = is_pl(c);
    if (!check.ok) throw std::invalid_argument("not a point-line cograph");
    if (c.class_count() < 2)
        throw std::invalid_argument("single-edge cograph has no coordinatization");
    int n = c.points();
    if (X == Y || X < 0 || Y < 0 || X >= n || Y >= n)
        throw std::invalid_argument("bad anchor points");
    auto cl = [&](int i, int j) { return c.class_of(std::min(i, j), std::max(i, j)); };

    int e = cl(X, Y);
    auto valid_origin = [&](int o) {
        if (o == X || o == Y) return false;
        int f = cl(o, X), g = cl(o, Y);
        return f != e && g != e && f != g;
    };
    if (O < 0) {
        for (int o = 0; o < n && O < 0; ++o)
            if (valid_origin(o)) O = o;
        if (O < 0) throw std::logic_error("no valid origin exists");
    } else if (!valid_origin(O)) {
        throw std::invalid_argument("chosen origin does not give three distinct edges");
    }

    Coordinatization out;
    out.X = X;
    out.Y = Y;
    out.O = O;
    for (int p = 0; p < n; ++p) {
        if (p == X || p == Y) continue;
        int px = cl(p, X), py = cl(p, Y);
        if (px != py)
            out.labels[p] = {true, px, py};
        else
            out.labels[p] = {false, cl(p, O), -1};
    }
    for (auto it = out.labels.begin(); it != out.labels.end(); ++it)
        for (auto jt = std::next(it); jt != out.labels.end(); ++jt)
            if (it->second == jt->second)
                throw std::logic_error("coordinatization labels collide");
    return out;
}

// Disjoint union plus a fresh single-copy edge for every cross pair.
inline Cograph pl_sum(const Cograph& a, const Cograph& b) {
    int na = a.points(), nb = b.points();
    int n = na + nb;
    std::vector<int> cls(pair_count(n));
    int ka = a.class_count(), kb = b.class_count();
    int next = ka + kb;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (j < na)
                cls[pair_index(i, j)] = a.class_of(i, j);
            else if (i >= na)
                cls[pair_index(i, j)] = ka + b.class_of(i - na, j - na);
            else
                cls[pair_index(i, j)] = next++;
        }
    Cograph out(n, cls);
    if (out.class_count() != ka + kb + na * nb)
        throw std::logic_error("sum class count mismatch");
    if (!is_pl(out).ok) throw std::logic_error("sum of PL cographs is not PL");
    return out;
}

inline bool all_points_equivalent(const Cograph& c) {
    if (c.class_count() == 1) return true;
    for (int s : c.class_sizes())
        if (s != 1) return false;
    return true;
}

// Join at one point (both operands must have all points equivalent); cross
// pairs between the private parts become fresh single-copy edges.
inline Cograph pl_wedge(const Cograph& a, const Cograph& b) {
    if (!all_points_equivalent(a) || !all_points_equivalent(b))
        throw std::invalid_argument("wedge needs operands with all points equivalent");
    int na = a.points(), nb = b.points();
    int n = na + nb - 1;
    // a keeps its labels; b's point 0 is identified with a's point 0
    auto bmap = [&](int p) { return p == 0 ? 0 : na + p - 1; };
    std::vector<int> cls(pair_count(n), -1);
    int ka = a.class_count();
    for (int j = 1; j < na; ++j)
        for (int i = 0; i < j; ++i) cls[pair_index(i, j)] = a.class_of(i, j);
    for (int j = 1; j < nb; ++j)
        for (int i = 0; i < j; ++i) {
            int u = bmap(i), v = bmap(j);
            cls[pair_index(std::min(u, v), std::max(u, v))] = ka + b.class_of(i, j);
        }
    int next = ka + b.class_count();
    for (auto& x : cls)
        if (x == -1) x = next++;
    Cograph out(n, cls);
    if (out.class_count() != ka + b.class_count() + (na - 1) * (nb - 1))
        throw std::logic_error("wedge class count mismatch");
    if (!is_pl(out).ok) throw std::logic_error("wedge of PL cographs is not PL");
    return out;
}

// Isomorph-free generation: choose nontrivial lines (size >= 3 subsets with
// pairwise intersection at most one point), complete with two-point lines,
// canonicalize the associated cograph and deduplicate. Work splits across
// workers by the first chosen line; the merged map is independent of the
// worker count.
inline std::map<std::string, LinearSpace> enumerate_pl_spaces(int n, bool force = false,
                                                              int threads = 1) {
    if (n < 2) throw std::domain_error("need n >= 2");
    if (n > 7 && !force) throw std::domain_error("n = 8 enumeration requires force");
    if (n > 8) throw std::domain_error("point-line enumeration supports n <= 8");

    std::vector<unsigned> line_masks;
    std::vector<unsigned> pair_masks;
    for (unsigned m = 0; m < (1u << n); ++m) {
        if (__builtin_popcount(m) < 3) continue;
        line_masks.push_back(m);
        unsigned pm = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if ((m >> i & 1) && (m >> j & 1)) pm |= 1u << pair_index(i, j);
        pair_masks.push_back(pm);
    }

    auto space_of = [&](const std::vector<unsigned>& chosen) {
        LinearSpace s;
        s.n = n;
        std::vector<char> covered(pair_count(n), 0);
        for (unsigned m : chosen) {
            std::vector<int> line;
            for (int i = 0; i < n; ++i)
                if (m >> i & 1) line.push_back(i);
            for (size_t i = 0; i < line.size(); ++i)
                for (size_t j = i + 1; j < line.size(); ++j)
                    covered[pair_index(line[i], line[j])] = 1;
            s.lines.push_back(std::move(line));
        }
        for (int p = 0; p < pair_count(n); ++p)
            if (!covered[p]) {
                auto [i, j] = pair_at(p);
                s.lines.push_back({i, j});
            }
        std::sort(s.lines.begin(), s.lines.end());
        return s;
    };

    auto run_from = [&](size_t first, std::set<std::string>& local) {
        std::vector<unsigned> chosen = {line_masks[first]};
        std::function<void(size_t, unsigned)> rec = [&](size_t start, unsigned used) {
            local.insert(canonical_form(from_linear_space(space_of(chosen))).bytes);
            for (size_t i = start; i < line_masks.size(); ++i) {
                if (pair_masks[i] & used) continue;
                chosen.push_back(line_masks[i]);
                rec(i + 1, used | pair_masks[i]);
                chosen.pop_back();
            }
        };
        rec(first + 1, pair_masks[first]);
    };

    std::set<std::string> keys;
    keys.insert(canonical_form(from_linear_space(space_of({}))).bytes);
    if (threads <= 1) {
        for (size_t first = 0; first < line_masks.size(); ++first) run_from(first, keys);
    } else {
        std::vector<std::set<std::string>> locals(threads);
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t]() {
                for (size_t first = t; first < line_masks.size(); first += threads)
                    run_from(first, locals[t]);
            });
        for (auto& th : pool) th.join();
        for (auto& local : locals) keys.merge(local);
    }

    // the stored representative is always the space of the canonical pattern,
    // so results are independent of traversal and worker count
    std::map<std::string, LinearSpace> out;
    for (auto& k : keys) out.emplace(k, to_linear_space(parse(k)));
    return out;
}

inline std::vector<CanonicalKey> enumerate_pl(int n, bool force = false, int threads = 1) {
    std::vector<CanonicalKey> keys;
    for (auto& [k, s] : enumerate_pl_spaces(n, force, threads)) keys.push_back(CanonicalKey{k});
    return keys;
}

inline bool all_points_on_nontrivial(const LinearSpace& s) {
    std::vector<char> on(s.n, 0);
    for (auto& line : s.lines)
        if (line.size() >= 3)
            for (int p : line) on[p] = 1;
    for (int p = 0; p < s.n; ++p)
        if (!on[p]) return false;
    return true;
}

// Minimal: every point on a nontrivial line and not an expansion of a
// smaller such space, where expanding may add points to existing nontrivial
// lines (or as trivially attached points) but never create a new nontrivial
// line. Operationally: no proper point subset keeps >= 3 points on every
// nontrivial line while still covering all its points.
inline bool is_minimal(const LinearSpace& s) {
    if (!all_points_on_nontrivial(s)) return false;
    std::vector<std::vector<int>> big;
    for (auto& line : s.lines)
        if (line.size() >= 3) big.push_back(line);

    // a point is removable only if every nontrivial line through it keeps 3
    std::vector<int> candidates;
    for (int p = 0; p < s.n; ++p) {
        bool ok = true;
        for (auto& line : big)
            if (std::find(line.begin(), line.end(), p) != line.end() && line.size() < 4)
                ok = false;
        if (ok) candidates.push_back(p);
    }
    int cN = (int)candidates.size();
    for (unsigned mask = 1; mask < (1u << cN); ++mask) {
        std::set<int> removed;
        for (int i = 0; i < cN; ++i)
            if (mask >> i & 1) removed.insert(candidates[i]);
        if ((int)removed.size() == s.n) continue;
        bool lines_ok = true;
        for (auto& line : big) {
            int keep = 0;
            for (int p : line) keep += !removed.count(p);
            if (keep < 3) {
                lines_ok = false;
                break;
            }
        }
        if (!lines_ok) continue;
        // restriction must still have every point on a restricted nontrivial line
        std::vector<char> on(s.n, 0);
        for (auto& line : big) {
            std::vector<int> rest;
            for (int p : line)
                if (!removed.count(p)) rest.push_back(p);
            if (rest.size() >= 3)
                for (int p : rest) on[p] = 1;
        }
        bool covers = true;
        for (int p = 0; p < s.n; ++p)
            if (!removed.count(p) && !on[p]) covers = false;
        if (covers) return false; // s expands this smaller space
    }
    return true;
}

inline std::vector<LinearSpace> minimal_spaces(int n, bool force = false) {
    std::vector<LinearSpace> out;
    if (n < 2) return out;
    for (auto& [k, s] : enumerate_pl_spaces(n, force))
        if (is_minimal(s)) out.push_back(s);
    return out;
}

inline int minimal_space_count(int n, bool force = false) {
    if (n <= 1) return 0;
    return (int)minimal_spaces(n, force).size();
}

// alternative, simpler reading: only "every point on a nontrivial line"
inline int minimal_space_count_simple_reading(int n, bool force = false) {
    if (n <= 1) return 0;
    int count = 0;
    for (auto& [k, s] : enumerate_pl_spaces(n, force))
        if (all_points_on_nontrivial(s)) ++count;
    return count;
}

// Minimal spaces counted by number of nontrivial lines, over all point
// counts. Line systems are enumerated abstractly: multi-points are subsets
// of lines (>= 2, pairwise sharing at most one line), plus sole points on
// one line; minimality bounds line sizes by max(3, k-1).
inline int minimal_spaces_with_lines(int k, int max_points = 0) {
    if (k < 1 || k > 5) throw std::domain_error("supported for 1..5 nontrivial lines");
    int max_size = std::max(3, k - 1);

    std::vector<std::vector<int>> subsets; // candidate multipoint types
    for (unsigned m = 1; m < (1u << k); ++m) {
        if (__builtin_popcount(m) < 2) continue;
        std::vector<int> s;
        for (int i = 0; i < k; ++i)
            if (m >> i & 1) s.push_back(i);
        subsets.push_back(s);
    }

    std::set<std::string> classes;
    std::vector<int> chosen;
    auto pair_ok = [&](const std::vector<int>& a, const std::vector<int>& b) {
        int common = 0;
        for (int x : a)
            for (int y : b) common += x == y;
        return common <= 1;
    };

    std::function<void(size_t)> rec = [&](size_t start) {
        // line sizes from the chosen multipoints
        std::vector<int> mult(k, 0);
        for (int idx : chosen)
            for (int l : subsets[idx]) ++mult[l];
        // per line: either pad with soles to size 3, or keep size = mult in [4, k-1]
        std::vector<std::vector<int>> size_options(k);
        bool feasible = true;
        for (int l = 0; l < k; ++l) {
            if (mult[l] <= 3) size_options[l].push_back(3);
            if (mult[l] >= 4 && mult[l] <= max_size) size_options[l].push_back(mult[l]);
            if (size_options[l].empty()) feasible = false;
        }
        if (feasible) {
            std::vector<int> sizes(k);
            std::function<void(int)> pick = [&](int l) {
                if (l == k) {
                    // build the explicit space
                    LinearSpace s;
                    int pt = 0;
                    std::vector<std::vector<int>> lines(k);
                    for (int idx : chosen) {
                        for (int ln : subsets[idx]) lines[ln].push_back(pt);
                        ++pt;
                    }
                    for (int ln = 0; ln < k; ++ln)
                        while ((int)lines[ln].size() < sizes[ln]) lines[ln].push_back(pt++);
                    s.n = pt;
                    for (auto& ln : lines) {
                        std::sort(ln.begin(), ln.end());
                        s.lines.push_back(ln);
                    }
                    std::vector<char> covered(pair_count(s.n), 0);
                    for (auto& ln : s.lines)
                        for (size_t i = 0; i < ln.size(); ++i)
                            for (size_t j = i + 1; j < ln.size(); ++j)
                                covered[pair_index(ln[i], ln[j])] = 1;
                    for (int p = 0; p < pair_count(s.n); ++p)
                        if (!covered[p]) {
                            auto [i, j] = pair_at(p);
                            s.lines.push_back({i, j});
                        }
                    std::sort(s.lines.begin(), s.lines.end());
                    if (max_points && s.n > max_points) return;
                    if (!is_minimal(s)) return;
                    // canonical form over line permutations
                    std::vector<int> perm(k);
                    for (int i = 0; i < k; ++i) perm[i] = i;
                    std::string best;
                    do {
                        std::vector<std::vector<int>> mp;
                        for (int idx : chosen) {
                            std::vector<int> t;
                            for (int l : subsets[idx]) t.push_back(perm[l]);
                            std::sort(t.begin(), t.end());
                            mp.push_back(t);
                        }
                        std::sort(mp.begin(), mp.end());
                        std::vector<int> sz(k);
                        for (int l = 0; l < k; ++l) sz[perm[l]] = sizes[l];
                        std::string enc;
                        for (auto& t : mp) {
                            for (int x : t) enc += char('a' + x);
                            enc += '|';
                        }
                        enc += ';';
                        for (int x : sz) enc += char('0' + x);
                        if (best.empty() || enc < best) best = enc;
                    } while (std::next_permutation(perm.begin(), perm.end()));
                    classes.insert(best);
                    return;
                }
                for (int sz : size_options[l]) {
                    sizes[l] = sz;
                    pick(l + 1);
                }
            };
            pick(0);
        }
        for (size_t i = start; i < subsets.size(); ++i) {
            bool ok = true;
            for (int idx : chosen)
                if (!pair_ok(subsets[idx], subsets[i])) ok = false;
            // a pair of lines may meet in at most one point
            if (ok) {
                std::set<std::pair<int, int>> used_pairs;
                for (int idx : chosen)
                    for (size_t a = 0; a < subsets[idx].size(); ++a)
                        for (size_t b = a + 1; b < subsets[idx].size(); ++b)
                            used_pairs.insert({subsets[idx][a], subsets[idx][b]});
                for (size_t a = 0; a < subsets[i].size() && ok; ++a)
                    for (size_t b = a + 1; b < subsets[i].size() && ok; ++b)
                        if (used_pairs.count({subsets[i][a], subsets[i][b]})) ok = false;
            }
            if (!ok) continue;
            chosen.push_back((int)i);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    return (int)classes.size();
}

} // namespace cograph::pl
