#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cograph {

using Pair = std::pair<int, int>; // (i, j) with i < j

inline int pair_count(int n) { return n * (n - 1) / 2; }

// Pairs are stored in colex order: (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),...
// so all pairs inside {0..t} precede pairs involving t+1.
inline int pair_index(int i, int j) {
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;
}

inline Pair pair_at(int idx) {
    int j = 1;
    while ((j + 1) * j / 2 <= idx) ++j;
    return {idx - j * (j - 1) / 2, j};
}

inline bool pairs_disjoint(const Pair& a, const Pair& b) {
    return a.first != b.first && a.first != b.second && a.second != b.first &&
           a.second != b.second;
}

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(col_) + ")"),
          line(line_), column(col_) {}
};

// A partition of the C(n,2) point pairs of K_n into color classes. Class
// identity is positional: ids are normalized to first occurrence in colex
// pair order, so operator== means "same partition".
class Cograph {
public:
    Cograph(int n, std::vector<int> class_of) : n_(n), class_of_(std::move(class_of)) {
        if (n_ < 2) throw std::invalid_argument("cograph needs at least 2 points");
        if ((int)class_of_.size() != pair_count(n_))
            throw std::invalid_argument("class assignment does not cover all pairs");
        normalize();
    }

    static Cograph from_classes(int n, const std::vector<std::vector<Pair>>& classes) {
        std::vector<int> cls(pair_count(n), -1);
        for (size_t c = 0; c < classes.size(); ++c) {
            if (classes[c].empty()) throw std::invalid_argument("empty color class");
            for (auto [i, j] : classes[c]) {
                if (i == j || i < 0 || j < 0 || i >= n || j >= n)
                    throw std::invalid_argument("bad pair in class");
                int p = pair_index(i, j);
                if (cls[p] != -1) throw std::invalid_argument("pair assigned twice");
                cls[p] = (int)c;
            }
        }
        for (int p = 0; p < pair_count(n); ++p)
            if (cls[p] == -1) throw std::invalid_argument("pair not covered by any class");
        return Cograph(n, std::move(cls));
    }

    // Groups pairs by equal edge value (used by labeled cographs of any kind).
    template <typename V>
    static Cograph from_edge_values(int n, const std::vector<V>& value_per_pair) {
        if ((int)value_per_pair.size() != pair_count(n))
            throw std::invalid_argument("need one value per pair");
        std::map<V, int> ids;
        std::vector<int> cls(pair_count(n));
        for (int p = 0; p < pair_count(n); ++p) {
            auto it = ids.find(value_per_pair[p]);
            if (it == ids.end()) it = ids.emplace(value_per_pair[p], (int)ids.size()).first;
            cls[p] = it->second;
        }
        return Cograph(n, std::move(cls));
    }

    int points() const { return n_; }
    int class_count() const { return k_; }
    int class_of(int i, int j) const { return class_of_[pair_index(i, j)]; }
    int class_of_pair(int p) const { return class_of_[p]; }
    const std::vector<int>& class_assignment() const { return class_of_; }

    std::vector<std::vector<Pair>> class_members() const {
        std::vector<std::vector<Pair>> m(k_);
        for (int p = 0; p < (int)class_of_.size(); ++p) m[class_of_[p]].push_back(pair_at(p));
        return m;
    }

    std::vector<int> class_sizes() const {
        std::vector<int> s(k_, 0);
        for (int c : class_of_) ++s[c];
        return s;
    }

    bool operator==(const Cograph& o) const { return n_ == o.n_ && class_of_ == o.class_of_; }

private:
    void normalize() {
        int max_id = 0;
        for (int c : class_of_) {
            if (c < 0) throw std::invalid_argument("negative class id");
            max_id = std::max(max_id, c);
        }
        std::vector<int> relabel(max_id + 1, -1);
        int next = 0;
        for (int& c : class_of_) {
            if (relabel[c] == -1) relabel[c] = next++;
            c = relabel[c];
        }
        k_ = next;
    }

    int n_;
    std::vector<int> class_of_;
    int k_ = 0;
};

// p maps old point index -> new point index.
inline Cograph permute(const Cograph& c, const std::vector<int>& p) {
    int n = c.points();
    if ((int)p.size() != n) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> cls(pair_count(n));
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) cls[pair_index(p[i], p[j])] = c.class_of(i, j);
    return Cograph(n, std::move(cls));
}

using TypeSignature = std::vector<int>; // class sizes, descending

inline TypeSignature type_signature(const Cograph& c) {
    TypeSignature s = c.class_sizes();
    std::sort(s.begin(), s.end(), std::greater<int>());
    return s;
}

struct Graph {
    std::vector<int> vertices;
    std::vector<Pair> edges;
    bool operator==(const Graph&) const = default;
};

inline Graph color_block(const Cograph& c, int class_index) {
    if (class_index < 0 || class_index >= c.class_count())
        throw std::out_of_range("class index out of range");
    Graph g;
    for (int p = 0; p < pair_count(c.points()); ++p) {
        if (c.class_of_pair(p) != class_index) continue;
        auto [i, j] = pair_at(p);
        g.edges.push_back({i, j});
        g.vertices.push_back(i);
        g.vertices.push_back(j);
    }
    std::sort(g.vertices.begin(), g.vertices.end());
    g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

inline char point_token(int p) {
    if (p < 10) return char('0' + p);
    if (p < 16) return char('a' + (p - 10));
    throw std::invalid_argument("point index too large for token format");
}

inline int point_from_token(char t) {
    if (t >= '0' && t <= '9') return t - '0';
    if (t >= 'a' && t <= 'f') return t - 'a' + 10;
    return -1;
}

// Catalogue line format: n=<k>;{<p><q>,...},{...} with classes ordered by
// (size descending, lexicographically least pair) and pairs sorted inside
// each class. This is the interchange format for every catalogue file.
inline std::string serialize(const Cograph& c) {
    auto members = c.class_members();
    for (auto& m : members) std::sort(m.begin(), m.end());
    std::sort(members.begin(), members.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    std::string out = "n=" + std::to_string(c.points()) + ";";
    for (size_t ci = 0; ci < members.size(); ++ci) {
        if (ci) out += ',';
        out += '{';
        for (size_t pi = 0; pi < members[ci].size(); ++pi) {
            if (pi) out += ',';
            out += point_token(members[ci][pi].first);
            out += point_token(members[ci][pi].second);
        }
        out += '}';
    }
    return out;
}

inline Cograph parse(const std::string& text) {
    size_t pos = 0;
    auto fail = [&](const std::string& msg) -> ParseError {
        return ParseError(msg, 1, (int)pos + 1);
    };
    auto expect = [&](char ch) {
        if (pos >= text.size() || text[pos] != ch)
            throw fail(std::string("expected '") + ch + "'");
        ++pos;
    };
    expect('n');
    expect('=');
    size_t num_start = pos;
    while (pos < text.size() && isdigit((unsigned char)text[pos])) ++pos;
    if (pos == num_start) throw fail("expected point count");
    int n = std::stoi(text.substr(num_start, pos - num_start));
    if (n < 2 || n > 16) throw fail("point count out of range");
    expect(';');
    std::vector<std::vector<Pair>> classes;
    while (true) {
        expect('{');
        std::vector<Pair> cls;
        while (true) {
            if (pos + 1 >= text.size()) throw fail("unterminated pair token");
            int a = point_from_token(text[pos]);
            int b = point_from_token(text[pos + 1]);
            if (a < 0 || b < 0) throw fail("bad pair token");
            if (a >= n || b >= n) throw fail("point out of range");
            if (a >= b) throw fail("pair token must have p<q");
            pos += 2;
            cls.push_back({a, b});
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            break;
        }
        expect('}');
        classes.push_back(std::move(cls));
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        break;
    }
    if (pos != text.size()) throw fail("trailing characters");

    std::vector<int> seen(pair_count(n), 0);
    for (auto& cls : classes)
        for (auto [i, j] : cls) {
            if (seen[pair_index(i, j)]++)
                throw fail(std::string("pair ") + point_token(i) + point_token(j) +
                           " appears twice");
        }
    for (int p = 0; p < pair_count(n); ++p)
        if (!seen[p]) {
            auto [i, j] = pair_at(p);
            throw fail(std::string("pair ") + point_token(i) + point_token(j) + " missing");
        }
    return Cograph::from_classes(n, classes);
}

struct CanonicalKey {
    std::string bytes;
    auto operator<=>(const CanonicalKey&) const = default;
};

namespace detail {

// Minimizes the restricted-growth string of the class partition over all
// point relabelings, with prefix pruning. best[] doubles as the running
// lower bound: positions beyond the frontier of the best completed branch
// hold 0xFF.
struct Canonicalizer {
    const Cograph& c;
    int n;
    std::vector<uint8_t> best;
    std::vector<int> perm;      // new slot -> old point
    std::vector<char> used;
    std::vector<int> label_of;  // old class -> new label
    std::vector<int> trail;

    explicit Canonicalizer(const Cograph& cg)
        : c(cg), n(cg.points()), perm(cg.points()), used(cg.points(), 0),
          label_of(cg.class_count(), -1) {
        best.assign(pair_count(n), 0);
        for (int p = 0; p < pair_count(n); ++p) best[p] = (uint8_t)c.class_of_pair(p);
        // identity is already first-occurrence normalized
    }

    void run() { dfs(0); }

    void dfs(int t) {
        if (t == n) return;
        int base = t * (t - 1) / 2;
        for (int o = 0; o < n; ++o) {
            if (used[o]) continue;
            size_t trail_mark = trail.size();
            int next_label = (int)trail.size(); // one trail entry per assigned label
            bool pruned = false;
            for (int a = 0; a < t && !pruned; ++a) {
                int cls = c.class_of(perm[a], o);
                int lab = label_of[cls];
                if (lab == -1) {
                    lab = next_label++;
                    label_of[cls] = lab;
                    trail.push_back(cls);
                }
                int pos = base + a;
                if ((uint8_t)lab > best[pos]) {
                    pruned = true;
                } else if ((uint8_t)lab < best[pos]) {
                    best[pos] = (uint8_t)lab;
                    std::fill(best.begin() + pos + 1, best.end(), (uint8_t)0xFF);
                }
            }
            if (!pruned) {
                used[o] = 1;
                perm[t] = o;
                dfs(t + 1);
                used[o] = 0;
            }
            while (trail.size() > trail_mark) {
                label_of[trail.back()] = -1;
                trail.pop_back();
            }
        }
    }
};

} // namespace detail

// The canonical relabeling: same partition up to point permutation and class
// renaming iff the results are equal cographs.
inline Cograph canonical_cograph(const Cograph& c) {
    detail::Canonicalizer cz(c);
    cz.run();
    std::vector<int> cls(cz.best.begin(), cz.best.end());
    return Cograph(c.points(), std::move(cls));
}

inline CanonicalKey canonical_form(const Cograph& c) {
    return CanonicalKey{serialize(canonical_cograph(c))};
}

inline bool is_isomorphic(const Cograph& a, const Cograph& b) {
    if (a.points() != b.points())
        throw std::invalid_argument("cographs have distinct point counts");
    if (type_signature(a) != type_signature(b)) return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace cograph
