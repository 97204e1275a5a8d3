#pragma once

#include <array>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>

#include "cograph.hpp"

namespace cograph::group {

struct FiniteGroup {
    std::string name;
    int order = 0;
    std::vector<std::vector<int>> mul;
    int identity = 0;
    std::vector<int> inv;

    int op(int a, int b) const { return mul[a][b]; }

    int power(int a, long long e) const {
        int r = identity;
        int base = a;
        if (e < 0) {
            base = inv[a];
            e = -e;
        }
        while (e) {
            if (e & 1) r = op(r, base);
            base = op(base, base);
            e >>= 1;
        }
        return r;
    }

    int element_order(int a) const {
        int r = a, k = 1;
        while (r != identity) {
            r = op(r, a);
            ++k;
        }
        return k;
    }

    // identity/inverse laws are checked completely; associativity on random
    // triples unless full is set
    void validate(bool full = false, unsigned seed = 1) const {
        for (int a = 0; a < order; ++a) {
            if (op(identity, a) != a || op(a, identity) != a)
                throw std::logic_error("identity law fails");
            if (op(a, inv[a]) != identity || op(inv[a], a) != identity)
                throw std::logic_error("inverse law fails");
        }
        if (full) {
            for (int a = 0; a < order; ++a)
                for (int b = 0; b < order; ++b)
                    for (int c = 0; c < order; ++c)
                        if (op(op(a, b), c) != op(a, op(b, c)))
                            throw std::logic_error("associativity fails");
        } else {
            std::mt19937_64 rng(seed);
            for (int t = 0; t < 64; ++t) {
                int a = (int)(rng() % order), b = (int)(rng() % order), c = (int)(rng() % order);
                if (op(op(a, b), c) != op(a, op(b, c)))
                    throw std::logic_error("associativity fails");
            }
        }
    }
};

inline FiniteGroup cyclic(int n) {
    FiniteGroup g;
    g.name = "Z" + std::to_string(n);
    g.order = n;
    g.mul.assign(n, std::vector<int>(n));
    g.inv.resize(n);
    for (int a = 0; a < n; ++a) {
        g.inv[a] = (n - a) % n;
        for (int b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
    }
    return g;
}

// order 2n; elements r^i (i < n) then r^i s
inline FiniteGroup dihedral(int n) {
    FiniteGroup g;
    g.name = "D" + std::to_string(n);
    g.order = 2 * n;
    g.mul.assign(2 * n, std::vector<int>(2 * n));
    g.inv.resize(2 * n);
    auto enc = [&](int i, int s) { return s * n + ((i % n) + n) % n; };
    for (int i = 0; i < n; ++i)
        for (int s = 0; s < 2; ++s)
            for (int j = 0; j < n; ++j)
                for (int t = 0; t < 2; ++t) {
                    // (r^i s^s)(r^j s^t) = r^(i + j or i - j) s^(s^t)
                    int k = s ? i - j : i + j;
                    g.mul[enc(i, s)][enc(j, t)] = enc(k, s ^ t);
                }
    for (int i = 0; i < n; ++i) {
        g.inv[enc(i, 0)] = enc(-i, 0);
        g.inv[enc(i, 1)] = enc(i, 1);
    }
    return g;
}

// elements 1,-1,i,-i,j,-j,k,-k
inline FiniteGroup quaternion8() {
    FiniteGroup g;
    g.name = "Q8";
    g.order = 8;
    // sign bit in the low position: element = 2*axis + sign, axes 1,i,j,k
    auto enc = [](int axis, int neg) { return axis * 2 + neg; };
    g.mul.assign(8, std::vector<int>(8));
    g.inv.resize(8);
    // axis multiplication: 1*x=x; i*j=k, j*k=i, k*i=j, x*x=-1
    auto axis_mul = [](int a, int b, int& neg) -> int {
        if (a == 0) return b;
        if (b == 0) return a;
        if (a == b) {
            neg ^= 1;
            return 0;
        }
        // i=1, j=2, k=3
        static const int table[4][4] = {{0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}};
        static const int sign[4][4] = {{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}};
        neg ^= sign[a][b];
        return table[a][b];
    };
    for (int a = 0; a < 4; ++a)
        for (int sa = 0; sa < 2; ++sa)
            for (int b = 0; b < 4; ++b)
                for (int sb = 0; sb < 2; ++sb) {
                    int neg = sa ^ sb;
                    int axis = axis_mul(a, b, neg);
                    g.mul[enc(a, sa)][enc(b, sb)] = enc(axis, neg);
                }
    for (int a = 0; a < 4; ++a)
        for (int s = 0; s < 2; ++s)
            g.inv[enc(a, s)] = a == 0 ? enc(0, s) : enc(a, s ^ 1);
    return g;
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    FiniteGroup g;
    g.name = a.name + "x" + b.name;
    g.order = a.order * b.order;
    auto enc = [&](int x, int y) { return x * b.order + y; };
    g.mul.assign(g.order, std::vector<int>(g.order));
    g.inv.resize(g.order);
    g.identity = enc(a.identity, b.identity);
    for (int x1 = 0; x1 < a.order; ++x1)
        for (int y1 = 0; y1 < b.order; ++y1) {
            g.inv[enc(x1, y1)] = enc(a.inv[x1], b.inv[y1]);
            for (int x2 = 0; x2 < a.order; ++x2)
                for (int y2 = 0; y2 < b.order; ++y2)
                    g.mul[enc(x1, y1)][enc(x2, y2)] = enc(a.op(x1, x2), b.op(y1, y2));
        }
    return g;
}

// concrete scan targets: cyclic, dihedral, quaternion and direct products to
// order 16
inline const std::vector<FiniteGroup>& builtin_groups() {
    static const std::vector<FiniteGroup> groups = [] {
        std::vector<FiniteGroup> gs;
        for (int n = 2; n <= 16; ++n) gs.push_back(cyclic(n));
        for (int n = 3; n <= 8; ++n) gs.push_back(dihedral(n));
        gs.push_back(quaternion8());
        gs.push_back(direct_product(cyclic(2), cyclic(2)));
        gs.push_back(direct_product(cyclic(2), cyclic(4)));
        gs.push_back(direct_product(cyclic(2), cyclic(6)));
        gs.push_back(direct_product(cyclic(2), cyclic(8)));
        gs.push_back(direct_product(cyclic(4), cyclic(4)));
        gs.push_back(direct_product(cyclic(3), cyclic(3)));
        gs.push_back(direct_product(cyclic(2), direct_product(cyclic(2), cyclic(2))));
        gs.push_back(direct_product(cyclic(2), direct_product(cyclic(2), cyclic(4))));
        gs.push_back(direct_product(cyclic(2), dihedral(3)));
        gs.push_back(direct_product(cyclic(2), dihedral(4)));
        gs.push_back(direct_product(cyclic(2), quaternion8()));
        for (auto& g : gs) g.validate();
        return gs;
    }();
    return groups;
}

inline std::optional<FiniteGroup> group_by_name(const std::string& name) {
    for (auto& g : builtin_groups())
        if (g.name == name) return g;
    return std::nullopt;
}

struct GroupCograph {
    Cograph pattern;
    std::vector<std::pair<int, int>> class_keys; // the unordered {PQ,QP} per class
};

// points are the group elements; the edge of {P,Q} is the unordered pair of
// products {PQ, QP}
inline GroupCograph group_cograph(const FiniteGroup& g) {
    if (g.order < 2) throw std::invalid_argument("need at least two elements");
    std::vector<std::pair<int, int>> key_per_pair(pair_count(g.order));
    for (int b = 1; b < g.order; ++b)
        for (int a = 0; a < b; ++a) {
            int ab = g.op(a, b), ba = g.op(b, a);
            key_per_pair[pair_index(a, b)] = {std::min(ab, ba), std::max(ab, ba)};
        }
    Cograph pat = Cograph::from_edge_values(g.order, key_per_pair);
    std::vector<std::pair<int, int>> keys(pat.class_count());
    for (int p = 0; p < pair_count(g.order); ++p) keys[pat.class_of_pair(p)] = key_per_pair[p];
    return {pat, keys};
}

inline std::pair<int, int> edge_key(const FiniteGroup& g, int a, int b) {
    int ab = g.op(a, b), ba = g.op(b, a);
    return {std::min(ab, ba), std::max(ab, ba)};
}

struct Ladder {
    std::vector<std::pair<int, int>> rungs; // (P_k, Q_k) for k in [lo, hi]
    int lo = 0;
};

// P_k = P X^k, Q_k = X^{-k} Q for X centralizing QP; every rung repeats the
// original edge and the diagonal law C(P_a,Q_b) = C(P,Q_{b-a}) holds.
inline Ladder ladder(const FiniteGroup& g, int P, int Q, int X, int lo, int hi) {
    int qp = g.op(Q, P);
    if (g.op(X, qp) != g.op(qp, X))
        throw std::invalid_argument("ladder element must centralize QP");
    Ladder out;
    out.lo = lo;
    auto base = edge_key(g, P, Q);
    for (int k = lo; k <= hi; ++k) {
        int pk = g.op(P, g.power(X, k));
        int qk = g.op(g.power(X, -k), Q);
        if (edge_key(g, pk, qk) != base)
            throw std::logic_error("ladder rung fails to repeat the edge");
        out.rungs.push_back({pk, qk});
    }
    for (int a = lo; a <= hi; ++a)
        for (int b = lo; b <= hi; ++b) {
            int pa = out.rungs[a - lo].first;
            int qb = out.rungs[b - lo].second;
            int qdiff = g.op(g.power(X, -(b - a)), Q);
            if (edge_key(g, pa, qb) != edge_key(g, P, qdiff))
                throw std::logic_error("diagonal ladder law fails");
        }
    return out;
}

struct Chain {
    bool valid = false;
    int failed_condition = 0; // 1: PQ=QP, 2: PQ^2 != Q^2P, 3: P^2Q != QP^2
    std::vector<int> terms;
};

// Conditions: PQ != QP, PQ^2 = Q^2P, P^2Q = QP^2. Terms conjugate P and Q by
// powers of A = PQ; squares alternate between P^2 and Q^2, the continuation
// is unique, and every consecutive edge repeats C(P,Q).
inline Chain chain_extend(const FiniteGroup& g, int P, int Q, int k) {
    Chain out;
    if (g.op(P, Q) == g.op(Q, P)) {
        out.failed_condition = 1;
        return out;
    }
    int q2 = g.op(Q, Q), p2 = g.op(P, P);
    if (g.op(P, q2) != g.op(q2, P)) {
        out.failed_condition = 2;
        return out;
    }
    if (g.op(p2, Q) != g.op(Q, p2)) {
        out.failed_condition = 3;
        return out;
    }
    out.valid = true;
    int A = g.op(P, Q);
    for (int i = 0; i <= k; ++i) {
        int half = i / 2;
        int base = (i % 2 == 0) ? P : Q;
        int conj = g.op(g.op(g.power(A, -half), base), g.power(A, half));
        out.terms.push_back(conj);
    }
    auto base_key = edge_key(g, P, Q);
    for (size_t i = 0; i + 1 < out.terms.size(); ++i) {
        if (edge_key(g, out.terms[i], out.terms[i + 1]) != base_key)
            throw std::logic_error("chain edge does not repeat");
        if (out.terms[i] == out.terms[i + 1])
            throw std::logic_error("chain repeats adjacent terms");
        int sq = g.op(out.terms[i], out.terms[i]);
        if (sq != (i % 2 == 0 ? p2 : q2))
            throw std::logic_error("chain squares fail to alternate");
    }
    // no branching: R with C(Q,R) = C(P,Q), R != P is unique
    int expect = g.op(g.op(g.inv[Q], P), Q);
    for (int r = 0; r < g.order; ++r) {
        if (r == P || r == Q) continue;
        if (edge_key(g, Q, r) == base_key && r != expect)
            throw std::logic_error("chain continuation is not unique");
    }
    return out;
}

// least k >= 3 closing the chain into a cycle: alternating products of k
// terms agree
inline std::optional<int> chain_cycle_length(const FiniteGroup& g, int P, int Q, int max_k) {
    int left = P, right = Q; // PQP... and QPQ... built incrementally
    // build alternating products of length k
    for (int k = 2; k <= max_k; ++k) {
        left = g.op(left, k % 2 == 0 ? Q : P);
        right = g.op(right, k % 2 == 0 ? P : Q);
        if (k >= 3 && left == right) return k;
    }
    return std::nullopt;
}

// ---- chain groups C_{p,q,n} ----

struct ChainGroupParams {
    long long p_prime = 0, q_prime = 0;
    long long order = 0;
    bool excluded = false; // p' = q' = 2 (mod 4), n = 2
};

inline ChainGroupParams chain_group_order(long long p, long long q, long long n) {
    if (p < 2 || q < 2 || p % 2 || q % 2)
        throw std::domain_error("chain group needs even p and q");
    if (n < 2) throw std::domain_error("chain group needs n >= 2");
    ChainGroupParams out;
    out.p_prime = std::gcd(p, std::lcm(q, 2 * n));
    out.q_prime = std::gcd(q, std::lcm(p, 2 * n));
    out.excluded = (n == 2 && out.p_prime % 4 == 2 && out.q_prime % 4 == 2);
    if (!out.excluded)
        out.order = out.p_prime * std::gcd(out.q_prime, 2 * n) * n / 2;
    return out;
}

// words over symbols 2*g (generator) and 2*g+1 (its inverse)
struct Presentation {
    int ngens = 0;
    std::vector<std::vector<int>> relators;
};

inline Presentation chain_group_presentation(int p, int q, int n) {
    Presentation pres;
    pres.ngens = 2;
    const int P = 0, Pi = 1, Q = 2, Qi = 3;
    std::vector<int> w;
    for (int i = 0; i < p; ++i) w.push_back(P);
    pres.relators.push_back(w);
    w.clear();
    for (int i = 0; i < q; ++i) w.push_back(Q);
    pres.relators.push_back(w);
    w.clear();
    for (int i = 0; i < n; ++i) {
        w.push_back(P);
        w.push_back(Q);
    }
    pres.relators.push_back(w);
    pres.relators.push_back({P, P, Q, Pi, Pi, Qi});
    pres.relators.push_back({P, Q, Q, Pi, Qi, Qi});
    return pres;
}

enum class TcStrategy { RelatorScan, ImmediateDeduction };

struct CosetTable {
    bool completed = false;
    int index = 0;                              // live cosets after closing
    std::vector<std::vector<int>> action;       // [coset][symbol] -> coset
    std::vector<std::pair<int, int>> definitions; // (parent, symbol); (-1,-1) for coset 0
};

namespace detail {

struct TcEngine {
    int nsym;
    size_t cap;
    std::vector<std::vector<int>> tab;
    std::vector<int> rep;
    std::deque<std::pair<int, int>> pending;
    bool overflow = false;

    TcEngine(int nsym_, size_t cap_) : nsym(nsym_), cap(cap_) { new_coset(); }

    static int inv_sym(int s) { return s ^ 1; }

    int find(int c) {
        while (rep[c] != c) {
            rep[c] = rep[rep[c]];
            c = rep[c];
        }
        return c;
    }

    int new_coset() {
        if (tab.size() >= cap) {
            overflow = true;
            return -1;
        }
        tab.emplace_back(nsym, -1);
        rep.push_back((int)tab.size() - 1);
        return (int)tab.size() - 1;
    }

    int walk(int c, int s) {
        c = find(c);
        int d = tab[c][s];
        return d == -1 ? -1 : find(d);
    }

    void set_entry(int c, int s, int d) {
        c = find(c);
        d = find(d);
        int cur = tab[c][s] == -1 ? -1 : find(tab[c][s]);
        if (cur == -1) {
            tab[c][s] = d;
            int back = tab[d][inv_sym(s)] == -1 ? -1 : find(tab[d][inv_sym(s)]);
            if (back == -1)
                tab[d][inv_sym(s)] = c;
            else if (back != c)
                pending.push_back({back, c});
        } else if (cur != d) {
            pending.push_back({cur, d});
        }
    }

    void process() {
        while (!pending.empty()) {
            auto [a, b] = pending.front();
            pending.pop_front();
            a = find(a);
            b = find(b);
            if (a == b) continue;
            if (a > b) std::swap(a, b); // the smaller index survives
            rep[b] = a;
            for (int s = 0; s < nsym; ++s) {
                int img = tab[b][s];
                if (img == -1) continue;
                set_entry(a, s, find(img));
            }
        }
    }

    // scan word w as a cycle at coset c; define at most one new coset per
    // round and restart, so coincidences can never leave a stale path
    // behind. Returns false on overflow.
    bool scan_cycle(int c, const std::vector<int>& w, bool allow_define) {
        int L = (int)w.size();
        while (true) {
            c = find(c);
            int f = c, i = 0;
            while (i < L) {
                int nx = walk(f, w[i]);
                if (nx == -1) break;
                f = nx;
                ++i;
            }
            if (i == L) {
                if (f != c) {
                    pending.push_back({f, c});
                    process();
                }
                return true;
            }
            int b = c, j = L;
            while (j > i + 1) {
                int nx = walk(b, inv_sym(w[j - 1]));
                if (nx == -1) break;
                b = nx;
                --j;
            }
            if (j == i + 1) {
                set_entry(f, w[i], b);
                process();
                continue;
            }
            if (!allow_define) return true;
            int d = new_coset();
            if (d < 0) return false;
            set_entry(f, w[i], d);
            process();
        }
    }

    std::vector<int> live() {
        std::vector<int> out;
        for (int c = 0; c < (int)tab.size(); ++c)
            if (find(c) == c) out.push_back(c);
        return out;
    }

    bool row_complete(int c) {
        for (int s = 0; s < nsym; ++s)
            if (walk(c, s) == -1) return false;
        return true;
    }
};

} // namespace detail

inline CosetTable todd_coxeter(const Presentation& pres,
                               const std::vector<std::vector<int>>& subgroup_gens,
                               size_t cap = 100000,
                               TcStrategy strategy = TcStrategy::RelatorScan) {
    detail::TcEngine eng(2 * pres.ngens, cap);
    for (auto& w : subgroup_gens)
        if (!eng.scan_cycle(0, w, true)) return {};

    if (strategy == TcStrategy::RelatorScan) {
        bool changed = true;
        while (changed && !eng.overflow) {
            changed = false;
            size_t before_sz = eng.tab.size();
            std::vector<int> lv = eng.live();
            size_t live_before = lv.size();
            for (int c : lv) {
                if (eng.find(c) != c) continue; // merged away during this pass
                for (auto& r : pres.relators)
                    if (!eng.scan_cycle(c, r, true)) return {};
            }
            if (eng.tab.size() != before_sz || eng.live().size() != live_before) changed = true;
            // also loop until every row is complete
            if (!changed)
                for (int c : eng.live())
                    if (!eng.row_complete(c)) changed = true;
        }
    } else {
        while (!eng.overflow) {
            bool changed = true;
            while (changed) {
                changed = false;
                size_t cosets_before = eng.tab.size();
                std::vector<int> lv = eng.live();
                size_t live_before = lv.size();
                for (int c : lv) {
                    if (eng.find(c) != c) continue;
                    for (auto& r : pres.relators)
                        eng.scan_cycle(c, r, false); // deduce only
                }
                if (eng.live().size() != live_before || eng.tab.size() != cosets_before)
                    changed = true;
            }
            int dc = -1, ds = -1;
            for (int c : eng.live()) {
                for (int s = 0; s < 2 * pres.ngens; ++s)
                    if (eng.walk(c, s) == -1) {
                        dc = c;
                        ds = s;
                        break;
                    }
                if (dc >= 0) break;
            }
            if (dc < 0) break;
            int d = eng.new_coset();
            if (d < 0) return {};
            eng.set_entry(dc, ds, d);
            eng.process();
        }
    }
    if (eng.overflow) return {};

    // closed: verify and compact
    auto lv = eng.live();
    for (int c : lv) {
        if (!eng.row_complete(c)) throw std::logic_error("row left incomplete");
        for (auto& r : pres.relators) {
            int x = c;
            for (int s : r) x = eng.walk(x, s);
            if (x != c) throw std::logic_error("relator does not fix a coset");
        }
    }
    for (auto& w : subgroup_gens) {
        int x = eng.find(0);
        for (int s : w) x = eng.walk(x, s);
        if (x != eng.find(0)) throw std::logic_error("subgroup generator moves coset 0");
    }

    std::map<int, int> renum;
    for (int c : lv) renum.emplace(c, (int)renum.size());
    CosetTable out;
    out.completed = true;
    out.index = (int)lv.size();
    out.action.assign(out.index, std::vector<int>(2 * pres.ngens, -1));
    for (int c : lv)
        for (int s = 0; s < 2 * pres.ngens; ++s)
            out.action[renum[c]][s] = renum[eng.walk(c, s)];

    // definitions in breadth-first scan order, for display
    out.definitions.assign(out.index, {-1, -1});
    std::vector<char> seen(out.index, 0);
    seen[0] = 1;
    std::deque<int> bfs = {0};
    while (!bfs.empty()) {
        int c = bfs.front();
        bfs.pop_front();
        for (int s = 0; s < 2 * pres.ngens; ++s) {
            int d = out.action[c][s];
            if (!seen[d]) {
                seen[d] = 1;
                out.definitions[d] = {c, s};
                bfs.push_back(d);
            }
        }
    }
    return out;
}

// ---- structure checks through the regular representation ----

struct ChainGroupReport {
    ChainGroupParams params;
    int subgroup_index = 0;   // cosets of <P>
    long long order = 0;      // from the regular enumeration
    int p_order = 0;          // |P| in the group
    long long s_size = 0;     // |<P^2, Q^2>|
    bool s_central = false;
    long long quotient_order = 0;
    int pq_order_mod_s = 0;
    bool p2n_q2n_identity = false;
    bool pq_commutes = false;
    bool p2q2_identity = false;
};

inline ChainGroupReport verify_chain_group_structure(int p, int q, int n,
                                                     size_t cap = 100000) {
    ChainGroupReport rep;
    rep.params = chain_group_order(p, q, n);
    Presentation pres = chain_group_presentation(p, q, n);

    CosetTable sub = todd_coxeter(pres, {{0}}, cap);
    if (!sub.completed) throw std::runtime_error("coset cap exceeded over <P>");
    rep.subgroup_index = sub.index;

    CosetTable reg = todd_coxeter(pres, {}, cap);
    if (!reg.completed) throw std::runtime_error("coset cap exceeded over trivial subgroup");
    rep.order = reg.index;

    auto act = [&](int c, const std::vector<int>& w) {
        for (int s : w) c = reg.action[c][s];
        return c;
    };
    const std::vector<int> P = {0}, Q = {2};

    // element words via breadth-first search from the identity coset
    std::vector<std::vector<int>> word(reg.index);
    std::vector<char> seen(reg.index, 0);
    seen[0] = 1;
    std::deque<int> bfs = {0};
    while (!bfs.empty()) {
        int c = bfs.front();
        bfs.pop_front();
        for (int s = 0; s < 4; ++s) {
            int d = reg.action[c][s];
            if (!seen[d]) {
                seen[d] = 1;
                word[d] = word[c];
                word[d].push_back(s);
                bfs.push_back(d);
            }
        }
    }
    auto mul = [&](int a, int b) { return act(a, word[b]); };

    // |P| is the orbit length of the identity under P (free action)
    rep.p_order = 1;
    for (int c = reg.action[0][0]; c != 0; c = reg.action[c][0]) ++rep.p_order;

    // S = <P^2, Q^2>
    std::set<int> s_set = {0};
    std::deque<int> grow = {0};
    const std::vector<std::vector<int>> sgens = {{0, 0}, {1, 1}, {2, 2}, {3, 3}};
    while (!grow.empty()) {
        int c = grow.front();
        grow.pop_front();
        for (auto& w : sgens) {
            int d = act(c, w);
            if (s_set.insert(d).second) grow.push_back(d);
        }
    }
    rep.s_size = (long long)s_set.size();

    rep.s_central = true;
    for (int s : s_set)
        for (const auto& gw : {P, Q}) {
            int left = act(s, gw);             // s * g
            int right = mul(act(0, gw), s);    // g * s
            if (left != right) rep.s_central = false;
        }

    rep.quotient_order = rep.order / rep.s_size;

    int pq = act(act(0, P), Q);
    int x = 0;
    for (int k = 1; k <= 4 * n; ++k) {
        x = mul(x, pq);
        if (s_set.count(x)) {
            rep.pq_order_mod_s = k;
            break;
        }
    }

    std::vector<int> w2n;
    for (int i = 0; i < 2 * n; ++i) w2n.push_back(0);
    for (int i = 0; i < 2 * n; ++i) w2n.push_back(2);
    rep.p2n_q2n_identity = act(0, w2n) == 0;

    int qp = act(act(0, Q), P);
    rep.pq_commutes = pq == qp;
    rep.p2q2_identity = act(0, {0, 0, 2, 2}) == 0;
    return rep;
}

} // namespace cograph::group
