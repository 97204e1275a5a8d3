// Acceptance suite: one line of output per criterion, nonzero exit if any
// criterion fails. Every tolerance is pinned here.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include <cograph/difference.hpp>
#include <cograph/enumeration.hpp>
#include <cograph/group.hpp>
#include <cograph/intersection.hpp>
#include <cograph/pl.hpp>
#include <cograph/representations.hpp>
#include <cograph/sum.hpp>
#include <cograph/wheels.hpp>

using namespace cograph;

namespace {

int failures = 0;

struct Criterion {
    std::string name;
    std::vector<std::string> problems;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    explicit Criterion(std::string n) : name(std::move(n)) {}

    void expect(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }

    double seconds() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
                   .count() /
               1000.0;
    }

    void finish() {
        double s = seconds();
        if (problems.empty()) {
            std::printf("[PASS] %s (%.1f s)\n", name.c_str(), s);
        } else {
            ++failures;
            std::printf("[FAIL] %s (%.1f s)\n", name.c_str(), s);
            for (auto& p : problems) std::printf("       - %s\n", p.c_str());
        }
        std::fflush(stdout);
    }
};

// leading three significant digits, rounded, plus the decimal exponent
std::pair<int, int> three_digits(const Int& v) {
    std::ostringstream os;
    os << v;
    std::string s = os.str();
    int exp = (int)s.size() - 1;
    int lead = std::stoi(s.substr(0, std::min<size_t>(4, s.size())));
    while (lead >= 10000) lead /= 10;
    if (s.size() > 3) {
        int keep = lead / 10, next = lead % 10;
        lead = keep + (next >= 5 ? 1 : 0);
        if (lead == 1000) {
            lead = 100;
            ++exp;
        }
    }
    return {lead, exp};
}

Cograph make_pattern(int n, const std::vector<std::vector<Pair>>& repeated) {
    std::vector<int> cls(pair_count(n), -1);
    int next = 0;
    for (auto& r : repeated) {
        for (auto [i, j] : r) cls[pair_index(i, j)] = next;
        ++next;
    }
    for (auto& c : cls)
        if (c == -1) c = next++;
    return Cograph(n, cls);
}

void criterion1() {
    Criterion c("criterion 1: exact counts 1,3,25,1299 and the 3-digit rows for n=6..9");
    std::vector<Int> small = {1, 3, 25, 1299};
    for (int n = 2; n <= 5; ++n)
        c.expect(count_cographs(n) == small[n - 2], "count " + std::to_string(n));
    std::vector<std::pair<int, int>> rows = {{197, 6}, {943, 10}, {153, 17}, {105, 25}};
    for (int n = 6; n <= 9; ++n) {
        auto got = three_digits(count_cographs(n));
        c.expect(got == rows[n - 6],
                 "n=" + std::to_string(n) + " rounds to " + std::to_string(got.first) + "e" +
                     std::to_string(got.second - 2));
    }
    c.expect(c.seconds() <= 60.0, "runtime exceeded 60 s");
    c.finish();
}

void criterion2() {
    Criterion c("criterion 2: enumeration and counting agree for n=2..5");
    for (int n = 2; n <= 5; ++n)
        c.expect(Int(enumerate_cographs(n).size()) == count_cographs(n),
                 "n=" + std::to_string(n));
    c.expect(c.seconds() <= 120.0, "runtime exceeded 120 s");
    c.finish();
}

void criterion3() {
    Criterion c("criterion 3: six-point sum catalogue of 55 and the four worked candidates");
    auto cat = sum::enumerate_sum_cographs(6);
    if (cat.size() != 55) {
        std::ostringstream os;
        os << "catalogue has " << cat.size()
           << " isomorphism classes, not 55: the published table double-counts one "
              "cograph (its rows with values 0,1,2,5,7,8 and 0,1,3,4,5,8 mod 10 differ "
              "by renaming every point with +3, so they are the same structure); "
              "18 torsion-free + 36 torsion classes match the table in every other row";
        c.expect(false, os.str());
    }
    for (auto& e : cat) {
        c.expect(e.verdict.witness.has_value(), "entry without witness: " + e.key.bytes);
        if (e.verdict.witness)
            c.expect(sum::witness_matches(e.pattern, *e.verdict.witness),
                     "witness mismatch: " + e.key.bytes);
    }

    Cograph cand1 = make_pattern(
        6, {{{1, 5}, {2, 4}}, {{0, 5}, {2, 3}}, {{0, 3}, {1, 2}}, {{0, 4}, {1, 3}}});
    auto v1 = sum::classify(cand1);
    c.expect(v1.outcome == sum::Outcome::TorsionFree, "candidate 1 outcome");
    c.expect(v1.witness && v1.witness->is_integer() &&
                 v1.witness->values == sum::integer_labeling({0, 1, 3, 4, 5, 7}).values,
             "candidate 1 witness (0,1,3,4,5,7)");

    Cograph cand2 = make_pattern(
        6, {{{0, 1}, {4, 5}}, {{0, 4}, {2, 3}}, {{0, 3}, {1, 2}}, {{1, 5}, {2, 4}}});
    auto v2 = sum::classify(cand2);
    c.expect(v2.outcome == sum::Outcome::RequiresTorsion, "candidate 2 outcome");
    c.expect(v2.witness && v2.witness->modulus() == 15 &&
                 v2.witness->values == sum::cyclic_labeling(15, {0, 1, 3, 4, 7, 9}).values,
             "candidate 2 witness (0,1,3,4,7,9) in Z_15");

    Cograph cand3 = make_pattern(
        6, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 5}}, {{0, 4}, {3, 5}}, {{1, 2}, {3, 4}}});
    auto v3 = sum::classify(cand3);
    c.expect(v3.outcome == sum::Outcome::Unsolvable, "candidate 3 outcome");
    c.expect(std::find(v3.forced_point_equalities.begin(), v3.forced_point_equalities.end(),
                       Pair{0, 4}) != v3.forced_point_equalities.end(),
             "candidate 3 forces P = T");

    Cograph cand4 = make_pattern(
        6, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{1, 2}, {4, 5}}, {{1, 4}, {2, 5}}});
    auto v4 = sum::classify(cand4);
    c.expect(v4.outcome == sum::Outcome::ForcesExtraEdges, "candidate 4 outcome");
    c.expect(v4.forced_edge_equalities.size() == 3, "candidate 4 forces exactly 3 pairs");
    c.finish();
}

void criterion4() {
    Criterion c("criterion 4: wheel parameters, the Smith oracle, and the worked wheel");
    for (int n = 3; n <= 30; ++n) {
        auto w = sum::wheel_parameters(n);
        c.expect(sum::wheel_torsion_snf_oracle(n) == w.t,
                 "Smith oracle disagrees at n=" + std::to_string(n));
        // h agrees with the Bezout construction modulo t
        Int mu = (sum::fib(n - 1) - 1) / w.d;
        Int nu = (sum::fib(n - 2) + 1) / w.d;
        Int r, s;
        Int g = ext_gcd(mu, mu + nu, r, s);
        c.expect(g == 1 && (w.h + (s * mu + r * nu) * w.d) % w.t == 0,
                 "h formula fails at n=" + std::to_string(n));
    }
    auto wb = sum::wheel_build(7);
    std::vector<long long> expect = {-1, 5, 4, 9, 13, 22, 6};
    bool terms_ok = wb.group == "Z_29" && (int)wb.terms.size() == 7;
    for (int i = 0; i < 7 && terms_ok; ++i)
        terms_ok = wb.terms[i].x == ((expect[i] % 29) + 29) % 29;
    c.expect(terms_ok, "seven-spoke wheel terms (-1,5,4,9,13,22,6) in Z_29");

    // closed forms for d, t, h hold over n=3..23 (split by n mod 4 / mod 12)
    for (int n = 3; n <= 23; ++n) {
        auto w = sum::wheel_parameters(n);
        Int d_expect, t_expect, h_expect;
        if (n % 4 == 0) {
            d_expect = sum::fib(n / 2);
            t_expect = 5 * sum::fib(n / 2);
            h_expect = -2 * sum::fib(n / 2);
        } else if (n % 2 == 0) {
            d_expect = sum::lucas(n / 2);
            t_expect = sum::lucas(n / 2);
            h_expect = -sum::lucas(n / 2);
        } else if (n % 12 == 3 || n % 12 == 9) {
            d_expect = 2;
            t_expect = sum::lucas(n) / 2;
            h_expect = 1 - sum::lucas(n - 2);
        } else {
            d_expect = 1;
            t_expect = sum::lucas(n);
            Int num = 1 - sum::lucas(n - 2);
            if (num % 2 != 0) num += t_expect;
            h_expect = num / 2;
        }
        c.expect(w.d == d_expect && w.t == t_expect && w.h == h_expect,
                 "closed form at n=" + std::to_string(n));
        auto wheel = sum::wheel_build(n);
        c.expect((int)wheel.terms.size() == n, "wheel closes at n=" + std::to_string(n));
    }
    c.finish();
}

void criterion5() {
    Criterion c("criterion 5: 62 difference cographs, witnesses regenerate, Qs classify");
    auto cat = diff::enumerate_difference_cographs(5);
    c.expect(cat.size() == 62, "catalogue size " + std::to_string(cat.size()));
    for (auto& e : cat) {
        c.expect(diff::pattern_of(e.witness) == e.pattern,
                 "witness fails to regenerate " + e.key.bytes);
        for (auto& q : e.census.qs)
            c.expect(q.type >= 1 && q.type <= 5, "unclassified Q in " + e.key.bytes);
    }
    c.finish();
}

void criterion6() {
    Criterion c("criterion 6: 15 intersection cographs, UIE holds, rejections explained");
    auto cat = isect::enumerate_intersection_cographs(4);
    c.expect(cat.size() == 15, "catalogue size " + std::to_string(cat.size()));
    for (auto& e : cat) {
        try {
            isect::uie_construct(e.pattern, e.class_sets); // verifies P'^Q' = C(P,Q)
        } catch (const std::exception& ex) {
            c.expect(false, std::string("UIE failed: ") + ex.what());
        }
    }
    int rejected = 0, with_finding = 0;
    for (auto& key : enumerate_cographs(4)) {
        Cograph g = parse(key.bytes);
        if (isect::representable(g)) continue;
        ++rejected;
        if (!isect::find_forbidden(g).empty()) ++with_finding;
    }
    c.expect(rejected == 10, "rejected count " + std::to_string(rejected));
    c.expect(with_finding == rejected, "every rejected cograph carries a finding");
    c.finish();
}

void criterion7() {
    Criterion c("criterion 7: linear space counts, round trips, minimal spaces");
    std::vector<size_t> expect = {1, 2, 3, 5, 10, 24};
    for (int n = 2; n <= 7; ++n) {
        auto spaces = pl::enumerate_pl_spaces(n);
        c.expect(spaces.size() == expect[n - 2], "count at n=" + std::to_string(n));
        for (auto& [key, s] : spaces) {
            c.expect(canonical_form(pl::from_linear_space(s)).bytes == key,
                     "round trip " + key);
            c.expect(pl::to_linear_space(pl::from_linear_space(s)) == s,
                     "space round trip " + key);
        }
    }
    auto t8 = std::chrono::steady_clock::now();
    auto n8 = pl::enumerate_pl_spaces(8, true, 2);
    double s8 = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t8)
                    .count() /
                1000.0;
    c.expect(n8.size() == 69, "n=8 count " + std::to_string(n8.size()));
    c.expect(s8 <= 600.0, "n=8 enumeration exceeded 10 minutes");

    std::vector<int> minimal_expect = {0, 0, 1, 0, 1, 3, 8};
    for (int n = 1; n <= 7; ++n)
        c.expect(pl::minimal_space_count(n) == minimal_expect[n - 1],
                 "minimal count at n=" + std::to_string(n));
    c.finish();
}

void criterion8() {
    Criterion c("criterion 8: chain groups, order formula, and the central subgroup");
    auto r466 = group::verify_chain_group_structure(4, 6, 6);
    c.expect(r466.subgroup_index == 18 && r466.order == 72, "C_{4,6,6}: 18 cosets, order 72");
    auto r4123 = group::verify_chain_group_structure(4, 12, 3);
    c.expect(r4123.subgroup_index == 9 && r4123.order == 36, "C_{4,12,3}: 9 cosets, order 36");

    for (long long p : {2, 4, 6, 8})
        for (long long q : {2, 4, 6, 8})
            for (long long n = 2; n <= 8; ++n) {
                auto params = group::chain_group_order(p, q, n);
                if (params.excluded) continue;
                auto rep = group::verify_chain_group_structure((int)p, (int)q, (int)n);
                std::string tag = " at C_{" + std::to_string(p) + "," + std::to_string(q) +
                                  "," + std::to_string(n) + "}";
                c.expect(rep.order == params.order, "order formula" + tag);
                c.expect(rep.s_central, "S central" + tag);
                c.expect(rep.s_size == params.p_prime * std::gcd(params.q_prime, 2 * n) / 4,
                         "|S| formula" + tag);
                c.expect(rep.quotient_order == 2 * n, "quotient order 2n" + tag);
            }
    c.finish();
}

void criterion9() {
    Criterion c("criterion 9: randomized property suites, exact arithmetic");
    std::mt19937_64 rng(271828);

    // quadrilateral rule on random sum labelings
    {
        int cases = 0;
        for (int rep = 0; rep < 120; ++rep) {
            std::set<long long> vals;
            while ((int)vals.size() < 6) vals.insert((long long)(rng() % 200));
            std::vector<long long> v(vals.begin(), vals.end());
            std::shuffle(v.begin(), v.end(), rng);
            for (int a = 0; a < 6; ++a)
                for (int b = a + 1; b < 6; ++b)
                    for (int d = b + 1; d < 6; ++d)
                        for (int e = d + 1; e < 6; ++e)
                            if ((v[a] + v[b]) + (v[d] + v[e]) !=
                                (v[a] + v[d]) + (v[b] + v[e]))
                                c.expect(false, "quadrilateral rule");
            ++cases;
        }
        c.expect(cases >= 100, "quadrilateral suite size");
    }

    // triangle-rule equivalents on random set triples
    {
        int cases = 0;
        for (int rep = 0; rep < 150; ++rep) {
            auto rand_set = [&]() {
                isect::AtomSet s;
                for (int a = 1; a <= 9; ++a)
                    if (rng() & 1) s.push_back(a);
                return s;
            };
            auto a = rand_set(), b = rand_set(), d = rand_set();
            auto ab = isect::set_intersect(a, b);
            auto bd = isect::set_intersect(b, d);
            auto ad = isect::set_intersect(a, d);
            auto abd = isect::set_intersect(ab, d);
            bool c1 = ab == bd && bd == ad;
            bool c2 = ab == abd && bd == abd && ad == abd;
            bool c3 = isect::set_subset(ab, d) && isect::set_subset(bd, a) &&
                      isect::set_subset(ad, b);
            if (c1 != c2 || c2 != c3) c.expect(false, "triangle rule equivalents");
            ++cases;
        }
        c.expect(cases >= 100, "triangle suite size");
    }

    // chain / midpoint / butterfly on random difference labelings
    {
        int cases = 0;
        for (int rep = 0; rep < 120; ++rep) {
            long long m = rep % 2 == 0 ? 0 : 7 + (long long)(rng() % 30);
            std::set<long long> vals;
            long long cap = m == 0 ? 60 : m;
            while ((int)vals.size() < 5) vals.insert((long long)(rng() % cap));
            diff::DiffLabeling lab{m, {vals.begin(), vals.end()}};
            auto census = diff::motif_census(lab); // classifies every Q or throws
            for (int p = 0; p < 5; ++p) {
                int vs = 0;
                for (int x = 0; x < 5; ++x)
                    for (int y = x + 1; y < 5; ++y) {
                        if (x == p || y == p) continue;
                        if (diff::diff_edge(lab.values[x], lab.values[p], m) ==
                            diff::diff_edge(lab.values[y], lab.values[p], m)) {
                            ++vs;
                            long long lhs = lab.values[x] + lab.values[y];
                            long long rhs = 2 * lab.values[p];
                            if (m > 0) {
                                lhs = ((lhs % m) + m) % m;
                                rhs = ((rhs % m) + m) % m;
                            }
                            if (lhs != rhs) c.expect(false, "midpoint identity");
                        }
                    }
                if (vs >= 2 && census.q < 1) c.expect(false, "butterfly gives a Q");
            }
            ++cases;
        }
        c.expect(cases >= 100, "difference suite size");
    }

    // ladders, chains, even order terms in the concrete groups
    {
        int ladder_cases = 0, chain_cases = 0;
        for (auto& g : group::builtin_groups()) {
            for (int P = 0; P < g.order && ladder_cases < 200; ++P)
                for (int Q = 0; Q < g.order && ladder_cases < 200; ++Q) {
                    if (P == Q) continue;
                    int X = g.op(Q, P); // always centralizes QP
                    try {
                        group::ladder(g, P, Q, X, -2, 2);
                    } catch (const std::exception& e) {
                        c.expect(false, std::string("ladder: ") + e.what());
                    }
                    ++ladder_cases;
                }
            if (g.order <= 16)
                for (int P = 0; P < g.order; ++P)
                    for (int Q = 0; Q < g.order; ++Q) {
                        if (P == Q) continue;
                        auto ch = group::chain_extend(g, P, Q, 6);
                        if (!ch.valid) continue;
                        ++chain_cases;
                        for (int t : ch.terms)
                            if (g.element_order(t) % 2 != 0)
                                c.expect(false, "chain term of odd order");
                    }
        }
        c.expect(ladder_cases >= 100, "ladder suite size");
        c.expect(chain_cases >= 100,
                 "chain suite size (" + std::to_string(chain_cases) + ")");
    }

    // renormalization invariance of sum witnesses
    {
        int cases = 0;
        for (int rep = 0; rep < 120; ++rep) {
            long long m = rep % 2 == 0 ? 0 : 11 + (long long)(rng() % 20);
            std::set<long long> vals;
            long long cap = m == 0 ? 50 : m;
            while ((int)vals.size() < 5) vals.insert((long long)(rng() % cap));
            std::vector<long long> v(vals.begin(), vals.end());
            // the labeling's own pattern makes it a witness by construction
            std::vector<long long> sums;
            for (int j = 1; j < 5; ++j)
                for (int i = 0; i < j; ++i)
                    sums.push_back(m == 0 ? v[i] + v[j] : (v[i] + v[j]) % m);
            Cograph pattern = Cograph::from_edge_values(5, sums);
            sum::Labeling lab = m == 0 ? sum::integer_labeling(v) : sum::cyclic_labeling(m, v);
            if (!sum::witness_matches(pattern, lab)) c.expect(false, "self-witness");
            int point = (int)(rng() % 5);
            long long K = (long long)(rng() % (m == 0 ? 100 : m));
            auto moved = sum::renormalize(lab, point, K);
            if (!sum::witness_matches(pattern, moved))
                c.expect(false, "renormalized witness fails");
            ++cases;
        }
        c.expect(cases >= 100, "renormalization suite size");
    }
    c.finish();
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (failures)
        std::printf("%d criterion(s) failed\n", failures);
    else
        std::printf("all criteria passed\n");
    return failures ? 1 : 0;
}
