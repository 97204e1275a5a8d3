#pragma once

#include <map>
#include <optional>

#include "bigint.hpp"
#include "cograph.hpp"

namespace cograph::repr {

struct VectorRealization {
    int dimension = 0;
    std::vector<std::vector<Rat>> points; // one coordinate vector per point
    std::vector<Rat> class_values;
};

// Triangular inner-product construction: P_1 = (d_1,0,...), later rows solve
// each dot product against earlier rows in turn. Point collisions (only P_n
// can collide) are removed by doubling a diagonal entry and refilling; after
// eight rounds an extra coordinate separates P_n unconditionally.
inline VectorRealization inner_product_represent(const Cograph& c,
                                                 std::vector<Rat> edge_values = {}) {
    int n = c.points();
    int k = c.class_count();
    if (edge_values.empty())
        for (int i = 0; i < k; ++i) edge_values.push_back(i + 1);
    if ((int)edge_values.size() != k)
        throw std::invalid_argument("need one edge value per class");
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (edge_values[i] == edge_values[j])
                throw std::invalid_argument("edge values must be distinct per class");

    auto value = [&](int i, int j) { return edge_values[c.class_of(i, j)]; };

    int dim = n - 1;
    std::vector<Rat> diag(n - 1, Rat(1));
    std::vector<std::vector<Rat>> p;

    auto rebuild = [&]() {
        p.assign(n, std::vector<Rat>(dim, Rat(0)));
        for (int row = 0; row < n; ++row) {
            for (int i = 0; i < std::min(row, n - 1); ++i) {
                Rat acc = 0;
                for (int j = 0; j < i; ++j) acc += p[row][j] * p[i][j];
                p[row][i] = (value(i, row) - acc) / diag[i];
            }
            if (row < n - 1) p[row][row] = diag[row];
        }
    };

    rebuild();
    for (int round = 0; round < 8; ++round) {
        int collide = -1;
        for (int i = 0; i < n - 1 && collide < 0; ++i)
            if (p[i] == p[n - 1]) collide = i;
        if (collide < 0) break;
        diag[collide] *= 2;
        rebuild();
    }
    bool still = false;
    for (int i = 0; i < n - 1; ++i) still |= p[i] == p[n - 1];
    if (still) {
        ++dim;
        rebuild();
        for (int row = 0; row < n; ++row) p[row].resize(dim, Rat(0));
        p[n - 1][dim - 1] = 1;
    }

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rat dot = 0;
            for (int d = 0; d < dim; ++d) dot += p[i][d] * p[j][d];
            if (dot != value(i, j))
                throw std::logic_error("inner product construction failed a dot product");
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p[i] == p[j]) throw std::logic_error("inner product points collide");

    return {dim, p, edge_values};
}

// Symmetric polynomial in two variables with exact integer coefficients.
struct Poly2 {
    std::map<std::pair<int, int>, Int> coeffs; // (deg_x, deg_y) -> coefficient

    static Poly2 constant(Int v) {
        Poly2 p;
        if (v != 0) p.coeffs[{0, 0}] = v;
        return p;
    }

    Poly2 operator+(const Poly2& o) const {
        Poly2 r = *this;
        for (auto& [m, c] : o.coeffs) {
            r.coeffs[m] += c;
            if (r.coeffs[m] == 0) r.coeffs.erase(m);
        }
        return r;
    }

    Poly2 operator*(const Poly2& o) const {
        Poly2 r;
        for (auto& [m1, c1] : coeffs)
            for (auto& [m2, c2] : o.coeffs) {
                auto key = std::make_pair(m1.first + m2.first, m1.second + m2.second);
                r.coeffs[key] += c1 * c2;
                if (r.coeffs[key] == 0) r.coeffs.erase(key);
            }
        return r;
    }

    Poly2 scaled(const Int& s) const {
        Poly2 r;
        if (s == 0) return r;
        for (auto& [m, c] : coeffs) r.coeffs[m] = c * s;
        return r;
    }

    Int eval(Int x, Int y) const {
        Int total = 0;
        for (auto& [m, c] : coeffs) total += c * int_pow(x, m.first) * int_pow(y, m.second);
        return total;
    }

    int degree() const {
        int d = 0;
        for (auto& [m, c] : coeffs) d = std::max(d, m.first + m.second);
        return d;
    }

    bool symmetric() const {
        for (auto& [m, c] : coeffs) {
            auto it = coeffs.find({m.second, m.first});
            if (it == coeffs.end() || it->second != c) return false;
        }
        return true;
    }
};

inline Poly2 poly_x_minus(int s) { // (x - s)
    Poly2 p;
    p.coeffs[{1, 0}] = 1;
    if (s) p.coeffs[{0, 0}] = -s;
    return p;
}

inline Poly2 poly_y_minus(int t) {
    Poly2 p;
    p.coeffs[{0, 1}] = 1;
    if (t) p.coeffs[{0, 0}] = -t;
    return p;
}

struct PolynomialRealization {
    Poly2 poly;
    Int scale;                      // edge value v is realized as scale*v
    std::vector<Int> scaled_values; // per class
};

// Interpolation through the symmetric basis f_ij vanishing at all unordered
// point pairs except {i,j}; clearing the rational coefficients by a common
// multiple keeps the cograph unchanged.
inline PolynomialRealization polynomial_represent(const Cograph& c,
                                                  std::vector<long long> edge_values = {}) {
    int n = c.points();
    int k = c.class_count();
    if (edge_values.empty())
        for (int i = 0; i < k; ++i) edge_values.push_back(i + 1);
    if ((int)edge_values.size() != k)
        throw std::invalid_argument("need one edge value per class");
    for (int i = 0; i < k; ++i) {
        if (edge_values[i] <= 0) throw std::invalid_argument("edge values must be positive");
        for (int j = i + 1; j < k; ++j)
            if (edge_values[i] == edge_values[j])
                throw std::invalid_argument("edge values must be distinct per class");
    }

    // points labeled 1..n
    auto basis = [&](int i, int j) {
        Poly2 f = Poly2::constant(1);
        for (int s = 1; s <= n; ++s)
            for (int t = s + 1; t <= n; ++t) {
                if (s == i && t == j) continue;
                Poly2 q1 = poly_x_minus(s) * poly_x_minus(s) + poly_y_minus(t) * poly_y_minus(t);
                Poly2 q2 = poly_x_minus(t) * poly_x_minus(t) + poly_y_minus(s) * poly_y_minus(s);
                f = f * q1 * q2;
            }
        return f;
    };

    Int scale = 1;
    std::vector<Poly2> fs;
    std::vector<Int> fvals;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Poly2 f = basis(i, j);
            Int fij = f.eval(i, j);
            if (fij == 0) throw std::logic_error("basis polynomial vanished at its own pair");
            fs.push_back(std::move(f));
            fvals.push_back(fij);
            Int v = edge_values[c.class_of(i - 1, j - 1)];
            Int g = int_gcd(v, fij);
            scale = int_lcm(scale, fvals.back() / g);
        }

    Poly2 total;
    int idx = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j, ++idx) {
            Int v = edge_values[c.class_of(i - 1, j - 1)];
            Int coeff = scale * v / fvals[idx]; // exact by choice of scale
            total = total + fs[idx].scaled(coeff);
        }

    PolynomialRealization out;
    out.poly = total;
    out.scale = scale;
    for (int cls = 0; cls < k; ++cls) out.scaled_values.push_back(scale * edge_values[cls]);

    if (!out.poly.symmetric()) throw std::logic_error("interpolant is not symmetric");
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Int expect = out.scaled_values[c.class_of(i - 1, j - 1)];
            if (out.poly.eval(i, j) != expect || out.poly.eval(j, i) != expect)
                throw std::logic_error("interpolant misses a pair value");
        }
    return out;
}

struct PrelabelViolation : std::runtime_error {
    char condition; // 'a', 'b' or 'c'
    std::vector<int> points;
    PrelabelViolation(char cond, std::vector<int> pts)
        : std::runtime_error(std::string("prelabel condition (") + cond + ") violated"),
          condition(cond), points(std::move(pts)) {}
};

// Recovers point values of a sum cograph from prelabeled edges over Z
// (modulus 0) or Z_m. Conditions: (a) incident edges distinct, (b) triangle
// sums even, (c) quadrilateral opposite sums equal. 2L(P) = ab+ac-bc; for
// even moduli both halves of the coset are tried.
inline std::vector<long long> sum_prelabel_points(int n,
                                                  const std::vector<long long>& edge_per_pair,
                                                  long long m = 0) {
    if ((int)edge_per_pair.size() != pair_count(n))
        throw std::invalid_argument("need one edge value per pair");
    auto red = [&](long long v) { return m == 0 ? v : ((v % m) + m) % m; };
    auto e = [&](int i, int j) { return red(edge_per_pair[pair_index(i, j)]); };

    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int r = q + 1; r < n; ++r) {
                if (q == p || r == p) continue;
                if (e(p, q) == e(p, r)) throw PrelabelViolation('a', {p, q, r});
            }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int l = j + 1; l < n; ++l) {
                long long s = e(i, j) + e(j, l) - e(i, l);
                bool even = (s % 2) == 0;
                if (m != 0 && m % 2 == 1) even = true; // 2 is invertible
                if (!even) throw PrelabelViolation('b', {i, j, l});
            }
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            for (int r = q + 1; r < n; ++r)
                for (int s = r + 1; s < n; ++s) {
                    long long i1 = red(e(p, q) + e(r, s));
                    long long i2 = red(e(p, r) + e(q, s));
                    long long i3 = red(e(p, s) + e(q, r));
                    if (i1 != i2 || i2 != i3) throw PrelabelViolation('c', {p, q, r, s});
                }

    auto build = [&](long long lp) {
        std::vector<long long> lab(n);
        lab[0] = red(lp);
        for (int x = 1; x < n; ++x) lab[x] = red(e(0, x) - lp);
        return lab;
    };
    auto verify = [&](const std::vector<long long>& lab) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (red(lab[i] + lab[j]) != e(i, j)) return false;
                if (red(lab[i] - lab[j]) == 0) return false; // points must stay distinct
            }
        return true;
    };

    std::vector<long long> anchors;
    if (n == 2) {
        anchors = {0, 1, 2}; // the anchor is a free choice here
    } else {
        long long two_lp = red(e(0, 1) + e(0, 2) - e(1, 2));
        if (m == 0) {
            if (two_lp % 2 != 0) throw PrelabelViolation('b', {0, 1, 2});
            anchors = {two_lp / 2};
        } else if (m % 2 == 1) {
            long long inv2 = (m + 1) / 2; // 2*(m+1)/2 = m+1 = 1 (mod m)
            anchors = {red(two_lp * inv2)};
        } else {
            if (two_lp % 2 != 0) throw PrelabelViolation('b', {0, 1, 2});
            anchors = {red(two_lp / 2), red(two_lp / 2 + m / 2)};
        }
    }
    for (long long lp : anchors) {
        auto lab = build(lp);
        if (verify(lab)) return lab;
    }
    throw std::logic_error("prelabel conditions held but no labeling verified");
}

struct DistancePrelabel {
    bool realizable = false;
    std::vector<Rat> labels;
    std::optional<Pair> violated; // first failing pair or triangle
    std::string reason;
};

// Recovers points on the line from positive prelabeled distances: anchor a
// maximal pair, place everything relative to it, verify all differences.
inline DistancePrelabel distance_prelabel_points(int n, const std::vector<Rat>& edge_per_pair) {
    if ((int)edge_per_pair.size() != pair_count(n))
        throw std::invalid_argument("need one edge value per pair");
    for (auto& v : edge_per_pair)
        if (v <= 0) throw std::invalid_argument("distances must be positive");
    auto e = [&](int i, int j) { return edge_per_pair[pair_index(i, j)]; };

    DistancePrelabel out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int l = j + 1; l < n; ++l) {
                Rat a = e(i, j), b = e(j, l), c = e(i, l);
                if (a != b + c && b != a + c && c != a + b) {
                    out.violated = Pair{i, j};
                    out.reason = "no triangle edge is the sum of the other two";
                    return out;
                }
            }

    int bp = 0, bq = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (e(i, j) > e(bp, bq)) bp = i, bq = j;

    std::vector<Rat> lab(n, Rat(0));
    for (int r = 0; r < n; ++r)
        if (r != bp) lab[r] = e(bp, r);

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rat d = lab[i] > lab[j] ? lab[i] - lab[j] : lab[j] - lab[i];
            if (d != e(i, j)) {
                out.violated = Pair{i, j};
                out.reason = "constructed labels fail to reproduce this distance";
                return out;
            }
        }
    out.realizable = true;
    out.labels = lab;
    return out;
}

} // namespace cograph::repr
