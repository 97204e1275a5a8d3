#pragma once

#include <string>

#include "bigint.hpp"
#include "snf.hpp"

namespace cograph::sum {

// F_{-1} = 1, F_0 = 0, F_1 = 1, ...
inline Int fib(int i) {
    if (i < -1) throw std::domain_error("fib index");
    if (i == -1) return 1;
    Int a = 1, b = 0; // F_{-1}, F_0
    for (int k = 0; k < i; ++k) {
        Int c = a + b;
        a = b;
        b = c;
    }
    return b;
}

// L_0 = 2, L_1 = 1, L_2 = 3, ...; L_n = F_{n-1} + F_{n+1}
inline Int lucas(int i) { return fib(i - 1) + fib(i + 1); }

struct WheelParameters {
    int n;
    Int d, t, h;
};

// Closed forms split on n mod 4 (even) and n mod 12 (odd); cross-checked
// against the direct gcd and torsion expressions. For n = 5,11 (mod 12) the
// odd-case h is only integral after adding t, which leaves it unchanged
// modulo the torsion.
inline WheelParameters wheel_parameters(int n) {
    if (n < 3) throw std::domain_error("wheel needs at least 3 spokes");
    WheelParameters w;
    w.n = n;
    if (n % 4 == 0) {
        w.d = fib(n / 2);
        w.t = 5 * fib(n / 2);
        w.h = -2 * fib(n / 2);
    } else if (n % 2 == 0) {
        w.d = lucas(n / 2);
        w.t = lucas(n / 2);
        w.h = -lucas(n / 2);
    } else {
        int c = n % 12;
        if (c == 3 || c == 9) {
            w.d = 2;
            w.t = lucas(n) / 2;
            w.h = 1 - lucas(n - 2);
        } else {
            w.d = 1;
            w.t = lucas(n);
            Int num = 1 - lucas(n - 2);
            if (num % 2 != 0) num += w.t;
            if (num % 2 != 0) throw std::logic_error("half-integer h not fixable");
            w.h = num / 2;
        }
    }
    Int d_direct = int_gcd(fib(n - 2) + 1, fib(n - 1) - 1);
    Int t_direct = (lucas(n) - 1 - (n % 2 == 0 ? 1 : -1)) / d_direct;
    if (w.d != d_direct || w.t != t_direct)
        throw std::logic_error("wheel parameter formulas disagree with direct values");
    return w;
}

// Largest invariant factor of the 2x2 closing system
// {(F_{n-1}-1)a + F_n b = 0, (F_{n-2}+1)a + (F_{n-1}-1)b = 0}.
inline Int wheel_torsion_snf_oracle(int n) {
    IntMatrix m = {{fib(n - 1) - 1, fib(n)}, {fib(n - 2) + 1, fib(n - 1) - 1}};
    auto s = smith_normal_form(m);
    if (s.rank != 2) throw std::logic_error("closing system is singular");
    return s.D[1][1];
}

struct WheelTerm {
    long long x = 0, y = 0;
    bool operator==(const WheelTerm&) const = default;
    auto operator<=>(const WheelTerm&) const = default;
};

struct WheelReport {
    int n = 0;
    Int d, t, h;
    long long m1 = 0, m2 = 1; // group Z_m1 (+) Z_m2; m2 == 1 means cyclic Z_m1
    std::string group;
    long long a_signed = 0; // signed representative picked for a in the cyclic case
    WheelTerm a, b;
    std::vector<WheelTerm> terms; // P_0 .. P_{n-1}
};

// Builds a full wheel: hub 0 plus n distinct nonzero terms obeying
// P_{i+2} = P_i + P_{i+1}, closing up with period n. Uses Z_k (+) Z_k with
// a=(1,0), b=(0,1) for the four spoke counts whose closing system vanishes
// on a smaller square group (3, 6, 8, 16), cyclic Z_t otherwise.
inline WheelReport wheel_build(int n) {
    WheelParameters p = wheel_parameters(n);
    WheelReport r;
    r.n = n;
    r.d = p.d;
    r.t = p.t;
    r.h = p.h;

    auto step = [&](WheelTerm u, WheelTerm v) {
        return WheelTerm{(u.x + v.x) % r.m1, (u.y + v.y) % r.m2};
    };
    auto build_terms = [&](WheelTerm a, WheelTerm b) {
        std::vector<WheelTerm> ts = {a, b};
        for (int i = 2; i < n + 2; ++i) ts.push_back(step(ts[i - 2], ts[i - 1]));
        return ts;
    };
    auto valid = [&](std::vector<WheelTerm>& ts) {
        if (!(ts[n] == ts[0] && ts[n + 1] == ts[1])) return false;
        for (int i = 0; i < n; ++i) {
            if (ts[i].x == 0 && ts[i].y == 0) return false;
            for (int j = i + 1; j < n; ++j)
                if (ts[i] == ts[j]) return false;
        }
        return true;
    };

    long long k = 0;
    if (n == 3) k = 2;
    if (n == 6) k = 4;
    if (n == 8) k = 3;
    if (n == 16) k = 7;
    if (k) {
        r.m1 = r.m2 = k;
        r.group = "Z_" + std::to_string(k) + "xZ_" + std::to_string(k);
        r.a = {1, 0};
        r.b = {0, 1};
        r.a_signed = 1;
        auto ts = build_terms(r.a, r.b);
        if (!valid(ts)) throw std::logic_error("square-group wheel failed to close");
        ts.resize(n);
        r.terms = ts;
        return r;
    }

    long long t = p.t.convert_to<long long>();
    r.m1 = t;
    r.m2 = 1;
    r.group = "Z_" + std::to_string(t);
    long long c11 = ((fib(n - 1) - 1) % p.t).convert_to<long long>();
    long long c12 = (fib(n) % p.t).convert_to<long long>();
    long long c21 = ((fib(n - 2) + 1) % p.t).convert_to<long long>();
    long long c22 = c11;
    for (long long as = -1; as > -t; --as) {
        long long a = ((as % t) + t) % t;
        for (long long b = 0; b < t; ++b) {
            if ((c11 * a + c12 * b) % t != 0) continue;
            if ((c21 * a + c22 * b) % t != 0) continue;
            r.a = {a, 0};
            r.b = {b, 0};
            r.a_signed = as;
            auto ts = build_terms(r.a, r.b);
            if (!valid(ts)) continue;
            ts.resize(n);
            r.terms = ts;
            return r;
        }
    }
    throw std::logic_error("no full wheel found in the cyclic group");
}

} // namespace cograph::sum
