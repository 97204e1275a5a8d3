#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>

#include "difference.hpp"
#include "enumeration.hpp"
#include "group.hpp"
#include "intersection.hpp"
#include "pl.hpp"
#include "sum.hpp"
#include "wheels.hpp"

namespace cograph::regen {

inline uint64_t fnv1a64(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string witness_text(const sum::Labeling& lab) {
    std::ostringstream os;
    os << "witness=(";
    for (size_t i = 0; i < lab.values.size(); ++i) {
        if (i) os << ',';
        if (lab.values[i].size() == 1) {
            os << lab.values[i][0];
        } else {
            os << '(';
            for (size_t c = 0; c < lab.values[i].size(); ++c) {
                if (c) os << ' ';
                os << lab.values[i][c];
            }
            os << ')';
        }
    }
    os << ';';
    if (lab.moduli.empty())
        os << 0;
    else
        for (size_t c = 0; c < lab.moduli.size(); ++c) {
            if (c) os << 'x';
            os << lab.moduli[c];
        }
    os << ')';
    return os.str();
}

inline std::string diff_witness_text(const diff::DiffLabeling& lab) {
    std::ostringstream os;
    os << "witness=(";
    for (size_t i = 0; i < lab.values.size(); ++i) {
        if (i) os << ',';
        os << lab.values[i];
    }
    os << ';' << lab.modulus << ')';
    return os.str();
}

inline std::string counts_file() {
    std::ostringstream os;
    for (int n = 2; n <= 9; ++n) os << "n=" << n << " count=" << count_cographs(n) << "\n";
    return os.str();
}

inline std::string sum_file() {
    std::ostringstream os;
    for (auto& e : sum::enumerate_sum_cographs(6)) {
        os << e.key.bytes << " outcome=" << sum::outcome_name(e.verdict.outcome);
        if (e.verdict.witness) os << ' ' << witness_text(*e.verdict.witness);
        os << "\n";
    }
    return os.str();
}

inline std::string diff_file(long long max_modulus = 40) {
    std::ostringstream os;
    for (auto& e : diff::enumerate_difference_cographs(5, max_modulus)) {
        os << e.key.bytes << ' ' << diff_witness_text(e.witness) << " motifs=" << e.census.q
           << ',' << e.census.v << ',' << e.census.t
           << (e.torsion_free ? " torsion-free" : " torsion") << "\n";
    }
    return os.str();
}

inline std::string isect_file() {
    std::ostringstream os;
    for (auto& e : isect::enumerate_intersection_cographs(4)) {
        os << e.key.bytes << " sets=";
        for (size_t c = 0; c < e.class_sets.size(); ++c) {
            if (c) os << ';';
            os << '{';
            for (size_t i = 0; i < e.class_sets[c].size(); ++i) {
                if (i) os << ',';
                os << e.class_sets[c][i];
            }
            os << '}';
        }
        os << "\n";
    }
    return os.str();
}

inline std::string pl_file(int threads = 1) {
    std::ostringstream os;
    for (int n = 2; n <= 7; ++n)
        for (auto& [key, s] : pl::enumerate_pl_spaces(n, false, threads))
            os << key << ' ' << pl::serialize_space(s)
               << (pl::is_minimal(s) ? " minimal" : "") << "\n";
    return os.str();
}

inline std::string wheels_file() {
    std::ostringstream os;
    for (int n = 3; n <= 23; ++n) {
        auto r = sum::wheel_build(n);
        os << "n=" << n << " d=" << r.d << " t=" << r.t << " h=" << r.h << " group=" << r.group
           << " a=" << r.a_signed << " b=" << r.b.x;
        if (r.m2 > 1) os << "," << r.b.y;
        os << " terms=";
        for (int i = 0; i < r.n; ++i) {
            if (i) os << ',';
            os << r.terms[i].x;
            if (r.m2 > 1) os << ':' << r.terms[i].y;
        }
        os << "\n";
    }
    return os.str();
}

inline std::string chain_groups_file(size_t cap = 100000) {
    std::ostringstream os;
    for (long long p : {2, 4, 6, 8})
        for (long long q : {2, 4, 6, 8})
            for (long long n = 2; n <= 8; ++n) {
                auto params = group::chain_group_order(p, q, n);
                os << "p=" << p << " q=" << q << " n=" << n << " p'=" << params.p_prime
                   << " q'=" << params.q_prime;
                if (params.excluded) {
                    os << " excluded\n";
                    continue;
                }
                auto table = group::todd_coxeter(
                    group::chain_group_presentation((int)p, (int)q, (int)n), {{0}}, cap);
                auto reg = group::todd_coxeter(
                    group::chain_group_presentation((int)p, (int)q, (int)n), {}, cap);
                os << " index=" << table.index << " order=" << reg.index
                   << (reg.index == params.order ? "" : " FORMULA-MISMATCH") << "\n";
            }
    return os.str();
}

struct RegenResult {
    std::vector<std::pair<std::string, std::string>> files; // name -> contents
    std::string manifest;
};

// Every derived catalogue, byte-deterministic, plus a checksum manifest.
inline RegenResult regen_all(int threads = 1) {
    RegenResult out;
    out.files.emplace_back("counts.txt", counts_file());
    out.files.emplace_back("sum6.txt", sum_file());
    out.files.emplace_back("diff5.txt", diff_file());
    out.files.emplace_back("isect4.txt", isect_file());
    out.files.emplace_back("pl.txt", pl_file(threads));
    out.files.emplace_back("wheels.txt", wheels_file());
    out.files.emplace_back("chain_groups.txt", chain_groups_file());
    std::ostringstream mf;
    for (auto& [name, data] : out.files) {
        std::ostringstream hex;
        hex << std::hex << fnv1a64(data);
        mf << name << " bytes=" << data.size() << " fnv64=" << hex.str() << "\n";
    }
    out.manifest = mf.str();
    return out;
}

inline void write_regen(const RegenResult& r, const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (auto& [name, data] : r.files) {
        std::ofstream f(dir + "/" + name, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + dir + "/" + name);
        f << data;
    }
    std::ofstream mf(dir + "/manifest.txt", std::ios::binary);
    mf << r.manifest;
}

} // namespace cograph::regen
