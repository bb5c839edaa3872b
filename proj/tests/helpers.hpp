#pragma once

// Shared test utilities: a tiny deterministic RNG for test data and the
// independent oracles the unit/acceptance suites check the library against.
// Everything here is intentionally written on a different code path from the
// library (naive enumeration, direct definitions).

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

#include "qc/count.hpp"
#include "qc/empirical.hpp"
#include "qc/graph.hpp"
#include "qc/lambda.hpp"

namespace testutil {

using qc::Int;
using qc::Rat;
using qc::SmallGraph;

struct XorShift {
    std::uint64_t state;
    explicit XorShift(std::uint64_t seed) : state(seed ? seed : 0x9E3779B97F4A7C15ull) {}
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    // in [0, bound)
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
    int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
};

inline Rat random_rat(XorShift& rng, int num_max = 20, int den_max = 20) {
    long num = static_cast<long>(rng.below(static_cast<std::uint64_t>(num_max) + 1));
    long den = 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(den_max)));
    return qc::make_rat(Int(num), Int(den));
}

// random rational in [0,1]
inline Rat random_unit_rat(XorShift& rng, int den_max = 40) {
    long den = 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(den_max)));
    long num = static_cast<long>(rng.below(static_cast<std::uint64_t>(den) + 1));
    return qc::make_rat(Int(num), Int(den));
}

inline SmallGraph random_graph(XorShift& rng, int n, int percent = 50) {
    SmallGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (static_cast<int>(rng.below(100)) < percent) g.add_edge(i, j);
    return g;
}

// ---- independent graph6 encoder (bitstring chunking, separate code path) ----

inline std::string independent_graph6(const SmallGraph& g) {
    std::vector<int> bits;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? 1 : 0);
    while (bits.size() % 6) bits.push_back(0);
    std::string out(1, static_cast<char>(63 + g.n));
    for (size_t k = 0; k < bits.size(); k += 6) {
        int v = 0;
        for (size_t b = 0; b < 6; ++b) v = v * 2 + bits[k + b];
        out.push_back(static_cast<char>(63 + v));
    }
    return out;
}

// ---- naive injective-homomorphism counting oracle ----

inline Int naive_constrained(const SmallGraph& f, const SmallGraph& g,
                             const qc::PartitionSpec& spec) {
    std::vector<int> image(static_cast<size_t>(f.n), -1);
    std::vector<char> used(static_cast<size_t>(g.n), 0);
    std::vector<std::vector<char>> in_part(spec.parts.size(),
                                           std::vector<char>(static_cast<size_t>(g.n), 0));
    for (size_t pi = 0; pi < spec.parts.size(); ++pi)
        for (int v : spec.parts[pi]) in_part[pi][static_cast<size_t>(v)] = 1;

    Int total = 0;
    // enumerate all injective maps vertex by vertex, in label order
    auto rec = [&](auto&& self, int p) -> void {
        if (p == f.n) {
            ++total;
            return;
        }
        for (int host = 0; host < g.n; ++host) {
            if (used[static_cast<size_t>(host)]) continue;
            if (!in_part[static_cast<size_t>(spec.assignment[static_cast<size_t>(p)])]
                        [static_cast<size_t>(host)])
                continue;
            bool ok = true;
            for (int q = 0; q < p; ++q)
                if (f.has_edge(p, q) && !g.has_edge(host, image[static_cast<size_t>(q)])) ok = false;
            if (!ok) continue;
            used[static_cast<size_t>(host)] = 1;
            image[static_cast<size_t>(p)] = host;
            self(self, p + 1);
            image[static_cast<size_t>(p)] = -1;
            used[static_cast<size_t>(host)] = 0;
        }
    };
    rec(rec, 0);
    return total;
}

// ---- brute-force symmetrized two-type density ----
// average over all |F|! permutations of the product over edges of the block
// value at the permuted coordinates

inline Rat brute_force_psi(const SmallGraph& f, const qc::TwoTypeGraphon& w,
                           const std::vector<Rat>& point) {
    Rat half(1, 2);
    std::vector<int> perm(static_cast<size_t>(f.n));
    std::iota(perm.begin(), perm.end(), 0);
    Rat total;
    long long count = 0;
    do {
        Rat prod(1);
        for (int i = 0; i < f.n; ++i)
            for (int j : f.adj[static_cast<size_t>(i)]) {
                if (j <= i) continue;
                const Rat& xi = point[static_cast<size_t>(perm[static_cast<size_t>(i)])];
                const Rat& xj = point[static_cast<size_t>(perm[static_cast<size_t>(j)])];
                bool hi_i = xi > half, hi_j = xj > half;
                prod *= (hi_i && hi_j) ? w.u : (!hi_i && !hi_j) ? w.v : w.s;
            }
        total += prod;
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total / Rat(static_cast<long>(count));
}

// direct subset enumeration of the level sums (independent of SubsetProfile)
inline std::vector<Rat> brute_force_level_sums(const SmallGraph& f, const qc::WitnessTriple& w) {
    int m = f.n;
    std::vector<Rat> sums(static_cast<size_t>(m) + 1);
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        int e_in = 0, e_comp = 0, e_cross = 0;
        for (int i = 0; i < m; ++i)
            for (int j : f.adj[static_cast<size_t>(i)]) {
                if (j <= i) continue;
                bool a = (mask >> i) & 1, b = (mask >> j) & 1;
                if (a && b) ++e_in;
                else if (!a && !b) ++e_comp;
                else ++e_cross;
            }
        Rat term = qc::pow_rat(w.u, static_cast<unsigned>(e_in)) *
                   qc::pow_rat(w.v, static_cast<unsigned>(e_comp)) *
                   qc::pow_rat(w.s, static_cast<unsigned>(e_cross));
        sums[static_cast<size_t>(std::popcount(mask))] += term;
    }
    return sums;
}

// a small corpus of structured + random pattern graphs with |F| <= cap
inline std::vector<SmallGraph> graph_corpus(int cap) {
    std::vector<SmallGraph> out;
    for (int m = 2; m <= cap; ++m) out.push_back(qc::path_graph(m));
    for (int m = 3; m <= cap; ++m) out.push_back(qc::cycle_graph(m));
    for (int m = 3; m <= cap; ++m) out.push_back(qc::star_graph(m - 1));
    for (int m = 2; m <= cap; ++m) out.push_back(qc::complete_graph(m));
    if (cap >= 4) out.push_back(qc::disjoint_union(qc::complete_graph(2), qc::complete_graph(2)));
    if (cap >= 5) out.push_back(qc::disjoint_union(qc::complete_graph(3), qc::complete_graph(2)));
    if (cap >= 6) out.push_back(qc::disjoint_union(qc::path_graph(3), qc::path_graph(3)));
    if (cap >= 5) out.push_back(qc::complete_bipartite(2, 3));
    if (cap >= 6) out.push_back(qc::complete_bipartite(2, 4));
    XorShift rng(12345);
    for (int n = 4; n <= cap; ++n) out.push_back(random_graph(rng, n, 50));
    for (int n = 4; n <= cap; ++n) out.push_back(random_graph(rng, n, 70));
    return out;
}

}  // namespace testutil
