#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qc/count.hpp"
#include "qc/graph.hpp"
#include "qc/lambda.hpp"

namespace qc {

// Counter-based deterministic random source (SplitMix64 finalizer with the
// published golden-ratio increment).  value(seed, stream, k) depends only on
// its arguments, so parallel or re-ordered sampling cannot change results:
//   key    = mix(seed + GAMMA * stream)
//   value  = mix(key + GAMMA * (k + 1))
// with GAMMA = 0x9E3779B97F4A7C15 and mix the SplitMix64 output function;
// the values are the published SplitMix64 output stream seeded at key
// (CounterRng(0,0) reproduces the reference stream of seed 0).
struct CounterRng {
    std::uint64_t key;

    CounterRng(std::uint64_t seed, std::uint64_t stream);
    std::uint64_t at(std::uint64_t counter) const;

    // true with probability p (exact rational comparison of the 64-bit draw)
    bool bernoulli(std::uint64_t counter, const Rat& p) const;
    // uniform in [0, bound) via the 128-bit multiply-high map
    std::uint64_t below(std::uint64_t counter, std::uint64_t bound) const;
};

// Step function with value u on the high block, v on the low block, s across;
// constant iff u = v = s.
struct TwoTypeGraphon {
    Rat u, v, s;

    explicit TwoTypeGraphon(const WitnessTriple& w) : u(w.u), v(w.v), s(w.s) {}
    TwoTypeGraphon(Rat u_, Rat v_, Rat s_) : u(std::move(u_)), v(std::move(v_)), s(std::move(s_)) {}

    // average value; the density of the sampled graph
    Rat density() const { return (u + v + s * 2) / 4; }
};

// G(n, p) with a documented platform-independent generator.
SmallGraph gen_gnp(int n, const Rat& p, std::uint64_t seed);

// Two-block random graph: vertices 0..n/2-1 are "low", the rest "high";
// edge probabilities v (low-low), u (high-high), s (across).
SmallGraph gen_two_type(int n, const WitnessTriple& w, std::uint64_t seed);

// Symmetrized density of F against the step function at a point of [0,1]^m;
// depends only on k = #{i : x_i > 1/2}.  Coordinates exactly at 1/2 are
// rejected.
Rat two_type_psi(const SmallGraph& f, const TwoTypeGraphon& w, const std::vector<Rat>& point);

// Same value, taking k directly.
Rat two_type_psi_level(const SmallGraph& f, const TwoTypeGraphon& w, int k);

// Exact integral of the symmetrized density over A_1 x ... x A_m where part i
// occupies measure allocation[i][0] of the low half and allocation[i][1] of
// the high half.
Rat two_type_partition_integral(const SmallGraph& f, const TwoTypeGraphon& w,
                                const std::vector<std::array<Rat, 2>>& allocation);

struct GeneratorParams {
    enum class Kind { Gnp, TwoType } kind = Kind::Gnp;
    int n = 0;
    Rat p;            // Gnp
    WitnessTriple w;  // TwoType

    Rat reference_density() const;
};

struct TrialRecord {
    Int constrained;
    Rat symmetrized;
    Rat expected;           // p^{e(F)} * prod |U_i|
    Rat deviation;          // |constrained - expected| / expected (0 if expected = 0)
    std::vector<int> part_sizes;
};

struct ExperimentReport {
    GeneratorParams gen;
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<Rat> alphas;
    long long host_edges = 0;
    std::vector<TrialRecord> records;
    Rat mean_deviation;
};

// For each trial: sample disjoint uniformly-random parts of sizes
// floor(alpha_i * n) and compare the constrained and symmetrized counts with
// the G(n,p) prediction.  Bit-reproducible from (params, seed).
ExperimentReport qr_experiment(const SmallGraph& f, const GeneratorParams& gen,
                               const std::vector<Rat>& alphas, int trials, std::uint64_t seed,
                               int threads = 1);

}  // namespace qc
