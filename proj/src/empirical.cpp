#include "qc/empirical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "qc/parallel.hpp"

namespace qc {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key(mix(seed + kGamma * stream)) {}

std::uint64_t CounterRng::at(std::uint64_t counter) const {
    // the (counter+1)-th output of the published SplitMix64 stream seeded at key
    return mix(key + kGamma * (counter + 1));
}

bool CounterRng::bernoulli(std::uint64_t counter, const Rat& p) const {
    // draw/2^64 < p  <=>  draw * den(p) < num(p) * 2^64
    Int draw(static_cast<unsigned long>(at(counter)));
    Int lhs = draw * p.get_den();
    Int rhs = p.get_num() << 64;
    return lhs < rhs;
}

std::uint64_t CounterRng::below(std::uint64_t counter, std::uint64_t bound) const {
    using u128 = unsigned __int128;
    return static_cast<std::uint64_t>((u128(at(counter)) * u128(bound)) >> 64);
}

namespace {

// lexicographic index of the unordered pair i < j among the n*(n-1)/2 pairs
std::uint64_t edge_index(int i, int j, int n) {
    auto I = static_cast<std::uint64_t>(i), J = static_cast<std::uint64_t>(j),
         N = static_cast<std::uint64_t>(n);
    return I * N - I * (I + 1) / 2 + (J - I - 1);
}

void check_prob(const Rat& p, const char* what) {
    if (sgn(p) < 0 || p > 1) throw std::invalid_argument(std::string(what) + ": probability outside [0,1]");
}

}  // namespace

SmallGraph gen_gnp(int n, const Rat& p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_gnp: need n >= 1");
    check_prob(p, "gen_gnp");
    CounterRng rng(seed, 0);
    SmallGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.bernoulli(edge_index(i, j, n), p)) g.add_edge(i, j);
    return g;
}

SmallGraph gen_two_type(int n, const WitnessTriple& w, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_two_type: need n >= 1");
    check_prob(w.u, "gen_two_type u");
    check_prob(w.v, "gen_two_type v");
    check_prob(w.s, "gen_two_type s");
    CounterRng rng(seed, 0);
    SmallGraph g(n);
    int half = n / 2;  // 0..half-1 low, half..n-1 high
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Rat& p = (i < half && j < half) ? w.v : (i >= half && j >= half) ? w.u : w.s;
            if (rng.bernoulli(edge_index(i, j, n), p)) g.add_edge(i, j);
        }
    return g;
}

Rat two_type_psi_level(const SmallGraph& f, const TwoTypeGraphon& w, int k) {
    if (k < 0 || k > f.n) throw std::invalid_argument("two_type_psi_level: bad level");
    auto prof = subset_profile(f);
    auto sums = level_sums(prof, WitnessTriple{w.u, w.v, w.s});
    return sums[static_cast<size_t>(k)] / Rat(binomial(f.n, k));
}

Rat two_type_psi(const SmallGraph& f, const TwoTypeGraphon& w, const std::vector<Rat>& point) {
    if (static_cast<int>(point.size()) != f.n)
        throw std::invalid_argument("two_type_psi: need one coordinate per pattern vertex");
    Rat half(1, 2);
    int k = 0;
    for (const auto& x : point) {
        if (x == half) throw std::invalid_argument("two_type_psi: coordinate exactly on the boundary 1/2");
        if (sgn(x) < 0 || x > 1) throw std::invalid_argument("two_type_psi: coordinate outside [0,1]");
        if (x > half) ++k;
    }
    return two_type_psi_level(f, w, k);
}

Rat two_type_partition_integral(const SmallGraph& f, const TwoTypeGraphon& w,
                                const std::vector<std::array<Rat, 2>>& allocation) {
    if (static_cast<int>(allocation.size()) != f.n)
        throw std::invalid_argument("two_type_partition_integral: need one allocation row per vertex");
    Rat half(1, 2);
    Rat low_total, high_total;
    for (const auto& row : allocation) {
        if (sgn(row[0]) < 0 || sgn(row[1]) < 0)
            throw std::invalid_argument("two_type_partition_integral: negative allocation");
        low_total += row[0];
        high_total += row[1];
    }
    if (low_total > half || high_total > half)
        throw std::invalid_argument("two_type_partition_integral: allocation exceeds a half");

    // generating polynomial over "number of coordinates in the high half":
    // product over parts of (low_i + high_i * t)
    int m = f.n;
    std::vector<Rat> coeff(static_cast<size_t>(m) + 1);
    coeff[0] = 1;
    for (int i = 0; i < m; ++i) {
        for (int k = i + 1; k >= 1; --k)
            coeff[static_cast<size_t>(k)] = coeff[static_cast<size_t>(k)] * allocation[static_cast<size_t>(i)][0] +
                                            coeff[static_cast<size_t>(k - 1)] * allocation[static_cast<size_t>(i)][1];
        coeff[0] = coeff[0] * allocation[static_cast<size_t>(i)][0];
    }

    auto prof = subset_profile(f);
    auto sums = level_sums(prof, WitnessTriple{w.u, w.v, w.s});
    Rat total;
    for (int k = 0; k <= m; ++k) {
        // coeff[k] collects prod of measures over the C(m,k) high-set choices;
        // the symmetrized density at such a point is sums[k] / C(m,k) — but the
        // generating polynomial already sums over the concrete subsets, so each
        // subset carries the same level value
        total += coeff[static_cast<size_t>(k)] * sums[static_cast<size_t>(k)] / Rat(binomial(m, k));
    }
    return total;
}

Rat GeneratorParams::reference_density() const {
    if (kind == Kind::Gnp) return p;
    return TwoTypeGraphon(w).density();
}

namespace {

SmallGraph generate_host(const GeneratorParams& gen, std::uint64_t seed) {
    if (gen.kind == GeneratorParams::Kind::Gnp) return gen_gnp(gen.n, gen.p, seed);
    return gen_two_type(gen.n, gen.w, seed);
}

}  // namespace

ExperimentReport qr_experiment(const SmallGraph& f, const GeneratorParams& gen,
                               const std::vector<Rat>& alphas, int trials, std::uint64_t seed,
                               int threads) {
    if (static_cast<int>(alphas.size()) != f.n)
        throw std::invalid_argument("qr_experiment: need one fraction per pattern vertex");
    Rat alpha_sum;
    for (const auto& a : alphas) {
        if (sgn(a) <= 0) throw std::invalid_argument("qr_experiment: fractions must be positive");
        alpha_sum += a;
    }
    if (alpha_sum > 1) throw std::invalid_argument("qr_experiment: fractions sum to more than 1");

    ExperimentReport rep;
    rep.gen = gen;
    rep.seed = seed;
    rep.trials = trials;
    rep.alphas = alphas;

    SmallGraph host = generate_host(gen, seed);
    rep.host_edges = host.edge_count();

    Rat p_ref = gen.reference_density();
    Rat p_pow = pow_rat(p_ref, static_cast<unsigned>(f.edge_count()));

    rep.records.assign(static_cast<size_t>(trials), TrialRecord{});
    parallel_for(trials, threads, [&](int t) {
        // per-trial stream: Fisher-Yates shuffle, then carve parts in order
        CounterRng rng(seed, static_cast<std::uint64_t>(t) + 1);
        std::vector<int> pool(static_cast<size_t>(host.n));
        std::iota(pool.begin(), pool.end(), 0);
        std::uint64_t ctr = 0;
        for (int i = host.n - 1; i > 0; --i) {
            auto j = static_cast<size_t>(rng.below(ctr++, static_cast<std::uint64_t>(i) + 1));
            std::swap(pool[static_cast<size_t>(i)], pool[j]);
        }
        PartitionSpec spec = PartitionSpec::from_fractions(alphas, pool);

        TrialRecord rec;
        rec.constrained = count_constrained(f, host, spec);
        rec.symmetrized = count_symmetrized(f, host, spec);
        Rat expected = p_pow;
        for (const auto& part : spec.parts) {
            expected *= static_cast<long>(part.size());
            rec.part_sizes.push_back(static_cast<int>(part.size()));
        }
        rec.expected = expected;
        if (is_zero(expected)) {
            rec.deviation = Rat(rec.constrained);
        } else {
            Rat d = Rat(rec.constrained) / expected - 1;
            rec.deviation = sgn(d) < 0 ? Rat(-d) : d;
        }
        rep.records[static_cast<size_t>(t)] = std::move(rec);
    });

    Rat total;
    for (const auto& r : rep.records) total += r.deviation;
    rep.mean_deviation = trials > 0 ? Rat(total / trials) : Rat(0);
    return rep;
}

}  // namespace qc
