#include "qc/count.hpp"

#include <algorithm>
#include <numeric>

namespace qc {

PartitionSpec PartitionSpec::from_fractions(const std::vector<Rat>& alphas,
                                            const std::vector<int>& vertex_pool) {
    Rat total;
    for (const auto& a : alphas) total += a;
    if (total > 1) throw std::invalid_argument("part fractions sum to more than 1");
    PartitionSpec spec;
    size_t cursor = 0;
    long n = static_cast<long>(vertex_pool.size());
    for (size_t i = 0; i < alphas.size(); ++i) {
        Rat scaled = alphas[i] * n;
        Int size_floor = scaled.get_num() / scaled.get_den();  // floor for nonnegative
        size_t size = size_floor.get_ui();
        if (cursor + size > vertex_pool.size())
            throw std::invalid_argument("parts do not fit in the vertex pool");
        spec.parts.emplace_back(vertex_pool.begin() + static_cast<long>(cursor),
                                vertex_pool.begin() + static_cast<long>(cursor + size));
        std::sort(spec.parts.back().begin(), spec.parts.back().end());
        cursor += size;
        spec.assignment.push_back(static_cast<int>(i));
    }
    return spec;
}

namespace {

void validate(const SmallGraph& f, const SmallGraph& g, const PartitionSpec& spec) {
    if (f.n > kCountPatternCap)
        throw std::invalid_argument("count: pattern exceeds cap of " +
                                    std::to_string(kCountPatternCap));
    if (static_cast<int>(spec.assignment.size()) != f.n)
        throw std::invalid_argument("count: every pattern vertex needs an assigned part");
    std::vector<char> seen(static_cast<size_t>(g.n), 0);
    for (const auto& part : spec.parts)
        for (int v : part) {
            if (v < 0 || v >= g.n) throw std::invalid_argument("count: part vertex outside host");
            if (seen[static_cast<size_t>(v)]++) throw std::invalid_argument("count: overlapping parts");
        }
    for (int idx : spec.assignment)
        if (idx < 0 || idx >= static_cast<int>(spec.parts.size()))
            throw std::invalid_argument("count: assignment index out of range");
}

struct Backtracker {
    const SmallGraph& f;
    const SmallGraph& g;
    const PartitionSpec& spec;
    std::vector<int> order;    // pattern vertices, descending degree
    std::vector<int> image;    // pattern vertex -> host vertex or -1
    std::vector<char> used;    // host vertex in use
    Int total = 0;

    Backtracker(const SmallGraph& f_, const SmallGraph& g_, const PartitionSpec& spec_)
        : f(f_), g(g_), spec(spec_) {
        order.resize(static_cast<size_t>(f.n));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return f.degree(a) > f.degree(b); });
        image.assign(static_cast<size_t>(f.n), -1);
        used.assign(static_cast<size_t>(g.n), 0);
    }

    void run(size_t depth) {
        if (depth == order.size()) {
            ++total;
            return;
        }
        int p = order[depth];
        // candidates: assigned part intersected with the neighborhoods of the
        // already-placed pattern neighbors
        std::vector<int> cand = spec.parts[static_cast<size_t>(spec.assignment[static_cast<size_t>(p)])];
        for (int q : f.adj[static_cast<size_t>(p)]) {
            int iq = image[static_cast<size_t>(q)];
            if (iq < 0) continue;
            const auto& nb = g.adj[static_cast<size_t>(iq)];
            std::vector<int> next;
            std::set_intersection(cand.begin(), cand.end(), nb.begin(), nb.end(),
                                  std::back_inserter(next));
            cand.swap(next);
            if (cand.empty()) return;
        }
        for (int host : cand) {
            if (used[static_cast<size_t>(host)]) continue;
            used[static_cast<size_t>(host)] = 1;
            image[static_cast<size_t>(p)] = host;
            run(depth + 1);
            image[static_cast<size_t>(p)] = -1;
            used[static_cast<size_t>(host)] = 0;
        }
    }
};

}  // namespace

Int count_constrained(const SmallGraph& f, const SmallGraph& g, const PartitionSpec& spec) {
    validate(f, g, spec);
    if (f.n == 0) return 1;  // the empty map
    PartitionSpec norm = spec;
    for (auto& part : norm.parts) std::sort(part.begin(), part.end());
    Backtracker bt(f, g, norm);
    bt.run(0);
    return bt.total;
}

Rat count_symmetrized(const SmallGraph& f, const SmallGraph& g, const PartitionSpec& spec) {
    validate(f, g, spec);
    std::vector<int> perm(static_cast<size_t>(f.n));
    std::iota(perm.begin(), perm.end(), 0);
    Int total = 0;
    PartitionSpec scratch = spec;
    do {
        for (int i = 0; i < f.n; ++i)
            scratch.assignment[static_cast<size_t>(i)] =
                spec.assignment[static_cast<size_t>(perm[static_cast<size_t>(i)])];
        total += count_constrained(f, g, scratch);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return make_rat(total, factorial(f.n));
}

Rat count_summed(const SmallGraph& f, const SmallGraph& g,
                 const std::vector<std::vector<int>>& parts) {
    int r = static_cast<int>(parts.size());
    int m = f.n;
    if (r < m) throw std::invalid_argument("count_summed: fewer parts than pattern vertices");
    std::vector<int> combo(static_cast<size_t>(m));
    std::iota(combo.begin(), combo.end(), 0);
    Rat total;
    while (true) {
        PartitionSpec spec;
        for (int i = 0; i < m; ++i) {
            spec.parts.push_back(parts[static_cast<size_t>(combo[static_cast<size_t>(i)])]);
            spec.assignment.push_back(i);
        }
        total += count_symmetrized(f, g, spec);
        // next increasing m-combination of [0, r)
        int i = m - 1;
        while (i >= 0 && combo[static_cast<size_t>(i)] == r - m + i) --i;
        if (i < 0) break;
        ++combo[static_cast<size_t>(i)];
        for (int j = i + 1; j < m; ++j) combo[static_cast<size_t>(j)] = combo[static_cast<size_t>(j - 1)] + 1;
    }
    return total;
}

Rat count_multiplicity_averaged(const SmallGraph& f, const SmallGraph& g,
                                const std::vector<std::vector<int>>& parts,
                                const std::vector<int>& mults) {
    if (mults.size() != parts.size())
        throw std::invalid_argument("count_multiplicity_averaged: need one multiplicity per part");
    long long total_mult = 0;
    for (int mi : mults) {
        if (mi < 0) throw std::invalid_argument("count_multiplicity_averaged: negative multiplicity");
        total_mult += mi;
    }
    if (total_mult != f.n)
        throw std::invalid_argument("count_multiplicity_averaged: multiplicities must sum to |F|");

    std::vector<int> arrangement = mults;
    std::sort(arrangement.begin(), arrangement.end());
    Rat total;
    long long arrangements = 0;
    do {
        PartitionSpec spec;
        spec.parts = parts;
        for (size_t part = 0; part < arrangement.size(); ++part)
            for (int rep = 0; rep < arrangement[part]; ++rep)
                spec.assignment.push_back(static_cast<int>(part));
        total += count_symmetrized(f, g, spec);
        ++arrangements;
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    return total / Rat(static_cast<long>(arrangements));
}

}  // namespace qc
