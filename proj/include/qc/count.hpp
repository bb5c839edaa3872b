#pragma once

#include <vector>

#include "qc/graph.hpp"

namespace qc {

// Disjoint host-vertex parts plus, for each pattern vertex, the index of the
// part it must land in (repeats allowed).
struct PartitionSpec {
    std::vector<std::vector<int>> parts;
    std::vector<int> assignment;

    // part sizes floor(alpha_i * n), carved in order from a vertex pool
    static PartitionSpec from_fractions(const std::vector<Rat>& alphas,
                                        const std::vector<int>& vertex_pool);
};

inline constexpr int kCountPatternCap = 10;

// Number of injective graph homomorphisms F -> G with vertex i mapped into
// its assigned part.
Int count_constrained(const SmallGraph& f, const SmallGraph& g, const PartitionSpec& spec);

// Average of count_constrained over all |F|! permuted assignments.
Rat count_symmetrized(const SmallGraph& f, const SmallGraph& g, const PartitionSpec& spec);

// Sum of count_symmetrized over all increasing m-tuples of part indices,
// r = parts.size() >= m.
Rat count_summed(const SmallGraph& f, const SmallGraph& g,
                 const std::vector<std::vector<int>>& parts);

// Average of count_symmetrized over all distinct permutations of the
// multiplicity vector (part i repeated mults[i] times; sum of mults = |F|).
Rat count_multiplicity_averaged(const SmallGraph& f, const SmallGraph& g,
                                const std::vector<std::vector<int>>& parts,
                                const std::vector<int>& mults);

}  // namespace qc
