#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qc/lambda.hpp"
#include "qc/roots.hpp"

namespace qc {

enum class VerdictKind { Good, Bad, Inconclusive };

enum class GoodMethod {
    FastPathRegular,
    FastPathStar,
    FastPathDisconnected,
    ResultantNoRoots,
    ResultantPairExclusion,
};

const char* verdict_kind_name(VerdictKind k);
const char* good_method_name(GoodMethod m);

// One candidate pair (root of R in (0,1), root of R in (1,inf)) and how it was
// ruled out.  excluded_by: 1 or 2 for the equation whose enclosure misses 0,
// 0 when the pair survived every refinement stage.
struct PairEvidence {
    RootInterval u_box, v_box;
    int excluded_by = 0;
    RatInterval enclosure;
};

struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;

    // Good
    std::optional<GoodMethod> method;

    // Bad
    std::optional<WitnessTriple> witness;
    std::optional<AffinePair> pair;

    // evidence from the resultant route (also filled on fast paths when
    // force_resultant is set and the degree-sequence system is nondegenerate)
    IntPoly resultant;  // primitive, positive leading coefficient
    int roots_01 = -1, roots_1inf = -1;
    std::vector<RootInterval> intervals_01, intervals_1inf;
    std::vector<PairEvidence> pairs;

    std::string diagnostic;
    std::string graph6;  // the certified graph
};

struct CertifyOptions {
    // compute the resultant evidence even when a fast path already decides
    bool force_resultant = false;
};

// Pair-exclusion step of the resultant route: for every pair of isolating
// intervals (root of R in (0,1), root of R in (1,inf)) refine through the
// width schedule 2^-16, 2^-32, 2^-64, 2^-128 until one equation's interval
// enclosure excludes 0.  Symmetric systems (f2(u,v) = f1(v,u)) make the roots
// of the single resultant serve as both coordinates.
std::vector<PairEvidence> exclude_pairs(const BiPoly& f1, const BiPoly& f2,
                                        const IntPoly& resultant,
                                        const std::vector<RootInterval>& u_boxes,
                                        const std::vector<RootInterval>& v_boxes);

// The good/bad pipeline: after stripping isolated vertices, handle e(F) = 0
// and e(F) = 1 (Bad with an explicit witness), the disconnected / regular /
// star fast paths, then the resultant + Sturm + interval-exclusion route.
Verdict certify(const SmallGraph& f, const CertifyOptions& opts = {});

struct SurveyRow {
    std::string graph6;
    int edges = 0;
    Verdict verdict;
};

// Certifies every isomorphism class on m vertices.  Internal enumeration
// covers m <= 6; larger m needs a graph6 list (one graph per line).
std::vector<SurveyRow> survey(int m, int threads = 1);
std::vector<SurveyRow> survey_list(const std::vector<std::string>& graph6_lines, int threads = 1);

// All isomorphism classes on m vertices (canonical representatives), m <= 6.
std::vector<SmallGraph> enumerate_graphs(int m);

Verdict certify_bipartite(int a, int b);

}  // namespace qc
