#include "qc/certify.hpp"

#include <algorithm>
#include <unordered_set>

#include "qc/parallel.hpp"

namespace qc {

const char* verdict_kind_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::Good: return "Good";
        case VerdictKind::Bad: return "Bad";
        case VerdictKind::Inconclusive: return "Inconclusive";
    }
    return "?";
}

const char* good_method_name(GoodMethod m) {
    switch (m) {
        case GoodMethod::FastPathRegular: return "FastPathRegular";
        case GoodMethod::FastPathStar: return "FastPathStar";
        case GoodMethod::FastPathDisconnected: return "FastPathDisconnected";
        case GoodMethod::ResultantNoRoots: return "ResultantNoRoots";
        case GoodMethod::ResultantPairExclusion: return "ResultantPairExclusion";
    }
    return "?";
}

namespace {

// the e(F) <= 1 witness: s = (u+v)/2 forces degree 1 (and for e(F) = 0 any
// not-all-equal triple leaves the polynomial constant)
const WitnessTriple kCanonicalWitness{Rat(3, 4), Rat(1, 4), Rat(1, 2)};

Verdict bad_verdict(const SmallGraph& original, const WitnessTriple& w, std::string diag) {
    Verdict out;
    out.kind = VerdictKind::Bad;
    out.witness = w;
    auto pair = degree_le1_check(original, w);
    if (!pair || (is_zero(pair->a) && is_zero(pair->b)))
        throw std::logic_error("bad_verdict: witness failed validation");
    out.pair = *pair;
    out.diagnostic = std::move(diag);
    return out;
}

// refinement schedule for the exclusion test
const std::vector<Rat> kRefineWidths = {
    make_rat(1, Int(1) << 16),
    make_rat(1, Int(1) << 32),
    make_rat(1, Int(1) << 64),
    make_rat(1, Int(1) << 128),
};

}  // namespace

std::vector<PairEvidence> exclude_pairs(const BiPoly& f1, const BiPoly& f2,
                                        const IntPoly& resultant,
                                        const std::vector<RootInterval>& u_boxes,
                                        const std::vector<RootInterval>& v_boxes) {
    std::vector<PairEvidence> out;
    for (const auto& ub : u_boxes)
        for (const auto& vb : v_boxes) {
            PairEvidence ev;
            ev.u_box = ub;
            ev.v_box = vb;
            for (const auto& width : kRefineWidths) {
                ev.u_box = refine(ev.u_box, resultant, width);
                ev.v_box = refine(ev.v_box, resultant, width);
                RatInterval enc1 = interval_eval(f1, RatInterval(ev.u_box), RatInterval(ev.v_box));
                if (!enc1.contains_zero()) {
                    ev.excluded_by = 1;
                    ev.enclosure = enc1;
                    break;
                }
                RatInterval enc2 = interval_eval(f2, RatInterval(ev.u_box), RatInterval(ev.v_box));
                if (!enc2.contains_zero()) {
                    ev.excluded_by = 2;
                    ev.enclosure = enc2;
                    break;
                }
            }
            out.push_back(std::move(ev));
        }
    return out;
}

namespace {

// Fills resultant evidence: R(u), root counts in (0,1) and (1,inf), and on
// demand the isolating intervals and pair exclusions.  Returns false when the
// degree-sequence system is degenerate (f1 = f2 or resultant identically 0).
bool resultant_evidence(const SmallGraph& stripped, Verdict& out, bool want_pairs) {
    auto [f1, f2] = degree_seq_equations(stripped);
    if (f1 == f2) {
        out.diagnostic = "degenerate degree-sequence system: f1 = f2";
        return false;
    }
    IntPoly res = resultant_v(f1, f2);
    if (res.zero_poly()) {
        out.diagnostic = "degenerate degree-sequence system: resultant vanishes identically";
        return false;
    }
    out.resultant = primitive_positive(res);
    Rat zero(0), one(1);
    out.roots_01 = sturm_count(out.resultant, zero, one);
    out.roots_1inf = sturm_count(out.resultant, one, std::nullopt);
    if (!want_pairs || out.roots_01 == 0 || out.roots_1inf == 0) return true;

    out.intervals_01 = isolate_roots(out.resultant, zero, one);
    out.intervals_1inf = isolate_roots(out.resultant, one, std::nullopt);
    out.pairs = exclude_pairs(f1, f2, out.resultant, out.intervals_01, out.intervals_1inf);
    return true;
}

}  // namespace

Verdict certify(const SmallGraph& f, const CertifyOptions& opts) {
    if (f.n > kPatternVertexCap)
        throw std::invalid_argument("certify: vertex count exceeds cap of " +
                                    std::to_string(kPatternVertexCap));
    SmallGraph core = strip_isolated(f);
    long long e = core.edge_count();

    Verdict out;
    out.graph6 = encode_graph6(f);

    if (e == 0) {
        out = bad_verdict(f, kCanonicalWitness, "empty graph: subset polynomial is constant 1");
        out.graph6 = encode_graph6(f);
        return out;
    }
    if (e == 1) {
        out = bad_verdict(f, kCanonicalWitness,
                          "single edge: s=(u+v)/2 makes the subset polynomial affine");
        out.graph6 = encode_graph6(f);
        return out;
    }

    StructureClass cls = classify(core);
    std::optional<GoodMethod> fast;
    switch (cls.kind) {
        case GraphClass::DisconnectedNontrivial: fast = GoodMethod::FastPathDisconnected; break;
        case GraphClass::Regular: fast = GoodMethod::FastPathRegular; break;
        case GraphClass::Star: fast = GoodMethod::FastPathStar; break;
        default: break;
    }
    if (fast) {
        out.kind = VerdictKind::Good;
        out.method = *fast;
        if (opts.force_resultant) resultant_evidence(core, out, true);
        return out;
    }

    if (!resultant_evidence(core, out, true)) {
        // reachable only for e(F) > 1; e(F) = 1 was routed to Bad above
        out.kind = VerdictKind::Inconclusive;
        return out;
    }

    if (out.roots_01 == 0 || out.roots_1inf == 0) {
        out.kind = VerdictKind::Good;
        out.method = GoodMethod::ResultantNoRoots;
        return out;
    }

    bool all_excluded = true;
    for (const auto& ev : out.pairs)
        if (ev.excluded_by == 0) all_excluded = false;
    if (all_excluded) {
        out.kind = VerdictKind::Good;
        out.method = GoodMethod::ResultantPairExclusion;
        return out;
    }

    // surviving pairs: hunt for an exact witness at the box midpoints
    for (const auto& ev : out.pairs) {
        if (ev.excluded_by != 0) continue;
        WitnessTriple w{ev.u_box.mid(), ev.v_box.mid(), Rat(1)};
        if (auto pair = check_alg_system(f, w)) {
            if (!(is_zero(pair->a) && is_zero(pair->b)) && !w.all_equal()) {
                out.kind = VerdictKind::Bad;
                out.witness = w;
                out.pair = *pair;
                out.diagnostic = "exact witness found at a surviving pair midpoint";
                return out;
            }
        }
    }

    out.kind = VerdictKind::Inconclusive;
    out.diagnostic = "pairs survived the exclusion schedule";
    return out;
}

std::vector<SmallGraph> enumerate_graphs(int m) {
    if (m < 1 || m > 6)
        throw std::invalid_argument("enumerate_graphs: internal enumeration covers 1 <= m <= 6");
    int npairs = m * (m - 1) / 2;
    // edge index table for every permutation of the vertices
    std::vector<int> perm(static_cast<size_t>(m));
    std::vector<std::vector<int>> edge_maps;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
    for (int i = 0; i < m; ++i) perm[static_cast<size_t>(i)] = i;
    do {
        std::vector<int> emap(static_cast<size_t>(npairs));
        for (int e = 0; e < npairs; ++e) {
            auto [a, b] = pairs[static_cast<size_t>(e)];
            int pa = perm[static_cast<size_t>(a)], pb = perm[static_cast<size_t>(b)];
            if (pa > pb) std::swap(pa, pb);
            int idx = 0;
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j, ++idx)
                    if (i == pa && j == pb) emap[static_cast<size_t>(e)] = idx;
        }
        edge_maps.push_back(std::move(emap));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<SmallGraph> out;
    for (std::uint32_t mask = 0; mask < (1u << npairs); ++mask) {
        std::uint32_t canon = mask;
        for (const auto& emap : edge_maps) {
            std::uint32_t im = 0;
            for (int e = 0; e < npairs; ++e)
                if ((mask >> e) & 1) im |= 1u << emap[static_cast<size_t>(e)];
            canon = std::min(canon, im);
        }
        if (canon != mask) continue;
        SmallGraph g(m);
        for (int e = 0; e < npairs; ++e)
            if ((mask >> e) & 1) g.add_edge(pairs[static_cast<size_t>(e)].first, pairs[static_cast<size_t>(e)].second);
        out.push_back(std::move(g));
    }
    return out;
}

namespace {

std::vector<SurveyRow> survey_graphs(const std::vector<SmallGraph>& graphs, int threads) {
    std::vector<SurveyRow> rows(graphs.size());
    parallel_for(static_cast<int>(graphs.size()), threads, [&](int i) {
        const auto& g = graphs[static_cast<size_t>(i)];
        SurveyRow row;
        row.graph6 = encode_graph6(g);
        row.edges = static_cast<int>(g.edge_count());
        row.verdict = certify(g);
        rows[static_cast<size_t>(i)] = std::move(row);
    });
    return rows;
}

}  // namespace

std::vector<SurveyRow> survey(int m, int threads) {
    if (m < 2 || m > 8) throw std::invalid_argument("survey: need 2 <= m <= 8");
    if (m > 6)
        throw std::invalid_argument(
            "survey: internal enumeration covers m <= 6; pass a graph6 list for larger m");
    return survey_graphs(enumerate_graphs(m), threads);
}

std::vector<SurveyRow> survey_list(const std::vector<std::string>& graph6_lines, int threads) {
    std::vector<SmallGraph> graphs;
    graphs.reserve(graph6_lines.size());
    for (const auto& line : graph6_lines)
        if (!line.empty()) graphs.push_back(parse_graph6(line));
    return survey_graphs(graphs, threads);
}

Verdict certify_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("certify_bipartite: need positive part sizes");
    if (a + b > kPatternVertexCap)
        throw std::invalid_argument("certify_bipartite: vertex count exceeds cap of " +
                                    std::to_string(kPatternVertexCap));
    CertifyOptions opts;
    opts.force_resultant = true;
    return certify(complete_bipartite(a, b), opts);
}

}  // namespace qc
