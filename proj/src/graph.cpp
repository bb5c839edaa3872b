#include "qc/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace qc {

SmallGraph::SmallGraph(int vertices) : n(vertices) {
    if (vertices < 0) throw std::invalid_argument("negative vertex count");
    adj.assign(static_cast<size_t>(vertices), {});
}

void SmallGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("add_edge: vertex out of range");
    if (u == v) throw std::invalid_argument("add_edge: self-loop");
    auto& au = adj[static_cast<size_t>(u)];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) throw std::invalid_argument("add_edge: duplicate edge");
    au.insert(it, v);
    auto& av = adj[static_cast<size_t>(v)];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
}

bool SmallGraph::has_edge(int u, int v) const {
    const auto& au = adj[static_cast<size_t>(u)];
    return std::binary_search(au.begin(), au.end(), v);
}

long long SmallGraph::edge_count() const {
    long long d = 0;
    for (const auto& a : adj) d += static_cast<long long>(a.size());
    return d / 2;
}

std::vector<int> SmallGraph::degree_sequence() const {
    std::vector<int> d;
    d.reserve(static_cast<size_t>(n));
    for (const auto& a : adj) d.push_back(static_cast<int>(a.size()));
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<std::uint64_t> SmallGraph::bitmask_rows() const {
    if (n > 64) throw std::invalid_argument("bitmask_rows: more than 64 vertices");
    std::vector<std::uint64_t> rows(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int w : adj[static_cast<size_t>(v)]) rows[static_cast<size_t>(v)] |= 1ull << w;
    return rows;
}

std::vector<std::vector<int>> SmallGraph::components() const {
    std::vector<int> comp(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<size_t>(s)] != -1) continue;
        std::vector<int> stack{s}, verts;
        comp[static_cast<size_t>(s)] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            verts.push_back(v);
            for (int w : adj[static_cast<size_t>(v)])
                if (comp[static_cast<size_t>(w)] == -1) {
                    comp[static_cast<size_t>(w)] = comp[static_cast<size_t>(s)];
                    stack.push_back(w);
                }
        }
        std::sort(verts.begin(), verts.end());
        out.push_back(std::move(verts));
    }
    return out;
}

// ---- graph6 ----

SmallGraph parse_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw parse_error("graph6: empty input", 0);
    unsigned char h = static_cast<unsigned char>(s[0]);
    if (h < 63 || h > 125) throw parse_error("graph6: malformed header byte", 0);
    if (h == 126) throw parse_error("graph6: long form not supported (n > 62)", 0);
    int n = h - 63;
    SmallGraph g(n);
    size_t nbits = static_cast<size_t>(n) * (static_cast<size_t>(n) - 1) / 2;
    size_t nbytes = (nbits + 5) / 6;
    if (s.size() != 1 + nbytes) {
        if (s.size() < 1 + nbytes)
            throw parse_error("graph6: truncated bit payload", s.size());
        throw parse_error("graph6: trailing bytes", 1 + nbytes);
    }
    size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            size_t byte = 1 + bit / 6;
            unsigned char c = static_cast<unsigned char>(s[byte]);
            if (c < 63 || c > 126) throw parse_error("graph6: invalid payload byte", byte);
            int v = c - 63;
            if ((v >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    // padding bits beyond the triangle must be zero
    for (size_t b = nbits; b < nbytes * 6; ++b) {
        size_t byte = 1 + b / 6;
        int v = static_cast<unsigned char>(s[byte]) - 63;
        if ((v >> (5 - b % 6)) & 1) throw parse_error("graph6: nonzero padding bits", byte);
    }
    return g;
}

std::string encode_graph6(const SmallGraph& g) {
    if (g.n > 62) throw std::invalid_argument("encode_graph6: n > 62");
    std::string out(1, static_cast<char>(g.n + 63));
    size_t nbits = static_cast<size_t>(g.n) * (static_cast<size_t>(g.n) - 1) / 2;
    std::string payload((nbits + 5) / 6, 0);
    size_t bit = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.has_edge(i, j)) payload[bit / 6] |= static_cast<char>(1 << (5 - bit % 6));
    for (auto& c : payload) c = static_cast<char>(c + 63);
    return out + payload;
}

// ---- edge list ----

SmallGraph parse_edge_list(const std::string& text) {
    std::vector<std::pair<long, long>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        long a, b;
        if (!(ls >> a)) continue;  // blank line
        std::string rest;
        if (!(ls >> b) || (ls >> rest)) throw std::invalid_argument("edge list: expected two integers per line: '" + line + "'");
        rows.emplace_back(a, b);
    }
    if (rows.empty()) throw std::invalid_argument("edge list: no data");

    // The first line is a header "n m" iff m equals the number of remaining
    // lines and every remaining label fits in [1, n].  Otherwise every line is
    // an edge.
    size_t first_edge = 0;
    long n = 0;
    bool header = rows[0].first >= 1 && rows[0].second == static_cast<long>(rows.size()) - 1;
    if (header)
        for (size_t i = 1; i < rows.size(); ++i)
            if (rows[i].first < 1 || rows[i].first > rows[0].first || rows[i].second < 1 ||
                rows[i].second > rows[0].first)
                header = false;
    if (header) {
        n = rows[0].first;
        first_edge = 1;
    } else {
        for (auto [a, b] : rows) {
            if (a < 1 || b < 1)
                throw std::invalid_argument("edge list: label out of range (labels are 1-based)");
            n = std::max(n, std::max(a, b));
        }
    }
    SmallGraph g(static_cast<int>(n));
    for (size_t i = first_edge; i < rows.size(); ++i) {
        auto [a, b] = rows[i];
        if (a < 1 || a > n || b < 1 || b > n)
            throw std::invalid_argument("edge list: label out of range on line " + std::to_string(i + 1));
        if (a == b) throw std::invalid_argument("edge list: self-loop on line " + std::to_string(i + 1));
        if (g.has_edge(static_cast<int>(a - 1), static_cast<int>(b - 1)))
            throw std::invalid_argument("edge list: duplicate edge on line " + std::to_string(i + 1));
        g.add_edge(static_cast<int>(a - 1), static_cast<int>(b - 1));
    }
    return g;
}

SmallGraph strip_isolated(const SmallGraph& g) {
    std::vector<int> keep;
    for (int v = 0; v < g.n; ++v)
        if (!g.adj[static_cast<size_t>(v)].empty()) keep.push_back(v);
    std::vector<int> newid(static_cast<size_t>(g.n), -1);
    for (size_t i = 0; i < keep.size(); ++i) newid[static_cast<size_t>(keep[i])] = static_cast<int>(i);
    SmallGraph out(static_cast<int>(keep.size()));
    for (int v : keep)
        for (int w : g.adj[static_cast<size_t>(v)])
            if (v < w) out.add_edge(newid[static_cast<size_t>(v)], newid[static_cast<size_t>(w)]);
    return out;
}

SubsetStats subset_stats(const SmallGraph& g, std::uint64_t subset_mask) {
    auto rows = g.bitmask_rows();
    std::uint64_t all = (g.n == 64) ? ~0ull : ((1ull << g.n) - 1);
    if (subset_mask & ~all) throw std::invalid_argument("subset_stats: mask has bits outside V(F)");
    SubsetStats s;
    for (int v = 0; v < g.n; ++v) {
        std::uint64_t nb = rows[static_cast<size_t>(v)];
        int in = std::popcount(nb & subset_mask);
        int out = std::popcount(nb & ~subset_mask & all);
        if ((subset_mask >> v) & 1) {
            s.e_in += in;
            s.e_cross += out;
        } else {
            s.e_comp += out;
        }
    }
    s.e_in /= 2;
    s.e_comp /= 2;
    return s;
}

Int SubsetProfile::level_size(int k) const {
    Int total = 0;
    if (k >= 0 && k <= m)
        for (const auto& [t, mult] : levels[static_cast<size_t>(k)]) total += static_cast<long>(mult);
    return total;
}

SubsetProfile subset_profile(const SmallGraph& g) {
    if (g.n > kPatternVertexCap)
        throw std::invalid_argument("subset_profile: vertex count exceeds cap of " +
                                    std::to_string(kPatternVertexCap));
    SubsetProfile prof;
    prof.m = g.n;
    prof.levels.assign(static_cast<size_t>(g.n) + 1, {});
    auto rows = g.bitmask_rows();
    long long e2 = 2 * g.edge_count();
    for (std::uint64_t a = 0; a < (1ull << g.n); ++a) {
        // e_in and e_cross by popcounts over member rows; e_comp from the total
        int in2 = 0, cross = 0;
        std::uint64_t rest = a;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint64_t nb = rows[static_cast<size_t>(v)];
            in2 += std::popcount(nb & a);
            cross += std::popcount(nb & ~a);
        }
        SubsetStats s;
        s.e_in = in2 / 2;
        s.e_cross = cross;
        s.e_comp = static_cast<int>((e2 - in2) / 2) - cross;
        prof.levels[static_cast<size_t>(std::popcount(a))][s]++;
    }
    return prof;
}

StructureClass classify(const SmallGraph& g) {
    StructureClass out;
    out.component_list = g.components();
    if (g.edge_count() == 0) {
        out.kind = GraphClass::Empty;
        return out;
    }
    if (g.n == 2 && g.edge_count() == 1) {
        out.kind = GraphClass::SingleEdge;
        return out;
    }
    int nontrivial = 0;
    for (const auto& comp : out.component_list)
        if (comp.size() >= 2) ++nontrivial;
    if (nontrivial >= 2) {
        out.kind = GraphClass::DisconnectedNontrivial;
        return out;
    }
    if (g.n >= 3) {
        bool regular = true;
        for (int v = 1; v < g.n; ++v)
            if (g.degree(v) != g.degree(0)) regular = false;
        if (regular) {
            out.kind = GraphClass::Regular;
            out.regular_degree = g.degree(0);
            return out;
        }
        auto ds = g.degree_sequence();
        bool star = ds.back() == g.n - 1 && ds[0] == 1 &&
                    std::count(ds.begin(), ds.end(), 1) == g.n - 1;
        if (star) {
            out.kind = GraphClass::Star;
            return out;
        }
    }
    out.kind = GraphClass::General;
    return out;
}

const char* graph_class_name(GraphClass c) {
    switch (c) {
        case GraphClass::Empty: return "Empty";
        case GraphClass::SingleEdge: return "SingleEdge";
        case GraphClass::DisconnectedNontrivial: return "DisconnectedNontrivial";
        case GraphClass::Regular: return "Regular";
        case GraphClass::Star: return "Star";
        case GraphClass::General: return "General";
    }
    return "?";
}

SmallGraph path_graph(int m) {
    SmallGraph g(m);
    for (int i = 0; i + 1 < m; ++i) g.add_edge(i, i + 1);
    return g;
}

SmallGraph cycle_graph(int m) {
    if (m < 3) throw std::invalid_argument("cycle_graph: need m >= 3");
    SmallGraph g = path_graph(m);
    g.add_edge(m - 1, 0);
    return g;
}

SmallGraph complete_graph(int m) {
    SmallGraph g(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) g.add_edge(i, j);
    return g;
}

SmallGraph complete_bipartite(int a, int b) {
    SmallGraph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

SmallGraph star_graph(int leaves) { return complete_bipartite(1, leaves); }

SmallGraph disjoint_union(const SmallGraph& a, const SmallGraph& b) {
    SmallGraph g(a.n + b.n);
    for (int v = 0; v < a.n; ++v)
        for (int w : a.adj[static_cast<size_t>(v)])
            if (v < w) g.add_edge(v, w);
    for (int v = 0; v < b.n; ++v)
        for (int w : b.adj[static_cast<size_t>(v)])
            if (v < w) g.add_edge(a.n + v, a.n + w);
    return g;
}

SmallGraph empty_graph(int m) { return SmallGraph(m); }

}  // namespace qc
