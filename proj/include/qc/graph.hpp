#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qc/rational.hpp"

namespace qc {

// Simple undirected graph.  Pattern graphs stay small (vertex masks fit in 64
// bits); host graphs use the sorted adjacency lists directly.
struct SmallGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;  // sorted neighbor lists, no loops

    SmallGraph() = default;
    explicit SmallGraph(int vertices);

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj[static_cast<size_t>(v)].size()); }
    long long edge_count() const;
    std::vector<int> degree_sequence() const;  // sorted ascending

    // neighbor bit-masks; requires n <= 64
    std::vector<std::uint64_t> bitmask_rows() const;

    // connected components as vertex lists
    std::vector<std::vector<int>> components() const;

    bool operator==(const SmallGraph& o) const { return n == o.n && adj == o.adj; }
};

class parse_error : public std::runtime_error {
  public:
    parse_error(const std::string& what, size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
    size_t offset() const { return offset_; }

  private:
    size_t offset_;
};

// graph6 short form, n <= 62
SmallGraph parse_graph6(const std::string& text);
std::string encode_graph6(const SmallGraph& g);

// Edge list: lines "u v" with 1-based labels.  The first line is a header
// "n m" when its second number matches the count of remaining nonempty lines
// and all labels fit in [1, n]; otherwise it is an edge.
SmallGraph parse_edge_list(const std::string& text);

// Restriction to the vertices of positive degree, relabeled contiguously
// preserving order.
SmallGraph strip_isolated(const SmallGraph& g);

// (edges inside A, edges inside the complement, edges across)
struct SubsetStats {
    int e_in = 0, e_comp = 0, e_cross = 0;
    bool operator==(const SubsetStats&) const = default;
    auto operator<=>(const SubsetStats&) const = default;
};
SubsetStats subset_stats(const SmallGraph& g, std::uint64_t subset_mask);

inline constexpr int kPatternVertexCap = 20;

// For each k = 0..m, the multiset of exponent triples over all subsets of
// size k, stored as triple -> multiplicity.
struct SubsetProfile {
    int m = 0;
    std::vector<std::map<SubsetStats, long long>> levels;

    Int level_size(int k) const;
};
SubsetProfile subset_profile(const SmallGraph& g);

enum class GraphClass {
    Empty,
    SingleEdge,
    DisconnectedNontrivial,
    Regular,
    Star,
    General,
};

struct StructureClass {
    GraphClass kind = GraphClass::Empty;
    int regular_degree = 0;  // set for Regular
    std::vector<std::vector<int>> component_list;
};

// Deterministic classification; expects a graph already passed through
// strip_isolated.  Priority: Empty, SingleEdge, DisconnectedNontrivial
// (>= 2 components with >= 2 vertices), Regular (m >= 3), Star (m >= 3),
// General.
StructureClass classify(const SmallGraph& g);

const char* graph_class_name(GraphClass c);

// ---- small constructions used all over tests and the CLI ----

SmallGraph path_graph(int m);
SmallGraph cycle_graph(int m);
SmallGraph complete_graph(int m);
SmallGraph complete_bipartite(int a, int b);
SmallGraph star_graph(int leaves);  // K_{1,leaves}
SmallGraph disjoint_union(const SmallGraph& a, const SmallGraph& b);
SmallGraph empty_graph(int m);

}  // namespace qc
