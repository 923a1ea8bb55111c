#ifndef MULTIDEG_GRAPH_HPP
#define MULTIDEG_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace multideg {

/// Subset of vertices of a graph, as a bitmask. Graphs are capped at 64
/// vertices, which comfortably covers every family and census order here.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~0ull : (1ull << n) - 1);
    }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    void add(int v) { bits_ |= 1ull << v; }
    void remove(int v) { bits_ &= ~(1ull << v); }
    bool contains(int v) const { return bits_ >> v & 1; }
    bool empty() const { return bits_ == 0; }
    int size() const { return std::popcount(bits_); }
    std::uint64_t bits() const { return bits_; }
    bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

    VertexSet with(int v) const { VertexSet s = *this; s.add(v); return s; }
    VertexSet without(int v) const { VertexSet s = *this; s.remove(v); return s; }
    VertexSet intersect(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    VertexSet unite(VertexSet o) const { return VertexSet(bits_ | o.bits_); }

    std::vector<int> to_vector() const;

    friend bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
    friend bool operator<(VertexSet a, VertexSet b) { return a.bits_ < b.bits_; }

private:
    std::uint64_t bits_ = 0;
};

/// Simple undirected graph on vertices 0..n-1, adjacency as per-vertex
/// neighbor bitmasks. No self-loops; edges are symmetric by construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    VertexSet vertices() const { return VertexSet::full(n_); }
    VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
    int degree(int v) const { return std::popcount(adj_[v]); }
    bool has_edge(int u, int v) const { return adj_[u] >> v & 1; }
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    void add_edge(int u, int v);

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

struct ComponentPartition {
    std::vector<VertexSet> blocks;
    int count() const { return static_cast<int>(blocks.size()); }
};

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

/// graph6 I/O, short form only (n <= 62): header byte 63+n, upper-triangle
/// column-major bits packed 6 per byte offset by 63, zero padding.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

/// Maximal connected blocks of the induced subgraph G[within].
ComponentPartition connected_components(const Graph& g, VertexSet within);

bool is_connected(const Graph& g);

/// c(within - v) - c(within): 0 means v is not a cut vertex of G[within],
/// 1 means it splits one block in two, >= 2 splits into three or more.
int cut_vertex_delta(const Graph& g, VertexSet within, int v);

/// Vertices whose open neighborhood is a clique (includes leaves and
/// isolated vertices).
VertexSet simplicial_vertices(const Graph& g);

/// True iff removing S disconnects the (connected) graph.
bool is_separating_set(const Graph& g, VertexSet s);

// Family constructors. Vertex conventions: star/wheel/friendship/windmill
// hub is vertex 0; barbell bridge joins vertices 0 and n.
Graph path_graph(int n);            // n >= 1
Graph cycle_graph(int n);           // n >= 3
Graph complete_graph(int n);        // n >= 1
Graph star_graph(int n);            // n >= 1, order n (hub + n-1 leaves)
Graph wheel_graph(int n);           // n >= 4, order n (hub + cycle on n-1)
Graph barbell_graph(int n);         // n >= 3, order 2n (two K_n + bridge)
Graph horned_complete_graph(int n); // n >= 1, order 3n (K_n, 2 leaves each)
Graph friendship_graph(int n);      // n >= 1, order 2n+1 (n triangles at hub)
Graph windmill_graph(int n, int m); // n >= 2, m >= 1, order m(n-1)+1
Graph disjoint_union(const Graph& a, const Graph& b);

/// Dispatch by family name (path, cycle, complete, star, wheel, barbell,
/// horned, friendship, windmill).
Graph family_graph(const std::string& name, const std::vector<int>& params);

/// Isomorphism-class key: graph6 string of the lexicographically minimal
/// adjacency encoding over all vertex relabelings (branch-and-bound).
std::string canonical_form(const Graph& g);

/// All isomorphism classes of simple graphs on n vertices, as sorted
/// canonical graph6 strings. Built by vertex extension + canonical dedup.
std::vector<std::string> all_graph_classes_g6(int n);  // n <= 8

/// Connected classes only, sorted canonical graph6 strings. n <= 8; the
/// CLI-facing generate_connected keeps the documented n <= 7 limit.
std::vector<std::string> connected_classes_g6(int n);

/// One representative per isomorphism class of connected graphs, n <= 7.
std::vector<Graph> generate_connected(int n);

}  // namespace multideg

#endif
