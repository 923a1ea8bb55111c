#include "multideg/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace multideg {

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
}

Graph::Graph(int n) : n_(n), adj_(n, 0) {
    if (n < 0 || n > 64) throw std::invalid_argument("Graph: order must be in 0..64");
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("add_edge: vertex index out of range");
    if (u == v) throw std::invalid_argument("add_edge: self-loop rejected");
    adj_[u] |= 1ull << v;
    adj_[v] |= 1ull << u;
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

namespace {
constexpr int kG6Offset = 63;
}

Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw std::invalid_argument("graph6: empty line");
    unsigned char head = static_cast<unsigned char>(line[0]);
    if (head == 126) throw std::invalid_argument("graph6: long-form header (n > 62) unsupported");
    if (head < kG6Offset || head > kG6Offset + 62)
        throw std::invalid_argument("graph6: malformed length header");
    int n = head - kG6Offset;
    int nbits = n * (n - 1) / 2;
    std::size_t nbytes = (nbits + 5) / 6;
    if (line.size() != 1 + nbytes)
        throw std::invalid_argument("graph6: body length mismatch");
    Graph g(n);
    int bit = 0;
    for (std::size_t k = 0; k < nbytes; ++k) {
        unsigned char c = static_cast<unsigned char>(line[1 + k]);
        if (c < kG6Offset || c > 126) throw std::invalid_argument("graph6: byte out of range");
        int val = c - kG6Offset;
        for (int s = 5; s >= 0; --s, ++bit) {
            int on = val >> s & 1;
            if (bit >= nbits) {
                if (on) throw std::invalid_argument("graph6: nonzero padding bits");
                continue;
            }
            if (on) {
                // Bit order: columns j = 1..n-1, rows i = 0..j-1.
                int j = 1;
                while ((j + 1) * j / 2 <= bit) ++j;
                int i = bit - j * (j - 1) / 2;
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    int n = g.order();
    if (n > 62) throw std::invalid_argument("to_graph6: order > 62 unsupported");
    std::string out;
    out.push_back(static_cast<char>(kG6Offset + n));
    int nbits = n * (n - 1) / 2;
    int acc = 0, fill = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
            if (++fill == 6) {
                out.push_back(static_cast<char>(kG6Offset + acc));
                acc = fill = 0;
            }
        }
    }
    if (nbits % 6) out.push_back(static_cast<char>(kG6Offset + (acc << (6 - fill))));
    return out;
}

ComponentPartition connected_components(const Graph& g, VertexSet within) {
    ComponentPartition parts;
    std::uint64_t rest = within.bits();
    while (rest) {
        std::uint64_t comp = rest & -rest;  // seed vertex
        for (;;) {
            std::uint64_t grown = comp;
            for (std::uint64_t b = comp; b; b &= b - 1)
                grown |= g.neighbors(std::countr_zero(b)).bits() & rest;
            if (grown == comp) break;
            comp = grown;
        }
        parts.blocks.emplace_back(comp);
        rest &= ~comp;
    }
    return parts;
}

bool is_connected(const Graph& g) {
    return connected_components(g, g.vertices()).count() <= 1;
}

int cut_vertex_delta(const Graph& g, VertexSet within, int v) {
    if (!within.contains(v)) throw std::invalid_argument("cut_vertex_delta: v not in set");
    return connected_components(g, within.without(v)).count() -
           connected_components(g, within).count();
}

VertexSet simplicial_vertices(const Graph& g) {
    VertexSet out;
    for (int v = 0; v < g.order(); ++v) {
        std::uint64_t nb = g.neighbors(v).bits();
        bool clique = true;
        for (std::uint64_t b = nb; clique && b; b &= b - 1) {
            int u = std::countr_zero(b);
            clique = (nb & ~(1ull << u) & ~g.neighbors(u).bits()) == 0;
        }
        if (clique) out.add(v);
    }
    return out;
}

bool is_separating_set(const Graph& g, VertexSet s) {
    VertexSet rest(g.vertices().bits() & ~s.bits());
    return connected_components(g, rest).count() >= 2;
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: n >= 1 required");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n >= 3 required");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: n >= 1 required");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph star_graph(int n) {
    if (n < 1) throw std::invalid_argument("star_graph: n >= 1 required");
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

Graph wheel_graph(int n) {
    if (n < 4) throw std::invalid_argument("wheel_graph: n >= 4 required");
    Graph g(n);
    for (int v = 1; v < n; ++v) {
        g.add_edge(0, v);
        g.add_edge(v, v == n - 1 ? 1 : v + 1);
    }
    return g;
}

Graph barbell_graph(int n) {
    if (n < 3) throw std::invalid_argument("barbell_graph: n >= 3 required");
    Graph g(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            g.add_edge(i, j);
            g.add_edge(n + i, n + j);
        }
    g.add_edge(0, n);
    return g;
}

Graph horned_complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("horned_complete_graph: n >= 1 required");
    Graph g(3 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
        g.add_edge(i, n + 2 * i);
        g.add_edge(i, n + 2 * i + 1);
    }
    return g;
}

Graph friendship_graph(int n) {
    if (n < 1) throw std::invalid_argument("friendship_graph: n >= 1 required");
    return windmill_graph(3, n);
}

Graph windmill_graph(int n, int m) {
    if (n < 2 || m < 1) throw std::invalid_argument("windmill_graph: n >= 2, m >= 1 required");
    Graph g(m * (n - 1) + 1);
    for (int b = 0; b < m; ++b) {
        int base = 1 + b * (n - 1);
        for (int i = 0; i < n - 1; ++i) {
            g.add_edge(0, base + i);
            for (int j = i + 1; j < n - 1; ++j) g.add_edge(base + i, base + j);
        }
    }
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
    return g;
}

Graph family_graph(const std::string& name, const std::vector<int>& params) {
    auto one = [&]() {
        if (params.size() != 1)
            throw std::invalid_argument("family " + name + ": expected one parameter");
        return params[0];
    };
    if (name == "path") return path_graph(one());
    if (name == "cycle") return cycle_graph(one());
    if (name == "complete") return complete_graph(one());
    if (name == "star") return star_graph(one());
    if (name == "wheel") return wheel_graph(one());
    if (name == "barbell") return barbell_graph(one());
    if (name == "horned") return horned_complete_graph(one());
    if (name == "friendship") return friendship_graph(one());
    if (name == "windmill") {
        if (params.size() != 2)
            throw std::invalid_argument("family windmill: expected two parameters n,m");
        return windmill_graph(params[0], params[1]);
    }
    throw std::invalid_argument("unknown family: " + name);
}

namespace {

// Branch-and-bound search for the permutation giving the lexicographically
// minimal upper-triangle encoding. Column k holds the adjacency bits between
// position k and positions 0..k-1, row 0 most significant.
struct Canonicalizer {
    const Graph& g;
    int n;
    std::vector<std::uint32_t> best, cur;
    std::vector<int> perm;

    explicit Canonicalizer(const Graph& graph) : g(graph), n(graph.order()) {
        best.assign(n, 0);
        cur.assign(n, 0);
        perm.assign(n, 0);
        for (int j = 0; j < n; ++j) {
            std::uint32_t col = 0;
            for (int i = 0; i < j; ++i) col = col << 1 | (g.has_edge(i, j) ? 1 : 0);
            best[j] = col;
        }
        search(0, 0, false);
    }

    void search(int pos, std::uint64_t used, bool lower) {
        if (pos == n) {
            // `lower` may be stale once best shrinks mid-search; compare fully.
            if (lower && cur < best) best = cur;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used >> v & 1) continue;
            std::uint32_t col = 0;
            for (int i = 0; i < pos; ++i) col = col << 1 | (g.has_edge(perm[i], v) ? 1 : 0);
            if (!lower && col > best[pos]) continue;
            cur[pos] = col;
            perm[pos] = v;
            search(pos + 1, used | 1ull << v, lower || col < best[pos]);
        }
    }

    Graph result() const {
        Graph c(n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (best[j] >> (j - 1 - i) & 1) c.add_edge(i, j);
        return c;
    }
};

}  // namespace

std::string canonical_form(const Graph& g) {
    if (g.order() > 12)
        throw std::invalid_argument("canonical_form: brute-force canonicalization capped at n = 12");
    return to_graph6(Canonicalizer(g).result());
}

std::vector<std::string> all_graph_classes_g6(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("all_graph_classes_g6: 1 <= n <= 8 required");
    std::vector<std::string> level = {to_graph6(Graph(1))};
    for (int k = 2; k <= n; ++k) {
        std::unordered_set<std::string> seen;
        for (const std::string& key : level) {
            Graph parent = parse_graph6(key);
            // New vertex k-1 attached to every subset of the parent.
            for (std::uint64_t mask = 0; mask < (1ull << (k - 1)); ++mask) {
                Graph g(k);
                for (auto [u, v] : parent.edges()) g.add_edge(u, v);
                for (std::uint64_t b = mask; b; b &= b - 1) g.add_edge(std::countr_zero(b), k - 1);
                seen.insert(canonical_form(g));
            }
        }
        level.assign(seen.begin(), seen.end());
    }
    std::sort(level.begin(), level.end());
    return level;
}

std::vector<std::string> connected_classes_g6(int n) {
    std::vector<std::string> out;
    for (const std::string& key : all_graph_classes_g6(n))
        if (is_connected(parse_graph6(key))) out.push_back(key);
    return out;
}

std::vector<Graph> generate_connected(int n) {
    if (n < 1 || n > 7)
        throw std::invalid_argument(
            "generate_connected: built-in enumeration covers n <= 7; supply a graph6 file for larger orders");
    std::vector<Graph> out;
    for (const std::string& key : connected_classes_g6(n)) out.push_back(parse_graph6(key));
    return out;
}

}  // namespace multideg
