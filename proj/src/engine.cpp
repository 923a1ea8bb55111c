#include "multideg/engine.hpp"

#include <stdexcept>

namespace multideg {

namespace {

// Induced subgraph on `block`, vertices relabeled 0..|block|-1.
Graph induced(const Graph& g, VertexSet block) {
    std::vector<int> verts = block.to_vector();
    std::vector<int> pos(g.order(), -1);
    for (std::size_t k = 0; k < verts.size(); ++k) pos[verts[k]] = static_cast<int>(k);
    Graph sub(static_cast<int>(verts.size()));
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (g.has_edge(verts[a], verts[b])) sub.add_edge(static_cast<int>(a), static_cast<int>(b));
    return sub;
}

BiPoly member_term(const MinSetMember& m) {
    BiPoly t = BiPoly::term(m.set.size(), m.set.size(), 1);
    for (int size : m.component_sizes) t = t * h_poly(size);
    return t;
}

}  // namespace

MultidegreeResult multidegree(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("multidegree: empty graph rejected");
    MultidegreeResult res;
    res.poly = BiPoly::constant(1);
    res.codim = 0;
    res.witness_count = 1;
    for (VertexSet block : connected_components(g, g.vertices()).blocks) {
        MinSetReport rep = min_sets(induced(g, block));
        BiPoly part;
        for (const MinSetMember& m : rep.members) part += member_term(m);
        res.poly = res.poly * part;
        res.codim += rep.height_min;
        res.witness_count *= static_cast<int>(rep.members.size());
    }
    res.h_min = res.codim - g.order();
    return res;
}

namespace {

BiPoly path_md(int n) {
    if (n < 1) throw std::invalid_argument("path_md: n >= 1 required");
    return (BiPoly::t1() + BiPoly::t2()).pow(n - 1);
}

BiPoly barbell_md(int n) {
    if (n < 3) throw std::invalid_argument("barbell_md: n >= 3 required");
    BiPoly p;
    for (int i = 0; i <= 2 * n - 1; ++i) {
        int j = 2 * n - 1 - i;
        p.add_term(i, j, 1 + 2 * std::min(i, j));
    }
    return p;
}

BiPoly horned_md(int n) {
    if (n < 1) throw std::invalid_argument("horned_md: n >= 1 required");
    BiPoly p;
    p.add_term(n + 1, n - 1, n);
    p.add_term(n, n, n + 1);
    p.add_term(n - 1, n + 1, n);
    return p;
}

// M(W_{n,m}) is {{hub}} only when the hub cuts into m >= 3 blades; m = 2
// ties with the empty set and m = 1 degenerates to K_n.
BiPoly windmill_md(int n, int m) {
    if (n < 2 || m < 1) throw std::invalid_argument("windmill_md: n >= 2, m >= 1 required");
    if (m == 1) return h_poly(n);
    BiPoly hub_term = BiPoly::term(1, 1, 1) * h_poly(n - 1).pow(m);
    if (m == 2) return h_poly(m * (n - 1) + 1) + hub_term;
    return hub_term;
}

}  // namespace

BiPoly family_multidegree(const std::string& name, const std::vector<int>& params) {
    auto one = [&]() {
        if (params.size() != 1)
            throw std::invalid_argument("family " + name + ": expected one parameter");
        return params[0];
    };
    if (name == "path") return path_md(one());
    if (name == "cycle") {
        int n = one();
        if (n < 3) throw std::invalid_argument("cycle_md: n >= 3 required");
        return h_poly(n);
    }
    if (name == "wheel") {
        int n = one();
        if (n < 4) throw std::invalid_argument("wheel_md: n >= 4 required");
        return h_poly(n);
    }
    if (name == "complete") return h_poly(one());
    if (name == "star") {
        int n = one();
        if (n < 1) throw std::invalid_argument("star_md: n >= 1 required");
        return n <= 3 ? path_md(n) : BiPoly::term(1, 1, 1);
    }
    if (name == "barbell") return barbell_md(one());
    if (name == "horned") return horned_md(one());
    if (name == "friendship") return windmill_md(3, one());
    if (name == "windmill") {
        if (params.size() != 2)
            throw std::invalid_argument("family windmill: expected two parameters n,m");
        return windmill_md(params[0], params[1]);
    }
    throw std::invalid_argument("unknown family: " + name);
}

Int multiplicity(const Graph& g) { return multidegree(g).poly.eval(1, 1); }

}  // namespace multideg
