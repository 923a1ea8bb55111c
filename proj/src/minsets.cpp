#include "multideg/minsets.hpp"

#include <algorithm>
#include <stdexcept>

namespace multideg {

namespace {

VertexSet complement_in(const Graph& g, VertexSet s) {
    return VertexSet(g.vertices().bits() & ~s.bits());
}

void sort_members(std::vector<MinSetMember>& members) {
    std::sort(members.begin(), members.end(), [](const MinSetMember& a, const MinSetMember& b) {
        if (a.set.size() != b.set.size()) return a.set.size() < b.set.size();
        return a.set < b.set;
    });
}

MinSetReport finish(const Graph& g, int h_min, std::vector<VertexSet> sets) {
    MinSetReport rep;
    rep.h_min = h_min;
    rep.height_min = g.order() + h_min;
    for (VertexSet s : sets) rep.members.push_back({s, component_size_multiset(g, s)});
    sort_members(rep.members);
    return rep;
}

}  // namespace

int prime_height(const Graph& g, VertexSet s) {
    if (!s.subset_of(g.vertices())) throw std::invalid_argument("prime_height: S not a vertex subset");
    return s.size() + g.order() - connected_components(g, complement_in(g, s)).count();
}

std::vector<int> component_size_multiset(const Graph& g, VertexSet s) {
    std::vector<int> sizes;
    for (VertexSet block : connected_components(g, complement_in(g, s)).blocks)
        sizes.push_back(block.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

MinSetReport min_sets(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("min_sets: graph must be connected (use the product rule per component)");
    int n = g.order();
    std::vector<int> candidates = VertexSet(g.vertices().bits() & ~simplicial_vertices(g).bits()).to_vector();
    int bound = (n - 1) / 2;

    int best = -1;  // h(empty set) for connected G
    std::vector<VertexSet> sets = {VertexSet()};

    // Subsets of the candidate list, by increasing size.
    std::vector<int> chosen;
    auto consider = [&](VertexSet s) {
        if (!is_separating_set(g, s)) return;
        int h = s.size() - connected_components(g, complement_in(g, s)).count();
        if (h < best) {
            best = h;
            sets.clear();
        }
        if (h == best) sets.push_back(s);
    };
    auto rec = [&](auto&& self, std::size_t from, VertexSet s, int size, int target) -> void {
        if (size == target) {
            consider(s);
            return;
        }
        for (std::size_t k = from; k < candidates.size(); ++k)
            self(self, k + 1, s.with(candidates[k]), size + 1, target);
    };
    for (int target = 1; target <= bound; ++target) rec(rec, 0, VertexSet(), 0, target);

    return finish(g, best, std::move(sets));
}

MinSetReport min_sets_bruteforce(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("min_sets_bruteforce: graph must be connected");
    int n = g.order();
    if (n > 20) throw std::invalid_argument("min_sets_bruteforce: n <= 20 guard exceeded");

    int best = 0;
    bool first = true;
    std::vector<VertexSet> sets;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        VertexSet s(mask);
        int h = s.size() - connected_components(g, complement_in(g, s)).count();
        if (first || h < best) {
            best = h;
            sets.clear();
            first = false;
        }
        if (h == best) sets.push_back(s);
    }
    return finish(g, best, std::move(sets));
}

}  // namespace multideg
