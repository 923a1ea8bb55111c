#ifndef MULTIDEG_MINSETS_HPP
#define MULTIDEG_MINSETS_HPP

#include <vector>

#include "multideg/graph.hpp"

namespace multideg {

/// One member S of M(G) together with L(S;G), the multiset of component
/// sizes of G[V \ S], sorted ascending.
struct MinSetMember {
    VertexSet set;
    std::vector<int> component_sizes;
};

/// h_min = min over S of |S| - c(V \ S); the minimal primes of J_G have
/// height n + h_min and are indexed by the members listed here.
struct MinSetReport {
    int h_min = 0;
    int height_min = 0;
    std::vector<MinSetMember> members;  // sorted by (|S|, bitmask)
};

/// height(P_S(G)) = |S| + n - c(V \ S).
int prime_height(const Graph& g, VertexSet s);

/// Component sizes of G[V \ S], sorted ascending.
std::vector<int> component_size_multiset(const Graph& g, VertexSet s);

/// M(G) for connected G. Candidates are restricted to subsets of
/// non-simplicial vertices with |S| <= floor((n-1)/2) that separate the
/// graph; the empty set is always evaluated.
MinSetReport min_sets(const Graph& g);

/// Verification oracle: full power-set scan using only the height formula.
/// Connected G, n <= 20.
MinSetReport min_sets_bruteforce(const Graph& g);

}  // namespace multideg

#endif
