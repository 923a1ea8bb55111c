#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "multideg/graph.hpp"

using namespace multideg;

TEST_CASE("from_edge_list basics") {
    Graph k3 = from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.edge_count() == 3);
    CHECK(k3.has_edge(0, 2));

    Graph dup = from_edge_list(2, {{0, 1}, {1, 0}});
    CHECK(dup.edge_count() == 1);

    Graph single = from_edge_list(1, {});
    CHECK(single.order() == 1);
    CHECK(single.edge_count() == 0);

    CHECK_THROWS_AS(from_edge_list(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(from_edge_list(2, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("graph6 decode of hand-checked strings") {
    Graph k2 = parse_graph6("A_");
    CHECK(k2.order() == 2);
    CHECK(k2.has_edge(0, 1));

    // 'W' = 24 = 011000: bits (0,1)=0, (0,2)=1, (1,2)=1 -- a path 0-2-1.
    Graph p3 = parse_graph6("BW");
    CHECK(p3.order() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.has_edge(0, 2));
    CHECK(p3.has_edge(1, 2));
    CHECK_FALSE(p3.has_edge(0, 1));
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("B"), std::invalid_argument);    // missing body
    CHECK_THROWS_AS(parse_graph6("A_x"), std::invalid_argument);  // trailing bytes
    CHECK_THROWS_AS(parse_graph6("~??"), std::invalid_argument);  // long form
    // n=2 body with a nonzero padding bit: 63+16 = 'O'
    CHECK_THROWS_AS(parse_graph6("AO"), std::invalid_argument);
}

TEST_CASE("graph6 round-trip on every generated graph") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : generate_connected(n)) {
            std::string s = to_graph6(g);
            CHECK(to_graph6(parse_graph6(s)) == s);
        }
}

TEST_CASE("connected components") {
    Graph k3 = complete_graph(3);
    CHECK(connected_components(k3, k3.vertices()).count() == 1);

    Graph s6 = star_graph(6);
    auto parts = connected_components(s6, s6.vertices().without(0));
    CHECK(parts.count() == 5);
    for (VertexSet b : parts.blocks) CHECK(b.size() == 1);

    Graph p4 = path_graph(4);
    CHECK(connected_components(p4, p4.vertices().without(1)).count() == 2);

    CHECK(connected_components(p4, VertexSet()).count() == 0);
}

TEST_CASE("components partition the input set") {
    for (const Graph& g : generate_connected(5))
        for (std::uint64_t mask = 0; mask < 32; ++mask) {
            VertexSet within(mask);
            std::uint64_t covered = 0;
            for (VertexSet b : connected_components(g, within).blocks) {
                CHECK((covered & b.bits()) == 0);
                covered |= b.bits();
            }
            CHECK(covered == within.bits());
        }
}

TEST_CASE("cut vertex delta") {
    Graph s6 = star_graph(6);
    CHECK(cut_vertex_delta(s6, s6.vertices(), 0) == 4);

    Graph k3 = complete_graph(3);
    for (int v = 0; v < 3; ++v) CHECK(cut_vertex_delta(k3, k3.vertices(), v) == 0);

    Graph p3 = path_graph(3);
    CHECK(cut_vertex_delta(p3, p3.vertices(), 1) == 1);

    CHECK_THROWS_AS(cut_vertex_delta(p3, p3.vertices().without(1), 1), std::invalid_argument);
}

TEST_CASE("simplicial vertices") {
    CHECK(simplicial_vertices(star_graph(6)) == VertexSet::of({1, 2, 3, 4, 5}));

    // Barbell: everything except the two bridge endpoints.
    Graph b4 = barbell_graph(4);
    VertexSet s = simplicial_vertices(b4);
    CHECK(s.size() == 2 * 4 - 2);
    CHECK_FALSE(s.contains(0));
    CHECK_FALSE(s.contains(4));

    CHECK(simplicial_vertices(cycle_graph(5)).empty());
    CHECK(simplicial_vertices(complete_graph(4)) == VertexSet::full(4));
}

TEST_CASE("separating sets") {
    Graph c5 = cycle_graph(5);
    CHECK(is_separating_set(c5, VertexSet::of({0, 2})));
    CHECK_FALSE(is_separating_set(c5, VertexSet::of({0, 1})));

    Graph k4 = complete_graph(4);
    CHECK_FALSE(is_separating_set(k4, VertexSet::of({0})));
    CHECK_FALSE(is_separating_set(k4, VertexSet::of({0, 1, 2})));

    // Wheel: no separating set avoids the hub... except ones isolating it.
    Graph w6 = wheel_graph(6);
    CHECK_FALSE(is_separating_set(w6, VertexSet::of({1, 2})));
    CHECK(is_separating_set(w6, VertexSet::of({0, 1, 3})));

    // Agreement with the component count, exhaustively on small graphs.
    for (const Graph& g : generate_connected(5))
        for (std::uint64_t mask = 0; mask < 32; ++mask) {
            VertexSet s(mask);
            VertexSet rest(g.vertices().bits() & ~mask);
            CHECK(is_separating_set(g, s) == (connected_components(g, rest).count() >= 2));
        }
}

TEST_CASE("family constructors match the documented conventions") {
    Graph s6 = star_graph(6);
    CHECK(s6.order() == 6);
    CHECK(s6.edge_count() == 5);
    CHECK(s6.degree(0) == 5);

    Graph b5 = barbell_graph(5);
    CHECK(b5.order() == 10);
    CHECK(b5.edge_count() == 21);

    Graph h4 = horned_complete_graph(4);
    CHECK(h4.order() == 12);
    CHECK(h4.edge_count() == 14);

    Graph w6 = wheel_graph(6);
    CHECK(w6.order() == 6);
    CHECK(w6.edge_count() == 10);

    Graph f3 = friendship_graph(3);
    CHECK(f3.order() == 7);
    CHECK(f3.edge_count() == 9);

    Graph wm = windmill_graph(4, 3);
    CHECK(wm.order() == 10);
    CHECK(is_connected(wm));

    CHECK_THROWS_AS(wheel_graph(3), std::invalid_argument);
    CHECK_THROWS_AS(barbell_graph(2), std::invalid_argument);
    CHECK_THROWS_AS(windmill_graph(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(family_graph("moebius", {5}), std::invalid_argument);
}

TEST_CASE("canonical form is an isomorphism-class key") {
    Graph p3a = from_edge_list(3, {{0, 1}, {1, 2}});
    Graph p3b = from_edge_list(3, {{0, 2}, {2, 1}});
    CHECK(canonical_form(p3a) == canonical_form(p3b));
    CHECK(canonical_form(p3a) != canonical_form(complete_graph(3)));

    // All 5! relabelings of C_5 give one key.
    std::vector<int> perm(5);
    std::iota(perm.begin(), perm.end(), 0);
    Graph c5 = cycle_graph(5);
    std::string key = canonical_form(c5);
    do {
        Graph relabeled(5);
        for (auto [u, v] : c5.edges()) relabeled.add_edge(perm[u], perm[v]);
        CHECK(canonical_form(relabeled) == key);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("connected enumeration matches published counts") {
    const int expected[] = {0, 1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) CHECK(generate_connected(n).size() == expected[n]);
    CHECK_THROWS_AS(generate_connected(8), std::invalid_argument);
}
