#include <doctest.h>

#include <stdexcept>

#include <set>
#include <vector>

#include "ramsey/graph_bits.hpp"
#include "ramsey/rng.hpp"

using namespace ramsey;

namespace {

// independent ordering oracle: list the pairs column by column as the
// string is defined, then look the query up
int edge_index_by_enumeration(int v, int vp, int n) {
    std::vector<std::pair<int, int>> order;
    for (int c = 1; c < n; ++c)
        for (int r = c + 1; r <= n; ++r) order.push_back({r, c});
    for (size_t i = 0; i < order.size(); ++i)
        if (order[i] == std::make_pair(v, vp)) return static_cast<int>(i);
    return -1;
}

GraphBits random_graph(int n, CounterRng& rng) {
    GraphBits g(n);
    for (int i = 0; i < g.n_bits(); ++i) g.set(i, rng.coin());
    return g;
}

}  // namespace

TEST_SUITE("graph-core") {

TEST_CASE("edge_index matches the column-wise order") {
    CHECK(edge_index(2, 1, 4) == 0);
    // order for N=4: (2,1),(3,1),(4,1),(3,2),(4,2),(4,3)
    CHECK(edge_index(4, 3, 4) == 5);
    CHECK(edge_index(3, 2, 5) == edge_index_by_enumeration(3, 2, 5));
    CHECK(edge_index(3, 2, 5) == 4);
}

TEST_CASE("edge_index is a bijection for N <= 8") {
    for (int n = 2; n <= 8; ++n) {
        std::set<int> seen;
        for (int v = 2; v <= n; ++v)
            for (int vp = 1; vp < v; ++vp) {
                const int idx = edge_index(v, vp, n);
                CHECK(idx == edge_index_by_enumeration(v, vp, n));
                CHECK(idx >= 0);
                CHECK(idx < pair_count(n));
                seen.insert(idx);
            }
        CHECK(static_cast<int>(seen.size()) == pair_count(n));
    }
}

TEST_CASE("edge_index rejects bad vertices") {
    CHECK_THROWS_AS(edge_index(1, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(edge_index(2, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(edge_index(5, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(edge_index(2, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(edge_index(2, 1, 24), std::invalid_argument);
}

TEST_CASE("adjacency codec on the stated examples") {
    CHECK(bits_from_adjacency({{0, 1}, {1, 0}}).bit_string() == "1");
    CHECK(bits_from_adjacency(std::vector<std::vector<int>>(4, std::vector<int>(4, 0)))
              .bit_string() == "000000");
    std::vector<std::vector<int>> complete(4, std::vector<int>(4, 1));
    for (int i = 0; i < 4; ++i) complete[i][i] = 0;
    CHECK(bits_from_adjacency(complete).bit_string() == "111111");

    const auto m = adjacency_from_bits(GraphBits(2, 1));
    CHECK(m == std::vector<std::vector<int>>{{0, 1}, {1, 0}});

    const GraphBits g = graph_from_bit_string(4, "100000");
    const auto adj = adjacency_from_bits(g);
    CHECK(adj[1][0] == 1);
    int edges = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < i; ++j) edges += adj[i][j];
    CHECK(edges == 1);
}

TEST_CASE("adjacency codec rejects malformed matrices") {
    CHECK_THROWS_AS(bits_from_adjacency({{0, 1}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(bits_from_adjacency({{1, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(bits_from_adjacency({{0, 2}, {2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_bit_string(4, "10"), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_bit_string(4, "10000x"), std::invalid_argument);
}

TEST_CASE("codec roundtrip is the identity") {
    // exhaustive for N <= 5
    for (int n = 2; n <= 5; ++n)
        for (uint64_t x = 0; x < (uint64_t{1} << pair_count(n)); ++x) {
            const GraphBits g(n, x);
            CHECK(bits_from_adjacency(adjacency_from_bits(g)) == g);
        }
    // random graphs up to N = 8
    CounterRng rng(2024, 0);
    for (int n = 6; n <= 8; ++n)
        for (int rep = 0; rep < 200; ++rep) {
            const GraphBits g = random_graph(n, rng);
            CHECK(bits_from_adjacency(adjacency_from_bits(g)) == g);
        }
}

TEST_CASE("complement flips every bit and is an involution") {
    CHECK(GraphBits(4, 0).complement().bit_string() == "111111");

    CounterRng rng(7, 0);
    for (int rep = 0; rep < 100; ++rep) {
        const GraphBits g = random_graph(8, rng);
        CHECK(g.complement().complement() == g);
        for (int i = 0; i < g.n_bits(); ++i) CHECK(g.complement().test(i) == !g.test(i));
    }

    // 5-cycle: complement has the other 5 edges
    GraphBits cycle(5);
    cycle.set_edge(2, 1, true);
    cycle.set_edge(3, 2, true);
    cycle.set_edge(4, 3, true);
    cycle.set_edge(5, 4, true);
    cycle.set_edge(5, 1, true);
    const GraphBits co = cycle.complement();
    CHECK(co.popcount() == 5);
    for (int i = 0; i < 10; ++i) CHECK(co.test(i) == !cycle.test(i));
}

TEST_CASE("vertex counts outside [2,23] are rejected") {
    CHECK_THROWS_AS(GraphBits(1), std::invalid_argument);
    CHECK_THROWS_AS(GraphBits(24), std::invalid_argument);
    CHECK_NOTHROW(GraphBits(23));
}

}  // TEST_SUITE
