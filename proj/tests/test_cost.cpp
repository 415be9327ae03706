#include <doctest.h>

#include <stdexcept>

#include <vector>

#include "ramsey/cost.hpp"
#include "ramsey/rng.hpp"

using namespace ramsey;

namespace {

// brute-force counting oracle working on the adjacency matrix: walk every
// vertex subset recursively and test all pairs directly
int64_t brute_count(const GraphBits& g, int order, bool cliques) {
    const auto adj = adjacency_from_bits(g);
    const int n = g.n_vertices();
    if (order > n) return 0;
    std::vector<int> chosen;
    int64_t count = 0;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(chosen.size()) == order) {
            for (size_t i = 0; i < chosen.size(); ++i)
                for (size_t j = 0; j < i; ++j) {
                    const int a = adj[chosen[i]][chosen[j]];
                    if (cliques ? a == 0 : a == 1) return;
                }
            ++count;
            return;
        }
        for (int v = next; v < n; ++v) {
            chosen.push_back(v);
            self(self, v + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return count;
}

GraphBits five_cycle() {
    GraphBits g(5);
    g.set_edge(2, 1, true);
    g.set_edge(3, 2, true);
    g.set_edge(4, 3, true);
    g.set_edge(5, 4, true);
    g.set_edge(5, 1, true);
    return g;
}

GraphBits complete(int n) {
    return GraphBits(n, 0).complement();
}

}  // namespace

TEST_SUITE("cost") {

TEST_CASE("clique counts") {
    CHECK(count_cliques(complete(4), 3) == 4);
    CHECK(count_cliques(GraphBits(5, 0), 2) == 0);
    CHECK(brute_count(five_cycle(), 3, true) == 0);
    CHECK(count_cliques(five_cycle(), 3) == 0);
    CHECK_THROWS_AS(count_cliques(complete(4), 1), std::invalid_argument);
    // no m-clique fits when m exceeds N
    CHECK(count_cliques(complete(4), 5) == 0);
}

TEST_CASE("independent-set counts") {
    CHECK(count_independent(GraphBits(4, 0), 3) == 4);
    CHECK(count_independent(complete(4), 2) == 0);
    CHECK(brute_count(five_cycle(), 3, false) == 0);
    CHECK(count_independent(five_cycle(), 3) == 0);
}

TEST_CASE("counts agree with the brute-force oracle") {
    CounterRng rng(11, 0);
    for (int n = 4; n <= 7; ++n)
        for (int rep = 0; rep < 40; ++rep) {
            GraphBits g(n);
            for (int i = 0; i < g.n_bits(); ++i) g.set(i, rng.coin());
            for (int k = 2; k <= n; ++k) {
                CHECK(count_cliques(g, k) == brute_count(g, k, true));
                CHECK(count_independent(g, k) == brute_count(g, k, false));
            }
        }
}

TEST_CASE("count_independent equals count_cliques of the complement") {
    for (uint64_t x = 0; x < (uint64_t{1} << 10); ++x) {
        const GraphBits g(5, x);
        for (int k = 2; k <= 5; ++k)
            CHECK(count_independent(g, k) == count_cliques(g.complement(), k));
    }
    CounterRng rng(12, 0);
    for (int rep = 0; rep < 50; ++rep) {
        GraphBits g(8);
        for (int i = 0; i < g.n_bits(); ++i) g.set(i, rng.coin());
        for (int k = 2; k <= 8; ++k)
            CHECK(count_independent(g, k) == count_cliques(g.complement(), k));
    }
}

TEST_CASE("ramsey_energy on the witness cases") {
    CHECK(ramsey_energy(five_cycle(), {5, 3, 3}) == 0);  // R(3,3) > 5
    CHECK(ramsey_energy(complete(7), {7, 8, 2}) == 0);   // K_7 has no 8-clique nor 2-ind set
    // every 6-vertex graph has at least two monochromatic triangles
    for (uint64_t x = 0; x < (uint64_t{1} << 15); ++x)
        CHECK(ramsey_energy(GraphBits(6, x), {6, 3, 3}) >= 2);
}

TEST_CASE("complement symmetry h_{m,n}(a) == h_{n,m}(complement a)") {
    CounterRng rng(13, 0);
    for (uint64_t x = 0; x < (uint64_t{1} << 10); ++x)
        CHECK(complement_symmetry_check(GraphBits(5, x), {5, 3, 3}));
    for (int rep = 0; rep < 100; ++rep) {
        GraphBits g(7);
        for (int i = 0; i < g.n_bits(); ++i) g.set(i, rng.coin());
        CHECK(complement_symmetry_check(g, {7, 4, 2}));
        CHECK(ramsey_energy(g, {7, 4, 2}) == ramsey_energy(g.complement(), {7, 2, 4}));
    }
    for (int rep = 0; rep < 50; ++rep) {
        GraphBits g(6);
        for (int i = 0; i < g.n_bits(); ++i) g.set(i, rng.coin());
        CHECK(complement_symmetry_check(g, {6, 3, 3}));
    }
}

TEST_CASE("adding an edge never removes cliques nor adds independent sets") {
    CounterRng rng(14, 0);
    for (int rep = 0; rep < 60; ++rep) {
        GraphBits g(6);
        for (int i = 0; i < g.n_bits(); ++i) g.set(i, rng.coin());
        int missing = -1;
        for (int i = 0; i < g.n_bits(); ++i)
            if (!g.test(i)) {
                missing = i;
                break;
            }
        if (missing < 0) continue;
        GraphBits h = g;
        h.set(missing, true);
        for (int k = 2; k <= 6; ++k) {
            CHECK(count_cliques(h, k) >= count_cliques(g, k));
            CHECK(count_independent(h, k) <= count_independent(g, k));
        }
    }
}

TEST_CASE("evaluator fast path agrees with the generic path") {
    for (int n = 4; n <= 5; ++n)
        for (int m = 2; m <= 8; ++m) {
            const RamseyEvaluator eval({n, m, 2});
            CHECK(eval.fast_path());
            for (uint64_t x = 0; x < (uint64_t{1} << pair_count(n)); ++x)
                CHECK(eval.energy(x) == eval.energy_generic(x));
        }
    CounterRng rng(15, 0);
    for (int n = 6; n <= 8; ++n) {
        const RamseyEvaluator fast({n, 8, 2});
        const RamseyEvaluator generic({n, 3, 3});
        CHECK(!generic.fast_path());
        for (int rep = 0; rep < 200; ++rep) {
            const uint64_t x = rng.next_u64() & ((uint64_t{1} << pair_count(n)) - 1);
            CHECK(fast.energy(x) == fast.energy_generic(x));
            CHECK(generic.energy(x) == generic.energy_generic(x));
        }
    }
}

TEST_CASE("instance validation") {
    CHECK_THROWS_AS(RamseyInstance({1, 3, 3}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(RamseyInstance({5, 1, 3}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(RamseyInstance({5, 3, 1}).validate(), std::invalid_argument);
    CHECK_NOTHROW(RamseyInstance({5, 3, 3}).validate());
}

}  // TEST_SUITE
