#include <doctest.h>

#include <stdexcept>

#include <set>
#include <vector>

#include "ramsey/cost.hpp"
#include "ramsey/oracle.hpp"
#include "ramsey/quadratize.hpp"
#include "ramsey/rng.hpp"

using namespace ramsey;

namespace {

std::vector<int8_t> binary_assignment(uint32_t x, int n) {
    return unpack_assignment(x, n, VarDomain::Binary);
}

// minimum model energy over the ancilla block for a fixed computational part
Rational min_over_ancillas(const QuadraticModel& m, uint32_t a_bits, int n_comp) {
    const int n_anc = m.num_vars() - n_comp;
    Rational best;
    bool first = true;
    for (uint32_t b = 0; b < (uint32_t{1} << n_anc); ++b) {
        const uint32_t x = a_bits | (b << n_comp);
        const Rational e = m.energy(binary_assignment(x, m.num_vars()));
        if (first || e < best) {
            best = e;
            first = false;
        }
    }
    return best;
}

// chain values forced by the constraints b_{L-1} = a_{L-1} a_L, b_j = a_j b_{j+1}
uint32_t consistent_ancillas(uint32_t a_bits, int L) {
    std::vector<int> b(L, 0);  // b[j] for j in [2, L-1]
    auto a = [a_bits](int i) { return (a_bits >> (i - 1)) & 1u; };
    b[L - 1] = a(L - 1) & a(L);
    for (int j = L - 2; j >= 2; --j) b[j] = a(j) & b[j + 1];
    uint32_t packed = 0;
    for (int j = 2; j <= L - 1; ++j) packed |= static_cast<uint32_t>(b[j]) << (j - 2);
    return packed;
}

}  // namespace

TEST_SUITE("qubo") {

TEST_CASE("AND penalty truth table") {
    const QuadraticModel p = penalty_and(0, 1, 2, 3);
    int zero_rows = 0;
    for (uint32_t x = 0; x < 8; ++x) {
        const auto assn = binary_assignment(x, 3);
        const int a1 = assn[0], a2 = assn[1], b = assn[2];
        const Rational e = p.energy(assn);
        if (b == a1 * a2) {
            CHECK(e == Rational(0));
            ++zero_rows;
        } else {
            CHECK((e == Rational(1) || e == Rational(3)));
        }
    }
    CHECK(zero_rows == 4);
    CHECK(p.energy(binary_assignment(0b111, 3)) == Rational(0));
    CHECK(p.energy(binary_assignment(0b100, 3)) == Rational(3));
    CHECK_THROWS_AS(penalty_and(0, 0, 2, 3), std::invalid_argument);
}

TEST_CASE("R(m,2) model shapes and spot energies") {
    const QuadraticModel m8 = build_rm2_model(8);
    CHECK(m8.num_vars() == 54);  // 28 computational + 26 ancillas
    CHECK(m8.labels[0] == "a1");
    CHECK(m8.labels[28] == "b2");
    CHECK(m8.labels[53] == "b27");

    const QuadraticModel m4 = build_rm2_model(4);
    CHECK(m4.num_vars() == 10);
    const uint32_t all_ones_a = (1u << 6) - 1;
    const uint32_t b = consistent_ancillas(all_ones_a, 6);
    const Rational e = m4.energy(binary_assignment(all_ones_a | (b << 6), 10));
    CHECK(e == Rational(1));  // one 4-clique, no missing edge, penalties zero

    CHECK_THROWS_AS(build_rm2_model(2), std::invalid_argument);
    CHECK_THROWS_AS(build_rm2_model(9), std::invalid_argument);
    CHECK_THROWS_AS(build_rm2_model(4, PenaltyConfig{Rational(1, 2)}), std::invalid_argument);
}

TEST_CASE("quadratization is exact for m = 4 over every assignment") {
    for (const Rational mu : {Rational(2), Rational(1)}) {
        const QuadraticModel m = build_rm2_model(4, PenaltyConfig{mu});
        for (uint32_t a_bits = 0; a_bits < (1u << 6); ++a_bits) {
            const int64_t truth = ramsey_energy(GraphBits(4, a_bits), {4, 4, 2});
            CHECK(min_over_ancillas(m, a_bits, 6) == Rational(truth));
        }
    }
    // at mu = 2 every minimising ancilla block satisfies the chain constraints
    const QuadraticModel m = build_rm2_model(4);
    for (uint32_t a_bits = 0; a_bits < (1u << 6); ++a_bits) {
        const Rational best = min_over_ancillas(m, a_bits, 6);
        for (uint32_t b = 0; b < (1u << 4); ++b) {
            const Rational e = m.energy(binary_assignment(a_bits | (b << 6), 10));
            if (e == best) CHECK(b == consistent_ancillas(a_bits, 6));
        }
    }
}

TEST_CASE("violating ancillas never undercut the consistent block (mu >= 1)") {
    const QuadraticModel m = build_rm2_model(4, PenaltyConfig{Rational(1)});
    for (uint32_t a_bits = 0; a_bits < (1u << 6); ++a_bits) {
        const uint32_t good = consistent_ancillas(a_bits, 6);
        const Rational e_good = m.energy(binary_assignment(a_bits | (good << 6), 10));
        for (uint32_t b = 0; b < (1u << 4); ++b)
            CHECK(m.energy(binary_assignment(a_bits | (b << 6), 10)) >= e_good);
    }
}

TEST_CASE("subcritical R(m,2) models are linear with a unique optimum") {
    const QuadraticModel m87 = build_rm2_subcritical_model(8, 7);
    CHECK(m87.num_vars() == 21);
    CHECK(m87.quadratic_terms().empty());
    const ModelGround g87 = exhaustive_model_ground(m87);
    CHECK(g87.min_energy == Rational(0));
    CHECK(g87.degeneracy == 1);
    CHECK(g87.minimizers == std::vector<uint32_t>{(1u << 21) - 1});

    const ModelGround g43 = exhaustive_model_ground(build_rm2_subcritical_model(4, 3));
    CHECK(g43.min_energy == Rational(0));
    CHECK(g43.degeneracy == 1);

    const QuadraticModel m54 = build_rm2_subcritical_model(5, 4);
    CHECK(m54.energy(binary_assignment(0, 6)) == Rational(6));

    CHECK_THROWS_AS(build_rm2_subcritical_model(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(build_rm2_subcritical_model(4, 5), std::invalid_argument);
}

TEST_CASE("triangle triples reproduce the published cost-function lists") {
    using T = std::array<int, 3>;
    CHECK(triangle_edge_triples(4) ==
          std::vector<T>{{1, 2, 4}, {1, 3, 5}, {2, 3, 6}, {4, 5, 6}});
    CHECK(triangle_edge_triples(5) ==
          std::vector<T>{{1, 2, 5},
                         {1, 3, 6},
                         {1, 4, 7},
                         {2, 3, 8},
                         {2, 4, 9},
                         {3, 4, 10},
                         {5, 6, 8},
                         {5, 7, 9},
                         {6, 7, 10},
                         {8, 9, 10}});
    CHECK(triangle_edge_triples(6) ==
          std::vector<T>{{1, 2, 6},    {1, 3, 7},    {1, 4, 8},    {1, 5, 9},   {2, 3, 10},
                         {2, 4, 11},   {2, 5, 12},   {3, 4, 13},   {3, 5, 14},  {4, 5, 15},
                         {6, 7, 10},   {6, 8, 11},   {6, 9, 12},   {7, 8, 13},  {7, 9, 14},
                         {8, 9, 15},   {10, 11, 13}, {10, 12, 14}, {11, 12, 15}, {13, 14, 15}});
}

TEST_CASE("R(3,3) primal-graph sizes match the published accounting") {
    const QuadraticModel full = build_r33_model(6, false);
    CHECK(full.num_vars() == 15);
    CHECK(full.primal_edges().size() == 60);

    const QuadraticModel fixed = build_r33_model(6, true);
    CHECK(fixed.num_vars() == 14);
    CHECK(fixed.primal_edges().size() == 52);
    CHECK(fixed.fixed.at("a1") == 0);
    CHECK(fixed.labels.front() == "a2");

    CHECK_THROWS_AS(build_r33_model(3), std::invalid_argument);
    CHECK_THROWS_AS(build_r33_model(7), std::invalid_argument);
}

TEST_CASE("R(3,3) model energies equal the Ramsey cost") {
    const QuadraticModel m4 = build_r33_model(4);
    for (uint32_t x = 0; x < (1u << 6); ++x)
        CHECK(m4.energy(binary_assignment(x, 6)) ==
              Rational(ramsey_energy(GraphBits(4, x), {4, 3, 3})));

    const QuadraticModel m5 = build_r33_model(5);
    for (uint32_t x = 0; x < (1u << 10); ++x)
        CHECK(m5.energy(binary_assignment(x, 10)) ==
              Rational(ramsey_energy(GraphBits(5, x), {5, 3, 3})));

    // fixed variant agrees on the a_1 = 0 half-space
    const QuadraticModel f6 = build_r33_model(6, true);
    CounterRng rng(21, 0);
    for (int rep = 0; rep < 2000; ++rep) {
        const uint32_t ap = static_cast<uint32_t>(rng.next_u64() & ((1u << 14) - 1));
        CHECK(f6.energy(binary_assignment(ap, 14)) ==
              Rational(ramsey_energy(GraphBits(6, ap << 1), {6, 3, 3})));
    }
}

TEST_CASE("fixing a_1 keeps exactly half of each optimal pair") {
    // full optimal set of h^6_{3,3} by direct scan
    std::set<uint32_t> full_optima;
    int64_t best = INT64_MAX;
    for (uint32_t x = 0; x < (1u << 15); ++x) {
        const int64_t e = ramsey_energy(GraphBits(6, x), {6, 3, 3});
        if (e < best) {
            best = e;
            full_optima.clear();
        }
        if (e == best) full_optima.insert(x);
    }
    CHECK(best == 2);
    CHECK(full_optima.size() == 1760);

    const QuadraticModel f6 = build_r33_model(6, true);
    const ModelGround g = exhaustive_model_ground(f6);
    CHECK(g.min_energy == Rational(2));
    CHECK(g.degeneracy == 880);

    std::set<uint32_t> reconstructed;
    const uint32_t mask15 = (1u << 15) - 1;
    for (uint32_t ap : g.minimizers) {
        reconstructed.insert(ap << 1);                     // (0, a')
        reconstructed.insert((~(ap << 1)) & mask15);       // (1, complement a')
    }
    CHECK(reconstructed == full_optima);
}

TEST_CASE("f_ijk pairwise identity") {
    CHECK(f_ijk_identity_check(1, 2, 4));
    CHECK(f_ijk_identity_check(10, 11, 13));
    CHECK_THROWS_AS(f_ijk_identity_check(1, 1, 2), std::invalid_argument);
}

TEST_CASE("to_spin preserves energies exactly") {
    // E = a becomes 1/2 + s/2
    QuadraticModel single(1, VarDomain::Binary);
    single.add_linear(0, Rational(1));
    const QuadraticModel sspin = to_spin(single);
    CHECK(sspin.offset() == Rational(1, 2));
    CHECK(sspin.linear(0) == Rational(1, 2));

    auto check_equal = [](const QuadraticModel& bin) {
        const QuadraticModel spin = to_spin(bin);
        for (uint32_t x = 0; x < (uint32_t{1} << bin.num_vars()); ++x) {
            const auto ba = unpack_assignment(x, bin.num_vars(), VarDomain::Binary);
            const auto sa = unpack_assignment(x, bin.num_vars(), VarDomain::Spin);
            CHECK(bin.energy(ba) == spin.energy(sa));
        }
    };
    check_equal(penalty_and(0, 1, 2, 3));
    check_equal(build_r33_model(4));
    check_equal(build_rm2_model(4));  // 10 vars
    check_equal(build_r33_model(5));  // 10 vars

    CounterRng rng(22, 0);
    for (int rep = 0; rep < 10; ++rep) {
        QuadraticModel m(12, VarDomain::Binary);
        for (int i = 0; i < 12; ++i)
            m.add_linear(i, Rational(static_cast<long long>(rng.uniform_int(9)) - 4));
        for (int i = 0; i < 12; ++i)
            for (int j = i + 1; j < 12; ++j)
                if (rng.coin())
                    m.add_quadratic(i, j, Rational(static_cast<long long>(rng.uniform_int(9)) - 4));
        check_equal(m);
    }

    CHECK_THROWS_AS(to_spin(to_spin(build_r33_model(4))), std::invalid_argument);
}

TEST_CASE("normalize_ranges rescales into hardware ranges and keeps the argmin") {
    QuadraticModel big(2, VarDomain::Spin);
    big.add_quadratic(0, 1, Rational(2));
    const auto [scaled, s] = normalize_ranges(big);
    CHECK(s == Rational(1, 2));
    CHECK(scaled.quadratic(0, 1) == Rational(1));

    QuadraticModel ok(2, VarDomain::Spin);
    ok.add_linear(0, Rational(2));
    ok.add_quadratic(0, 1, Rational(-1));
    const auto [same, s1] = normalize_ranges(ok);
    CHECK(s1 == Rational(1));

    const QuadraticModel all_zero(3, VarDomain::Spin);
    CHECK(normalize_ranges(all_zero).second == Rational(1));

    const QuadraticModel spin_m4 = to_spin(build_rm2_model(4));
    const auto [norm, scale] = normalize_ranges(spin_m4);
    CHECK(norm.max_abs_quadratic() <= Rational(1));
    CHECK(norm.max_abs_linear() <= Rational(2));
    CHECK(scale > Rational(0));
    const ModelGround before = exhaustive_model_ground(spin_m4);
    const ModelGround after = exhaustive_model_ground(norm);
    CHECK(before.minimizers == after.minimizers);
    CHECK(after.min_energy == before.min_energy * scale);

    CHECK_THROWS_AS(normalize_ranges(build_rm2_model(4)), std::invalid_argument);
}

}  // TEST_SUITE
