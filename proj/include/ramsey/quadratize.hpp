#pragma once

#include <array>
#include <utility>
#include <vector>

#include "ramsey/quadratic_model.hpp"

namespace ramsey {

// Weight of the ancilla-constraint penalties; 2 is the operating point used
// for every R(m,2) build, 1 is the smallest value that keeps the minimum.
struct PenaltyConfig {
    Rational mu{2};

    void validate() const;
};

// P(a1,a2;b) = a1 a2 - 2(a1+a2) b + 3 b. Zero on the four rows with
// b == a1*a2, otherwise 1 or 3.
void add_and_penalty(QuadraticModel& m, int a1, int a2, int b, const Rational& weight);

// The penalty as a standalone 3-variable fragment over (a1, a2, b).
QuadraticModel penalty_and(int a1, int a2, int b, int num_vars);

// Quadratic model for h^m_{m,2}: L = C(m,2) computational variables a_1..a_L,
// ancillas b_2..b_{L-1} chained so that b_j = a_j b_{j+1} collapses the
// L-bit clique product to a_1 b_2. Minimising over the ancillas recovers
// the Ramsey cost for every computational assignment once mu >= 1.
QuadraticModel build_rm2_model(int m, const PenaltyConfig& cfg = {});

// h^N_{m,2} for N < m: no m-clique fits, so only the missing-edge count
// remains and the model is purely linear.
QuadraticModel build_rm2_subcritical_model(int m, int n_vertices);

// h^N_{3,3} as a sum of triangle terms f_{i,j,k}, already pairwise. With
// fix_first the two-fold complement symmetry is spent by pinning a_1 = 0
// and eliminating it from the model.
QuadraticModel build_r33_model(int n_vertices, bool fix_first = false);

// 1-based edge-index triples {i,j,k} of the triangles of K_N, one per
// 3-subset of vertices, in lexicographic vertex order.
std::vector<std::array<int, 3>> triangle_edge_triples(int n_vertices);

// Truth-table identity a_i a_j a_k + \bar a_i \bar a_j \bar a_k ==
// -2 + \bar a_i + \bar a_j + \bar a_k + a_i a_j + a_i a_k + a_j a_k.
bool f_ijk_identity_check(int i, int j, int k);

// Substitute 2a = s + 1; energies agree exactly on corresponding assignments.
QuadraticModel to_spin(const QuadraticModel& binary_model);

// Uniform positive rescale bringing couplings into [-1,1] and fields into
// [-2,2]; the argmin set is untouched. Returns the scale applied.
std::pair<QuadraticModel, Rational> normalize_ranges(const QuadraticModel& spin_model);

}  // namespace ramsey
