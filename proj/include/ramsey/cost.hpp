#pragma once

#include <cstdint>
#include <vector>

#include "ramsey/graph_bits.hpp"

namespace ramsey {

// A Ramsey optimisation instance: minimise the number of m-cliques plus
// n-independent sets over all N-vertex graphs.
struct RamseyInstance {
    int n_vertices;         // N
    int clique_order;       // m
    int independent_order;  // n

    void validate() const;
};

// Edge-set masks of every size-k vertex subset of an N-vertex graph.
// Counting is then one AND+compare per subset. Empty when k > N.
class SubsetMasks {
public:
    SubsetMasks(int n_vertices, int k);

    const std::vector<std::array<uint64_t, 4>>& masks() const { return masks_; }

    // single-word view for enumeration loops; requires L_N <= 64
    std::vector<uint64_t> low_words() const;

    int64_t count_contained(const GraphBits& g) const;

private:
    std::vector<std::array<uint64_t, 4>> masks_;
};

// Number of m-cliques in g (sum over all C(N,m) vertex subsets of the
// product of their edge bits). m > N gives 0; m < 2 is a domain error.
int64_t count_cliques(const GraphBits& g, int m);

// Number of n-independent sets; equals count_cliques(g.complement(), n).
int64_t count_independent(const GraphBits& g, int n);

int64_t ramsey_energy(const GraphBits& g, const RamseyInstance& inst);

// h^N_{m,n}(a) == h^N_{n,m}(complement(a))
bool complement_symmetry_check(const GraphBits& g, const RamseyInstance& inst);

// Precompiled evaluator over low-word graphs (L_N <= 64) for enumeration
// loops. For n == 2 a popcount shortcut replaces the independent-set scan;
// energy_generic keeps the subset-scan path for equivalence tests.
class RamseyEvaluator {
public:
    explicit RamseyEvaluator(const RamseyInstance& inst);

    int64_t energy(uint64_t bits) const {
        int64_t e = 0;
        for (uint64_t mask : clique_masks_)
            e += (bits & mask) == mask;
        if (fast_independent_)
            e += n_bits_ - std::popcount(bits);
        else {
            const uint64_t full = n_bits_ == 64 ? ~uint64_t{0} : (uint64_t{1} << n_bits_) - 1;
            const uint64_t comp = ~bits & full;
            for (uint64_t mask : independent_masks_)
                e += (comp & mask) == mask;
        }
        return e;
    }

    int64_t energy_generic(uint64_t bits) const;

    int n_bits() const { return n_bits_; }
    bool fast_path() const { return fast_independent_; }
    const RamseyInstance& instance() const { return inst_; }

private:
    RamseyInstance inst_;
    int n_bits_;
    bool fast_independent_;
    std::vector<uint64_t> clique_masks_;
    std::vector<uint64_t> independent_masks_;
};

}  // namespace ramsey
