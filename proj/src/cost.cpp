#include "ramsey/cost.hpp"

#include <stdexcept>

namespace ramsey {

void RamseyInstance::validate() const {
    if (n_vertices < 2 || n_vertices > kMaxVertices)
        throw std::invalid_argument("instance N outside [2, " + std::to_string(kMaxVertices) + "]");
    if (clique_order < 2) throw std::invalid_argument("clique order m must be >= 2");
    if (independent_order < 2) throw std::invalid_argument("independent order n must be >= 2");
}

SubsetMasks::SubsetMasks(int n_vertices, int k) {
    if (k < 2) throw std::invalid_argument("subset order must be >= 2");
    if (n_vertices < 2 || n_vertices > kMaxVertices)
        throw std::invalid_argument("vertex count out of range");
    if (k > n_vertices) return;  // no subsets, count is 0

    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i + 1;
    while (true) {
        std::array<uint64_t, 4> mask{};
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < i; ++j) {
                const int pos = edge_index(subset[i], subset[j], n_vertices);
                mask[pos >> 6] |= uint64_t{1} << (pos & 63);
            }
        masks_.push_back(mask);

        // next k-combination of {1..N}
        int i = k - 1;
        while (i >= 0 && subset[i] == n_vertices - (k - 1 - i)) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
}

std::vector<uint64_t> SubsetMasks::low_words() const {
    std::vector<uint64_t> out;
    out.reserve(masks_.size());
    for (const auto& m : masks_) {
        if (m[1] || m[2] || m[3]) throw std::logic_error("subset mask does not fit one word");
        out.push_back(m[0]);
    }
    return out;
}

int64_t SubsetMasks::count_contained(const GraphBits& g) const {
    const auto& w = g.words();
    int64_t count = 0;
    for (const auto& m : masks_) {
        bool all = true;
        for (int i = 0; i < 4; ++i)
            if ((w[i] & m[i]) != m[i]) {
                all = false;
                break;
            }
        count += all;
    }
    return count;
}

int64_t count_cliques(const GraphBits& g, int m) {
    SubsetMasks masks(g.n_vertices(), m);
    return masks.count_contained(g);
}

int64_t count_independent(const GraphBits& g, int n) {
    return count_cliques(g.complement(), n);
}

int64_t ramsey_energy(const GraphBits& g, const RamseyInstance& inst) {
    inst.validate();
    if (g.n_vertices() != inst.n_vertices)
        throw std::invalid_argument("graph vertex count does not match instance");
    return count_cliques(g, inst.clique_order) + count_independent(g, inst.independent_order);
}

bool complement_symmetry_check(const GraphBits& g, const RamseyInstance& inst) {
    const RamseyInstance swapped{inst.n_vertices, inst.independent_order, inst.clique_order};
    return ramsey_energy(g, inst) == ramsey_energy(g.complement(), swapped);
}

RamseyEvaluator::RamseyEvaluator(const RamseyInstance& inst)
    : inst_(inst), n_bits_(pair_count(inst.n_vertices)) {
    inst.validate();
    if (n_bits_ > 64) throw std::invalid_argument("evaluator requires L_N <= 64");
    clique_masks_ = SubsetMasks(inst.n_vertices, inst.clique_order).low_words();
    fast_independent_ = inst.independent_order == 2;
    if (!fast_independent_)
        independent_masks_ = SubsetMasks(inst.n_vertices, inst.independent_order).low_words();
}

int64_t RamseyEvaluator::energy_generic(uint64_t bits) const {
    GraphBits g(inst_.n_vertices, bits);
    return ramsey_energy(g, inst_);
}

}  // namespace ramsey
