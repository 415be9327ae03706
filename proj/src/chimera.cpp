#include "ramsey/chimera.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ramsey {

HardwareGraph::HardwareGraph(int rows, int cols, int shore, const std::vector<int>& defects)
    : rows_(rows), cols_(cols), shore_(shore), defects_(defects) {
    if (rows < 1 || cols < 1 || shore < 1)
        throw std::invalid_argument("hardware grid dimensions must be positive");
    const int n = num_qubits();
    usable_.assign(n + 1, true);
    usable_[0] = false;
    for (int d : defects) {
        if (d < 1 || d > n)
            throw std::invalid_argument("defect id " + std::to_string(d) + " out of range");
        usable_[d] = false;
    }

    adjacency.assign(n + 1, {});
    auto add_edge = [this](int a, int b) {
        if (usable_[a] && usable_[b]) {
            adjacency[a].push_back(b);
            adjacency[b].push_back(a);
        }
    };
    auto qubit = [this](int r, int c, bool rhp, int k) {
        return ((r * cols_) + c) * 2 * shore_ + (rhp ? shore_ : 0) + k + 1;
    };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            for (int i = 0; i < shore; ++i)
                for (int j = 0; j < shore; ++j) add_edge(qubit(r, c, false, i), qubit(r, c, true, j));
            if (r + 1 < rows)
                for (int k = 0; k < shore; ++k) add_edge(qubit(r, c, false, k), qubit(r + 1, c, false, k));
            if (c + 1 < cols)
                for (int k = 0; k < shore; ++k) add_edge(qubit(r, c, true, k), qubit(r, c + 1, true, k));
        }
    for (auto& nb : adjacency) std::sort(nb.begin(), nb.end());
}

void HardwareGraph::check_qubit(int q) const {
    if (q < 1 || q > num_qubits())
        throw std::out_of_range("qubit id " + std::to_string(q) + " out of range");
}

bool HardwareGraph::usable(int q) const {
    check_qubit(q);
    return usable_[q];
}

int HardwareGraph::usable_count() const {
    int c = 0;
    for (int q = 1; q <= num_qubits(); ++q) c += usable_[q];
    return c;
}

std::vector<int> HardwareGraph::usable_qubits() const {
    std::vector<int> out;
    for (int q = 1; q <= num_qubits(); ++q)
        if (usable_[q]) out.push_back(q);
    return out;
}

bool HardwareGraph::has_coupler(int a, int b) const {
    check_qubit(a);
    check_qubit(b);
    return std::binary_search(adjacency[a].begin(), adjacency[a].end(), b);
}

const std::vector<int>& HardwareGraph::neighbors(int q) const {
    check_qubit(q);
    return adjacency[q];
}

std::vector<std::pair<int, int>> HardwareGraph::couplers() const {
    std::vector<std::pair<int, int>> out;
    for (int q = 1; q <= num_qubits(); ++q)
        for (int nb : adjacency[q])
            if (q < nb) out.push_back({q, nb});
    return out;
}

}  // namespace ramsey
