#pragma once

#include <vector>

namespace ramsey {

// Chimera qubit graph: a rows x cols grid of K_{shore,shore} unit cells.
// Qubits are numbered 1..rows*cols*2*shore with cells row-major from the
// top-left and the left-hand partition before the right-hand one inside a
// cell. LHP qubits couple to the corresponding LHP qubit in the cells above
// and below; RHP qubits couple left and right. Fabrication defects are
// removed from the usable set along with their couplers.
class HardwareGraph {
public:
    HardwareGraph(int rows, int cols, int shore, const std::vector<int>& defects = {});

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int shore() const { return shore_; }
    int num_qubits() const { return rows_ * cols_ * 2 * shore_; }
    const std::vector<int>& defects() const { return defects_; }

    bool usable(int q) const;
    int usable_count() const;
    std::vector<int> usable_qubits() const;

    bool has_coupler(int a, int b) const;  // both endpoints usable
    const std::vector<int>& neighbors(int q) const;
    std::vector<std::pair<int, int>> couplers() const;  // a < b, usable only

private:
    void check_qubit(int q) const;

    int rows_, cols_, shore_;
    std::vector<int> defects_;
    std::vector<bool> usable_;                // index 0 unused, qubits are 1-based
    std::vector<std::vector<int>> adjacency;  // usable neighbors only
};

}  // namespace ramsey
