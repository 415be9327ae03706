#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ramsey/cost.hpp"
#include "ramsey/graph_bits.hpp"
#include "ramsey/quadratic_model.hpp"

namespace ramsey {

inline constexpr int kOracleMaxBits = 30;
inline constexpr uint64_t kMinimizerCap = 100000;

// Exact ground-state data from a full scan of all 2^{L_N} graphs.
struct GroundTruth {
    RamseyInstance instance{};
    int64_t e_gs = 0;
    uint64_t degeneracy = 0;
    std::vector<GraphBits> minimizers;        // kept while degeneracy <= cap
    std::map<int64_t, uint64_t> histogram;    // energy -> graph count, full scan
};

// Plain integer-order scan, partitioned over disjoint ranges and reduced
// associatively. The serial kernel is the reference the parallel one is
// checked against.
GroundTruth exhaustive_ground(const RamseyInstance& inst, bool parallel = true);
GroundTruth exhaustive_ground_serial(const RamseyInstance& inst);

struct ModelGround {
    Rational min_energy{0};
    uint64_t degeneracy = 0;
    std::vector<uint32_t> minimizers;  // packed assignments, bit i = var i
};

// Exact minimum of a quadratic model over its full domain (<= 30 variables).
ModelGround exhaustive_model_ground(const QuadraticModel& model, bool parallel = true);
ModelGround exhaustive_model_ground_serial(const QuadraticModel& model);

}  // namespace ramsey
