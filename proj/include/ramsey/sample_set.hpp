#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ramsey {

struct Sample {
    std::vector<int8_t> spins;
    double energy = 0.0;
    uint64_t multiplicity = 1;
};

// Solver output: one row per distinct read (or per aggregated configuration
// in synthetic sets), with enough metadata to reproduce the run.
struct SampleSet {
    std::vector<Sample> samples;
    uint64_t seed = 0;
    std::string schedule;  // human-readable solver/schedule description
    uint64_t model_hash = 0;

    uint64_t total_reads() const {
        uint64_t n = 0;
        for (const auto& s : samples) n += s.multiplicity;
        return n;
    }

    double min_energy() const;
};

}  // namespace ramsey
