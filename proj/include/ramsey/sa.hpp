#pragma once

#include <cstdint>
#include <string>

#include "ramsey/embedding.hpp"
#include "ramsey/quadratic_model.hpp"
#include "ramsey/sample_set.hpp"

namespace ramsey {

struct CoolingSchedule {
    double t_initial = 10.0;
    double t_final = 0.05;
    int sweeps = 1000;
    enum class Shape { Exponential } shape = Shape::Exponential;

    void validate() const;
    double temperature(int sweep) const;
    std::string describe() const;
};

// Metropolis single-spin-flip annealer. One sweep is one pass over all
// spins in index order; each read starts from random spins and owns its own
// RNG stream, so results are independent of thread count.
SampleSet simulated_anneal(const QuadraticModel& spin_model, const CoolingSchedule& sched,
                           int reads, uint64_t seed);

// Greedy baseline: repeatedly flip the single spin with the largest energy
// decrease (lowest index on ties) until no flip helps.
SampleSet steepest_descent(const QuadraticModel& spin_model, int starts, uint64_t seed);

struct SuccessStats {
    double feasible_fraction = 0.0;
    double optimal_fraction = 0.0;  // among feasible reads
    double joint = 0.0;             // feasible and optimal, over all reads
};

// With an embedded model, feasibility means unanimous chains and optimality
// is judged on the unembedded logical energy; without one every read is
// feasible and the sample energy is compared directly.
SuccessStats success_statistics(const SampleSet& samples, const EmbeddedModel* em,
                                double ground_energy, double tol = 1e-9);

// Grid search over (t_initial, t_final) maximising the ground-hit rate,
// the way annealing temperatures are usually tuned before a production run.
CoolingSchedule optimize_temperatures(const QuadraticModel& spin_model,
                                      const std::vector<double>& t0_grid,
                                      const std::vector<double>& t1_grid, int sweeps, int reads,
                                      uint64_t seed, double ground_energy);

}  // namespace ramsey
