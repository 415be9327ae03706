#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "ramsey/embedding.hpp"
#include "ramsey/sample_set.hpp"

namespace ramsey {

// Smallest k with 1 - epsilon^k >= delta: runs needed so that at least one
// read hits the ground state with confidence delta when a single read
// misses with probability epsilon.
int repetition_count(double epsilon, double delta);

struct EnergyHistogram {
    std::map<double, uint64_t> bins;
    uint64_t total_reads = 0;
    uint64_t feasible_reads = 0;
};

struct HistogramPair {
    EnergyHistogram hardware;  // every read, embedded energies
    EnergyHistogram logical;   // feasible reads only, unembedded energies
};

// The paper's main/inset histogram pair. Without an embedding the two are
// identical and every read is feasible.
HistogramPair histogram(const SampleSet& samples, const EmbeddedModel* em = nullptr);

// Distinct observed configurations with their energies and read counts.
using ConfigCounts = std::vector<std::pair<double, uint64_t>>;

ConfigCounts config_counts(const SampleSet& samples);

struct BoltzmannFit {
    double t_e = 0.0;
    double log_likelihood = 0.0;
    bool infinite_temperature = false;  // empirical mean at/beyond the flat-occupation limit
};

// Maximum-likelihood effective temperature over the observed configuration
// space; 1-D bracketing on the mean-energy matching condition, tol 1e-6.
BoltzmannFit boltzmann_fit(const ConfigCounts& configs);

// Per energy level, the max/min ratio of empirical probabilities across
// same-energy configurations: 1 in equilibrium, > 1 otherwise.
std::map<double, double> equal_energy_dispersion(const ConfigCounts& configs);

double max_dispersion(const std::map<double, double>& per_level);

enum class NoiseDistribution { Gaussian, Uniform };

struct NoiseOptions {
    double sigma_h = 0.0;
    double sigma_j = 0.0;
    int trials = 100;
    uint64_t seed = 0;
    NoiseDistribution dist = NoiseDistribution::Gaussian;
};

// Fraction of perturbation trials whose ground-state set is unchanged.
// Perturbed minimizer sets are read off with a tolerance of half the
// nominal spectral gap, the resolution at which "the same ground states"
// is well defined under continuous parameter shifts.
double noise_robustness(const QuadraticModel& spin_model, const NoiseOptions& opts);

}  // namespace ramsey
