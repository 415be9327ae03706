#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramsey/chimera.hpp"
#include "ramsey/quadratic_model.hpp"
#include "ramsey/sample_set.hpp"

namespace ramsey {

// Minor embedding: each model variable owns a connected chain of hardware
// qubits, chains pairwise disjoint, lambda the ferromagnetic chain strength.
struct Embedding {
    std::map<int, std::vector<int>> chains;  // var -> sorted qubit ids
    Rational lambda{1};

    int total_qubits() const;
};

struct EmbeddingReport {
    bool ok = true;
    std::vector<int> disconnected_chains;
    std::vector<int> unusable_chains;              // chain touches a defect / bad id
    std::vector<std::pair<int, int>> overlaps;     // var pairs sharing a qubit
    std::vector<std::pair<int, int>> missing_edges;  // primal edges with no coupler
    std::vector<int> missing_chains;               // model vars without a chain
    std::vector<std::string> problems;             // human-readable summary
};

EmbeddingReport validate_embedding(const Embedding& emb, const QuadraticModel& model,
                                   const HardwareGraph& hw);

struct FindEmbeddingOptions {
    uint64_t seed = 0;
    int restarts = 32;        // independent attempts
    int rounds = 64;          // rip-up/re-route passes per attempt
    bool trim_chains = true;  // drop chain leaves not needed for any coupling
};

// Randomized placement with weighted-BFS chain growth and rip-up retries.
// Deterministic for a fixed seed; nullopt when no valid embedding is found
// within the retry budget.
std::optional<Embedding> find_embedding(const QuadraticModel& model, const HardwareGraph& hw,
                                        const FindEmbeddingOptions& opts = {});

// A logical spin model compiled onto hardware: fields split uniformly over
// chains, each logical coupling on one chosen coupler, every intra-chain
// coupler at -lambda, then range-normalized.
struct EmbeddedModel {
    QuadraticModel model;      // spin model over compact qubit indices
    std::vector<int> qubits;   // compact index -> hardware qubit id (sorted)
    Embedding embedding;
    QuadraticModel source;     // the logical spin model
    Rational scale{1};         // normalization factor applied to the hardware model

    int index_of_qubit(int qubit_id) const;
};

EmbeddedModel embed_model(const QuadraticModel& spin_model, const Embedding& emb,
                          const HardwareGraph& hw);

// Chain-unanimous samples map back to logical spins; broken chains yield
// nullopt and the read is excluded from Ramsey statistics.
std::optional<std::vector<int8_t>> unembed(std::span<const int8_t> hardware_spins,
                                           const EmbeddedModel& em);

// fraction of reads whose chains are all unanimous
double feasible_fraction(const SampleSet& samples, const EmbeddedModel& em);

// Solver adapter used by the lambda tuner: spin model -> samples.
using SamplerFn = std::function<SampleSet(const QuadraticModel&, uint64_t seed)>;

struct LambdaTracePoint {
    Rational lambda;
    double feasible = 0.0;
};

struct TuneResult {
    bool ok = false;
    Rational lambda{0};
    std::vector<LambdaTracePoint> trace;
};

// Sweep lambda upward until the feasible fraction first exceeds target_f,
// then step once more; that last value is returned (the trace keeps every
// measured point). Fails explicitly when lambda_max is hit first.
TuneResult tune_lambda(const QuadraticModel& logical_spin, const Embedding& emb,
                       const HardwareGraph& hw, const SamplerFn& sampler, uint64_t seed,
                       double target_f = 0.85, Rational step = Rational(1, 2),
                       Rational lambda_start = Rational(1, 2), Rational lambda_max = Rational(16));

}  // namespace ramsey
