#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/chimera.hpp"
#include "ramsey/cost.hpp"
#include "ramsey/oracle.hpp"
#include "ramsey/qa.hpp"
#include "ramsey/sa.hpp"

namespace ramsey {

// Builds the quadratic model the experiments used for an instance:
// the ancilla-chain model at N == m for (m,2), the uncoupled linear model
// below it, and the triangle-sum model for (3,3) with N in {4,5,6}.
QuadraticModel compile_instance(int m, int n, int n_vertices, const Rational& mu = Rational(2),
                                bool fix_first = false);

struct SolverReport {
    double e_min = 0.0;
    std::optional<uint64_t> degeneracy;  // exact solvers only
    double success_probability = 0.0;    // fraction of reads at e_min
    uint64_t reads = 0;
};

// Anything that can estimate the minimum Ramsey energy plugs into the
// protocol; the oracle is the exact reference adapter.
class ProtocolSolver {
public:
    virtual ~ProtocolSolver() = default;
    virtual SolverReport solve(const RamseyInstance& inst) = 0;
    virtual std::string name() const = 0;
};

class OracleSolver final : public ProtocolSolver {
public:
    SolverReport solve(const RamseyInstance& inst) override;
    std::string name() const override { return "oracle"; }
};

// SA on the logical spin model.
class SaLogicalSolver final : public ProtocolSolver {
public:
    SaLogicalSolver(CoolingSchedule sched, int reads, uint64_t seed)
        : sched_(sched), reads_(reads), seed_(seed) {}
    SolverReport solve(const RamseyInstance& inst) override;
    std::string name() const override { return "sa"; }

private:
    CoolingSchedule sched_;
    int reads_;
    uint64_t seed_;
};

// SA on the hardware-embedded model: compile, embed (tuning lambda), anneal,
// unembed the feasible reads.
class SaEmbeddedSolver final : public ProtocolSolver {
public:
    SaEmbeddedSolver(const HardwareGraph& hw, CoolingSchedule sched, int reads, uint64_t seed)
        : hw_(hw), sched_(sched), reads_(reads), seed_(seed) {}
    SolverReport solve(const RamseyInstance& inst) override;
    std::string name() const override { return "sa-embedded"; }

private:
    HardwareGraph hw_;
    CoolingSchedule sched_;
    int reads_;
    uint64_t seed_;
};

// Statevector quantum annealing; draws reads from the final measurement
// distribution.
class QaSimSolver final : public ProtocolSolver {
public:
    QaSimSolver(double t_f, int steps, int reads, uint64_t seed)
        : t_f_(t_f), steps_(steps), reads_(reads), seed_(seed) {}
    SolverReport solve(const RamseyInstance& inst) override;
    std::string name() const override { return "qa"; }

private:
    double t_f_;
    int steps_;
    int reads_;
    uint64_t seed_;
};

struct ProtocolRow {
    int n_vertices = 0;
    double e_min = 0.0;
    std::optional<uint64_t> degeneracy;
    double success_probability = 0.0;
};

struct ProtocolResult {
    int ramsey_number = 0;
    std::vector<ProtocolRow> rows;
    bool suspicious_start = false;  // E > 0 already at N_start
    bool resolved = false;          // E > 0 was reached within the cap
};

// Increment N from n_start until the estimated minimum energy first turns
// positive; that N is reported as R(m,n).
ProtocolResult ramsey_protocol(int m, int n, ProtocolSolver& solver, int n_start, int n_cap = 8);

// default starting points used by the experiments: one below the transition
int default_protocol_start(int m, int n);

}  // namespace ramsey
