#include "ramsey/protocol.hpp"

#include <cmath>
#include <stdexcept>

#include "ramsey/embedding.hpp"
#include "ramsey/quadratize.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

QuadraticModel compile_instance(int m, int n, int n_vertices, const Rational& mu, bool fix_first) {
    if (n == 2) {
        if (n_vertices < m) return build_rm2_subcritical_model(m, n_vertices);
        if (n_vertices == m) return build_rm2_model(m, PenaltyConfig{mu});
        throw std::invalid_argument("R(m,2) models are built for N <= m only");
    }
    if (m == 3 && n == 3) return build_r33_model(n_vertices, fix_first);
    throw std::invalid_argument(
        "unsupported instance; supported: (m,2) with 3<=m<=8 and N<=m, (3,3) with N in {4,5,6}");
}

int default_protocol_start(int m, int n) {
    if (n == 2) return std::max(2, m - 1);
    if (m == 3 && n == 3) return 4;
    throw std::invalid_argument("no default start for this instance family");
}

SolverReport OracleSolver::solve(const RamseyInstance& inst) {
    const GroundTruth gt = exhaustive_ground(inst);
    SolverReport rep;
    rep.e_min = static_cast<double>(gt.e_gs);
    rep.degeneracy = gt.degeneracy;
    rep.success_probability = 1.0;
    rep.reads = 1;
    return rep;
}

namespace {

SolverReport report_from_samples(const std::vector<double>& energies, uint64_t reads) {
    SolverReport rep;
    rep.reads = reads;
    double e_min = energies.front();
    for (double e : energies) e_min = std::min(e_min, e);
    uint64_t hits = 0;
    for (double e : energies)
        if (std::abs(e - e_min) <= 1e-9) ++hits;
    rep.e_min = e_min;
    rep.success_probability = static_cast<double>(hits) / static_cast<double>(energies.size());
    return rep;
}

}  // namespace

SolverReport SaLogicalSolver::solve(const RamseyInstance& inst) {
    const QuadraticModel model =
        compile_instance(inst.clique_order, inst.independent_order, inst.n_vertices);
    const QuadraticModel spin = to_spin(model);
    const SampleSet set = simulated_anneal(spin, sched_, reads_, seed_);
    std::vector<double> energies;
    energies.reserve(set.samples.size());
    for (const auto& s : set.samples) energies.push_back(s.energy);
    return report_from_samples(energies, set.total_reads());
}

SolverReport SaEmbeddedSolver::solve(const RamseyInstance& inst) {
    const QuadraticModel model =
        compile_instance(inst.clique_order, inst.independent_order, inst.n_vertices);
    const QuadraticModel spin = to_spin(model);

    if (spin.primal_edges().empty()) {
        // uncoupled qubits: nothing to chain, solve directly
        const SampleSet set = simulated_anneal(spin, sched_, reads_, seed_);
        std::vector<double> energies;
        for (const auto& s : set.samples) energies.push_back(s.energy);
        return report_from_samples(energies, set.total_reads());
    }

    FindEmbeddingOptions opts;
    opts.seed = seed_;
    auto emb = find_embedding(spin, hw_, opts);
    if (!emb) throw std::runtime_error("no embedding found for the instance");

    SamplerFn sampler = [this](const QuadraticModel& m, uint64_t s) {
        CoolingSchedule tune_sched = sched_;
        tune_sched.sweeps = std::max(100, sched_.sweeps / 4);
        return simulated_anneal(m, tune_sched, std::max(500, reads_ / 10), s);
    };
    const TuneResult tuned = tune_lambda(spin, *emb, hw_, sampler, seed_ + 1);
    if (!tuned.ok) throw std::runtime_error("lambda tuning failed to reach the feasibility target");
    emb->lambda = tuned.lambda;

    const EmbeddedModel em = embed_model(spin, *emb, hw_);
    const SampleSet set = simulated_anneal(em.model, sched_, reads_, seed_ + 2);

    std::vector<double> energies;
    for (const auto& s : set.samples)
        if (auto logical = unembed(s.spins, em)) energies.push_back(to_double(em.source.energy(*logical)));
    if (energies.empty()) throw std::runtime_error("every read had a broken chain");
    return report_from_samples(energies, set.total_reads());
}

SolverReport QaSimSolver::solve(const RamseyInstance& inst) {
    const DiagonalProblem problem = DiagonalProblem::from_instance(inst);
    const AnnealSchedule sched = AnnealSchedule::linear(t_f_);
    const QuantumState state = evolve(problem, sched, steps_);
    const auto dist = measure_energies(state, problem);

    // draw reads from the measurement distribution
    CounterRng rng(seed_, 0);
    std::vector<double> energies;
    energies.reserve(reads_);
    for (int r = 0; r < reads_; ++r) {
        double u = rng.uniform01();
        double acc = 0.0;
        double drawn = dist.rbegin()->first;
        for (const auto& [e, p] : dist) {
            acc += p;
            if (u < acc) {
                drawn = e;
                break;
            }
        }
        energies.push_back(drawn);
    }
    return report_from_samples(energies, static_cast<uint64_t>(reads_));
}

ProtocolResult ramsey_protocol(int m, int n, ProtocolSolver& solver, int n_start, int n_cap) {
    if (n_start < 2) throw std::invalid_argument("N_start must be >= 2");
    if (n_start > n_cap) throw std::invalid_argument("N_start exceeds the protocol cap");

    ProtocolResult result;
    for (int nv = n_start; nv <= n_cap; ++nv) {
        const RamseyInstance inst{nv, m, n};
        const SolverReport rep = solver.solve(inst);
        result.rows.push_back({nv, rep.e_min, rep.degeneracy, rep.success_probability});
        if (rep.e_min > 1e-9) {
            result.ramsey_number = nv;
            result.resolved = true;
            if (nv == n_start) result.suspicious_start = true;
            return result;
        }
    }
    result.resolved = false;
    result.ramsey_number = 0;
    return result;
}

}  // namespace ramsey
