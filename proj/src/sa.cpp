#include "ramsey/sa.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ramsey/rng.hpp"

namespace ramsey {

void CoolingSchedule::validate() const {
    if (!(t_initial >= t_final) || !(t_final > 0))
        throw std::invalid_argument("cooling schedule needs t_initial >= t_final > 0");
    if (sweeps < 1) throw std::invalid_argument("sweeps must be >= 1");
}

double CoolingSchedule::temperature(int sweep) const {
    if (sweeps <= 1) return t_initial;
    const double frac = static_cast<double>(sweep) / static_cast<double>(sweeps - 1);
    return t_initial * std::pow(t_final / t_initial, frac);
}

std::string CoolingSchedule::describe() const {
    std::ostringstream os;
    os << "sa exp t0=" << t_initial << " t1=" << t_final << " sweeps=" << sweeps;
    return os.str();
}

double SampleSet::min_energy() const {
    if (samples.empty()) throw std::domain_error("empty sample set");
    double m = samples.front().energy;
    for (const auto& s : samples) m = std::min(m, s.energy);
    return m;
}

namespace {

// Model flattened to doubles with CSR adjacency for the sweep hot loop.
struct CompiledSpinModel {
    int n;
    double offset;
    std::vector<double> h;
    std::vector<int> row_start;   // n+1
    std::vector<int> col;
    std::vector<double> coupling;

    explicit CompiledSpinModel(const QuadraticModel& m) : n(m.num_vars()) {
        if (m.domain() != VarDomain::Spin)
            throw std::invalid_argument("solver expects a spin-domain model");
        offset = to_double(m.offset());
        h.resize(n);
        for (int i = 0; i < n; ++i) h[i] = to_double(m.linear(i));
        std::vector<std::vector<std::pair<int, double>>> adj(n);
        for (const auto& [pr, c] : m.quadratic_terms()) {
            if (c == Rational(0)) continue;
            const double j = to_double(c);
            adj[pr.first].push_back({pr.second, j});
            adj[pr.second].push_back({pr.first, j});
        }
        row_start.assign(n + 1, 0);
        for (int i = 0; i < n; ++i) {
            std::sort(adj[i].begin(), adj[i].end());
            row_start[i + 1] = row_start[i] + static_cast<int>(adj[i].size());
        }
        col.resize(row_start[n]);
        coupling.resize(row_start[n]);
        for (int i = 0; i < n; ++i)
            for (size_t k = 0; k < adj[i].size(); ++k) {
                col[row_start[i] + k] = adj[i][k].first;
                coupling[row_start[i] + k] = adj[i][k].second;
            }
    }

    double energy(const std::vector<int8_t>& s) const {
        double e = offset;
        for (int i = 0; i < n; ++i) e += h[i] * s[i];
        for (int i = 0; i < n; ++i)
            for (int k = row_start[i]; k < row_start[i + 1]; ++k)
                if (col[k] > i) e += coupling[k] * s[i] * s[col[k]];
        return e;
    }

    // local field f_i = h_i + sum_j J_ij s_j; flipping i changes E by -2 s_i f_i
    void local_fields(const std::vector<int8_t>& s, std::vector<double>& f) const {
        f.assign(n, 0.0);
        for (int i = 0; i < n; ++i) {
            f[i] = h[i];
            for (int k = row_start[i]; k < row_start[i + 1]; ++k) f[i] += coupling[k] * s[col[k]];
        }
    }

    void flip(std::vector<int8_t>& s, std::vector<double>& f, int i) const {
        s[i] = static_cast<int8_t>(-s[i]);
        const double delta = 2.0 * s[i];
        for (int k = row_start[i]; k < row_start[i + 1]; ++k) f[col[k]] += delta * coupling[k];
    }
};

void random_spins(std::vector<int8_t>& s, CounterRng& rng) {
    for (auto& v : s) v = static_cast<int8_t>(rng.spin());
}

}  // namespace

SampleSet simulated_anneal(const QuadraticModel& spin_model, const CoolingSchedule& sched,
                           int reads, uint64_t seed) {
    sched.validate();
    if (reads < 1) throw std::invalid_argument("reads must be >= 1");
    const CompiledSpinModel cm(spin_model);

    // temperatures precomputed once; betas shared across reads
    std::vector<double> beta(sched.sweeps);
    for (int k = 0; k < sched.sweeps; ++k) beta[k] = 1.0 / sched.temperature(k);

    SampleSet out;
    out.seed = seed;
    out.schedule = sched.describe() + " reads=" + std::to_string(reads);
    out.model_hash = spin_model.content_hash();
    out.samples.resize(reads);

#pragma omp parallel for schedule(dynamic, 16)
    for (int r = 0; r < reads; ++r) {
        CounterRng rng(seed, static_cast<uint64_t>(r));
        std::vector<int8_t> s(cm.n);
        std::vector<double> f;
        random_spins(s, rng);
        cm.local_fields(s, f);
        for (int k = 0; k < sched.sweeps; ++k) {
            const double b = beta[k];
            for (int i = 0; i < cm.n; ++i) {
                const double de = -2.0 * s[i] * f[i];
                if (de <= 0.0 || rng.uniform01() < std::exp(-de * b)) cm.flip(s, f, i);
            }
        }
        out.samples[r].energy = cm.energy(s);  // full recomputation at read end
        out.samples[r].spins = std::move(s);
    }
    return out;
}

SampleSet steepest_descent(const QuadraticModel& spin_model, int starts, uint64_t seed) {
    if (starts < 1) throw std::invalid_argument("starts must be >= 1");
    const CompiledSpinModel cm(spin_model);

    SampleSet out;
    out.seed = seed;
    out.schedule = "steepest-descent starts=" + std::to_string(starts);
    out.model_hash = spin_model.content_hash();
    out.samples.resize(starts);

#pragma omp parallel for schedule(dynamic, 16)
    for (int r = 0; r < starts; ++r) {
        CounterRng rng(seed, static_cast<uint64_t>(r));
        std::vector<int8_t> s(cm.n);
        std::vector<double> f;
        random_spins(s, rng);
        cm.local_fields(s, f);
        while (true) {
            int best = -1;
            double best_de = 0.0;
            for (int i = 0; i < cm.n; ++i) {
                const double de = -2.0 * s[i] * f[i];
                if (de < best_de) {  // strict: ties keep the lowest index
                    best_de = de;
                    best = i;
                }
            }
            if (best < 0) break;
            cm.flip(s, f, best);
        }
        out.samples[r].energy = cm.energy(s);
        out.samples[r].spins = std::move(s);
    }
    return out;
}

SuccessStats success_statistics(const SampleSet& samples, const EmbeddedModel* em,
                                double ground_energy, double tol) {
    if (samples.samples.empty()) throw std::domain_error("empty sample set");
    uint64_t total = 0, feasible = 0, optimal = 0;
    for (const auto& s : samples.samples) {
        total += s.multiplicity;
        double logical_energy;
        if (em) {
            auto logical = unembed(s.spins, *em);
            if (!logical) continue;
            logical_energy = to_double(em->source.energy(*logical));
        } else {
            logical_energy = s.energy;
        }
        feasible += s.multiplicity;
        if (std::abs(logical_energy - ground_energy) <= tol) optimal += s.multiplicity;
    }
    SuccessStats st;
    st.feasible_fraction = static_cast<double>(feasible) / static_cast<double>(total);
    st.optimal_fraction = feasible == 0 ? 0.0 : static_cast<double>(optimal) / static_cast<double>(feasible);
    st.joint = static_cast<double>(optimal) / static_cast<double>(total);
    return st;
}

CoolingSchedule optimize_temperatures(const QuadraticModel& spin_model,
                                      const std::vector<double>& t0_grid,
                                      const std::vector<double>& t1_grid, int sweeps, int reads,
                                      uint64_t seed, double ground_energy) {
    CoolingSchedule best;
    best.sweeps = sweeps;
    double best_rate = -1.0;
    for (double t0 : t0_grid)
        for (double t1 : t1_grid) {
            if (!(t0 >= t1)) continue;
            CoolingSchedule cand{t0, t1, sweeps};
            const SampleSet set = simulated_anneal(spin_model, cand, reads, seed);
            uint64_t hits = 0;
            for (const auto& s : set.samples)
                if (std::abs(s.energy - ground_energy) <= 1e-9) hits += s.multiplicity;
            const double rate = static_cast<double>(hits) / static_cast<double>(set.total_reads());
            if (rate > best_rate) {
                best_rate = rate;
                best = cand;
            }
        }
    return best;
}

}  // namespace ramsey
