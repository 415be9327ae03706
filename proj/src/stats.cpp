#include "ramsey/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "ramsey/oracle.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

int repetition_count(double epsilon, double delta) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must be in (0,1)");
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must be in (0,1)");
    int k = static_cast<int>(std::ceil(std::log1p(-delta) / std::log(epsilon)));
    if (k < 1) k = 1;
    // guard the float boundary exactly
    while (1.0 - std::pow(epsilon, k) < delta) ++k;
    while (k > 1 && 1.0 - std::pow(epsilon, k - 1) >= delta) --k;
    return k;
}

HistogramPair histogram(const SampleSet& samples, const EmbeddedModel* em) {
    HistogramPair out;
    for (const auto& s : samples.samples) {
        out.hardware.total_reads += s.multiplicity;
        out.hardware.bins[s.energy] += s.multiplicity;
        out.hardware.feasible_reads += s.multiplicity;

        out.logical.total_reads += s.multiplicity;
        if (em) {
            auto logical = unembed(s.spins, *em);
            if (!logical) continue;  // broken chain: excluded from the inset
            out.logical.bins[to_double(em->source.energy(*logical))] += s.multiplicity;
            out.logical.feasible_reads += s.multiplicity;
        } else {
            out.logical.bins[s.energy] += s.multiplicity;
            out.logical.feasible_reads += s.multiplicity;
        }
    }
    return out;
}

ConfigCounts config_counts(const SampleSet& samples) {
    std::map<std::vector<int8_t>, std::pair<double, uint64_t>> seen;
    for (const auto& s : samples.samples) {
        auto& slot = seen[s.spins];
        slot.first = s.energy;
        slot.second += s.multiplicity;
    }
    ConfigCounts out;
    out.reserve(seen.size());
    for (const auto& [spins, ec] : seen) out.push_back(ec);
    return out;
}

namespace {

// Boltzmann mean energy over the observed configuration space,
// shifted for stability.
double boltzmann_mean(const ConfigCounts& configs, double t) {
    double e_min = configs.front().first;
    for (const auto& [e, c] : configs) e_min = std::min(e_min, e);
    double z = 0.0, ez = 0.0;
    for (const auto& [e, c] : configs) {
        const double w = std::exp(-(e - e_min) / t);
        z += w;
        ez += e * w;
    }
    return ez / z;
}

double log_likelihood(const ConfigCounts& configs, double t) {
    double e_min = configs.front().first;
    for (const auto& [e, c] : configs) e_min = std::min(e_min, e);
    double z = 0.0;
    for (const auto& [e, c] : configs) z += std::exp(-(e - e_min) / t);
    const double log_z = std::log(z);
    double ll = 0.0;
    for (const auto& [e, c] : configs)
        ll += static_cast<double>(c) * (-(e - e_min) / t - log_z);
    return ll;
}

}  // namespace

BoltzmannFit boltzmann_fit(const ConfigCounts& configs) {
    if (configs.empty()) throw std::domain_error("no observed configurations");
    std::set<double> distinct;
    for (const auto& [e, c] : configs) distinct.insert(e);
    if (distinct.size() < 2)
        throw std::domain_error("degenerate fit: only one energy level observed");

    uint64_t total = 0;
    double e_sum = 0.0, flat_mean = 0.0;
    for (const auto& [e, c] : configs) {
        total += c;
        e_sum += e * static_cast<double>(c);
        flat_mean += e;
    }
    const double empirical_mean = e_sum / static_cast<double>(total);
    flat_mean /= static_cast<double>(configs.size());  // T -> inf limit

    BoltzmannFit fit;
    if (empirical_mean >= flat_mean - 1e-12) {
        // equal (or inverted) occupation: the boundary of the fit family
        fit.infinite_temperature = true;
        fit.t_e = std::numeric_limits<double>::infinity();
        fit.log_likelihood = log_likelihood(configs, 1e12);
        return fit;
    }

    // <E>_T is increasing in T: bracket then bisect
    double lo = 1e-9, hi = 1.0;
    while (boltzmann_mean(configs, hi) < empirical_mean && hi < 1e9) hi *= 2.0;
    while (boltzmann_mean(configs, lo) > empirical_mean && lo > 1e-15) lo /= 2.0;
    for (int it = 0; it < 200 && (hi - lo) > 1e-6 * std::max(1.0, lo); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (boltzmann_mean(configs, mid) < empirical_mean)
            lo = mid;
        else
            hi = mid;
    }
    fit.t_e = 0.5 * (lo + hi);
    fit.log_likelihood = log_likelihood(configs, fit.t_e);
    return fit;
}

std::map<double, double> equal_energy_dispersion(const ConfigCounts& configs) {
    std::map<double, std::pair<uint64_t, uint64_t>> minmax;  // energy -> (min, max) counts
    for (const auto& [e, c] : configs) {
        auto it = minmax.find(e);
        if (it == minmax.end())
            minmax[e] = {c, c};
        else {
            it->second.first = std::min(it->second.first, c);
            it->second.second = std::max(it->second.second, c);
        }
    }
    std::map<double, double> out;
    for (const auto& [e, mm] : minmax)
        out[e] = mm.first == 0 ? std::numeric_limits<double>::infinity()
                               : static_cast<double>(mm.second) / static_cast<double>(mm.first);
    return out;
}

double max_dispersion(const std::map<double, double>& per_level) {
    double m = 1.0;
    for (const auto& [e, r] : per_level) m = std::max(m, r);
    return m;
}

double noise_robustness(const QuadraticModel& spin_model, const NoiseOptions& opts) {
    if (spin_model.domain() != VarDomain::Spin)
        throw std::invalid_argument("noise_robustness expects a spin model");
    if (spin_model.num_vars() > 20)
        throw std::invalid_argument("noise_robustness caps at 20 variables");
    if (opts.trials < 1) throw std::invalid_argument("need at least one trial");

    const int n = spin_model.num_vars();
    const uint32_t total = uint32_t{1} << n;

    // nominal argmin set and spectral gap, exact
    const ModelGround nominal = exhaustive_model_ground(spin_model);
    std::set<uint32_t> nominal_set(nominal.minimizers.begin(), nominal.minimizers.end());
    const ScaledIntModel sim(spin_model);
    int64_t second_num = INT64_MAX;
    const int64_t min_num = nominal.min_energy.numerator() * (sim.den / nominal.min_energy.denominator());
    for (uint32_t x = 0; x < total; ++x) {
        const int64_t e = sim.energy_num(x);
        if (e > min_num) second_num = std::min(second_num, e);
    }
    const double gap = second_num == INT64_MAX
                           ? 1.0
                           : static_cast<double>(second_num - min_num) / static_cast<double>(sim.den);
    const double tol = 0.5 * gap;

    std::vector<double> h(n);
    for (int i = 0; i < n; ++i) h[i] = to_double(spin_model.linear(i));
    std::vector<std::pair<std::pair<int, int>, double>> quad;
    for (const auto& [pr, c] : spin_model.quadratic_terms()) quad.push_back({pr, to_double(c)});
    const double offset = to_double(spin_model.offset());

    int unchanged = 0;
    for (int trial = 0; trial < opts.trials; ++trial) {
        CounterRng rng(opts.seed, static_cast<uint64_t>(trial) + 1);
        auto draw = [&rng, &opts](double sigma) {
            if (sigma == 0.0) return 0.0;
            if (opts.dist == NoiseDistribution::Gaussian) return sigma * rng.normal();
            return sigma * (2.0 * rng.uniform01() - 1.0);  // uniform on [-sigma, sigma]
        };
        std::vector<double> ph(h);
        for (auto& v : ph) v += draw(opts.sigma_h);
        auto pquad = quad;
        for (auto& [pr, c] : pquad) c += draw(opts.sigma_j);

        double best = std::numeric_limits<double>::infinity();
        std::vector<double> energy(total);
        for (uint32_t x = 0; x < total; ++x) {
            double e = offset;
            for (int i = 0; i < n; ++i) e += ((x >> i) & 1u) ? ph[i] : -ph[i];
            for (const auto& [pr, c] : pquad)
                e += (((x >> pr.first) ^ (x >> pr.second)) & 1u) ? -c : c;
            energy[x] = e;
            best = std::min(best, e);
        }
        std::set<uint32_t> perturbed_set;
        for (uint32_t x = 0; x < total; ++x)
            if (energy[x] <= best + tol) perturbed_set.insert(x);
        if (perturbed_set == nominal_set) ++unchanged;
    }
    return static_cast<double>(unchanged) / static_cast<double>(opts.trials);
}

}  // namespace ramsey
