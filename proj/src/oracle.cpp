#include "ramsey/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

namespace ramsey {

namespace {

struct ScanPartial {
    int64_t min_energy = INT64_MAX;
    uint64_t count = 0;
    std::vector<uint64_t> minimizers;
    bool overflow = false;  // dropped the list after passing the cap
    std::vector<uint64_t> histogram;  // indexed by energy; the cost is bounded

    void feed(uint64_t bits, int64_t e) {
        ++histogram[e];
        if (e < min_energy) {
            min_energy = e;
            count = 1;
            minimizers.clear();
            minimizers.push_back(bits);
            overflow = false;
        } else if (e == min_energy) {
            ++count;
            if (!overflow) {
                if (minimizers.size() < kMinimizerCap)
                    minimizers.push_back(bits);
                else {
                    minimizers.clear();
                    overflow = true;
                }
            }
        }
    }

    void merge(ScanPartial&& other) {
        if (histogram.size() < other.histogram.size()) histogram.resize(other.histogram.size(), 0);
        for (size_t e = 0; e < other.histogram.size(); ++e) histogram[e] += other.histogram[e];
        if (other.min_energy < min_energy) {
            min_energy = other.min_energy;
            count = other.count;
            minimizers = std::move(other.minimizers);
            overflow = other.overflow;
        } else if (other.min_energy == min_energy) {
            count += other.count;
            if (overflow || other.overflow || minimizers.size() + other.minimizers.size() > kMinimizerCap) {
                minimizers.clear();
                overflow = true;
            } else {
                minimizers.insert(minimizers.end(), other.minimizers.begin(),
                                  other.minimizers.end());
            }
        }
    }
};

// h <= C(N,m) + C(N,n): the subset sums cannot exceed their subset counts
size_t energy_bound(const RamseyEvaluator& eval) {
    const RamseyInstance& inst = eval.instance();
    auto binom = [](int n, int k) -> int64_t {
        if (k < 0 || k > n) return 0;
        int64_t r = 1;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    return static_cast<size_t>(binom(inst.n_vertices, inst.clique_order) +
                               binom(inst.n_vertices, inst.independent_order)) + 1;
}

ScanPartial scan_range(const RamseyEvaluator& eval, uint64_t lo, uint64_t hi) {
    ScanPartial part;
    part.histogram.assign(energy_bound(eval), 0);
    for (uint64_t x = lo; x < hi; ++x) part.feed(x, eval.energy(x));
    return part;
}

GroundTruth finish(const RamseyInstance& inst, ScanPartial&& part) {
    GroundTruth gt;
    gt.instance = inst;
    gt.e_gs = part.min_energy;
    gt.degeneracy = part.count;
    for (size_t e = 0; e < part.histogram.size(); ++e)
        if (part.histogram[e]) gt.histogram[static_cast<int64_t>(e)] = part.histogram[e];
    if (!part.overflow && part.count <= kMinimizerCap) {
        gt.minimizers.reserve(part.minimizers.size());
        for (uint64_t bits : part.minimizers) gt.minimizers.emplace_back(inst.n_vertices, bits);
    }
    return gt;
}

void check_scan_cap(int n_bits) {
    if (n_bits > kOracleMaxBits)
        throw std::invalid_argument("L_N = " + std::to_string(n_bits) +
                                    " exceeds the enumeration cap of " +
                                    std::to_string(kOracleMaxBits) + " bits");
}

}  // namespace

GroundTruth exhaustive_ground_serial(const RamseyInstance& inst) {
    const RamseyEvaluator eval(inst);
    check_scan_cap(eval.n_bits());
    const uint64_t total = uint64_t{1} << eval.n_bits();
    return finish(inst, scan_range(eval, 0, total));
}

GroundTruth exhaustive_ground(const RamseyInstance& inst, bool parallel) {
    if (!parallel) return exhaustive_ground_serial(inst);
    const RamseyEvaluator eval(inst);
    check_scan_cap(eval.n_bits());
    const uint64_t total = uint64_t{1} << eval.n_bits();

    const int pieces = std::max(1, omp_get_max_threads() * 4);
    const uint64_t chunk = (total + pieces - 1) / pieces;
    std::vector<ScanPartial> parts(pieces);

#pragma omp parallel for schedule(dynamic)
    for (int p = 0; p < pieces; ++p) {
        const uint64_t lo = chunk * static_cast<uint64_t>(p);
        const uint64_t hi = std::min(total, lo + chunk);
        if (lo < hi) parts[p] = scan_range(eval, lo, hi);
    }

    ScanPartial all;  // merge in range order keeps the minimizer list sorted
    for (auto& p : parts) all.merge(std::move(p));
    return finish(inst, std::move(all));
}

namespace {

struct ModelScanPartial {
    int64_t min_num = INT64_MAX;
    uint64_t count = 0;
    std::vector<uint32_t> minimizers;
    bool overflow = false;

    void feed(uint32_t x, int64_t e) {
        if (e < min_num) {
            min_num = e;
            count = 1;
            minimizers.assign(1, x);
            overflow = false;
        } else if (e == min_num) {
            ++count;
            if (!overflow) {
                if (minimizers.size() < kMinimizerCap)
                    minimizers.push_back(x);
                else {
                    minimizers.clear();
                    overflow = true;
                }
            }
        }
    }

    void merge(ModelScanPartial&& o) {
        if (o.min_num < min_num) {
            min_num = o.min_num;
            count = o.count;
            minimizers = std::move(o.minimizers);
            overflow = o.overflow;
        } else if (o.min_num == min_num) {
            count += o.count;
            if (overflow || o.overflow || minimizers.size() + o.minimizers.size() > kMinimizerCap) {
                minimizers.clear();
                overflow = true;
            } else {
                minimizers.insert(minimizers.end(), o.minimizers.begin(), o.minimizers.end());
            }
        }
    }
};

}  // namespace

ModelGround exhaustive_model_ground_serial(const QuadraticModel& model) {
    return exhaustive_model_ground(model, false);
}

ModelGround exhaustive_model_ground(const QuadraticModel& model, bool parallel) {
    if (model.num_vars() < 1 || model.num_vars() > kOracleMaxBits)
        throw std::invalid_argument("model enumeration needs 1..30 variables");
    const ScaledIntModel sim(model);
    const uint64_t total = uint64_t{1} << model.num_vars();

    ModelScanPartial all;
    if (!parallel) {
        for (uint64_t x = 0; x < total; ++x)
            all.feed(static_cast<uint32_t>(x), sim.energy_num(static_cast<uint32_t>(x)));
    } else {
        const int pieces = std::max(1, omp_get_max_threads() * 4);
        const uint64_t chunk = (total + pieces - 1) / pieces;
        std::vector<ModelScanPartial> parts(pieces);
#pragma omp parallel for schedule(dynamic)
        for (int p = 0; p < pieces; ++p) {
            const uint64_t lo = chunk * static_cast<uint64_t>(p);
            const uint64_t hi = std::min(total, lo + chunk);
            for (uint64_t x = lo; x < hi; ++x)
                parts[p].feed(static_cast<uint32_t>(x), sim.energy_num(static_cast<uint32_t>(x)));
        }
        for (auto& p : parts) all.merge(std::move(p));
    }

    ModelGround out;
    out.min_energy = Rational(all.min_num, sim.den);
    out.degeneracy = all.count;
    if (!all.overflow && all.count <= kMinimizerCap) out.minimizers = std::move(all.minimizers);
    return out;
}

}  // namespace ramsey
