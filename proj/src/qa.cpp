#include "ramsey/qa.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "ramsey/rng.hpp"

namespace ramsey {

AnnealSchedule AnnealSchedule::linear(double t_f) {
    AnnealSchedule sched;
    sched.t_f = t_f;
    sched.s = {0.0, 1.0};
    sched.a = {1.0, 0.0};
    sched.b = {0.0, 1.0};
    sched.validate();
    return sched;
}

AnnealSchedule AnnealSchedule::from_table(double t_f,
                                          const std::vector<std::array<double, 3>>& rows) {
    AnnealSchedule sched;
    sched.t_f = t_f;
    for (const auto& r : rows) {
        sched.s.push_back(r[0]);
        sched.a.push_back(r[1]);
        sched.b.push_back(r[2]);
    }
    sched.validate();
    return sched;
}

void AnnealSchedule::validate() const {
    if (!(t_f > 0)) throw std::invalid_argument("anneal time must be positive");
    if (s.size() < 2 || s.size() != a.size() || s.size() != b.size())
        throw std::invalid_argument("schedule table needs >= 2 aligned rows");
    if (s.front() != 0.0 || s.back() != 1.0)
        throw std::invalid_argument("schedule must span s in [0, 1]");
    for (size_t i = 1; i < s.size(); ++i)
        if (!(s[i] > s[i - 1])) throw std::invalid_argument("schedule s-column must increase");
    if (a.back() != 0.0) throw std::invalid_argument("A(1) must vanish");
    if (b.front() != 0.0) throw std::invalid_argument("B(0) must vanish");
    if (!(a.front() > 0.0) || !(b.back() > 0.0))
        throw std::invalid_argument("A(0) and B(1) must be positive");
    for (size_t i = 1; i < s.size(); ++i) {
        if (a[i] > a[i - 1]) throw std::invalid_argument("A must be non-increasing");
        if (b[i] < b[i - 1]) throw std::invalid_argument("B must be non-decreasing");
        if (a[i] < 0 || b[i] < 0) throw std::invalid_argument("A, B must be non-negative");
    }
}

namespace {

double interp(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
    if (x <= xs.front()) return ys.front();
    if (x >= xs.back()) return ys.back();
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const size_t hi = static_cast<size_t>(it - xs.begin());
    const double t = (x - xs[hi - 1]) / (xs[hi] - xs[hi - 1]);
    return ys[hi - 1] + t * (ys[hi] - ys[hi - 1]);
}

void check_qubit_cap(int num_qubits, int cap) {
    if (num_qubits < 1 || num_qubits > cap)
        throw std::invalid_argument("qubit count " + std::to_string(num_qubits) +
                                    " outside [1, " + std::to_string(cap) + "]");
}

}  // namespace

double AnnealSchedule::A(double frac) const { return interp(s, a, frac); }
double AnnealSchedule::B(double frac) const { return interp(s, b, frac); }

DiagonalProblem DiagonalProblem::from_model(const QuadraticModel& model) {
    check_qubit_cap(model.num_vars(), kMaxQaQubits);
    DiagonalProblem p;
    p.num_qubits = model.num_vars();
    const ScaledIntModel sim(model);
    const size_t dim = size_t{1} << p.num_qubits;
    p.energies.resize(dim);
    for (size_t x = 0; x < dim; ++x)
        p.energies[x] = static_cast<double>(sim.energy_num(static_cast<uint32_t>(x))) /
                        static_cast<double>(sim.den);
    return p;
}

DiagonalProblem DiagonalProblem::from_instance(const RamseyInstance& inst) {
    const RamseyEvaluator eval(inst);
    check_qubit_cap(eval.n_bits(), kMaxQaQubits);
    DiagonalProblem p;
    p.num_qubits = eval.n_bits();
    const size_t dim = size_t{1} << p.num_qubits;
    p.energies.resize(dim);
    for (size_t x = 0; x < dim; ++x) p.energies[x] = static_cast<double>(eval.energy(x));
    return p;
}

double DiagonalProblem::ground_energy() const {
    return *std::min_element(energies.begin(), energies.end());
}

std::vector<uint32_t> DiagonalProblem::ground_states(double tol) const {
    const double gs = ground_energy();
    std::vector<uint32_t> out;
    for (size_t x = 0; x < energies.size(); ++x)
        if (energies[x] <= gs + tol) out.push_back(static_cast<uint32_t>(x));
    return out;
}

double QuantumState::norm() const {
    double n2 = 0.0;
    for (const auto& c : amp) n2 += std::norm(c);
    return std::sqrt(n2);
}

QuantumState initial_state(int num_qubits) {
    check_qubit_cap(num_qubits, kMaxQaQubits);
    QuantumState st;
    st.num_qubits = num_qubits;
    const size_t dim = size_t{1} << num_qubits;
    st.amp.assign(dim, std::complex<double>(std::pow(2.0, -0.5 * num_qubits), 0.0));
    return st;
}

void apply_hamiltonian_serial(const std::vector<std::complex<double>>& in,
                              std::vector<std::complex<double>>& out, double a_coef, double b_coef,
                              const std::vector<double>& diag, int num_qubits) {
    const size_t dim = size_t{1} << num_qubits;
    out.resize(dim);
    for (size_t x = 0; x < dim; ++x) {
        std::complex<double> acc = b_coef * diag[x] * in[x];
        for (int i = 0; i < num_qubits; ++i) acc -= a_coef * in[x ^ (size_t{1} << i)];
        out[x] = acc;
    }
}

void apply_hamiltonian_parallel(const std::vector<std::complex<double>>& in,
                                std::vector<std::complex<double>>& out, double a_coef,
                                double b_coef, const std::vector<double>& diag, int num_qubits) {
    const size_t dim = size_t{1} << num_qubits;
    out.resize(dim);
    const int64_t n = static_cast<int64_t>(dim);
#pragma omp parallel for schedule(static)
    for (int64_t x = 0; x < n; ++x) {
        std::complex<double> acc = b_coef * diag[x] * in[x];
        for (int i = 0; i < num_qubits; ++i) acc -= a_coef * in[x ^ (int64_t{1} << i)];
        out[x] = acc;
    }
}

QuantumState evolve(const DiagonalProblem& problem, const AnnealSchedule& sched, int steps,
                    bool parallel) {
    sched.validate();
    check_qubit_cap(problem.num_qubits, kMaxQaQubits);
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");

    QuantumState state = initial_state(problem.num_qubits);
    const size_t dim = state.amp.size();
    const double dt = sched.t_f / steps;

    std::vector<std::complex<double>> k1(dim), k2(dim), k3(dim), k4(dim), stage(dim), h(dim);
    const std::complex<double> minus_i(0.0, -1.0);

    auto deriv = [&](const std::vector<std::complex<double>>& y, double t,
                     std::vector<std::complex<double>>& k) {
        const double frac = t / sched.t_f;
        if (parallel)
            apply_hamiltonian_parallel(y, h, sched.A(frac), sched.B(frac), problem.energies,
                                       problem.num_qubits);
        else
            apply_hamiltonian_serial(y, h, sched.A(frac), sched.B(frac), problem.energies,
                                     problem.num_qubits);
        for (size_t x = 0; x < dim; ++x) k[x] = minus_i * h[x];
    };

    for (int step = 0; step < steps; ++step) {
        const double t = step * dt;
        deriv(state.amp, t, k1);
        for (size_t x = 0; x < dim; ++x) stage[x] = state.amp[x] + 0.5 * dt * k1[x];
        deriv(stage, t + 0.5 * dt, k2);
        for (size_t x = 0; x < dim; ++x) stage[x] = state.amp[x] + 0.5 * dt * k2[x];
        deriv(stage, t + 0.5 * dt, k3);
        for (size_t x = 0; x < dim; ++x) stage[x] = state.amp[x] + dt * k3[x];
        deriv(stage, t + dt, k4);
        for (size_t x = 0; x < dim; ++x)
            state.amp[x] += dt / 6.0 * (k1[x] + 2.0 * k2[x] + 2.0 * k3[x] + k4[x]);
    }
    return state;
}

std::map<double, double> measure_energies(const QuantumState& state,
                                          const DiagonalProblem& problem) {
    if (state.num_qubits != problem.num_qubits || state.amp.size() != problem.energies.size())
        throw std::invalid_argument("state and problem dimensions differ");
    std::map<double, double> dist;
    for (size_t x = 0; x < state.amp.size(); ++x) dist[problem.energies[x]] += std::norm(state.amp[x]);
    return dist;
}

double subspace_probability(const QuantumState& state, const DiagonalProblem& problem,
                            double energy, double tol) {
    if (state.amp.size() != problem.energies.size())
        throw std::invalid_argument("state and problem dimensions differ");
    double p = 0.0;
    for (size_t x = 0; x < state.amp.size(); ++x)
        if (std::abs(problem.energies[x] - energy) <= tol) p += std::norm(state.amp[x]);
    return p;
}

namespace {

// cyclic Jacobi on a dense symmetric matrix; ascending eigenvalues
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
    auto at = [&a, n](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (off < 1e-26) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = at(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

std::vector<double> instantaneous_spectrum(const DiagonalProblem& problem,
                                           const AnnealSchedule& sched, double s_frac, int k) {
    check_qubit_cap(problem.num_qubits, 14);
    if (k < 1) throw std::invalid_argument("need k >= 1 eigenvalues");
    if (s_frac < 0.0 || s_frac > 1.0) throw std::invalid_argument("s must lie in [0, 1]");
    const size_t dim = problem.energies.size();
    if (static_cast<size_t>(k) > dim) throw std::invalid_argument("k exceeds the dimension");
    const double a = sched.A(s_frac);
    const double b = sched.B(s_frac);
    const int L = problem.num_qubits;

    if (b == 0.0) {
        // pure transverse field: eigenvalues a*(2w - L), multiplicity C(L, w)
        std::vector<double> ev;
        for (int w = 0; w <= L && static_cast<int>(ev.size()) < k; ++w) {
            const int64_t mult = binomial(L, w);
            for (int64_t i = 0; i < mult && static_cast<int>(ev.size()) < k; ++i)
                ev.push_back(a * (2.0 * w - L));
        }
        return ev;
    }
    if (a == 0.0) {
        std::vector<double> ev(problem.energies);
        std::partial_sort(ev.begin(), ev.begin() + k, ev.end());
        ev.resize(k);
        for (double& e : ev) e *= b;
        return ev;
    }

    // block Krylov with full reorthogonalization; real arithmetic suffices
    const int block = k;
    const int max_basis = static_cast<int>(std::min<size_t>(dim, 256));
    std::vector<std::vector<double>> basis;   // orthonormal vectors
    std::vector<std::vector<double>> h_basis; // H * basis[i]

    auto apply = [&](const std::vector<double>& in, std::vector<double>& out) {
        out.resize(dim);
        for (size_t x = 0; x < dim; ++x) {
            double acc = b * problem.energies[x] * in[x];
            for (int i = 0; i < L; ++i) acc -= a * in[x ^ (size_t{1} << i)];
            out[x] = acc;
        }
    };
    auto dot = [&](const std::vector<double>& u, const std::vector<double>& v) {
        double d = 0.0;
        for (size_t x = 0; x < dim; ++x) d += u[x] * v[x];
        return d;
    };
    auto orthonormalize = [&](std::vector<double>& v) -> bool {
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : basis) {
                const double d = dot(q, v);
                for (size_t x = 0; x < dim; ++x) v[x] -= d * q[x];
            }
        const double nrm = std::sqrt(dot(v, v));
        if (nrm < 1e-10) return false;
        for (size_t x = 0; x < dim; ++x) v[x] /= nrm;
        return true;
    };

    CounterRng rng(0x5eedu, static_cast<uint64_t>(dim));
    for (int i = 0; i < block; ++i) {
        std::vector<double> v(dim);
        for (size_t x = 0; x < dim; ++x) v[x] = rng.normal();
        if (orthonormalize(v)) {
            basis.push_back(std::move(v));
            h_basis.emplace_back();
            apply(basis.back(), h_basis.back());
        }
    }

    std::vector<double> prev;
    int front = 0;
    while (static_cast<int>(basis.size()) < max_basis) {
        const int current = static_cast<int>(basis.size());
        for (int i = front; i < current && static_cast<int>(basis.size()) < max_basis; ++i) {
            std::vector<double> v = h_basis[i];
            if (orthonormalize(v)) {
                basis.push_back(std::move(v));
                h_basis.emplace_back();
                apply(basis.back(), h_basis.back());
            }
        }
        front = current;
        if (static_cast<int>(basis.size()) == current) break;  // subspace closed

        const int m = static_cast<int>(basis.size());
        std::vector<double> proj(static_cast<size_t>(m) * m, 0.0);
        for (int i = 0; i < m; ++i)
            for (int j = i; j < m; ++j)
                proj[static_cast<size_t>(i) * m + j] = proj[static_cast<size_t>(j) * m + i] =
                    dot(basis[i], h_basis[j]);
        auto ritz = jacobi_eigenvalues(std::move(proj), m);
        ritz.resize(std::min<size_t>(ritz.size(), static_cast<size_t>(k)));
        if (prev.size() == ritz.size()) {
            double change = 0.0;
            for (size_t i = 0; i < ritz.size(); ++i)
                change = std::max(change, std::abs(ritz[i] - prev[i]));
            if (change < 1e-11 * std::max(1.0, std::abs(ritz.front()))) return ritz;
        }
        prev = std::move(ritz);
    }

    const int m = static_cast<int>(basis.size());
    std::vector<double> proj(static_cast<size_t>(m) * m, 0.0);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j)
            proj[static_cast<size_t>(i) * m + j] = proj[static_cast<size_t>(j) * m + i] =
                dot(basis[i], h_basis[j]);
    auto ritz = jacobi_eigenvalues(std::move(proj), m);
    ritz.resize(std::min<size_t>(ritz.size(), static_cast<size_t>(k)));
    return ritz;
}

}  // namespace ramsey
