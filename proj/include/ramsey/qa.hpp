#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "ramsey/cost.hpp"
#include "ramsey/quadratic_model.hpp"

namespace ramsey {

inline constexpr int kMaxQaQubits = 20;

// Interpolation schedule H(t) = A(t/t_f) H_i + B(t/t_f) H_P, tabulated over
// s in [0,1] with linear interpolation. A decreases to A(1)=0, B increases
// from B(0)=0; hardware-measured curves load from a table file.
struct AnnealSchedule {
    double t_f = 1.0;
    std::vector<double> s;
    std::vector<double> a;
    std::vector<double> b;

    static AnnealSchedule linear(double t_f);
    static AnnealSchedule from_table(double t_f, const std::vector<std::array<double, 3>>& rows);

    double A(double frac) const;
    double B(double frac) const;
    void validate() const;
};

// The diagonal of H_P over computational basis states: entry x is the model
// energy (or Ramsey cost) of the assignment with variable i = bit i of x.
struct DiagonalProblem {
    int num_qubits = 0;
    std::vector<double> energies;  // size 2^num_qubits

    static DiagonalProblem from_model(const QuadraticModel& model);
    static DiagonalProblem from_instance(const RamseyInstance& inst);

    double ground_energy() const;
    std::vector<uint32_t> ground_states(double tol = 1e-9) const;
};

struct QuantumState {
    int num_qubits = 0;
    std::vector<std::complex<double>> amp;

    double norm() const;
};

// Uniform superposition of all basis states: the ground state of
// H_i = -sum_i sigma_x^i with eigenvalue -L.
QuantumState initial_state(int num_qubits);

// out = (A * H_i + B * diag) in, with H_i = -sum_i sigma_x^i applied as
// bit-flip strides. The serial kernel is the reference the parallel one is
// tested against.
void apply_hamiltonian_serial(const std::vector<std::complex<double>>& in,
                              std::vector<std::complex<double>>& out, double a_coef, double b_coef,
                              const std::vector<double>& diag, int num_qubits);
void apply_hamiltonian_parallel(const std::vector<std::complex<double>>& in,
                                std::vector<std::complex<double>>& out, double a_coef,
                                double b_coef, const std::vector<double>& diag, int num_qubits);

// Fixed-step RK4 integration of the Schrodinger equation from the uniform
// superposition to t = t_f. Deterministic; norm drift stays within
// integrator tolerance when steps resolve ||H|| dt.
QuantumState evolve(const DiagonalProblem& problem, const AnnealSchedule& sched, int steps,
                    bool parallel = true);

// Probability of each distinct final energy under a computational-basis
// measurement.
std::map<double, double> measure_energies(const QuantumState& state, const DiagonalProblem& problem);

double subspace_probability(const QuantumState& state, const DiagonalProblem& problem,
                            double energy, double tol = 1e-9);

// Lowest k eigenvalues (with multiplicity) of A(s) H_i + B(s) H_P, ascending.
// Endpoint cases use closed forms; mid-anneal uses matrix-free block
// Lanczos. Capped at 14 qubits.
std::vector<double> instantaneous_spectrum(const DiagonalProblem& problem,
                                           const AnnealSchedule& sched, double s_frac, int k);

}  // namespace ramsey
