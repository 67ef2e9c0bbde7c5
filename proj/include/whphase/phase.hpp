#pragma once

#include <utility>
#include <vector>

#include "whphase/algebra.hpp"
#include "whphase/numerics.hpp"

namespace whphase::phase {

using algebra::AlgebraSpec;

/// Unitary part of the polar decomposition a- = E sqrt(F(N)):
///   E|n> = e^{i[F(n)-F(n-1)]phi} |n-1>,  E|0> = e^{i[F(0)-F(2s)]phi} |2s>.
Matrix phase_operator(const AlgebraSpec& spec);

// theta_m = 2 pi m / d on the window m = 0..2s
double phase_angle(int d, int m);

/// |m,phi> = d^{-1/2} sum_n e^{-i F(n) phi} q^{mn} |n>
StateVector phase_state(const AlgebraSpec& spec, int m);

struct PhaseBasis {
    int dim = 0;
    double phi = 0.0;
    std::vector<StateVector> states;  // states[m] = |m,phi>
    std::vector<double> angles;       // angles[m] = theta_m
};

PhaseBasis phase_basis(const AlgebraSpec& spec);

// e^{-iHt}|m,phi>, exponential taken on the diagonal of H = F(N)
StateVector evolve_phase_state(const AlgebraSpec& spec, int m, double t);

/// <m,phi|m',phi'> from the closed form (1/d) sum_n q^{rho(m-m', phi-phi', n)}
/// with rho = -(m-m')n + (d / 2pi)(phi - phi') F(n); F comes from `spec`.
Complex overlap_closed_form(const AlgebraSpec& spec, int m, int m_prime, double phi, double phi_prime);

/// Theta = sum_m theta_m |m,phi><m,phi|, m = 0..2s.
Matrix hermitian_theta(const AlgebraSpec& spec);

// e^{i Theta} assembled in the phase eigenbasis
Matrix exp_i_theta(const AlgebraSpec& spec);

struct ThetaKernel {
    Complex value;        // sum_{m=0}^{2s} m q^{m(n-n')}
    Complex closed_form;  // d [ s delta + q^D / (1 - q^D) (1 - delta) ], D = n - n'
    double discrepancy;   // |value - closed_form|
};

ThetaKernel theta_kernel(const AlgebraSpec& spec, int n, int n_prime);

// Theta N - N Theta from the matrices
Matrix phase_number_commutator(const AlgebraSpec& spec);

/// (2pi/d) sum_{n != n'} (n-n') q^D / (q^D - 1) e^{-i[F(n)-F(n')]phi} |n><n'|
Matrix phase_number_commutator_closed_form(const AlgebraSpec& spec);

/// sum_n Phi_n e^{i n alpha} e^{-i F(n) phi} |n>, Phi_n >= 0, sum Phi_n^2 = 1.
struct PartialPhaseState {
    std::vector<double> coeffs;
    double alpha = 0.0;
    double phi = 0.0;
};

// Validates nonnegativity and normalization (1e-12).
PartialPhaseState make_partial_phase_state(std::vector<double> coeffs, double alpha, double phi);
PartialPhaseState uniform_partial_phase_state(int d, double alpha, double phi);

StateVector amplitudes(const PartialPhaseState& state, const AlgebraSpec& spec);

// P(m) = |<m,phi|Phi>|^2 by direct inner products
std::vector<double> phase_distribution(const PartialPhaseState& state, const AlgebraSpec& spec);

/// 1/d + (2/d) sum_{n>n'} Phi_n Phi_n' cos[(n-n')(alpha - theta_m)]
std::vector<double> phase_distribution_closed_form(const PartialPhaseState& state, int d);

/// [(2 - (sum Phi)^2)/d, (sum Phi)^2/d]
std::pair<double, double> distribution_bounds(const PartialPhaseState& state);

struct ThetaExpectation {
    double total = 0.0;    // <Phi|Theta|Phi> with spectral Theta
    double diag = 0.0;     // n = n' terms
    double nondiag = 0.0;  // total - diag
    // (2pi/d) sum_{n>n'} Phi_n Phi_n' sin((alpha - pi/d)(n-n')) / sin(pi (n-n')/d)
    double nondiag_closed_form = 0.0;
};

ThetaExpectation theta_expectation(const PartialPhaseState& state, const AlgebraSpec& spec);

}  // namespace whphase::phase
