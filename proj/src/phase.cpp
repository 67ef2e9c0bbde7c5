#include "whphase/phase.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "whphase/errors.hpp"

namespace whphase::phase {

namespace {

void check_index(int d, int m, const char* what) {
    if (m < 0 || m >= d)
        throw ValidationError(std::string(what) + " must lie in [0, " + std::to_string(d - 1) + "]");
}

std::size_t idx(int n) { return static_cast<std::size_t>(n); }

}  // namespace

Matrix phase_operator(const AlgebraSpec& spec) {
    const int d = spec.dim();
    Matrix e(idx(d));
    for (int n = 1; n < d; ++n) e(idx(n - 1), idx(n)) = std::polar(1.0, (spec.F(n) - spec.F(n - 1)) * spec.phi);
    e(idx(d - 1), 0) = std::polar(1.0, (spec.F(0) - spec.F(d - 1)) * spec.phi);
    return e;
}

double phase_angle(int d, int m) { return 2.0 * kPi * static_cast<double>(m) / static_cast<double>(d); }

StateVector phase_state(const AlgebraSpec& spec, int m) {
    const int d = spec.dim();
    check_index(d, m, "m");
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    StateVector v(idx(d));
    for (int n = 0; n < d; ++n)
        v[idx(n)] = amp * std::polar(1.0, -spec.F(n) * spec.phi) * root_of_unity(d, static_cast<long>(m) * n);
    return v;
}

PhaseBasis phase_basis(const AlgebraSpec& spec) {
    PhaseBasis basis;
    basis.dim = spec.dim();
    basis.phi = spec.phi;
    for (int m = 0; m < basis.dim; ++m) {
        basis.states.push_back(phase_state(spec, m));
        basis.angles.push_back(phase_angle(basis.dim, m));
    }
    return basis;
}

StateVector evolve_phase_state(const AlgebraSpec& spec, int m, double t) {
    StateVector v = phase_state(spec, m);
    for (int n = 0; n < spec.dim(); ++n) v[idx(n)] *= std::polar(1.0, -spec.F(n) * t);
    return v;
}

Complex overlap_closed_form(const AlgebraSpec& spec, int m, int m_prime, double phi, double phi_prime) {
    const int d = spec.dim();
    const double dd = static_cast<double>(d);
    Complex acc = 0.0;
    for (int n = 0; n < d; ++n) {
        const double rho = -static_cast<double>(m - m_prime) * n + dd / (2.0 * kPi) * (phi - phi_prime) * spec.F(n);
        acc += std::polar(1.0, 2.0 * kPi * rho / dd);
    }
    return acc / dd;
}

Matrix hermitian_theta(const AlgebraSpec& spec) {
    const int d = spec.dim();
    Matrix theta(idx(d));
    for (int m = 1; m < d; ++m) {
        const auto v = phase_state(spec, m);
        theta += phase_angle(d, m) * Matrix::outer(v, v);
    }
    return theta;
}

Matrix exp_i_theta(const AlgebraSpec& spec) {
    const int d = spec.dim();
    Matrix out(idx(d));
    for (int m = 0; m < d; ++m) {
        const auto v = phase_state(spec, m);
        out += root_of_unity(d, m) * Matrix::outer(v, v);
    }
    return out;
}

ThetaKernel theta_kernel(const AlgebraSpec& spec, int n, int n_prime) {
    const int d = spec.dim();
    check_index(d, n, "n");
    check_index(d, n_prime, "n'");
    const int delta = n - n_prime;

    Complex value = 0.0;
    for (int m = 0; m < d; ++m) value += static_cast<double>(m) * root_of_unity(d, static_cast<long>(m) * delta);

    Complex closed;
    if (delta == 0) {
        closed = static_cast<double>(d) * spec.s();
    } else {
        const Complex qd = root_of_unity(d, delta);
        closed = static_cast<double>(d) * qd / (1.0 - qd);
    }
    return {value, closed, std::abs(value - closed)};
}

Matrix phase_number_commutator(const AlgebraSpec& spec) {
    const Matrix theta = hermitian_theta(spec);
    const Matrix number = algebra::ladder_matrices(spec).number;
    return commutator(theta, number);
}

Matrix phase_number_commutator_closed_form(const AlgebraSpec& spec) {
    const int d = spec.dim();
    Matrix out(idx(d));
    for (int n = 0; n < d; ++n)
        for (int np = 0; np < d; ++np) {
            if (n == np) continue;
            const Complex qd = root_of_unity(d, n - np);
            out(idx(n), idx(np)) = 2.0 * kPi / d * static_cast<double>(n - np) * qd / (qd - 1.0) *
                                   std::polar(1.0, -(spec.F(n) - spec.F(np)) * spec.phi);
        }
    return out;
}

PartialPhaseState make_partial_phase_state(std::vector<double> coeffs, double alpha, double phi) {
    if (coeffs.empty()) throw ValidationError("partial phase state: coefficients must be non-empty");
    double norm_sq = 0.0;
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        if (!std::isfinite(coeffs[n]) || coeffs[n] < 0.0)
            throw ValidationError("Phi[" + std::to_string(n) + "] must be nonnegative");
        norm_sq += coeffs[n] * coeffs[n];
    }
    if (std::abs(norm_sq - 1.0) > 1e-12)
        throw ValidationError("partial phase state: sum of Phi_n^2 must equal 1");
    return {std::move(coeffs), alpha, phi};
}

PartialPhaseState uniform_partial_phase_state(int d, double alpha, double phi) {
    if (d < 1) throw InvalidDimension("uniform_partial_phase_state: d must be positive");
    return make_partial_phase_state(std::vector<double>(idx(d), 1.0 / std::sqrt(static_cast<double>(d))), alpha, phi);
}

StateVector amplitudes(const PartialPhaseState& state, const AlgebraSpec& spec) {
    const int d = spec.dim();
    if (static_cast<int>(state.coeffs.size()) != d)
        throw ValidationError("partial phase state length does not match spec dimension");
    StateVector v(idx(d));
    for (int n = 0; n < d; ++n)
        v[idx(n)] = state.coeffs[idx(n)] * std::polar(1.0, n * state.alpha - spec.F(n) * state.phi);
    return v;
}

namespace {

void check_same_phi(const PartialPhaseState& state, const AlgebraSpec& spec) {
    if (state.phi != spec.phi)
        throw ValidationError("partial phase state phi does not match spec phi");
}

}  // namespace

std::vector<double> phase_distribution(const PartialPhaseState& state, const AlgebraSpec& spec) {
    check_same_phi(state, spec);
    const auto v = amplitudes(state, spec);
    std::vector<double> p(idx(spec.dim()));
    for (int m = 0; m < spec.dim(); ++m) p[idx(m)] = std::norm(inner(phase_state(spec, m), v));
    return p;
}

std::vector<double> phase_distribution_closed_form(const PartialPhaseState& state, int d) {
    if (static_cast<int>(state.coeffs.size()) != d)
        throw ValidationError("partial phase state length does not match dimension");
    std::vector<double> p(idx(d));
    for (int m = 0; m < d; ++m) {
        const double theta = phase_angle(d, m);
        double acc = 0.0;
        for (int n = 0; n < d; ++n)
            for (int np = 0; np < n; ++np)
                acc += state.coeffs[idx(n)] * state.coeffs[idx(np)] * std::cos((n - np) * (state.alpha - theta));
        p[idx(m)] = (1.0 + 2.0 * acc) / d;
    }
    return p;
}

std::pair<double, double> distribution_bounds(const PartialPhaseState& state) {
    const double d = static_cast<double>(state.coeffs.size());
    const double sum = std::accumulate(state.coeffs.begin(), state.coeffs.end(), 0.0);
    return {(2.0 - sum * sum) / d, sum * sum / d};
}

ThetaExpectation theta_expectation(const PartialPhaseState& state, const AlgebraSpec& spec) {
    check_same_phi(state, spec);
    const int d = spec.dim();
    const auto v = amplitudes(state, spec);
    const Matrix theta = hermitian_theta(spec);

    ThetaExpectation out;
    out.total = inner(v, theta * std::span<const Complex>(v)).real();
    for (int n = 0; n < d; ++n) out.diag += std::norm(v[idx(n)]) * theta(idx(n), idx(n)).real();
    out.nondiag = out.total - out.diag;

    const double step = kPi / d;
    for (int n = 0; n < d; ++n)
        for (int np = 0; np < n; ++np)
            out.nondiag_closed_form += state.coeffs[idx(n)] * state.coeffs[idx(np)] *
                                       std::sin((state.alpha - step) * (n - np)) / std::sin(step * (n - np));
    out.nondiag_closed_form *= 2.0 * kPi / d;
    return out;
}

}  // namespace whphase::phase
