#include "whphase/bellmub.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "whphase/algebra.hpp"
#include "whphase/errors.hpp"
#include "whphase/phase.hpp"

namespace whphase::bellmub {

namespace {

std::size_t idx(long n) { return static_cast<std::size_t>(n); }

long wrap(long n, long d) {
    long r = n % d;
    return r < 0 ? r + d : r;
}

void require_odd(int d, const char* what) {
    if (d < 3 || d % 2 == 0)
        throw InvalidDimension(std::string(what) + ": d must be odd and >= 3 (d = 2s+1), got " + std::to_string(d));
}

void check_label(int d, BellLabel label) {
    if (label.k < 0 || label.k >= d || label.p < 0 || label.p >= d)
        throw ValidationError("Bell label (k, p) must lie in [0, d)");
}

BipartiteState zero_state(int d) { return {d, StateVector(idx(d) * idx(d))}; }

BipartiteState add(BipartiteState a, const BipartiteState& b, Complex scale = 1.0) {
    for (std::size_t i = 0; i < a.amps.size(); ++i) a.amps[i] += scale * b.amps[i];
    return a;
}

}  // namespace

BipartiteState mes(int d) {
    require_odd(d, "mes");
    auto state = zero_state(d);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (int n = 0; n < d; ++n) state.amps[idx(n) * idx(d) + idx(n)] = amp;
    return state;
}

BipartiteState bell_state(int d, BellLabel label) {
    if (d < 1) throw InvalidDimension("bell_state: d must be positive");
    check_label(d, label);
    auto state = zero_state(d);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (int n = 0; n < d; ++n)
        state.amps[idx(n) * idx(d) + idx(wrap(n + label.k, d))] =
            amp * root_of_unity(d, static_cast<long>(n) * label.p);
    return state;
}

BellGeneration bell_from_phase_op(int d, BellLabel label) {
    require_odd(d, "bell_from_phase_op");
    check_label(d, label);
    if (label.k == 0)
        throw UnsupportedConfiguration("bell_from_phase_op: k = 0 is not generated by E^k (phi divides by k)");

    const int two_s = d - 1;
    BellGeneration out;
    out.phi = -(static_cast<double>(two_s) / d) * (static_cast<double>(label.p) / label.k) * kPi;
    const auto spec = algebra::build_spec(two_s, std::vector<double>(idx(d), 1.0), out.phi);
    const Matrix ek = matrix_power(phase::phase_operator(spec), static_cast<unsigned>(label.k));
    const Matrix op = kron(ek, Matrix::identity(idx(d)));

    const auto start = mes(d);
    out.generated = {d, op * std::span<const Complex>(start.amps)};
    // q^{p(k-2s-1)/2} = e^{i pi p (k - d)/d}
    out.predicted_phase = std::polar(1.0, kPi * label.p * (label.k - d) / static_cast<double>(d));
    const auto target = bell_state(d, label);
    out.residual = distance(out.generated.amps, scaled(target.amps, out.predicted_phase));
    return out;
}

SchmidtDecomposition schmidt(const BipartiteState& state) {
    const int d = state.dim;
    if (d < 1 || state.amps.size() != idx(d) * idx(d))
        throw InvalidDimension("schmidt: amplitude vector must have length d^2");
    if (std::abs(norm(state.amps) - 1.0) > 1e-10) throw ContractViolation("schmidt: state is not normalized");

    // rho_A = M M^dagger with M[n][n'] = amplitude(n, n')
    Matrix rho(idx(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Complex acc = 0.0;
            for (int c = 0; c < d; ++c) acc += state.amplitude(i, c) * std::conj(state.amplitude(j, c));
            rho(idx(i), idx(j)) = acc;
        }
    // exact Hermitian symmetrization before the solver's check
    rho = 0.5 * (rho + rho.adjoint());
    const auto es = hermitian_eigensystem(rho);

    SchmidtDecomposition out;
    for (auto it = es.values.rbegin(); it != es.values.rend(); ++it) {
        const double lambda = std::max(0.0, *it);
        out.coeffs.push_back(std::sqrt(lambda));
        if (lambda > 0.0) out.entropy -= lambda * std::log(lambda);
    }
    return out;
}

BipartiteState superpose_all(int d) {
    require_odd(d, "superpose_all");
    auto sum = zero_state(d);
    for (int k = 0; k < d; ++k)
        for (int p = 0; p < d; ++p) sum = add(std::move(sum), bell_state(d, {k, p}), 1.0 / d);
    return sum;
}

NormalizedSuperposition superpose_diagonal(int d) {
    require_odd(d, "superpose_diagonal");
    auto sum = zero_state(d);
    for (int k = 0; k < d; ++k) sum = add(std::move(sum), bell_state(d, {k, k}));
    NormalizedSuperposition out;
    out.raw_norm = norm(sum.amps);
    out.state = {d, scaled(sum.amps, 1.0 / std::sqrt(static_cast<double>(d)))};
    return out;
}

MubVector mub_vector(int d, int p, int m) {
    require_odd(d, "mub_vector");
    if (p < 0 || p >= d || m < 0 || m >= d) throw ValidationError("mub_vector: p and m must lie in [0, d)");
    MubVector out{p, m, StateVector(idx(d))};
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (int n = 0; n < d; ++n) {
        const long quad = static_cast<long>(p) * (static_cast<long>(n) * (d - n) / 2);
        out.amps[idx(n)] = amp * root_of_unity(d, quad + static_cast<long>(n) * m);
    }
    return out;
}

Matrix twist_operator(int d, int p) {
    require_odd(d, "twist_operator");
    std::vector<Complex> diag(idx(d));
    for (int n = 0; n < d; ++n) diag[idx(n)] = root_of_unity(d, static_cast<long>(p) * (static_cast<long>(n) * (d - n) / 2));
    return kron(Matrix::identity(idx(d)), Matrix::diagonal(std::span<const Complex>(diag)));
}

BipartiteState twist_superposition(int d, int p) {
    const auto base = superpose_diagonal(d).state;
    return {d, twist_operator(d, p) * std::span<const Complex>(base.amps)};
}

BipartiteState mub_expansion(int d, int p) {
    require_odd(d, "mub_expansion");
    auto out = zero_state(d);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (int n = 0; n < d; ++n) {
        StateVector basis(idx(d));
        basis[idx(n)] = 1.0;
        const auto product = kron(basis, mub_vector(d, p, n).amps);
        const Complex c = amp * root_of_unity(d, -static_cast<long>(n) * n);
        for (std::size_t i = 0; i < product.size(); ++i) out.amps[i] += c * product[i];
    }
    return out;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

UnbiasednessReport unbiasedness_check(int d) {
    require_odd(d, "unbiasedness_check");
    std::vector<std::vector<StateVector>> bases(idx(d));
    for (int p = 0; p < d; ++p)
        for (int m = 0; m < d; ++m) bases[idx(p)].push_back(mub_vector(d, p, m).amps);

    const double target = 1.0 / std::sqrt(static_cast<double>(d));
    UnbiasednessReport report;
    for (int p = 0; p < d; ++p)
        for (int pp = p + 1; pp < d; ++pp)
            for (int m = 0; m < d; ++m)
                for (int mm = 0; mm < d; ++mm) {
                    const double dev = std::abs(std::abs(inner(bases[idx(p)][idx(m)], bases[idx(pp)][idx(mm)])) - target);
                    report.max_deviation = std::max(report.max_deviation, dev);
                }
    report.prime = is_prime(d);
    if (!report.prime)
        report.status = "warning";
    else
        report.status = report.max_deviation < 1e-10 ? "ok" : "fail";
    return report;
}

std::vector<IdentityCheck> identity_checks(int d, double tolerance) {
    require_odd(d, "identity_checks");
    std::vector<IdentityCheck> out;
    auto push = [&](std::string id, std::vector<std::pair<std::string, int>> params, double residual, double tol) {
        out.push_back({std::move(id), d, std::move(params), residual, tol, residual < tol});
    };

    for (int k = 1; k < d; ++k)
        for (int p = 0; p < d; ++p)
            push("eq57", {{"k", k}, {"p", p}}, bell_from_phase_op(d, {k, p}).residual, tolerance);

    const auto all = superpose_all(d);
    auto direct = zero_state(d);
    for (int n = 0; n < d; ++n) direct.amps[idx(n)] = 1.0 / std::sqrt(static_cast<double>(d));
    push("eq59", {}, std::max(distance(all.amps, direct.amps), schmidt(all).entropy), tolerance);

    StateVector vacuum(idx(d));
    vacuum[0] = 1.0;
    push("eq62", {}, distance(all.amps, kron(vacuum, mub_vector(d, 0, 0).amps)), tolerance);

    const auto diag = superpose_diagonal(d);
    // entropy tolerance matches the Schmidt solver accuracy
    push("eq60", {}, std::abs(schmidt(diag.state).entropy - std::log(static_cast<double>(d))), std::max(tolerance, 1e-10));
    push("eq63", {}, distance(diag.state.amps, mub_expansion(d, 0).amps), tolerance);

    for (int p = 0; p < d; ++p)
        push("eq64", {{"p", p}}, distance(twist_superposition(d, p).amps, mub_expansion(d, p).amps), tolerance);
    return out;
}

}  // namespace whphase::bellmub
