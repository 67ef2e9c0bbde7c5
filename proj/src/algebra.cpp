#include "whphase/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "whphase/errors.hpp"

namespace whphase::algebra {

AlgebraSpec build_spec(int two_s, std::vector<double> f_values, double phi) {
    if (two_s < 1) throw ValidationError("two_s must be >= 1");
    const int d = two_s + 1;
    if (static_cast<int>(f_values.size()) != d)
        throw ValidationError("f must have length 2s+1 = " + std::to_string(d) + ", got " +
                              std::to_string(f_values.size()));
    for (int n = 0; n < d; ++n) {
        const double v = f_values[static_cast<std::size_t>(n)];
        if (!std::isfinite(v) || !(v > 0.0))
            throw ValidationError("f[" + std::to_string(n) + "] must be positive");
    }
    if (!std::isfinite(phi)) throw ValidationError("phi must be finite");

    AlgebraSpec spec;
    spec.two_s = two_s;
    spec.f = std::move(f_values);
    spec.phi = phi;
    spec.structure.assign(static_cast<std::size_t>(d) + 1, 0.0);
    for (int n = 1; n < d; ++n)
        spec.structure[static_cast<std::size_t>(n)] =
            static_cast<double>(n) / two_s * static_cast<double>(d - n) * spec.f[static_cast<std::size_t>(n)];
    return spec;
}

AlgebraSpec with_phi(const AlgebraSpec& spec, double phi) {
    return build_spec(spec.two_s, spec.f, phi);
}

std::vector<double> multiphoton_f(int two_s, int m) {
    if (two_s < 1) throw ValidationError("two_s must be >= 1");
    if (m < 0) throw ValidationError("multiphoton order m must be >= 0");
    std::vector<double> f(static_cast<std::size_t>(two_s) + 1, 1.0);
    for (int n = 0; n <= two_s; ++n)
        for (int j = 1; j <= m; ++j) f[static_cast<std::size_t>(n)] *= static_cast<double>(n + j);
    return f;
}

std::vector<double> g_from_F(const AlgebraSpec& spec) {
    const int d = spec.dim();
    std::vector<double> g(static_cast<std::size_t>(d));
    for (int n = 0; n < d; ++n) g[static_cast<std::size_t>(n)] = spec.F(n + 1) - spec.F(n);
    return g;
}

LadderPair ladder_matrices(const AlgebraSpec& spec) {
    const auto d = static_cast<std::size_t>(spec.dim());
    Matrix lowering(d);
    for (std::size_t n = 1; n < d; ++n) {
        const int ni = static_cast<int>(n);
        const double phase = (spec.F(ni) - spec.F(ni - 1)) * spec.phi;
        lowering(n - 1, n) = std::polar(std::sqrt(spec.F(ni)), phase);
    }
    std::vector<double> diag(d);
    for (std::size_t n = 0; n < d; ++n) diag[n] = static_cast<double>(n);
    return {lowering, lowering.adjoint(), Matrix::diagonal(std::span<const double>(diag))};
}

double check_commutators(const AlgebraSpec& spec, const LadderPair& pair) {
    const auto g = g_from_F(spec);
    const Matrix g_of_n = Matrix::diagonal(std::span<const double>(g));
    // entrywise: an HS sum would grow with d at the rounding floor of large F
    const double r1 = max_abs_entry(commutator(pair.number, pair.lowering) + pair.lowering);
    const double r2 = max_abs_entry(commutator(pair.number, pair.raising) - pair.raising);
    const double r3 = max_abs_entry(commutator(pair.lowering, pair.raising) - g_of_n);
    return std::max({r1, r2, r3});
}

double nilpotency_residual(const LadderPair& pair) {
    const auto d = static_cast<unsigned>(pair.lowering.dim());
    return std::max(max_abs_entry(matrix_power(pair.lowering, d)),
                    max_abs_entry(matrix_power(pair.raising, d)));
}

Matrix hamiltonian(const AlgebraSpec& spec) {
    std::vector<double> diag(spec.structure.begin(), spec.structure.end() - 1);
    return Matrix::diagonal(std::span<const double>(diag));
}

LadderPair boson_realization(const AlgebraSpec& spec) {
    if (spec.phi != 0.0)
        throw UnsupportedConfiguration("boson_realization: only defined for phi = 0");
    const auto d = static_cast<std::size_t>(spec.dim());
    const double two_s = spec.two_s;

    Matrix b_minus(d);
    for (std::size_t n = 1; n < d; ++n) b_minus(n - 1, n) = std::sqrt(static_cast<double>(n));
    const Matrix b_plus = b_minus.adjoint();

    std::vector<double> root_f(d), root_trunc(d), number(d);
    for (std::size_t n = 0; n < d; ++n) {
        root_f[n] = std::sqrt(spec.f[n]);
        root_trunc[n] = std::sqrt(std::max(0.0, 1.0 - (static_cast<double>(n) - 1.0) / two_s));
        number[n] = static_cast<double>(n);
    }
    const Matrix sf = Matrix::diagonal(std::span<const double>(root_f));
    const Matrix st = Matrix::diagonal(std::span<const double>(root_trunc));

    return {b_minus * st * sf, sf * st * b_plus, Matrix::diagonal(std::span<const double>(number))};
}

bool is_identity_f(const AlgebraSpec& spec) {
    return std::all_of(spec.f.begin(), spec.f.end(), [](double v) { return v == 1.0; });
}

StokesOperators stokes_operators(const AlgebraSpec& spec) {
    if (!is_identity_f(spec))
        throw UnsupportedConfiguration("stokes_operators: requires f = I");
    const auto pair = ladder_matrices(spec);
    const double root_s = std::sqrt(spec.s());
    const auto d = static_cast<std::size_t>(spec.dim());
    std::vector<double> s3(d);
    for (std::size_t n = 0; n < d; ++n) s3[n] = 0.5 * (static_cast<double>(n) - spec.s());
    return {root_s * pair.raising, root_s * pair.lowering, Matrix::diagonal(std::span<const double>(s3))};
}

double su2_residual(const StokesOperators& ops) {
    const double r1 = hs_distance(commutator(ops.s3, ops.plus), 0.5 * ops.plus);
    const double r2 = hs_distance(commutator(ops.s3, ops.minus), -0.5 * ops.minus);
    const double r3 = hs_distance(commutator(ops.plus, ops.minus), 2.0 * ops.s3);
    return std::max({r1, r2, r3});
}

}  // namespace whphase::algebra
