#include "whphase/depolarizer.hpp"

#include <cmath>
#include <string>

#include "whphase/errors.hpp"
#include "whphase/phase.hpp"

namespace whphase::depolarizer {

namespace {

std::size_t idx(long n) { return static_cast<std::size_t>(n); }

long wrap(long n, long d) {
    long r = n % d;
    return r < 0 ? r + d : r;
}

void check_dims(const Matrix& op, const CyclicStructureFunction& F) {
    if (F.dim() < 1) throw InvalidDimension("structure function table is empty");
    if (static_cast<int>(op.dim()) != F.dim())
        throw InvalidDimension("operator dimension " + std::to_string(op.dim()) +
                               " does not match structure function dimension " + std::to_string(F.dim()));
}

// distance of x from the nearest multiple of d
double distance_from_multiple(double x, double d) { return std::abs(x - d * std::round(x / d)); }

constexpr double kFrequencyTolerance = 1e-9;

double frequency(const CyclicStructureFunction& F, int n, int np, int k) {
    return F(n + k) - F(np + k) + static_cast<double>(n - np);
}

}  // namespace

CyclicStructureFunction::CyclicStructureFunction(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw InvalidDimension("structure function table must be non-empty");
    for (std::size_t n = 0; n < values_.size(); ++n)
        if (!std::isfinite(values_[n])) throw ValidationError("F[" + std::to_string(n) + "] must be finite");
}

CyclicStructureFunction CyclicStructureFunction::from_spec(const algebra::AlgebraSpec& spec) {
    return CyclicStructureFunction({spec.structure.begin(), spec.structure.end() - 1});
}

CyclicStructureFunction CyclicStructureFunction::daoud(int d) {
    if (d < 2) throw InvalidDimension("daoud structure function requires d >= 2");
    std::vector<double> v(idx(d));
    for (int n = 0; n < d; ++n) v[idx(n)] = static_cast<double>(n) * (d - n) / (d - 1);
    return CyclicStructureFunction(std::move(v));
}

CyclicStructureFunction CyclicStructureFunction::linear(int d) {
    if (d < 1) throw InvalidDimension("d must be positive");
    std::vector<double> v(idx(d));
    for (int n = 0; n < d; ++n) v[idx(n)] = n;
    return CyclicStructureFunction(std::move(v));
}

CyclicStructureFunction CyclicStructureFunction::zero(int d) {
    if (d < 1) throw InvalidDimension("d must be positive");
    return CyclicStructureFunction(std::vector<double>(idx(d), 0.0));
}

CyclicStructureFunction CyclicStructureFunction::multiphoton(int d, int m) {
    if (d < 2) throw InvalidDimension("multiphoton structure function requires d >= 2");
    const auto spec = algebra::build_spec(d - 1, algebra::multiphoton_f(d - 1, m), 0.0);
    return from_spec(spec);
}

double CyclicStructureFunction::operator()(long n) const {
    return values_[idx(wrap(n, static_cast<long>(values_.size())))];
}

Matrix e_power(const CyclicStructureFunction& F, double phi, int k) {
    const int d = F.dim();
    if (k < 0 || k >= d) throw ValidationError("e_power: k must lie in [0, d)");
    Matrix out(idx(d));
    for (int n = 0; n < d; ++n) out(idx(n), idx(wrap(n + k, d))) = std::polar(1.0, (F(n + k) - F(n)) * phi);
    return out;
}

Matrix v_operator(const CyclicStructureFunction& F, double phi) {
    const int d = F.dim();
    Matrix out(idx(d));
    for (int n = 0; n < d; ++n) out(idx(n), idx(n)) = std::polar(1.0, (F(n) + n) * phi);
    return out;
}

Matrix twirl_phase_basis(const Matrix& op, const algebra::AlgebraSpec& spec) {
    const Matrix e = phase::phase_operator(spec);
    if (op.dim() != e.dim()) throw InvalidDimension("twirl_phase_basis: dimension mismatch");
    Matrix out(op.dim());
    Matrix ek = Matrix::identity(op.dim());
    for (int k = 0; k < spec.dim(); ++k) {
        out += ek * op * ek.adjoint();
        ek = e * ek;
    }
    return out;
}

Matrix phase_basis_dephasing(const Matrix& op, const algebra::AlgebraSpec& spec) {
    const int d = spec.dim();
    if (static_cast<int>(op.dim()) != d) throw InvalidDimension("phase_basis_dephasing: dimension mismatch");
    Matrix out(idx(d));
    for (int m = 0; m < d; ++m) {
        const auto v = phase::phase_state(spec, m);
        const Complex omm = inner(v, op * std::span<const Complex>(v));
        out += (static_cast<double>(d) * omm) * Matrix::outer(v, v);
    }
    return out;
}

namespace {

std::vector<AliasingWitness> discrete_witnesses(const CyclicStructureFunction& F) {
    const int d = F.dim();
    std::vector<AliasingWitness> out;
    for (int n = 0; n < d; ++n)
        for (int np = 0; np < d; ++np) {
            if (n == np) continue;
            for (int k = 0; k < d; ++k)
                if (distance_from_multiple(frequency(F, n, np, k), d) < kFrequencyTolerance) out.push_back({n, np, k});
        }
    return out;
}

std::vector<AliasingWitness> continuous_witnesses(const CyclicStructureFunction& F) {
    const int d = F.dim();
    std::vector<AliasingWitness> out;
    for (int n = 0; n < d; ++n)
        for (int np = 0; np < d; ++np) {
            if (n == np) continue;
            for (int k = 0; k < d; ++k)
                if (std::abs(frequency(F, n, np, k)) < kFrequencyTolerance) out.push_back({n, np, k});
        }
    return out;
}

}  // namespace

DepolarizerResult depolarize_discrete(const Matrix& op, const CyclicStructureFunction& F) {
    check_dims(op, F);
    const int d = F.dim();
    Matrix sum(idx(d));
    // fixed (l, k) order keeps the reduction reproducible
    for (int l = 0; l < d; ++l) {
        const double phi = 2.0 * kPi * l / d;
        const Matrix v = v_operator(F, phi);
        for (int k = 0; k < d; ++k) {
            const Matrix u = v * e_power(F, phi, k);
            sum += u * op * u.adjoint();
        }
    }
    const Matrix target = (static_cast<double>(d) * op.trace()) * Matrix::identity(idx(d));

    DepolarizerResult result{sum, {}};
    result.report.defect_hs = hs_distance(sum, target);
    result.report.exact = result.report.defect_hs < kExactTolerance;
    result.report.basis_orthogonal = error_basis_orthogonality(F).basis_orthogonal;
    result.report.aliasing_witnesses = discrete_witnesses(F);
    return result;
}

double sinc_pi(double w) {
    if (w == 0.0) return 1.0;
    const double x = kPi * w;
    return std::sin(x) / x;
}

DepolarizerResult depolarize_continuous(const Matrix& op, const CyclicStructureFunction& F) {
    check_dims(op, F);
    const int d = F.dim();
    Matrix out(idx(d));
    for (int k = 0; k < d; ++k)
        for (int n = 0; n < d; ++n)
            for (int np = 0; np < d; ++np) {
                const Complex c = op(idx(wrap(n + k, d)), idx(wrap(np + k, d)));
                if (c == Complex{}) continue;
                out(idx(n), idx(np)) += c * sinc_pi(frequency(F, n, np, k));
            }
    const Matrix target = op.trace() * Matrix::identity(idx(d));

    DepolarizerResult result{out, {}};
    result.report.defect_hs = hs_distance(out, target);
    result.report.exact = result.report.defect_hs < kExactTolerance;
    result.report.basis_orthogonal = error_basis_orthogonality(F).basis_orthogonal;
    result.report.aliasing_witnesses = continuous_witnesses(F);
    return result;
}

UnitaryFamily discrete_family(const CyclicStructureFunction& F) {
    const int d = F.dim();
    UnitaryFamily family{"l,k in Z/" + std::to_string(d) + "Z", {}};
    family.members.reserve(idx(d) * idx(d));
    for (int l = 0; l < d; ++l) {
        const double phi = 2.0 * kPi * l / d;
        const Matrix v = v_operator(F, phi);
        for (int k = 0; k < d; ++k) family.members.push_back(v * e_power(F, phi, k));
    }
    return family;
}

Matrix error_basis_gram(const CyclicStructureFunction& F) {
    const auto family = discrete_family(F);
    const std::size_t count = family.members.size();
    const std::size_t d = idx(F.dim());

    // members are monomial, so iterate each one's nonzeros only
    struct Entry {
        std::size_t i, j;
        Complex value;
    };
    std::vector<std::vector<Entry>> nonzeros(count);
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (const Complex x = family.members[a](i, j); x != Complex{}) nonzeros[a].push_back({i, j, x});

    Matrix gram(count);
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = 0; b < count; ++b) {
            Complex acc = 0.0;
            for (const auto& e : nonzeros[a]) acc += std::conj(e.value) * family.members[b](e.i, e.j);
            gram(a, b) = acc / static_cast<double>(d);
        }
    return gram;
}

DepolarizerReport error_basis_orthogonality(const CyclicStructureFunction& F) {
    const Matrix gram = error_basis_gram(F);
    DepolarizerReport report;
    report.defect_hs = hs_distance(gram, Matrix::identity(gram.dim()));
    report.basis_orthogonal = report.defect_hs < kExactTolerance;
    report.exact = report.basis_orthogonal;
    report.aliasing_witnesses = discrete_witnesses(F);
    return report;
}

}  // namespace whphase::depolarizer
