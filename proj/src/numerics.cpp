#include "whphase/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "whphase/errors.hpp"

namespace whphase {

Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(std::span<const Complex> entries) {
    Matrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

Matrix Matrix::diagonal(std::span<const double> entries) {
    Matrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

Matrix Matrix::outer(std::span<const Complex> ket, std::span<const Complex> bra) {
    if (ket.size() != bra.size()) throw std::invalid_argument("outer: length mismatch");
    Matrix m(ket.size());
    for (std::size_t i = 0; i < ket.size(); ++i)
        for (std::size_t j = 0; j < bra.size(); ++j) m(i, j) = ket[i] * std::conj(bra[j]);
    return m;
}

Matrix Matrix::unit(std::size_t dim, std::size_t i, std::size_t j) {
    Matrix m(dim);
    m(i, j) = 1.0;
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix m(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

Complex Matrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

std::vector<Complex> Matrix::diagonal_entries() const {
    std::vector<Complex> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) out[i] = (*this)(i, i);
    return out;
}

StateVector Matrix::column(std::size_t j) const {
    StateVector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) out[i] = (*this)(i, j);
    return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    if (rhs.dim_ != dim_) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    if (rhs.dim_ != dim_) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(Complex scale) {
    for (auto& x : data_) x *= scale;
    return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.dim_ != rhs.dim_) throw std::invalid_argument("matrix dimension mismatch");
    const std::size_t d = lhs.dim_;
    Matrix out(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            const Complex a = lhs(i, k);
            if (a == Complex{}) continue;
            for (std::size_t j = 0; j < d; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

StateVector operator*(const Matrix& lhs, std::span<const Complex> rhs) {
    if (lhs.dim_ != rhs.size()) throw std::invalid_argument("matrix/vector dimension mismatch");
    StateVector out(lhs.dim_);
    for (std::size_t i = 0; i < lhs.dim_; ++i) {
        Complex acc = 0.0;
        for (std::size_t j = 0; j < lhs.dim_; ++j) acc += lhs(i, j) * rhs[j];
        out[i] = acc;
    }
    return out;
}

Complex root_of_unity(long d, long exponent) {
    if (d <= 0) throw InvalidDimension("root_of_unity: d must be positive");
    long r = exponent % d;
    if (r < 0) r += d;
    if (r == 0) return {1.0, 0.0};
    // exact quarter turns avoid cos(pi/2) ~ 6e-17 residue
    if (4 * r == d) return {0.0, 1.0};
    if (2 * r == d) return {-1.0, 0.0};
    if (4 * r == 3 * d) return {0.0, -1.0};
    const double angle = 2.0 * kPi * static_cast<double>(r) / static_cast<double>(d);
    return {std::cos(angle), std::sin(angle)};
}

Matrix kron(const Matrix& a, const Matrix& b) {
    const std::size_t da = a.dim(), db = b.dim();
    Matrix out(da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) continue;
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = aij * b(k, l);
        }
    return out;
}

StateVector kron(std::span<const Complex> a, std::span<const Complex> b) {
    StateVector out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) out[i * b.size() + k] = a[i] * b[k];
    return out;
}

double hs_norm(const Matrix& a) {
    double acc = 0.0;
    for (const auto& x : a.data()) acc += std::norm(x);
    return std::sqrt(acc);
}

double hs_distance(const Matrix& a, const Matrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
    double acc = 0.0;
    auto x = a.data(), y = b.data();
    for (std::size_t i = 0; i < x.size(); ++i) acc += std::norm(x[i] - y[i]);
    return std::sqrt(acc);
}

double max_abs_entry(const Matrix& a) {
    double m = 0.0;
    for (const auto& x : a.data()) m = std::max(m, std::abs(x));
    return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix matrix_power(const Matrix& a, unsigned exponent) {
    Matrix result = Matrix::identity(a.dim());
    Matrix base = a;
    while (exponent > 0) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1u;
        if (exponent > 0) base = base * base;
    }
    return result;
}

double hermiticity_defect(const Matrix& a) { return hs_distance(a, a.adjoint()); }

double unitarity_defect(const Matrix& u) {
    return hs_distance(u * u.adjoint(), Matrix::identity(u.dim()));
}

namespace {

double off_diagonal_mass(const Matrix& a) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (i != j) acc += std::norm(a(i, j));
    return std::sqrt(acc);
}

// Annihilates a(p, q) with the unitary J = diag(1, e^{-i arg a_pq}) * R(c, s)
// acting on the (p, q) plane: A <- J^dagger A J, V <- V J.
void jacobi_rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;
    const Complex phase = apq / mag;  // e^{i theta}
    const double app = a(p, p).real(), aqq = a(q, q).real();
    const double theta = (aqq - app) / (2.0 * mag);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const Complex sp = s * std::conj(phase);  // s e^{-i theta}
    const std::size_t d = a.dim();

    for (std::size_t i = 0; i < d; ++i) {
        const Complex aip = a(i, p), aiq = a(i, q);
        a(i, p) = c * aip - sp * aiq;
        a(i, q) = s * aip + c * std::conj(phase) * aiq;
    }
    for (std::size_t j = 0; j < d; ++j) {
        const Complex apj = a(p, j), aqj = a(q, j);
        a(p, j) = c * apj - std::conj(sp) * aqj;
        a(q, j) = s * apj + c * phase * aqj;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    for (std::size_t i = 0; i < d; ++i) {
        const Complex vip = v(i, p), viq = v(i, q);
        v(i, p) = c * vip - sp * viq;
        v(i, q) = s * vip + c * std::conj(phase) * viq;
    }
}

}  // namespace

Eigensystem hermitian_eigensystem(const Matrix& h) {
    const std::size_t d = h.dim();
    const double scale = hs_norm(h);
    if (hermiticity_defect(h) > 1e-12 * std::max(1.0, scale))
        throw ContractViolation("hermitian_eigensystem: input is not Hermitian");

    Matrix a = h;
    Matrix v = Matrix::identity(d);
    const double target = 1e-14 * scale;
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_mass(a) > target; ++sweep) {
        for (std::size_t p = 0; p + 1 < d; ++p)
            for (std::size_t q = p + 1; q < d; ++q) jacobi_rotate(a, v, p, q);
    }

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    Eigensystem out{std::vector<double>(d), Matrix(d)};
    for (std::size_t c = 0; c < d; ++c) {
        out.values[c] = a(order[c], order[c]).real();
        for (std::size_t r = 0; r < d; ++r) out.vectors(r, c) = v(r, order[c]);
    }
    return out;
}

Matrix spectral_exp_i(const Eigensystem& es, double scale) {
    const std::size_t d = es.vectors.dim();
    Matrix out(d);
    for (std::size_t k = 0; k < d; ++k) {
        const Complex g = std::polar(1.0, scale * es.values[k]);
        for (std::size_t i = 0; i < d; ++i) {
            const Complex vik = g * es.vectors(i, k);
            for (std::size_t j = 0; j < d; ++j) out(i, j) += vik * std::conj(es.vectors(j, k));
        }
    }
    return out;
}

Complex inner(std::span<const Complex> bra, std::span<const Complex> ket) {
    if (bra.size() != ket.size()) throw std::invalid_argument("inner: length mismatch");
    Complex acc = 0.0;
    for (std::size_t i = 0; i < bra.size(); ++i) acc += std::conj(bra[i]) * ket[i];
    return acc;
}

double norm(std::span<const Complex> v) {
    double acc = 0.0;
    for (const auto& x : v) acc += std::norm(x);
    return std::sqrt(acc);
}

double distance(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) throw std::invalid_argument("distance: length mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::norm(a[i] - b[i]);
    return std::sqrt(acc);
}

StateVector scaled(std::span<const Complex> v, Complex factor) {
    StateVector out(v.begin(), v.end());
    for (auto& x : out) x *= factor;
    return out;
}

}  // namespace whphase
