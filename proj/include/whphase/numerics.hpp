#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace whphase {

using Complex = std::complex<double>;
using StateVector = std::vector<Complex>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Dense square complex matrix, row-major. Row index is the bra label,
/// column index the ket label: m(i, j) = <i|M|j>.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    static Matrix identity(std::size_t dim);
    static Matrix diagonal(std::span<const Complex> entries);
    static Matrix diagonal(std::span<const double> entries);
    // |ket><bra|
    static Matrix outer(std::span<const Complex> ket, std::span<const Complex> bra);
    // |i><j| in dimension dim
    static Matrix unit(std::size_t dim, std::size_t i, std::size_t j);

    std::size_t dim() const noexcept { return dim_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    std::span<const Complex> data() const noexcept { return data_; }

    Matrix adjoint() const;
    Complex trace() const;
    std::vector<Complex> diagonal_entries() const;
    StateVector column(std::size_t j) const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(Complex scale);

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(Matrix lhs, Complex scale) { return lhs *= scale; }
    friend Matrix operator*(Complex scale, Matrix rhs) { return rhs *= scale; }
    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
    friend StateVector operator*(const Matrix& lhs, std::span<const Complex> rhs);

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

/// e^{2 pi i exponent / d}; the exponent is reduced modulo d first so that
/// equal residues give bit-identical results.
Complex root_of_unity(long d, long exponent);

// a (x) b with (a (x) b)[i*db + k, j*db + l] = a[i,j] * b[k,l]
Matrix kron(const Matrix& a, const Matrix& b);
StateVector kron(std::span<const Complex> a, std::span<const Complex> b);

double hs_norm(const Matrix& a);
// Frobenius distance ||a - b||
double hs_distance(const Matrix& a, const Matrix& b);
double max_abs_entry(const Matrix& a);

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix matrix_power(const Matrix& a, unsigned exponent);

// ||a - a^dagger||_HS
double hermiticity_defect(const Matrix& a);
// ||u u^dagger - I||_HS
double unitarity_defect(const Matrix& u);

struct Eigensystem {
    std::vector<double> values;  // ascending
    Matrix vectors;              // column j belongs to values[j]
};

/// Cyclic complex Jacobi rotations. Throws ContractViolation when `h` is not
/// Hermitian to 1e-12 (relative to max(1, ||h||)).
Eigensystem hermitian_eigensystem(const Matrix& h);

// V diag(g(lambda)) V^dagger for g(lambda) = e^{i scale lambda}
Matrix spectral_exp_i(const Eigensystem& es, double scale);

Complex inner(std::span<const Complex> bra, std::span<const Complex> ket);
double norm(std::span<const Complex> v);
double distance(std::span<const Complex> a, std::span<const Complex> b);
StateVector scaled(std::span<const Complex> v, Complex factor);

}  // namespace whphase
