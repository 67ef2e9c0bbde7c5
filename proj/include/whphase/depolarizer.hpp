#pragma once

#include <string>
#include <vector>

#include "whphase/algebra.hpp"
#include "whphase/numerics.hpp"

namespace whphase::depolarizer {

/// Real table F(0..d-1) read modulo d. Unlike AlgebraSpec it carries no
/// positivity requirement, so F(n) = n and F = 0 are valid here.
class CyclicStructureFunction {
public:
    CyclicStructureFunction() = default;
    explicit CyclicStructureFunction(std::vector<double> values);

    static CyclicStructureFunction from_spec(const algebra::AlgebraSpec& spec);
    // F(N) = N(d - N)/(d - 1), the f = I algebra
    static CyclicStructureFunction daoud(int d);
    static CyclicStructureFunction linear(int d);
    static CyclicStructureFunction zero(int d);
    static CyclicStructureFunction multiphoton(int d, int m);

    int dim() const noexcept { return static_cast<int>(values_.size()); }
    double operator()(long n) const;
    const std::vector<double>& values() const noexcept { return values_; }

private:
    std::vector<double> values_;
};

// E^k = sum_n e^{i(F(n+k)-F(n))phi} |n><n+k|, indices mod d
Matrix e_power(const CyclicStructureFunction& F, double phi, int k);

// V(phi) = e^{i(F(N)+N)phi}
Matrix v_operator(const CyclicStructureFunction& F, double phi);

// exact() threshold on the HS defect
inline constexpr double kExactTolerance = 1e-10;

struct AliasingWitness {
    int n = 0;
    int n_prime = 0;
    int k = 0;
    friend bool operator==(const AliasingWitness&, const AliasingWitness&) = default;
};

struct DepolarizerReport {
    double defect_hs = 0.0;
    bool exact = false;
    bool basis_orthogonal = false;
    std::vector<AliasingWitness> aliasing_witnesses;
};

struct DepolarizerResult {
    Matrix output;
    DepolarizerReport report;
};

/// sum_{k=0}^{2s} E^k O E^{k dagger} with E from `spec`.
Matrix twirl_phase_basis(const Matrix& op, const algebra::AlgebraSpec& spec);

/// d sum_m <m,phi|O|m,phi> |m,phi><m,phi|
Matrix phase_basis_dephasing(const Matrix& op, const algebra::AlgebraSpec& spec);

/// sum_k sum_l V_l E^k O E^{k dagger} V_l^dagger, E^k and V_l both at
/// phi_l = 2 pi l / d; target d Tr(O) I. Witnesses are all (n, n', k), n != n',
/// with F(n+k) - F(n'+k) + n - n' = 0 (mod d).
DepolarizerResult depolarize_discrete(const Matrix& op, const CyclicStructureFunction& F);

/// (1/2pi) int_{-pi}^{pi} dphi sum_k V(phi) E^k O E^{k dagger} V(phi)^dagger in
/// closed form: an entry term with frequency w contributes sin(pi w)/(pi w).
/// Target Tr(O) I. Witnesses are the n != n' terms with w = 0.
DepolarizerResult depolarize_continuous(const Matrix& op, const CyclicStructureFunction& F);

struct UnitaryFamily {
    std::string domain;
    std::vector<Matrix> members;  // index l*d + k holds V_l E^k
};

UnitaryFamily discrete_family(const CyclicStructureFunction& F);

/// Gram matrix Tr[(V_l E^k)^dagger (V_l' E^k')]/d over the discrete family,
/// rows/cols indexed l*d + k.
Matrix error_basis_gram(const CyclicStructureFunction& F);

/// basis_orthogonal iff the Gram matrix is I to 1e-10; defect_hs = ||Gram - I||.
DepolarizerReport error_basis_orthogonality(const CyclicStructureFunction& F);

// sinc(pi w) = sin(pi w)/(pi w), 1 at w = 0
double sinc_pi(double w);

}  // namespace whphase::depolarizer
