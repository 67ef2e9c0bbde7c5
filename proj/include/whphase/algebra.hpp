#pragma once

#include <vector>

#include "whphase/numerics.hpp"

namespace whphase::algebra {

/// Finite-dimensional extended Weyl-Heisenberg algebra with d = 2s + 1.
///
/// Built only through build_spec(), which derives the structure function
///   F(n) = (n / 2s) (2s + 1 - n) f(n),   n = 0..2s+1,
/// so F(0) = F(2s+1) = 0 hold by construction and F(n) > 0 on 1..2s is
/// guaranteed by f > 0.
struct AlgebraSpec {
    int two_s = 0;
    std::vector<double> f;          // f(0..2s)
    double phi = 0.0;
    std::vector<double> structure;  // F(0..2s+1), length d + 1

    int dim() const noexcept { return two_s + 1; }
    double s() const noexcept { return 0.5 * two_s; }
    double F(int n) const { return structure.at(static_cast<std::size_t>(n)); }
};

AlgebraSpec build_spec(int two_s, std::vector<double> f_values, double phi);

// Same algebra, different phase parameter.
AlgebraSpec with_phi(const AlgebraSpec& spec, double phi);

// f(n) = (n+1)(n+2)...(n+m), n = 0..2s; m = 0 gives ones.
std::vector<double> multiphoton_f(int two_s, int m);

// G(n) = F(n+1) - F(n), n = 0..2s.
std::vector<double> g_from_F(const AlgebraSpec& spec);

struct LadderPair {
    Matrix lowering;  // a^-
    Matrix raising;   // a^+
    Matrix number;    // N
};

LadderPair ladder_matrices(const AlgebraSpec& spec);

/// Largest entrywise residual |.| over [N,a-] = -a-, [N,a+] = a+, [a-,a+] = G(N).
double check_commutators(const AlgebraSpec& spec, const LadderPair& pair);

// Max |entry| of (a-)^d and (a+)^d; zero when nilpotent.
double nilpotency_residual(const LadderPair& pair);

// H(N) = F(N) = diag(F(0..2s))
Matrix hamiltonian(const AlgebraSpec& spec);

/// a- = b- sqrt(1 - (N-1)/2s) sqrt(f(N)) and a+ = sqrt(f(N)) sqrt(1 - (N-1)/2s) b+
/// composed from truncated boson matrices. Only defined at phi = 0.
LadderPair boson_realization(const AlgebraSpec& spec);

struct StokesOperators {
    Matrix plus;   // sqrt(s) a+
    Matrix minus;  // sqrt(s) a-
    Matrix s3;     // (N - s) / 2
};

// Requires f = I.
StokesOperators stokes_operators(const AlgebraSpec& spec);

/// Max HS residual over [s3, s+-] = +-(1/2) s+- and [s+, s-] = 2 s3.
///
/// With s3 = (N - s)/2 the z generator is carried at half weight: J3 = 2 s3
/// and J+- = sqrt(2) s+- satisfy the usual [J3, J+-] = +-J+-, [J+, J-] = 2 J3.
double su2_residual(const StokesOperators& ops);

bool is_identity_f(const AlgebraSpec& spec);

}  // namespace whphase::algebra
