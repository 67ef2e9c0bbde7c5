#pragma once

#include <string>
#include <utility>
#include <vector>

#include "whphase/numerics.hpp"

namespace whphase::bellmub {

struct BellLabel {
    int k = 0;  // shift
    int p = 0;  // phase
};

/// Two d-level systems; amplitude of |n> (x) |n'> sits at n*d + n'.
struct BipartiteState {
    int dim = 0;
    StateVector amps;

    Complex amplitude(int n, int n_prime) const {
        return amps[static_cast<std::size_t>(n) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(n_prime)];
    }
};

struct MubVector {
    int p = 0;
    int m = 0;
    StateVector amps;
};

// (1/sqrt d) sum_n |n>|n>; d must be odd and >= 3
BipartiteState mes(int d);

// (1/sqrt d) sum_n q^{np} |n>|n+k>
BipartiteState bell_state(int d, BellLabel label);

struct BellGeneration {
    BipartiteState generated;     // (E^k (x) I)|MES>
    Complex predicted_phase;      // q^{p(k-2s-1)/2}
    double phi = 0.0;             // -(2s/d)(p/k)pi
    double residual = 0.0;        // ||generated - predicted_phase * bell_state||
};

/// Applies E^k (x) I to |MES> with E built from F(N) = N(2s+1-N)/2s at the
/// quantized phi, and compares with the predicted multiple of |Psi_{k,p}>.
/// k = 0 is rejected (phi divides by k).
BellGeneration bell_from_phase_op(int d, BellLabel label);

struct SchmidtDecomposition {
    std::vector<double> coeffs;  // descending
    double entropy = 0.0;        // -sum c^2 ln c^2
};

/// Schmidt coefficients from the eigenvalues of the reduced density matrix.
/// Throws ContractViolation for a state whose norm differs from 1 by > 1e-10.
SchmidtDecomposition schmidt(const BipartiteState& state);

// (1/d) sum_{k,p} |Psi_{k,p}>
BipartiteState superpose_all(int d);

struct NormalizedSuperposition {
    BipartiteState state;  // unit norm
    double raw_norm = 0.0;
};

// sum_k |Psi_{k,k}> scaled by 1/sqrt d
NormalizedSuperposition superpose_diagonal(int d);

/// |phi_m^p> = (1/sqrt d) sum_n q^{p n(d-n)/2} q^{nm} |n>; n(d-n) is even
/// for odd d, so every power of q is an integer power.
MubVector mub_vector(int d, int p, int m);

// I (x) q^{p N(d-N)/2}
Matrix twist_operator(int d, int p);

// (I (x) twist) superpose_diagonal(d)
BipartiteState twist_superposition(int d, int p);

// (1/sqrt d) sum_n q^{-n^2} |n> (x) |phi_n^p>
BipartiteState mub_expansion(int d, int p);

struct UnbiasednessReport {
    double max_deviation = 0.0;  // max | |<phi_m^p|phi_m'^p'>| - 1/sqrt d |, p != p'
    bool prime = false;
    std::string status;          // "ok", "fail", or "warning" for composite d
};

UnbiasednessReport unbiasedness_check(int d);

bool is_prime(int n);

struct IdentityCheck {
    std::string identity;  // eq57 | eq59 | eq60 | eq62 | eq63 | eq64
    int d = 0;
    std::vector<std::pair<std::string, int>> params;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Every Bell/MUB identity at dimension d: eq57 for each (k >= 1, p), eq59
/// and eq62 (separable superposition), eq60 (entropy ln d), eq63 (B_0
/// expansion), eq64 for each p.
std::vector<IdentityCheck> identity_checks(int d, double tolerance = 1e-12);

}  // namespace whphase::bellmub
