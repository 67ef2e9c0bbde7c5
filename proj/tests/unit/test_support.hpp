#pragma once

#include <random>
#include <vector>

#include "whphase/numerics.hpp"

namespace whphase::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(20240611);
    return engine;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Matrix random_matrix(std::size_t d) {
    Matrix m(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = Complex(uniform(-1, 1), uniform(-1, 1));
    return m;
}

inline Matrix random_hermitian(std::size_t d) {
    const Matrix a = random_matrix(d);
    return 0.5 * (a + a.adjoint());
}

inline std::vector<double> random_positive_f(int d) {
    std::vector<double> f(static_cast<std::size_t>(d));
    for (auto& v : f) v = uniform(0.2, 3.0);
    return f;
}

inline double random_phi() { return uniform(-kPi, kPi); }

inline std::vector<double> random_unit_nonneg(int d) {
    std::vector<double> c(static_cast<std::size_t>(d));
    double s = 0.0;
    for (auto& v : c) {
        v = uniform(0.0, 1.0);
        s += v * v;
    }
    for (auto& v : c) v /= std::sqrt(s);
    return c;
}

}  // namespace whphase::testing
