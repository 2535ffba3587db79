#pragma once

#include <vector>

#include "ktreegen/gfsystem.hpp"

namespace ktg {

/// Per-k record of the numerical constants.
struct Constants {
    int k = 0;
    int trunc_m = 30;     // truncation used for the singular system
    double rho = 0;       // radius of convergence of Bbar_{1^k}
    double sqrt_factor = 0;  // sqrt(1 + k sum_{i>=2} Bbar'(rho^i) rho^i)
    double c = 0;         // scaling constant c_k = k H_k * sqrt_factor
    double asym_const = 0;   // multiplier of n^{-5/2} rho^{-n} in [z^n]U
};

/// Root of x exp(k sum_{i=2}^{m} Bbar^{[m]}(x^i)/i) = 1/(e k) by bisection
/// on [1/(2ek), 1/(ek)].  Throws std::runtime_error when the bracket fails.
double solve_rho(int k, int m = 30, double tol = 1e-12);

/// sqrt factor and c_k = k H_k * factor, evaluated from a Bbar_{1^k}
/// coefficient table truncated at N >= m (tail terms below 1e-12 dropped).
struct ScalePair {
    double sqrt_factor;
    double c;
};
ScalePair compute_c(int k, double rho, const std::vector<Zint>& bbar_1k);

/// ((k rho)^{-k} / (k^2 k! sqrt(2 pi))) * (1 + k sum_{l>=2} Bow(rho^l))^{3/2}.
double asymptotic_constant(int k, double rho, const std::vector<Zint>& bbar_1k);

/// Convenience: solve rho at truncation m, then evaluate the factors from a
/// larger table (2m) for the tail sums.
Constants compute_constants(int k, int m = 30, double tol = 1e-12);

}  // namespace ktg
