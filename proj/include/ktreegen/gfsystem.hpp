#pragma once

#include <gmpxx.h>

#include <vector>

#include "ktreegen/partitions.hpp"
#include "ktreegen/series.hpp"

namespace ktg {

using Zint = mpz_class;

/// One product-form series (a black root times C-factors composed into
/// powers of z), with running prefix products kept for coefficient
/// extraction and for size-vector sampling.
struct ProductSpec {
    struct Factor {
        int mu_idx;  // index into SeriesTable::mus of the C-series used
        int power;   // substitute z^power
    };
    std::vector<Factor> factors;  // part sizes descending
    // prefix[j] = product of factors 1..j, coefficients 0..N; prefix[0] = 1
    std::vector<std::vector<Zint>> prefix;
};

/// All partition-indexed generating functions to a fixed truncation,
/// built coefficient degree by coefficient degree.
struct SeriesTable {
    int k = 0, N = 0;
    std::vector<CycleType> mus;      // partitions of k
    std::vector<CycleType> lambdas;  // partitions of k+1
    int mu_one_k = -1;               // index of 1^k in mus

    std::vector<std::vector<Zint>> C;     // C_mu, per mu
    std::vector<std::vector<Zint>> Bbar;  // Bbar_mu, per mu
    std::vector<std::vector<Zint>> aexp;  // exp-recurrence weights a_mu(m)
    std::vector<ProductSpec> bbar_prod;   // Bbar_mu = z * product(...)
    std::vector<std::vector<Zint>> Blam;  // B_lambda, per lambda
    std::vector<ProductSpec> blam_prod;   // B_lambda = z * product(...)

    // mu_pow[m][d-1] = index of mu^d for d = 1..period (extend periodically)
    std::vector<std::vector<int>> mu_pow;

    std::vector<Rat> B, Cagg, E, U;  // aggregates (Burnside sums)
    std::vector<Zint> Bz, Uz;        // integer copies of B and U

    std::vector<Zint> Bow1k;  // (Bbar^ow)_{1^k} = z * Bbar'_{1^k}
    std::vector<Zint> M1k;    // sum_{l>=2} Bow1k(z^l)
    std::vector<Zint> CM1k;   // C_{1^k} * M1k  ( = k! * V3dec_{1^k} )
    mpz_class k_fact, k1_fact;

    int mu_index(const CycleType& mu) const;
    int lambda_index(const CycleType& lam) const;
    int mu_power_index(int mu_idx, long d) const;

    Rat v3dec_1k(int n) const;       // CM1k[n] / k!
    Rat pointing_defect(int n) const;  // (n U[n] - B[n] - v3dec) / (n U[n])

    Series series_U() const;
    Series series_B() const;
    Series series_C() const;
    Series series_E() const;
    Series series_C_mu(int mu_idx) const;
    Series series_Bbar_mu(int mu_idx) const;
    Series series_B_lambda(int lam_idx) const;
};

/// Compute the mutually recursive family Bbar_mu, C_mu, B_lambda and the
/// aggregates B, C, E, U = B + C - E up to degree N.  Throws
/// std::logic_error on any integrality violation in the Burnside sums.
SeriesTable build_series_table(int k, int N);

/// Direct fixed-point solutions of the 1^k system
///   Bbar(z) = z exp(k sum Bbar(z^i)/i),  C(z) = exp(sum Bbar(z^i)/i),
/// independent of the full table build.
std::vector<Zint> bbar_1k_direct(int k, int N);
std::vector<Zint> c_1k_direct(int k, int N);

}  // namespace ktg
