#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ktreegen/ktree.hpp"

namespace ktg {

/// Normalized pairwise distances 2 c_k d(v1,v2)/sqrt(n) over uniform
/// vertex pairs (with replacement), pairs_per_tree per tree.
std::vector<double> distance_statistic(const std::vector<KTree>& batch,
                                       int pairs_per_tree, uint64_t seed, double c_k);

struct DiameterStats {
    std::vector<double> normalized;  // c_k D / sqrt(n), one per tree
    double mean = 0;
    double second_moment = 0;
    // (x, log Pr(D >= x) * n / x^2) over a grid of raw diameters
    std::vector<std::pair<double, double>> tail_table;
};
DiameterStats diameter_statistic(const std::vector<KTree>& batch, double c_k);

using CensusMap = std::map<std::string, uint64_t>;

/// Empirical distribution of canonical r-ball codes around one uniform
/// vertex per tree.
CensusMap neighbourhood_census(const std::vector<KTree>& batch, int r, uint64_t seed);

/// Total variation distance between two censuses (exact tallies,
/// normalized by their totals).
double census_tv(const CensusMap& a, const CensusMap& b);

}  // namespace ktg
