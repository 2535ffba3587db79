#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace ktg {

/// Integer partition viewed as a cycle type.  Stored as a multiplicity
/// vector: multiplicity(i) = number of parts of size i.
class CycleType {
public:
    CycleType() = default;  // the empty partition of 0

    static CycleType from_parts(const std::vector<int>& parts);
    static CycleType from_multiplicities(std::vector<int> mult);

    int total() const;       // the partitioned integer m
    int part_count() const;  // number of parts
    int multiplicity(int part_size) const;
    const std::vector<int>& multiplicities() const { return mult_; }
    std::vector<int> parts() const;  // descending

    /// z_lambda = 1^{m1} m1! 2^{m2} m2! ... ; m!/z() counts the permutations
    /// of this cycle type.
    mpz_class z() const;

    /// Cycle type of the d-th power of any permutation with this type: each
    /// part of size i becomes gcd(i,d) parts of size i/gcd(i,d).
    CycleType power(int d) const;

    /// Remove one part of size 1.  Throws std::invalid_argument if there is
    /// no fixed point.
    CycleType drop_fixed_point() const;

    /// The fixed representative permutation: disjoint cycles laid out as
    /// consecutive 0-based blocks, largest parts first.  Returned as an image
    /// vector of length total().
    std::vector<int> canonical_permutation() const;

    bool is_all_ones() const;

    /// Serialization as a sorted part list, e.g. "2+1".  Empty partition: "".
    std::string to_string() const;

    friend bool operator==(const CycleType&, const CycleType&) = default;

private:
    std::vector<int> mult_;  // mult_[i-1] parts of size i; trailing zeros trimmed
    void trim();
};

/// True when a precedes b in the order used throughout: decreasing
/// lexicographic on part lists ([3], [2,1], [1,1,1]).
bool partition_precedes(const CycleType& a, const CycleType& b);

/// All partitions of m, each exactly once, in decreasing-lexicographic
/// order of their part lists.  m = 0 yields the single empty partition.
std::vector<CycleType> partitions_of(int m);

}  // namespace ktg
