#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ktreegen/ktree.hpp"
#include "ktreegen/series.hpp"

namespace ktg {

int default_oracle_bound(int k);

/// Brute-force ground truth: exhaustive enumeration of unlabelled k-trees
/// (growth + canonical-form dedup) and rooted/cycle-pointed censuses.
class Oracle {
public:
    Oracle(int k, int max_n);

    int k() const { return k_; }
    int bound() const { return bound_; }

    /// One canonical representative per isomorphism class, sorted by
    /// canonical form (deterministic order).
    const std::vector<KTree>& classes(int n);
    const std::vector<std::string>& forms(int n);
    uint64_t count(int n);
    const KTree& unrank(int n, uint64_t index);
    long rank(int n, const std::string& canonical);  // -1 when absent

    enum class RootKind { Hedron, FrontDistinguishable, FrontDistinguishableUniqueHedron };
    std::vector<std::string> rooted_class_forms(int n, RootKind kind);
    uint64_t rooted_count(int n, RootKind kind);
    std::vector<std::string> edge_rooted_forms(int n);

    struct Census {
        uint64_t v1 = 0, v2 = 0, v3sym = 0, v3dec = 0;
        Rat dec_mass_1k = 0;  // Burnside mass of the 1^k summand of eq. V3dec
        uint64_t total() const { return v1 + v2 + v3sym + v3dec; }
    };
    /// Marked-cycle census over all classes at size n, deduplicated up to
    /// conjugation by the automorphism group; checks the m-to-1 property
    /// per class.
    Census cycle_pointing_census(int n);

private:
    int k_, bound_;
    std::vector<std::vector<KTree>> levels_;
    std::vector<std::vector<std::string>> forms_;
    void ensure(int n);
};

}  // namespace ktg
