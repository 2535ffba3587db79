#pragma once

#include <cstdint>
#include <vector>

#include "ktreegen/gfsystem.hpp"
#include "ktreegen/ktree.hpp"
#include "ktreegen/oracle.hpp"
#include "ktreegen/rng.hpp"

namespace ktg {

/// Coding-tree fragment under construction by the samplers.  Colours are
/// 0..k; the class root is a white node, or the first black node for
/// hedron-rooted objects.
struct CodObj {
    int k = 1;
    struct White {
        int colour;
        std::vector<int> blacks;
    };
    struct Black {
        std::vector<int> whites;
    };
    std::vector<White> whites;
    std::vector<Black> blacks;
    int root_white = -1;
    int root_black = -1;
};

CodObj white_rooted_obj(int k);
CodingTree to_coding_tree(const CodObj& o);

enum class SampleMode { Auto, OracleExact, Pointed };

struct UnrootedSample {
    KTree t;
    char part = '?';     // 'O' oracle, '1' hedron-pointed, '3' front-centred decoupled
    CycleType lambda;    // part '1': the drawn cycle type of the Burnside step
    int ell = 0, s = 0;  // part '3': replication count and branch size
};

/// Exact-size random generation driven by the coefficient tables:
/// uniform samplers for the sigma-fixed coloured classes, the Burnside
/// hedron-rooted sampler, and the two-part cycle-pointed mixture for
/// unrooted trees (defect reported exactly by the caller via the table).
class Sampler {
public:
    explicit Sampler(const SeriesTable& table, Oracle* oracle = nullptr);

    CodObj sample_C_obj(int mu_idx, int n, RngStream& rng);
    CodObj sample_Bbar_obj(int mu_idx, int n, RngStream& rng);
    CodObj sample_Blam_obj(int lam_idx, int n, RngStream& rng);

    struct HedronRooted {
        KTree t;
        int root_hedron = 0;
        CycleType lambda;
    };
    HedronRooted sample_hedron_rooted(int n, RngStream& rng);

    struct FrontRooted {
        KTree t;
        Front root;
        std::vector<int> labels;
    };
    /// unique_hedron: Bbar_{1^k} objects; otherwise C_{1^k} objects.
    FrontRooted sample_front_rooted(int n, RngStream& rng, bool unique_hedron);

    UnrootedSample sample_unrooted(int n, RngStream& rng, SampleMode mode);

    bool oracle_covers(int n) const;
    Rat defect(int n, SampleMode mode) const;
    const SeriesTable& table() const { return tab_; }

private:
    using Perm = std::vector<int>;
    const SeriesTable& tab_;
    Oracle* oracle_;
    std::vector<std::vector<int>> divisors_;

    void sample_C_into(CodObj& obj, int attach_white, const Perm& perm, int mu_idx,
                       int n, RngStream& rng);
    int sample_B_into(CodObj& obj, int attach_white, const Perm& perm, int mu_idx,
                      int n, RngStream& rng);
    void sample_black_children(CodObj& obj, int black, const Perm& perm,
                               const ProductSpec& spec, int budget, RngStream& rng,
                               bool lambda_mode);
};

}  // namespace ktg
