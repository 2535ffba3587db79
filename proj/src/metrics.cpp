#include "ktreegen/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ktreegen/rng.hpp"

namespace ktg {

std::vector<double> distance_statistic(const std::vector<KTree>& batch,
                                       int pairs_per_tree, uint64_t seed, double c_k) {
    if (batch.empty()) throw std::invalid_argument("distance_statistic: empty batch");
    std::vector<double> out;
    out.reserve(batch.size() * pairs_per_tree);
    for (size_t i = 0; i < batch.size(); ++i) {
        const KTree& t = batch[i];
        RngStream rng(derive_stream_seed(seed, i));
        auto adj = adjacency_lists(t);
        double scale = 2.0 * c_k / std::sqrt((double)t.hedron_count());
        for (int p = 0; p < pairs_per_tree; ++p) {
            int v1 = (int)rng.below_u64(adj.size());
            int v2 = (int)rng.below_u64(adj.size());
            int d = bfs_distances(adj, v1)[v2];
            out.push_back(scale * d);
        }
    }
    return out;
}

DiameterStats diameter_statistic(const std::vector<KTree>& batch, double c_k) {
    if (batch.empty()) throw std::invalid_argument("diameter_statistic: empty batch");
    DiameterStats st;
    std::vector<int> raw;
    raw.reserve(batch.size());
    for (const KTree& t : batch) {
        int D = graph_diameter(t);
        raw.push_back(D);
        st.normalized.push_back(c_k * D / std::sqrt((double)t.hedron_count()));
    }
    double s1 = 0, s2 = 0;
    for (double x : st.normalized) {
        s1 += x;
        s2 += x * x;
    }
    st.mean = s1 / st.normalized.size();
    st.second_moment = s2 / st.normalized.size();

    // tail ratios at the deciles of the observed raw diameters
    std::vector<int> sorted = raw;
    std::sort(sorted.begin(), sorted.end());
    double n_hedra = (double)batch.front().hedron_count();
    for (int dec = 1; dec <= 9; ++dec) {
        int x = sorted[sorted.size() * dec / 10];
        if (x <= 0) continue;
        double p = (double)(sorted.end() - std::lower_bound(sorted.begin(), sorted.end(), x)) /
                   sorted.size();
        if (p <= 0) continue;
        st.tail_table.push_back({(double)x, std::log(p) * n_hedra / ((double)x * x)});
    }
    return st;
}

CensusMap neighbourhood_census(const std::vector<KTree>& batch, int r, uint64_t seed) {
    if (r < 0) throw std::invalid_argument("neighbourhood_census: r must be >= 0");
    CensusMap census;
    for (size_t i = 0; i < batch.size(); ++i) {
        RngStream rng(derive_stream_seed(seed, i));
        int v = (int)rng.below_u64(batch[i].vertex_count());
        census[neighbourhood_code(batch[i], v, r)] += 1;
    }
    return census;
}

double census_tv(const CensusMap& a, const CensusMap& b) {
    uint64_t ta = 0, tb = 0;
    for (auto& [k, v] : a) ta += v;
    for (auto& [k, v] : b) tb += v;
    if (ta == 0 || tb == 0) throw std::invalid_argument("census_tv: empty census");
    double tv = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        double pa = 0, pb = 0;
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            pa = (double)ia->second / ta;
            ++ia;
        } else if (ia == a.end() || ib->first < ia->first) {
            pb = (double)ib->second / tb;
            ++ib;
        } else {
            pa = (double)ia->second / ta;
            pb = (double)ib->second / tb;
            ++ia;
            ++ib;
        }
        tv += std::abs(pa - pb);
    }
    return tv / 2;
}

}  // namespace ktg
