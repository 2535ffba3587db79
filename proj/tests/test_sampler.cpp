#include "doctest.h"
#include "ktreegen/sampler.hpp"
#include "stat_helpers.hpp"

#include <map>

using namespace ktg;

TEST_CASE("determinism: identical seeds, identical batches") {
    auto tab = build_series_table(2, 12);
    Sampler s(tab);
    for (uint64_t seed : {1ull, 99ull}) {
        std::vector<std::string> a, b;
        for (int i = 0; i < 20; ++i) {
            RngStream r1(derive_stream_seed(seed, i)), r2(derive_stream_seed(seed, i));
            a.push_back(to_text(s.sample_unrooted(10, r1, SampleMode::Pointed).t));
            b.push_back(to_text(s.sample_unrooted(10, r2, SampleMode::Pointed).t));
        }
        CHECK(a == b);
    }
}

TEST_CASE("size and validity of emitted trees") {
    auto tab = build_series_table(3, 10);
    Sampler s(tab);
    RngStream rng(5);
    for (int n : {1, 4, 9}) {
        for (int rep = 0; rep < 25; ++rep) {
            auto u = s.sample_unrooted(n, rng, SampleMode::Pointed);
            CHECK(u.t.k == 3);
            CHECK(u.t.hedron_count() == n);
            CHECK(ktree_valid(u.t));
        }
    }
}

TEST_CASE("multiset base cases") {
    auto tab = build_series_table(2, 8);
    Sampler s(tab);
    RngStream rng(11);
    CodObj empty = s.sample_C_obj(tab.mu_one_k, 0, rng);
    CHECK(empty.blacks.empty());
    CHECK(empty.whites.size() == 1);

    // n=1: single hedron branch, always
    for (int rep = 0; rep < 10; ++rep) {
        CodObj one = s.sample_Bbar_obj(tab.mu_one_k, 1, rng);
        CHECK(one.blacks.size() == 1);
        CHECK(one.whites.size() == (size_t)tab.k + 1);
    }
    CHECK_THROWS_AS(s.sample_Bbar_obj(tab.mu_one_k, 0, rng), std::domain_error);
}

TEST_CASE("rooted sampler uniformity: k=1 reduced branches, 4 classes") {
    auto tab = build_series_table(1, 8);
    Oracle oracle(1, 6);
    Sampler s(tab);
    // Bbar_{1^1}[4] = 4 rooted trees with 4 vertices
    auto classes = oracle.rooted_class_forms(
        4, Oracle::RootKind::FrontDistinguishableUniqueHedron);
    REQUIRE(classes.size() == 4);
    std::map<std::string, uint64_t> obs;
    uint64_t draws = 20000;
    for (uint64_t i = 0; i < draws; ++i) {
        RngStream rng(derive_stream_seed(404, i));
        auto fr = s.sample_front_rooted(4, rng, true);
        obs[front_labelled_form(fr.t, fr.root, fr.labels)] += 1;
    }
    for (auto& [form, cnt] : obs)
        CHECK(std::find(classes.begin(), classes.end(), form) != classes.end());
    auto [stat, df] = chisq_uniform(obs, classes.size(), draws);
    CHECK(stat < chisq_crit_1e3(df));
}

TEST_CASE("rooted sampler uniformity: k=2 reduced branches at n=4") {
    auto tab = build_series_table(2, 8);
    Oracle oracle(2, 5);
    Sampler s(tab);
    auto classes = oracle.rooted_class_forms(
        4, Oracle::RootKind::FrontDistinguishableUniqueHedron);
    REQUIRE(Zint((long)classes.size()) == tab.Bbar[tab.mu_one_k][4]);
    std::map<std::string, uint64_t> obs;
    uint64_t draws = 30000;
    for (uint64_t i = 0; i < draws; ++i) {
        RngStream rng(derive_stream_seed(77, i));
        auto fr = s.sample_front_rooted(4, rng, true);
        obs[front_labelled_form(fr.t, fr.root, fr.labels)] += 1;
    }
    auto [stat, df] = chisq_uniform(obs, classes.size(), draws);
    CHECK(stat < chisq_crit_1e3(df));
}

TEST_CASE("rooted sampler uniformity: k=2 front-rooted (C) at n=4") {
    auto tab = build_series_table(2, 8);
    Oracle oracle(2, 5);
    Sampler s(tab);
    auto classes = oracle.rooted_class_forms(4, Oracle::RootKind::FrontDistinguishable);
    REQUIRE(Zint((long)classes.size()) == tab.C[tab.mu_one_k][4]);
    std::map<std::string, uint64_t> obs;
    uint64_t draws = 30000;
    for (uint64_t i = 0; i < draws; ++i) {
        RngStream rng(derive_stream_seed(78, i));
        auto fr = s.sample_front_rooted(4, rng, false);
        obs[front_labelled_form(fr.t, fr.root, fr.labels)] += 1;
    }
    auto [stat, df] = chisq_uniform(obs, classes.size(), draws);
    CHECK(stat < chisq_crit_1e3(df));
}

TEST_CASE("hedron-rooted Burnside sampler at k=2, n=5") {
    auto tab = build_series_table(2, 8);
    Oracle oracle(2, 5);
    Sampler s(tab);
    auto classes = oracle.rooted_class_forms(5, Oracle::RootKind::Hedron);
    REQUIRE(Rat((long)classes.size()) == tab.B[5]);
    std::map<std::string, uint64_t> obs;
    uint64_t draws = 30000;
    for (uint64_t i = 0; i < draws; ++i) {
        RngStream rng(derive_stream_seed(555, i));
        auto hr = s.sample_hedron_rooted(5, rng);
        obs[hedron_rooted_form(hr.t, hr.root_hedron)] += 1;
    }
    auto [stat, df] = chisq_uniform(obs, classes.size(), draws);
    CHECK(stat < chisq_crit_1e3(df));
}

TEST_CASE("lambda marginal matches the Burnside weights") {
    auto tab = build_series_table(2, 20);
    Sampler s(tab);

    // at n=20 nearly all mass sits on 1^{k+1}
    {
        Rat total = 0, ones = 0;
        for (size_t l = 0; l < tab.lambdas.size(); ++l) {
            Rat w = Rat(tab.Blam[l][20]) / Rat(tab.lambdas[l].z());
            total += w;
            if (tab.lambdas[l].is_all_ones()) ones += w;
        }
        CHECK(ones / total > Rat(99, 100));
    }

    // at n=3 every type carries mass: goodness of fit on the tally
    std::vector<double> probs;
    {
        Rat total = 0;
        std::vector<Rat> w;
        for (size_t l = 0; l < tab.lambdas.size(); ++l) {
            w.push_back(Rat(tab.Blam[l][3]) / Rat(tab.lambdas[l].z()));
            total += w.back();
        }
        for (auto& x : w) probs.push_back(Rat(x / total).get_d());
    }
    std::vector<uint64_t> obs(tab.lambdas.size(), 0);
    uint64_t draws = 20000;
    for (uint64_t i = 0; i < draws; ++i) {
        RngStream rng(derive_stream_seed(9000, i));
        auto hr = s.sample_hedron_rooted(3, rng);
        for (size_t l = 0; l < tab.lambdas.size(); ++l)
            if (tab.lambdas[l] == hr.lambda) obs[l] += 1;
    }
    auto [stat, df] = chisq_probs(obs, probs, draws);
    CHECK(stat < chisq_crit_1e3(df));
}

TEST_CASE("unrooted sampler: n=1 and defect honesty") {
    auto tab = build_series_table(2, 10);
    Oracle oracle(2, 6);
    Sampler s(tab, &oracle);
    RngStream rng(3);
    for (int rep = 0; rep < 5; ++rep) {
        auto u = s.sample_unrooted(1, rng, SampleMode::Pointed);
        CHECK(u.t.hedron_count() == 1);
    }
    CHECK(s.defect(5, SampleMode::OracleExact) == 0);
    CHECK(s.defect(5, SampleMode::Auto) == 0);  // oracle covers n=5
    CHECK(s.defect(5, SampleMode::Pointed) == tab.pointing_defect(5));
    CHECK(s.defect(10, SampleMode::Auto) == tab.pointing_defect(10));
}

TEST_CASE("pointed mode TV against the oracle at k=2, n=5") {
    auto tab = build_series_table(2, 8);
    Oracle oracle(2, 5);
    Sampler s(tab);
    const int n = 5;
    const auto& forms = oracle.forms(n);
    size_t N = forms.size();
    std::map<std::string, uint64_t> obs;
    uint64_t draws = 40000;
    for (uint64_t i = 0; i < draws; ++i) {
        RngStream rng(derive_stream_seed(31337, i));
        auto u = s.sample_unrooted(n, rng, SampleMode::Pointed);
        obs[canonical_form(u.t)] += 1;
    }
    for (auto& [form, cnt] : obs) CHECK(oracle.rank(n, form) >= 0);
    double tv = 0;
    for (const auto& f : forms) {
        double p = obs.count(f) ? (double)obs.at(f) / draws : 0.0;
        tv += std::abs(p - 1.0 / N);
    }
    tv /= 2;
    double defect = tab.pointing_defect(n).get_d();
    double mean_noise = std::sqrt((double)N / (2 * M_PI * draws));
    double sd_noise = std::sqrt((1 - 2 / M_PI) / (4.0 * draws));
    CHECK(tv <= defect + mean_noise + 3 * sd_noise);
}
