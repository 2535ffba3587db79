#include "doctest.h"
#include "ktreegen/partitions.hpp"

#include <map>
#include <set>

using namespace ktg;

namespace {

// independent oracle: p(n) via the pentagonal-number recurrence
long partition_count_pentagonal(int n) {
    std::vector<long> p(n + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long s = 0;
        for (int j = 1;; ++j) {
            int g1 = j * (3 * j - 1) / 2;
            int g2 = j * (3 * j + 1) / 2;
            if (g1 > m && g2 > m) break;
            long sign = (j % 2) ? 1 : -1;
            if (g1 <= m) s += sign * p[m - g1];
            if (g2 <= m) s += sign * p[m - g2];
        }
        p[m] = s;
    }
    return p[n];
}

CycleType cycle_type_of_permutation(const std::vector<int>& perm) {
    std::vector<int> parts;
    std::vector<char> seen(perm.size(), 0);
    for (int s = 0; s < (int)perm.size(); ++s) {
        if (seen[s]) continue;
        int len = 0, x = s;
        while (!seen[x]) {
            seen[x] = 1;
            ++len;
            x = perm[x];
        }
        parts.push_back(len);
    }
    return CycleType::from_parts(parts);
}

}  // namespace

TEST_CASE("partitions_of small cases") {
    auto p3 = partitions_of(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0].parts() == std::vector<int>{3});
    CHECK(p3[1].parts() == std::vector<int>{2, 1});
    CHECK(p3[2].parts() == std::vector<int>{1, 1, 1});

    auto p0 = partitions_of(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].total() == 0);
    CHECK(p0[0].part_count() == 0);

    CHECK(partitions_of(7).size() == (size_t)partition_count_pentagonal(7));
    for (int m = 0; m <= 12; ++m)
        CHECK(partitions_of(m).size() == (size_t)partition_count_pentagonal(m));
}

TEST_CASE("partitions are unique and ordered") {
    for (int m = 1; m <= 9; ++m) {
        auto ps = partitions_of(m);
        std::set<std::string> seen;
        for (size_t i = 0; i < ps.size(); ++i) {
            CHECK(ps[i].total() == m);
            CHECK(seen.insert(ps[i].to_string()).second);
            if (i > 0) CHECK(partition_precedes(ps[i - 1], ps[i]));
        }
    }
}

TEST_CASE("z_lambda values") {
    CHECK(CycleType::from_parts({1, 1, 1}).z() == 6);
    CHECK(CycleType::from_parts({2, 1}).z() == 2);
    CHECK(CycleType::from_parts({3}).z() == 3);
}

TEST_CASE("sum over lambda of m!/z equals m!") {
    for (int m = 1; m <= 12; ++m) {
        mpz_class total = 0, mf;
        mpz_fac_ui(mf.get_mpz_t(), m);
        for (const auto& lam : partitions_of(m)) {
            mpz_class z = lam.z();
            CHECK(mf % z == 0);
            total += mf / z;
        }
        CHECK(total == mf);
    }
}

TEST_CASE("power operation") {
    CHECK(CycleType::from_parts({2}).power(2) == CycleType::from_parts({1, 1}));
    CHECK(CycleType::from_parts({3}).power(2) == CycleType::from_parts({3}));
    CHECK(CycleType::from_parts({4}).power(2) == CycleType::from_parts({2, 2}));

    for (int m = 1; m <= 8; ++m)
        for (const auto& lam : partitions_of(m))
            for (int a = 1; a <= 6; ++a)
                for (int b = 1; b <= 6; ++b)
                    CHECK(lam.power(a).power(b) == lam.power(a * b));
}

TEST_CASE("drop_fixed_point") {
    CHECK(CycleType::from_parts({1, 1, 1}).drop_fixed_point() ==
          CycleType::from_parts({1, 1}));
    CHECK(CycleType::from_parts({2, 1}).drop_fixed_point() ==
          CycleType::from_parts({2}));
    CHECK_THROWS_AS(CycleType::from_parts({3}).drop_fixed_point(),
                    std::invalid_argument);
}

TEST_CASE("canonical permutation") {
    CHECK(CycleType::from_parts({2, 1}).canonical_permutation() ==
          std::vector<int>{1, 0, 2});
    CHECK(CycleType::from_parts({1, 1, 1}).canonical_permutation() ==
          std::vector<int>{0, 1, 2});
    CHECK(CycleType::from_parts({3}).canonical_permutation() ==
          std::vector<int>{1, 2, 0});

    for (int m = 1; m <= 9; ++m)
        for (const auto& lam : partitions_of(m))
            CHECK(cycle_type_of_permutation(lam.canonical_permutation()) == lam);
}

TEST_CASE("serialization") {
    CHECK(CycleType::from_parts({1, 2}).to_string() == "2+1");
    CHECK(CycleType().to_string() == "");
}
