#include "ktreegen/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ktg {

void CycleType::trim() {
    while (!mult_.empty() && mult_.back() == 0) mult_.pop_back();
}

CycleType CycleType::from_parts(const std::vector<int>& parts) {
    CycleType ct;
    for (int p : parts) {
        if (p <= 0) throw std::invalid_argument("partition parts must be positive");
        if ((int)ct.mult_.size() < p) ct.mult_.resize(p, 0);
        ct.mult_[p - 1] += 1;
    }
    return ct;
}

CycleType CycleType::from_multiplicities(std::vector<int> mult) {
    for (int m : mult)
        if (m < 0) throw std::invalid_argument("multiplicities must be non-negative");
    CycleType ct;
    ct.mult_ = std::move(mult);
    ct.trim();
    return ct;
}

int CycleType::total() const {
    int m = 0;
    for (int i = 0; i < (int)mult_.size(); ++i) m += (i + 1) * mult_[i];
    return m;
}

int CycleType::part_count() const {
    return std::accumulate(mult_.begin(), mult_.end(), 0);
}

int CycleType::multiplicity(int part_size) const {
    if (part_size < 1 || part_size > (int)mult_.size()) return 0;
    return mult_[part_size - 1];
}

std::vector<int> CycleType::parts() const {
    std::vector<int> out;
    for (int i = (int)mult_.size(); i >= 1; --i)
        for (int c = 0; c < mult_[i - 1]; ++c) out.push_back(i);
    return out;
}

mpz_class CycleType::z() const {
    mpz_class r = 1;
    for (int i = 1; i <= (int)mult_.size(); ++i) {
        int c = mult_[i - 1];
        for (int j = 0; j < c; ++j) r *= i;
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), c);
        r *= f;
    }
    return r;
}

CycleType CycleType::power(int d) const {
    if (d < 1) throw std::invalid_argument("power exponent must be >= 1");
    std::vector<int> mult;
    for (int i = 1; i <= (int)mult_.size(); ++i) {
        int c = mult_[i - 1];
        if (c == 0) continue;
        int g = std::gcd(i, d);
        int len = i / g;
        if ((int)mult.size() < len) mult.resize(len, 0);
        mult[len - 1] += c * g;
    }
    return from_multiplicities(std::move(mult));
}

CycleType CycleType::drop_fixed_point() const {
    if (multiplicity(1) == 0)
        throw std::invalid_argument("cycle type has no part of size 1");
    CycleType ct = *this;
    ct.mult_[0] -= 1;
    ct.trim();
    return ct;
}

std::vector<int> CycleType::canonical_permutation() const {
    std::vector<int> perm(total());
    int start = 0;
    for (int p : parts()) {
        for (int j = 0; j < p; ++j) perm[start + j] = start + (j + 1) % p;
        start += p;
    }
    return perm;
}

bool CycleType::is_all_ones() const {
    return mult_.size() <= 1;
}

std::string CycleType::to_string() const {
    std::string s;
    for (int p : parts()) {
        if (!s.empty()) s += '+';
        s += std::to_string(p);
    }
    return s;
}

bool partition_precedes(const CycleType& a, const CycleType& b) {
    std::vector<int> pa = a.parts(), pb = b.parts();
    return std::lexicographical_compare(pb.begin(), pb.end(), pa.begin(), pa.end());
}

namespace {
void gen_partitions(int remaining, int max_part, std::vector<int>& current,
                    std::vector<CycleType>& out) {
    if (remaining == 0) {
        out.push_back(CycleType::from_parts(current));
        return;
    }
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
        current.push_back(p);
        gen_partitions(remaining - p, p, current, out);
        current.pop_back();
    }
}
}  // namespace

std::vector<CycleType> partitions_of(int m) {
    if (m < 0) throw std::invalid_argument("partitions_of: m must be >= 0");
    std::vector<CycleType> out;
    std::vector<int> current;
    gen_partitions(m, m, current, out);
    return out;
}

}  // namespace ktg
