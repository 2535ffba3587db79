#include "ktreegen/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace ktg {

Series::Series(int trunc) {
    if (trunc < 0) throw std::invalid_argument("Series: truncation must be >= 0");
    coeff_.assign(trunc + 1, Rat(0));
}

Series Series::constant(int trunc, const Rat& c) {
    Series s(trunc);
    s.coeff_[0] = c;
    return s;
}

Series Series::monomial(int trunc, int degree, const Rat& c) {
    Series s(trunc);
    if (degree < 0) throw std::invalid_argument("Series::monomial: negative degree");
    if (degree <= trunc) s.coeff_[degree] = c;
    return s;
}

Series Series::from_coefficients(std::vector<Rat> coeff) {
    if (coeff.empty()) throw std::invalid_argument("Series: empty coefficient vector");
    Series s(0);
    s.coeff_ = std::move(coeff);
    return s;
}

const Rat& Series::coefficient(int n) const {
    if (n < 0 || n > trunc())
        throw std::out_of_range("Series::coefficient: degree out of range");
    return coeff_[n];
}

void Series::set_coefficient(int n, Rat v) {
    if (n < 0 || n > trunc())
        throw std::out_of_range("Series::set_coefficient: degree out of range");
    coeff_[n] = std::move(v);
}

Series Series::add(const Series& o) const {
    int N = std::min(trunc(), o.trunc());
    Series r(N);
    for (int n = 0; n <= N; ++n) r.coeff_[n] = coeff_[n] + o.coeff_[n];
    return r;
}

Series Series::sub(const Series& o) const {
    int N = std::min(trunc(), o.trunc());
    Series r(N);
    for (int n = 0; n <= N; ++n) r.coeff_[n] = coeff_[n] - o.coeff_[n];
    return r;
}

Series Series::mul(const Series& o) const {
    int N = std::min(trunc(), o.trunc());
    Series r(N);
    for (int a = 0; a <= N; ++a) {
        if (coeff_[a] == 0) continue;
        for (int b = 0; a + b <= N; ++b) {
            if (o.coeff_[b] == 0) continue;
            r.coeff_[a + b] += coeff_[a] * o.coeff_[b];
        }
    }
    return r;
}

Series Series::derivative() const {
    if (trunc() == 0) return Series(0);
    Series r(trunc() - 1);
    for (int n = 1; n <= trunc(); ++n) r.coeff_[n - 1] = Rat(n) * coeff_[n];
    return r;
}

Series Series::substitute_power(int i) const {
    if (i < 1) throw std::invalid_argument("substitute_power: i must be >= 1");
    Series r(trunc());
    for (int n = 0; n * i <= trunc(); ++n) r.coeff_[n * i] = coeff_[n];
    return r;
}

Series Series::exp() const {
    if (coeff_[0] != 0)
        throw std::domain_error("Series::exp: constant term must be zero");
    int N = trunc();
    Series r(N);
    r.coeff_[0] = 1;
    for (int n = 1; n <= N; ++n) {
        Rat s(0);
        for (int m = 1; m <= n; ++m) {
            if (coeff_[m] == 0) continue;
            s += Rat(m) * coeff_[m] * r.coeff_[n - m];
        }
        r.coeff_[n] = s / n;
    }
    return r;
}

double Series::evaluate(double x, int precision_digits) const {
    mp_bitcnt_t prec = (mp_bitcnt_t)(precision_digits * 3.33) + 64;
    mpf_class xf(x, prec);
    mpf_class acc(0, prec);
    for (int n = trunc(); n >= 0; --n) {
        acc *= xf;
        acc += mpf_class(coeff_[n], prec);
    }
    return acc.get_d();
}

std::vector<std::string> Series::to_fraction_strings() const {
    std::vector<std::string> out;
    out.reserve(coeff_.size());
    for (const Rat& c : coeff_)
        out.push_back(c.get_num().get_str() + "/" + c.get_den().get_str());
    return out;
}

}  // namespace ktg
