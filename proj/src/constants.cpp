#include "ktreegen/constants.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>

namespace ktg {

namespace {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<80>>;

Real horner(const std::vector<Real>& coeff, const Real& x) {
    Real acc = 0;
    for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<Real> to_real(const std::vector<Zint>& v) {
    std::vector<Real> out;
    out.reserve(v.size());
    for (const auto& z : v) out.emplace_back(z.get_str());
    return out;
}

}  // namespace

double solve_rho(int k, int m, double tol) {
    if (m < 10) throw std::invalid_argument("solve_rho: truncation m must be >= 10");
    if (tol <= 0) throw std::invalid_argument("solve_rho: tol must be positive");
    auto bbar = to_real(bbar_1k_direct(k, m));

    const Real e = exp(Real(1));
    const Real target = 1 / (e * k);
    auto f = [&](const Real& x) {
        Real s = 0;
        Real xi = x;  // x^i
        for (int i = 2; i <= m; ++i) {
            xi *= x;
            s += horner(bbar, xi) / i;
        }
        return x * exp(Real(k) * s) - target;
    };

    Real lo = 1 / (2 * e * k), hi = 1 / (e * k);
    Real flo = f(lo), fhi = f(hi);
    if (!(flo < 0 && fhi > 0))
        throw std::runtime_error("solve_rho: bracket failed (bad truncation?)");
    for (int it = 0; it < 200 && (hi - lo) > Real(tol) / 4; ++it) {
        Real mid = (lo + hi) / 2;
        if (f(mid) < 0)
            lo = mid;
        else
            hi = mid;
    }
    return ((lo + hi) / 2).convert_to<double>();
}

ScalePair compute_c(int k, double rho, const std::vector<Zint>& bbar_1k) {
    auto bbar = to_real(bbar_1k);
    std::vector<Real> dbbar(bbar.size() > 1 ? bbar.size() - 1 : 1, Real(0));
    for (size_t n = 1; n < bbar.size(); ++n) dbbar[n - 1] = Real((unsigned)n) * bbar[n];

    Real r(rho);
    Real s = 0;
    Real ri = r;
    for (int i = 2; i <= 4096; ++i) {
        ri *= r;
        Real term = horner(dbbar, ri) * ri;
        s += term;
        if (term < Real("1e-30")) break;
    }
    Real factor = sqrt(1 + Real(k) * s);
    Real hk = 0;
    for (int i = 1; i <= k; ++i) hk += Real(1) / i;
    return {factor.convert_to<double>(), (Real(k) * hk * factor).convert_to<double>()};
}

double asymptotic_constant(int k, double rho, const std::vector<Zint>& bbar_1k) {
    auto bbar = to_real(bbar_1k);
    // Bow(z) = z Bbar'(z): coefficients n * bbar[n]
    std::vector<Real> bow(bbar.size(), Real(0));
    for (size_t n = 1; n < bbar.size(); ++n) bow[n] = Real((unsigned)n) * bbar[n];

    Real r(rho);
    Real s = 0;
    Real rl = r;
    for (int l = 2; l <= 4096; ++l) {
        rl *= r;
        Real term = horner(bow, rl);
        s += term;
        if (term < Real("1e-30")) break;
    }
    Real kr = Real(k) * r;
    Real fk;
    {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), k);
        fk = Real(f.get_str());
    }
    const Real pi = 4 * atan(Real(1));
    Real base = pow(kr, -k) / (Real(k) * Real(k) * fk * sqrt(2 * pi));
    Real corr = pow(1 + Real(k) * s, Real(3) / 2);
    return (base * corr).convert_to<double>();
}

Constants compute_constants(int k, int m, double tol) {
    Constants c;
    c.k = k;
    c.trunc_m = m;
    c.rho = solve_rho(k, m, tol);
    auto bbar = bbar_1k_direct(k, 2 * m);
    auto sp = compute_c(k, c.rho, bbar);
    c.sqrt_factor = sp.sqrt_factor;
    c.c = sp.c;
    c.asym_const = asymptotic_constant(k, c.rho, bbar);
    return c;
}

}  // namespace ktg
