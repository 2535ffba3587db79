#include "ktreegen/gfsystem.hpp"

#include <numeric>
#include <stdexcept>

namespace ktg {

namespace {

void check(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(msg);
}

// exact division r = a / b, checked
Zint div_exact(const Zint& a, unsigned long b, const char* what) {
    Zint q, r;
    mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b);
    check(r == 0, what);
    return q;
}

}  // namespace

int SeriesTable::mu_index(const CycleType& mu) const {
    for (int i = 0; i < (int)mus.size(); ++i)
        if (mus[i] == mu) return i;
    throw std::invalid_argument("mu_index: not a partition of k");
}

int SeriesTable::lambda_index(const CycleType& lam) const {
    for (int i = 0; i < (int)lambdas.size(); ++i)
        if (lambdas[i] == lam) return i;
    throw std::invalid_argument("lambda_index: not a partition of k+1");
}

int SeriesTable::mu_power_index(int mu_idx, long d) const {
    const auto& tab = mu_pow[mu_idx];
    long period = (long)tab.size();
    return tab[(d - 1) % period];
}

Rat SeriesTable::v3dec_1k(int n) const {
    return Rat(CM1k[n]) / Rat(k_fact);
}

Rat SeriesTable::pointing_defect(int n) const {
    if (n < 1 || n > N) throw std::out_of_range("pointing_defect: n out of range");
    Rat nu = Rat(n) * U[n];
    if (nu == 0) throw std::domain_error("pointing_defect: U[n] = 0");
    Rat num = nu - B[n] - v3dec_1k(n);
    if (num < 0)
        throw std::domain_error("pointing_defect: negative mass (inconsistent table)");
    return num / nu;
}

namespace {
Series to_series(const std::vector<Zint>& v) {
    std::vector<Rat> c;
    c.reserve(v.size());
    for (const auto& z : v) c.emplace_back(z);
    return Series::from_coefficients(std::move(c));
}
Series to_series(const std::vector<Rat>& v) {
    return Series::from_coefficients(v);
}
}  // namespace

Series SeriesTable::series_U() const { return to_series(U); }
Series SeriesTable::series_B() const { return to_series(B); }
Series SeriesTable::series_C() const { return to_series(Cagg); }
Series SeriesTable::series_E() const { return to_series(E); }
Series SeriesTable::series_C_mu(int i) const { return to_series(C[i]); }
Series SeriesTable::series_Bbar_mu(int i) const { return to_series(Bbar[i]); }
Series SeriesTable::series_B_lambda(int i) const { return to_series(Blam[i]); }

SeriesTable build_series_table(int k, int N) {
    if (k < 1 || N < 1) throw std::invalid_argument("build_series_table: k,N >= 1");
    SeriesTable t;
    t.k = k;
    t.N = N;
    t.mus = partitions_of(k);
    t.lambdas = partitions_of(k + 1);
    mpz_fac_ui(t.k_fact.get_mpz_t(), k);
    mpz_fac_ui(t.k1_fact.get_mpz_t(), k + 1);

    int nmu = (int)t.mus.size();
    int nlam = (int)t.lambdas.size();
    for (int i = 0; i < nmu; ++i)
        if (t.mus[i].is_all_ones()) t.mu_one_k = i;
    check(t.mu_one_k >= 0, "1^k partition missing");

    // power index tables: mu^d is periodic in d with period lcm(parts)
    t.mu_pow.resize(nmu);
    for (int i = 0; i < nmu; ++i) {
        long period = 1;
        for (int p : t.mus[i].parts()) period = std::lcm(period, (long)p);
        for (long d = 1; d <= period; ++d) {
            CycleType pw = t.mus[i].power((int)d);
            t.mu_pow[i].push_back(t.mu_index(pw));
        }
    }

    // product specs
    t.bbar_prod.resize(nmu);
    for (int i = 0; i < nmu; ++i) {
        for (int p : t.mus[i].parts())
            t.bbar_prod[i].factors.push_back({t.mu_index(t.mus[i].power(p)), p});
    }
    t.blam_prod.resize(nlam);
    for (int l = 0; l < nlam; ++l) {
        for (int p : t.lambdas[l].parts()) {
            CycleType dropped = t.lambdas[l].power(p).drop_fixed_point();
            t.blam_prod[l].factors.push_back({t.mu_index(dropped), p});
        }
    }

    auto zero = std::vector<Zint>(N + 1, Zint(0));
    t.C.assign(nmu, zero);
    t.Bbar.assign(nmu, zero);
    t.aexp.assign(nmu, zero);
    t.Blam.assign(nlam, zero);
    for (int i = 0; i < nmu; ++i) t.C[i][0] = 1;
    for (auto* vec : {&t.bbar_prod, &t.blam_prod}) {
        for (auto& spec : *vec) {
            spec.prefix.assign(spec.factors.size() + 1, zero);
            // every factor has constant term 1
            for (auto& p : spec.prefix) p[0] = 1;
        }
    }

    // extend prefix products of `spec` to degree n (all C inputs known < n+1)
    auto extend_prefixes = [&](ProductSpec& spec, int n) {
        for (size_t j = 1; j <= spec.factors.size(); ++j) {
            const auto& F = t.C[spec.factors[j - 1].mu_idx];
            int pw = spec.factors[j - 1].power;
            Zint acc = 0;
            for (int b = 0; b * pw <= n; ++b) {
                if (F[b] == 0) continue;
                const Zint& left = spec.prefix[j - 1][n - b * pw];
                if (left == 0) continue;
                acc += left * F[b];
            }
            spec.prefix[j][n] = acc;
        }
    };

    for (int n = 1; n <= N; ++n) {
        // Bbar_mu[n] = [z^{n-1}] prod_i C_{mu^i}(z^i)
        for (int i = 0; i < nmu; ++i)
            t.Bbar[i][n] = t.bbar_prod[i].prefix[t.bbar_prod[i].factors.size()][n - 1];
        // a_mu(n) = sum_{d|n} (n/d) Bbar_{mu^d}[n/d]
        for (int i = 0; i < nmu; ++i) {
            Zint a = 0;
            for (int d = 1; d <= n; ++d) {
                if (n % d) continue;
                int j = t.mu_power_index(i, d);
                if (t.Bbar[j][n / d] != 0) a += Zint(n / d) * t.Bbar[j][n / d];
            }
            t.aexp[i][n] = a;
        }
        // C_mu[n] = (1/n) sum_{m=1}^{n} a_mu(m) C_mu[n-m]
        for (int i = 0; i < nmu; ++i) {
            Zint s = 0;
            for (int m = 1; m <= n; ++m) {
                if (t.aexp[i][m] == 0 || t.C[i][n - m] == 0) continue;
                s += t.aexp[i][m] * t.C[i][n - m];
            }
            t.C[i][n] = div_exact(s, (unsigned long)n, "C_mu coefficient not integral");
        }
        // B_lambda[n] = [z^{n-1}] prod_i C_{lambda^i - 1}(z^i)
        for (int l = 0; l < nlam; ++l)
            t.Blam[l][n] = t.blam_prod[l].prefix[t.blam_prod[l].factors.size()][n - 1];
        // make degree n of every running product available for degree n+1
        for (auto& spec : t.bbar_prod) extend_prefixes(spec, n);
        for (auto& spec : t.blam_prod) extend_prefixes(spec, n);
    }

    // aggregates
    t.B.assign(N + 1, Rat(0));
    t.Cagg.assign(N + 1, Rat(0));
    t.E.assign(N + 1, Rat(0));
    t.U.assign(N + 1, Rat(0));
    std::vector<Rat> zmu_inv, zlam_inv;
    for (int i = 0; i < nmu; ++i) zmu_inv.push_back(Rat(1) / Rat(t.mus[i].z()));
    for (int l = 0; l < nlam; ++l) zlam_inv.push_back(Rat(1) / Rat(t.lambdas[l].z()));
    for (int n = 0; n <= N; ++n) {
        for (int l = 0; l < nlam; ++l) t.B[n] += Rat(t.Blam[l][n]) * zlam_inv[l];
        for (int i = 0; i < nmu; ++i) t.Cagg[n] += Rat(t.C[i][n]) * zmu_inv[i];
    }
    // E = sum_mu Bbar_mu * C_mu / z_mu  (edge-rooted pairing)
    for (int i = 0; i < nmu; ++i) {
        for (int a = 0; a <= N; ++a) {
            if (t.Bbar[i][a] == 0) continue;
            for (int b = 0; a + b <= N; ++b) {
                if (t.C[i][b] == 0) continue;
                t.E[a + b] += Rat(t.Bbar[i][a] * t.C[i][b]) * zmu_inv[i];
            }
        }
    }
    check(t.B[0] == 0 && t.E[0] == 0 && t.Cagg[0] == 1, "aggregate constant terms");
    for (int n = 0; n <= N; ++n) t.U[n] = t.B[n] + t.Cagg[n] - t.E[n];
    t.U[0] = 0;

    t.Bz.assign(N + 1, Zint(0));
    t.Uz.assign(N + 1, Zint(0));
    for (int n = 0; n <= N; ++n) {
        check(t.B[n].get_den() == 1, "B coefficient not integral");
        check(t.Cagg[n].get_den() == 1, "C coefficient not integral");
        check(t.E[n].get_den() == 1, "E coefficient not integral");
        check(t.U[n].get_den() == 1 && t.U[n] >= 0, "U coefficient not a count");
        t.Bz[n] = t.B[n].get_num();
        t.Uz[n] = t.U[n].get_num();
    }

    // pointed pieces
    t.Bow1k.assign(N + 1, Zint(0));
    t.M1k.assign(N + 1, Zint(0));
    t.CM1k.assign(N + 1, Zint(0));
    const auto& bb = t.Bbar[t.mu_one_k];
    for (int n = 0; n <= N; ++n) t.Bow1k[n] = Zint(n) * bb[n];
    for (int n = 1; n <= N; ++n) {
        Zint m = 0;
        for (int l = 2; l <= n; ++l)
            if (n % l == 0) m += t.Bow1k[n / l];
        t.M1k[n] = m;
    }
    const auto& c1k = t.C[t.mu_one_k];
    for (int a = 0; a <= N; ++a) {
        if (t.M1k[a] == 0) continue;
        for (int b = 0; a + b <= N; ++b) {
            if (c1k[b] == 0) continue;
            t.CM1k[a + b] += t.M1k[a] * c1k[b];
        }
    }
    return t;
}

std::vector<Zint> bbar_1k_direct(int k, int N) {
    if (k < 1 || N < 1) throw std::invalid_argument("bbar_1k_direct: k,N >= 1");
    // Bbar = z * Ex with Ex = exp(k sum_i Bbar(z^i)/i); n*Ex[n] = sum a(m)Ex[n-m],
    // a(m) = k sum_{d|m} (m/d) Bbar[m/d].
    std::vector<Zint> bbar(N + 1, Zint(0)), ex(N + 1, Zint(0)), a(N + 1, Zint(0));
    ex[0] = 1;
    bbar[1] = 1;
    for (int n = 1; n <= N; ++n) {
        Zint an = 0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0 && bbar[n / d] != 0) an += Zint(n / d) * bbar[n / d];
        a[n] = Zint(k) * an;
        Zint s = 0;
        for (int m = 1; m <= n; ++m) {
            if (a[m] == 0 || ex[n - m] == 0) continue;
            s += a[m] * ex[n - m];
        }
        ex[n] = div_exact(s, (unsigned long)n, "bbar_1k_direct: not integral");
        if (n + 1 <= N) bbar[n + 1] = ex[n];
    }
    return bbar;
}

std::vector<Zint> c_1k_direct(int k, int N) {
    auto bbar = bbar_1k_direct(k, N);
    std::vector<Zint> c(N + 1, Zint(0)), a(N + 1, Zint(0));
    c[0] = 1;
    for (int n = 1; n <= N; ++n) {
        Zint an = 0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0 && bbar[n / d] != 0) an += Zint(n / d) * bbar[n / d];
        a[n] = an;
        Zint s = 0;
        for (int m = 1; m <= n; ++m) {
            if (a[m] == 0 || c[n - m] == 0) continue;
            s += a[m] * c[n - m];
        }
        c[n] = div_exact(s, (unsigned long)n, "c_1k_direct: not integral");
    }
    return c;
}

}  // namespace ktg
