#include "ktreegen/sampler.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ktg {

namespace {

void check(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(msg);
}

std::vector<int> identity_perm(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

std::vector<int> rotate_min(const std::vector<int>& cyc) {
    size_t pos = std::min_element(cyc.begin(), cyc.end()) - cyc.begin();
    std::vector<int> out;
    out.reserve(cyc.size());
    for (size_t i = 0; i < cyc.size(); ++i) out.push_back(cyc[(pos + i) % cyc.size()]);
    return out;
}

std::vector<std::vector<int>> cycle_decomposition(const std::vector<int>& perm) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(perm.size(), 0);
    for (int s = 0; s < (int)perm.size(); ++s) {
        if (seen[s]) continue;
        std::vector<int> cyc;
        int x = s;
        while (!seen[x]) {
            seen[x] = 1;
            cyc.push_back(x);
            x = perm[x];
        }
        out.push_back(rotate_min(cyc));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a[0] < b[0];
    });
    return out;
}

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
    // (f o g)(x) = f(g(x))
    std::vector<int> r(f.size());
    for (size_t x = 0; x < f.size(); ++x) r[x] = f[g[x]];
    return r;
}

long perm_order(const std::vector<int>& perm) {
    long o = 1;
    for (const auto& c : cycle_decomposition(perm)) o = std::lcm(o, (long)c.size());
    return o;
}

std::vector<int> perm_power(const std::vector<int>& perm, long d) {
    long o = perm_order(perm);
    long e = ((d - 1) % o) + 1;
    std::vector<int> r = identity_perm((int)perm.size());
    for (long i = 0; i < e; ++i) r = compose(perm, r);
    return r;
}

/// Merge a white-rooted fragment into dst, recolouring every white by
/// cmap (a permutation of 0..k).  attach_white >= 0 merges the root onto
/// an existing white; otherwise the root becomes a fresh white node.
/// Returns the id of the (merged or fresh) root white.
int append_recoloured(CodObj& dst, const CodObj& src, const std::vector<int>& cmap,
                      int attach_white) {
    check(src.root_white >= 0, "append: source must be white-rooted");
    std::vector<int> wmap(src.whites.size(), -1), bmap(src.blacks.size(), -1);
    for (int w = 0; w < (int)src.whites.size(); ++w) {
        int col = cmap[src.whites[w].colour];
        if (w == src.root_white && attach_white >= 0) {
            check(dst.whites[attach_white].colour == col, "append: root colour clash");
            wmap[w] = attach_white;
        } else {
            dst.whites.push_back({col, {}});
            wmap[w] = (int)dst.whites.size() - 1;
        }
    }
    for (int b = 0; b < (int)src.blacks.size(); ++b) {
        dst.blacks.push_back({});
        bmap[b] = (int)dst.blacks.size() - 1;
    }
    for (int b = 0; b < (int)src.blacks.size(); ++b)
        for (int w : src.blacks[b].whites) {
            dst.blacks[bmap[b]].whites.push_back(wmap[w]);
            dst.whites[wmap[w]].blacks.push_back(bmap[b]);
        }
    return wmap[src.root_white];
}

}  // namespace

CodObj white_rooted_obj(int k) {
    CodObj o;
    o.k = k;
    o.whites.push_back({k, {}});
    o.root_white = 0;
    return o;
}

CodingTree to_coding_tree(const CodObj& o) {
    CodingTree ct;
    ct.k = o.k;
    ct.white_colour.reserve(o.whites.size());
    for (const auto& w : o.whites) ct.white_colour.push_back(w.colour);
    ct.white_blacks.resize(o.whites.size());
    ct.black_whites.resize(o.blacks.size());
    for (int w = 0; w < (int)o.whites.size(); ++w) ct.white_blacks[w] = o.whites[w].blacks;
    for (int b = 0; b < (int)o.blacks.size(); ++b) ct.black_whites[b] = o.blacks[b].whites;
    return ct;
}

Sampler::Sampler(const SeriesTable& table, Oracle* oracle)
    : tab_(table), oracle_(oracle) {
    divisors_.resize(tab_.N + 1);
    for (int d = 1; d <= tab_.N; ++d)
        for (int m = d; m <= tab_.N; m += d) divisors_[m].push_back(d);
}

bool Sampler::oracle_covers(int n) const {
    return oracle_ != nullptr && n >= 1 && n <= oracle_->bound();
}

Rat Sampler::defect(int n, SampleMode mode) const {
    if (mode == SampleMode::OracleExact ||
        (mode == SampleMode::Auto && oracle_covers(n)))
        return Rat(0);
    return tab_.pointing_defect(n);
}

void Sampler::sample_C_into(CodObj& obj, int attach_white, const Perm& perm,
                            int mu_idx, int n, RngStream& rng) {
    const auto& Cmu = tab_.C[mu_idx];
    if (Cmu[n] == 0) throw std::domain_error("sample_C: zero coefficient");
    int remaining = n;
    while (remaining > 0) {
        Zint total = Zint(remaining) * Cmu[remaining];
        Zint R = rng.below(total);
        Zint acc = 0;
        int chosen_m = -1, chosen_d = -1;
        for (int m = remaining; m >= 1 && chosen_m < 0; --m) {
            const Zint& crest = Cmu[remaining - m];
            if (crest == 0) continue;
            for (int d : divisors_[m]) {
                const Zint& bb = tab_.Bbar[tab_.mu_power_index(mu_idx, d)][m / d];
                if (bb == 0) continue;
                acc += Zint(m / d) * bb * crest;
                if (acc > R) {
                    chosen_m = m;
                    chosen_d = d;
                    break;
                }
            }
        }
        check(chosen_m > 0, "sample_C: weight walk failed");
        int m = chosen_m, d = chosen_d;
        Perm pd = perm_power(perm, d);
        CodObj piece = white_rooted_obj(tab_.k);
        sample_B_into(piece, piece.root_white, pd, tab_.mu_power_index(mu_idx, d),
                      m / d, rng);
        // the orbit of the piece under recolouring by powers of perm
        Perm phat_j = identity_perm(tab_.k + 1);
        Perm phat = identity_perm(tab_.k + 1);
        for (int x = 0; x < tab_.k; ++x) phat[x] = perm[x];
        for (int j = 0; j < d; ++j) {
            append_recoloured(obj, piece, phat_j, attach_white);
            phat_j = compose(phat, phat_j);
        }
        remaining -= m;
    }
}

int Sampler::sample_B_into(CodObj& obj, int attach_white, const Perm& perm,
                           int mu_idx, int n, RngStream& rng) {
    if (n < 1 || tab_.Bbar[mu_idx][n] == 0)
        throw std::domain_error("sample_Bbar: zero coefficient");
    obj.blacks.push_back({});
    int b = (int)obj.blacks.size() - 1;
    obj.blacks[b].whites.push_back(attach_white);
    obj.whites[attach_white].blacks.push_back(b);
    sample_black_children(obj, b, perm, tab_.bbar_prod[mu_idx], n - 1, rng, false);
    return b;
}

void Sampler::sample_black_children(CodObj& obj, int black, const Perm& perm,
                                    const ProductSpec& spec, int budget,
                                    RngStream& rng, bool lambda_mode) {
    int k = tab_.k;
    auto cycles = cycle_decomposition(perm);
    check(cycles.size() == spec.factors.size(), "sampler: cycle/factor mismatch");

    // choose the size vector backwards so the prefix products serve as the
    // conditional totals
    int nf = (int)spec.factors.size();
    std::vector<int> sizes(nf, 0);
    int rem = budget;
    for (int j = nf; j >= 1; --j) {
        const auto& F = tab_.C[spec.factors[j - 1].mu_idx];
        int pw = spec.factors[j - 1].power;
        check(pw == (int)cycles[j - 1].size(), "sampler: factor length mismatch");
        const auto& P = spec.prefix[j - 1];
        const Zint& total = spec.prefix[j][rem];
        check(total > 0, "sampler: empty size-vector cell");
        Zint R = rng.below(total);
        Zint acc = 0;
        int chosen = -1;
        int lo = 0, hi = (rem / pw) * pw;
        bool pick_hi = true;
        while (lo <= hi) {
            int bb = pick_hi ? hi : lo;
            const Zint& f = F[bb / pw];
            if (f != 0 && P[rem - bb] != 0) {
                acc += f * P[rem - bb];
                if (acc > R) {
                    chosen = bb;
                    break;
                }
            }
            if (pick_hi)
                hi -= pw;
            else
                lo += pw;
            if (lo > hi) break;
            pick_hi = !pick_hi;
        }
        check(chosen >= 0, "sampler: size walk failed");
        sizes[j - 1] = chosen / pw;
        rem -= chosen;
    }
    check(rem == 0, "sampler: size vector does not exhaust budget");

    for (int j = 0; j < nf; ++j) {
        const auto& cyc = cycles[j];
        int ell = (int)cyc.size();
        int dmin = cyc[0];
        int s = sizes[j];

        Perm sub;
        if (lambda_mode) {
            Perm pl = perm_power(perm, ell);  // on 0..k
            sub.resize(k);
            auto tau = [&](int c) { return c == dmin ? k : (c == k ? dmin : c); };
            for (int x = 0; x < k; ++x) sub[x] = tau(pl[tau(x)]);
        } else {
            sub = perm_power(perm, ell);  // on 0..k-1; fixes dmin
        }

        CodObj piece = white_rooted_obj(k);
        if (s > 0) sample_C_into(piece, piece.root_white, sub, spec.factors[j].mu_idx,
                                 s, rng);

        // colour map for copy j2: phat^{j2} o tau, tau = swap(dmin, k)
        Perm phat = identity_perm(k + 1);
        if (lambda_mode)
            phat = perm;
        else
            for (int x = 0; x < k; ++x) phat[x] = perm[x];
        Perm phat_j = identity_perm(k + 1);
        for (int j2 = 0; j2 < ell; ++j2) {
            Perm cmap(k + 1);
            for (int x = 0; x <= k; ++x) {
                int tx = (x == dmin) ? k : (x == k ? dmin : x);
                cmap[x] = phat_j[tx];
            }
            int w = append_recoloured(obj, piece, cmap, -1);
            obj.blacks[black].whites.push_back(w);
            obj.whites[w].blacks.push_back(black);
            phat_j = compose(phat, phat_j);
        }
    }
}

CodObj Sampler::sample_C_obj(int mu_idx, int n, RngStream& rng) {
    CodObj obj = white_rooted_obj(tab_.k);
    Perm perm = tab_.mus[mu_idx].canonical_permutation();
    if (n > 0) sample_C_into(obj, obj.root_white, perm, mu_idx, n, rng);
    return obj;
}

CodObj Sampler::sample_Bbar_obj(int mu_idx, int n, RngStream& rng) {
    CodObj obj = white_rooted_obj(tab_.k);
    Perm perm = tab_.mus[mu_idx].canonical_permutation();
    if ((int)perm.size() != tab_.k)
        throw std::invalid_argument("sample_Bbar_obj: mu must partition k");
    sample_B_into(obj, obj.root_white, perm, mu_idx, n, rng);
    return obj;
}

CodObj Sampler::sample_Blam_obj(int lam_idx, int n, RngStream& rng) {
    if (n < 1 || tab_.Blam[lam_idx][n] == 0)
        throw std::domain_error("sample_Blam: zero coefficient");
    CodObj obj;
    obj.k = tab_.k;
    obj.blacks.push_back({});
    obj.root_black = 0;
    Perm perm = tab_.lambdas[lam_idx].canonical_permutation();
    sample_black_children(obj, 0, perm, tab_.blam_prod[lam_idx], n - 1, rng, true);
    return obj;
}

Sampler::HedronRooted Sampler::sample_hedron_rooted(int n, RngStream& rng) {
    int nlam = (int)tab_.lambdas.size();
    std::vector<Zint> w(nlam);
    Zint total = 0;
    for (int l = 0; l < nlam; ++l) {
        Zint mult = tab_.k1_fact / tab_.lambdas[l].z();
        w[l] = tab_.Blam[l][n] * mult;
        total += w[l];
    }
    if (total == 0) throw std::domain_error("sample_hedron_rooted: B[n] = 0");
    Zint R = rng.below(total);
    int chosen = -1;
    Zint acc = 0;
    for (int l = nlam - 1; l >= 0; --l) {  // 1^{k+1} first: it carries the bulk
        acc += w[l];
        if (acc > R) {
            chosen = l;
            break;
        }
    }
    check(chosen >= 0, "sample_hedron_rooted: lambda walk failed");
    CodObj obj = sample_Blam_obj(chosen, n, rng);
    Decoded dec = decode(to_coding_tree(obj));
    return {std::move(dec.t), dec.black_hedron[0], tab_.lambdas[chosen]};
}

Sampler::FrontRooted Sampler::sample_front_rooted(int n, RngStream& rng,
                                                  bool unique_hedron) {
    if (n < 1) throw std::domain_error("sample_front_rooted: n must be >= 1");
    CodObj obj = unique_hedron ? sample_Bbar_obj(tab_.mu_one_k, n, rng)
                               : sample_C_obj(tab_.mu_one_k, n, rng);
    Decoded dec = decode(to_coding_tree(obj));
    Front root = dec.white_front[obj.root_white];
    std::vector<int> labels = front_labels(dec.t, dec.col, root);
    return {std::move(dec.t), std::move(root), std::move(labels)};
}

UnrootedSample Sampler::sample_unrooted(int n, RngStream& rng, SampleMode mode) {
    if (n < 1 || n > tab_.N) throw std::out_of_range("sample_unrooted: bad n");
    if (tab_.Uz[n] == 0) throw std::domain_error("sample_unrooted: U[n] = 0");
    bool use_oracle = mode == SampleMode::OracleExact ||
                      (mode == SampleMode::Auto && oracle_covers(n));
    if (use_oracle) {
        if (!oracle_covers(n))
            throw std::out_of_range("sample_unrooted: oracle mode beyond bound");
        uint64_t idx = rng.below_u64(oracle_->count(n));
        UnrootedSample s;
        s.t = oracle_->unrank(n, idx);
        s.part = 'O';
        return s;
    }

    Zint w1 = tab_.k_fact * tab_.Bz[n];
    const Zint& w2 = tab_.CM1k[n];
    Zint R = rng.below(w1 + w2);
    if (R < w1) {
        auto hr = sample_hedron_rooted(n, rng);
        UnrootedSample s;
        s.t = std::move(hr.t);
        s.part = '1';
        s.lambda = hr.lambda;
        return s;
    }

    // decoupled front-centred part: ell >= 2 identical branches of size s
    // glued with an unmarked C-object of size n - ell*s
    const auto& bb = tab_.Bbar[tab_.mu_one_k];
    const auto& cc = tab_.C[tab_.mu_one_k];
    Zint R2 = rng.below(w2);
    Zint acc = 0;
    int ell = -1, s = -1;
    for (int j = 2; j <= n && ell < 0; ++j) {
        if (cc[n - j] == 0) continue;
        for (int l : divisors_[j]) {
            if (l < 2) continue;
            int sz = j / l;
            if (bb[sz] == 0) continue;
            acc += Zint(sz) * bb[sz] * cc[n - j];
            if (acc > R2) {
                ell = l;
                s = sz;
                break;
            }
        }
    }
    check(ell >= 2, "sample_unrooted: marked-part walk failed");

    Perm id = identity_perm(tab_.k);
    CodObj obj = white_rooted_obj(tab_.k);
    CodObj branch = white_rooted_obj(tab_.k);
    sample_B_into(branch, branch.root_white, id, tab_.mu_one_k, s, rng);
    Perm idmap(tab_.k + 1);
    std::iota(idmap.begin(), idmap.end(), 0);
    for (int j = 0; j < ell; ++j) append_recoloured(obj, branch, idmap, obj.root_white);
    int rest = n - ell * s;
    if (rest > 0) sample_C_into(obj, obj.root_white, id, tab_.mu_one_k, rest, rng);

    Decoded dec = decode(to_coding_tree(obj));
    UnrootedSample out;
    out.t = std::move(dec.t);
    out.part = '3';
    out.ell = ell;
    out.s = s;
    return out;
}

}  // namespace ktg
