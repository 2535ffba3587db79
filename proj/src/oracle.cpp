#include "ktreegen/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ktg {

namespace {

void check(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(msg);
}

// canonical rotation: smallest element first
std::vector<int> rotate_min(const std::vector<int>& cyc) {
    size_t pos = std::min_element(cyc.begin(), cyc.end()) - cyc.begin();
    std::vector<int> out;
    out.reserve(cyc.size());
    for (size_t i = 0; i < cyc.size(); ++i) out.push_back(cyc[(pos + i) % cyc.size()]);
    return out;
}

std::vector<std::vector<int>> cycles_of(const std::vector<int>& perm) {
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
    return out;
}

std::vector<int> apply_conjugation(const std::vector<int>& g, const std::vector<int>& cyc) {
    std::vector<int> out;
    out.reserve(cyc.size());
    for (int x : cyc) out.push_back(g[x]);
    return rotate_min(out);
}

bool is_identity(const std::vector<int>& p) {
    for (int i = 0; i < (int)p.size(); ++i)
        if (p[i] != i) return false;
    return true;
}

}  // namespace

int default_oracle_bound(int k) {
    switch (k) {
        case 1: return 12;
        case 2: return 8;
        case 3: return 6;
        default: return 4;
    }
}

Oracle::Oracle(int k, int max_n) : k_(k), bound_(max_n) {
    if (k < 1) throw std::invalid_argument("Oracle: k must be >= 1");
    levels_.resize(bound_ + 1);
    forms_.resize(bound_ + 1);
}

void Oracle::ensure(int n) {
    if (n < 1 || n > bound_) throw std::out_of_range("oracle: n beyond configured bound");
    if (!levels_[n].empty()) return;
    if (n == 1) {
        levels_[1] = {single_hedron(k_)};
        forms_[1] = {canonical_form(levels_[1][0])};
        return;
    }
    ensure(n - 1);
    std::map<std::string, KTree> next;
    for (const KTree& t : levels_[n - 1]) {
        for (const Front& f : all_fronts(t)) {
            KTree grown = attach_hedron(t, f);
            std::string form = canonical_form(grown);
            next.emplace(std::move(form), std::move(grown));
        }
    }
    for (auto& [form, t] : next) {
        forms_[n].push_back(form);
        levels_[n].push_back(std::move(t));
    }
}

const std::vector<KTree>& Oracle::classes(int n) {
    ensure(n);
    return levels_[n];
}

const std::vector<std::string>& Oracle::forms(int n) {
    ensure(n);
    return forms_[n];
}

uint64_t Oracle::count(int n) { return classes(n).size(); }

const KTree& Oracle::unrank(int n, uint64_t index) {
    ensure(n);
    if (index >= levels_[n].size()) throw std::out_of_range("oracle::unrank: bad index");
    return levels_[n][index];
}

long Oracle::rank(int n, const std::string& canonical) {
    ensure(n);
    auto it = std::lower_bound(forms_[n].begin(), forms_[n].end(), canonical);
    if (it == forms_[n].end() || *it != canonical) return -1;
    return it - forms_[n].begin();
}

std::vector<std::string> Oracle::rooted_class_forms(int n, RootKind kind) {
    ensure(n);
    std::vector<std::string> out;
    for (const KTree& t : levels_[n]) {
        std::set<std::string> local;
        if (kind == RootKind::Hedron) {
            for (int h = 0; h < t.hedron_count(); ++h)
                local.insert(hedron_rooted_form(t, h));
        } else {
            std::vector<Front> roots = (kind == RootKind::FrontDistinguishable)
                                           ? all_fronts(t)
                                           : unique_hedron_fronts(t);
            std::vector<int> labels(t.k);
            std::iota(labels.begin(), labels.end(), 0);
            for (const Front& f : roots) {
                std::vector<int> lab = labels;
                std::sort(lab.begin(), lab.end());
                do {
                    local.insert(front_labelled_form(t, f, lab));
                } while (std::next_permutation(lab.begin(), lab.end()));
            }
        }
        out.insert(out.end(), local.begin(), local.end());
    }
    std::sort(out.begin(), out.end());
    check(std::adjacent_find(out.begin(), out.end()) == out.end(),
          "rooted forms collide across unrooted classes");
    return out;
}

uint64_t Oracle::rooted_count(int n, RootKind kind) {
    return rooted_class_forms(n, kind).size();
}

std::vector<std::string> Oracle::edge_rooted_forms(int n) {
    ensure(n);
    std::vector<std::string> out;
    for (const KTree& t : levels_[n]) {
        std::set<std::string> local;
        for (int h = 0; h < t.hedron_count(); ++h) {
            for (int skip = 0; skip <= t.k; ++skip) {
                Front f;
                for (int j = 0; j <= t.k; ++j)
                    if (j != skip) f.push_back(t.hedra[h][j]);
                local.insert(edge_rooted_form(t, h, f));
            }
        }
        out.insert(out.end(), local.begin(), local.end());
    }
    std::sort(out.begin(), out.end());
    check(std::adjacent_find(out.begin(), out.end()) == out.end(),
          "edge-rooted forms collide across unrooted classes");
    return out;
}

Oracle::Census Oracle::cycle_pointing_census(int n) {
    ensure(n);
    Census census;
    for (const KTree& t : levels_[n]) {
        std::vector<AutRecord> auts = automorphisms(t);

        // distinct hedron permutations (the group G), and (perm,gamma) pairs
        std::set<std::vector<int>> group;
        for (const auto& a : auts) group.insert(a.hedron_perm);

        // all marked cycles over all group elements
        std::set<std::vector<int>> marked;
        for (const auto& g : group)
            for (auto& c : cycles_of(g)) marked.insert(c);

        // orbits under conjugation by G
        std::set<std::vector<int>> done;
        std::vector<std::vector<int>> orbit_reps;
        for (const auto& c : marked) {
            if (done.count(c)) continue;
            orbit_reps.push_back(c);
            std::deque<std::vector<int>> q{c};
            done.insert(c);
            while (!q.empty()) {
                auto cur = q.front();
                q.pop_front();
                for (const auto& g : group) {
                    auto img = apply_conjugation(g, cur);
                    if (done.insert(img).second) q.push_back(img);
                }
            }
        }
        check((int)orbit_reps.size() == n, "census: class does not have n pointings");

        // coding tree of the representative, for cycle centers
        Colouring col0;
        {
            std::vector<int> id(t.k + 1);
            std::iota(id.begin(), id.end(), 0);
            col0 = propagate_colouring(t, 0, id);
        }
        Encoded enc = encode(t, col0);
        int nw = enc.ct.white_count();
        std::vector<std::vector<int>> adj(nw + enc.ct.black_count());
        for (int b = 0; b < enc.ct.black_count(); ++b)
            for (int w : enc.ct.black_whites[b]) {
                adj[nw + b].push_back(w);
                adj[w].push_back(nw + b);
            }
        auto path_center = [&](int b1, int b2) {
            // BFS path between black nodes (even length); center node id
            std::vector<int> prev(adj.size(), -2);
            std::deque<int> q{nw + b1};
            prev[nw + b1] = -1;
            while (!q.empty()) {
                int x = q.front();
                q.pop_front();
                if (x == nw + b2) break;
                for (int y : adj[x])
                    if (prev[y] == -2) {
                        prev[y] = x;
                        q.push_back(y);
                    }
            }
            std::vector<int> path;
            for (int x = nw + b2; x != -1; x = prev[x]) path.push_back(x);
            check(path.size() % 2 == 1, "census: odd path between black nodes");
            return path[path.size() / 2];
        };

        for (const auto& c : orbit_reps) {
            if (c.size() == 1) {
                census.v1 += 1;
                continue;
            }
            int center = path_center(c[0], c[1]);
            if (c.size() > 2)
                check(path_center(c[1], c[2]) == center, "census: centers disagree");
            if (center >= nw) {
                census.v2 += 1;
                continue;
            }
            // front cycle-center: decoupled iff some colour-preserving
            // automorphism contains the marked cycle as a disjoint factor
            bool dec = false;
            for (const auto& a : auts) {
                if (!is_identity(a.colour_perm)) continue;
                auto cyc = cycles_of(a.hedron_perm);
                if (std::find(cyc.begin(), cyc.end(), c) != cyc.end()) {
                    dec = true;
                    break;
                }
            }
            if (dec) {
                census.v3dec += 1;
                // gamma group of the marked cycle: colour perms of
                // automorphisms whose hedron action centralizes c
                std::set<std::vector<int>> gammas;
                for (const auto& a : auts)
                    if (apply_conjugation(a.hedron_perm, c) == c)
                        gammas.insert(a.colour_perm);
                census.dec_mass_1k += Rat(1) / Rat((long)gammas.size());
            } else {
                census.v3sym += 1;
            }
        }
    }
    return census;
}

}  // namespace ktg
