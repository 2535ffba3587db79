#include "ktreegen/ktree.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
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

}  // namespace

void KTree::normalize() {
    for (auto& h : hedra) std::sort(h.begin(), h.end());
    std::sort(hedra.begin(), hedra.end());
}

KTree single_hedron(int k) {
    KTree t;
    t.k = k;
    t.hedra.push_back(identity_perm(k + 1));
    return t;
}

KTree attach_hedron(const KTree& t, const Front& f) {
    if ((int)f.size() != t.k)
        throw std::invalid_argument("attach_hedron: front must have k vertices");
    KTree r = t;
    std::vector<int> h = f;
    h.push_back(t.vertex_count());
    r.hedra.push_back(h);
    r.normalize();
    return r;
}

KTree relabel_vertices(const KTree& t, const std::vector<int>& perm) {
    if ((int)perm.size() != t.vertex_count())
        throw std::invalid_argument("relabel_vertices: permutation size mismatch");
    KTree r;
    r.k = t.k;
    r.hedra.reserve(t.hedra.size());
    for (const auto& h : t.hedra) {
        std::vector<int> h2;
        h2.reserve(h.size());
        for (int v : h) h2.push_back(perm[v]);
        r.hedra.push_back(std::move(h2));
    }
    r.normalize();
    return r;
}

bool ktree_valid(const KTree& t, std::string* reason) {
    auto fail = [&](const char* why) {
        if (reason) *reason = why;
        return false;
    };
    if (t.k < 1) return fail("k must be >= 1");
    int n = t.hedron_count();
    if (n == 0) return true;  // the bare k-clique
    int V = n + t.k;
    std::vector<char> seen(V, 0);
    for (const auto& h : t.hedra) {
        if ((int)h.size() != t.k + 1) return fail("hedron size != k+1");
        for (int j = 0; j < (int)h.size(); ++j) {
            if (h[j] < 0 || h[j] >= V) return fail("vertex out of range");
            if (j > 0 && h[j] <= h[j - 1]) return fail("hedron not strictly sorted");
            seen[h[j]] = 1;
        }
    }
    for (char s : seen)
        if (!s) return fail("vertex labels not dense");
    for (int i = 1; i < n; ++i)
        if (t.hedra[i] <= t.hedra[i - 1]) return fail("hedron list not sorted/distinct");

    // edge count identity
    std::set<std::pair<int, int>> edges;
    for (const auto& h : t.hedra)
        for (size_t a = 0; a < h.size(); ++a)
            for (size_t b = a + 1; b < h.size(); ++b) edges.insert({h[a], h[b]});
    long expected = (long)t.k * (t.k - 1) / 2 + (long)n * t.k;
    if ((long)edges.size() != expected) return fail("edge count identity violated");

    // simplicial elimination
    std::vector<std::vector<int>> incidence(V);
    for (int i = 0; i < n; ++i)
        for (int v : t.hedra[i]) incidence[v].push_back(i);
    std::vector<int> count(V, 0);
    for (int v = 0; v < V; ++v) count[v] = (int)incidence[v].size();
    std::vector<char> dead(n, 0);
    std::deque<int> q;
    for (int v = 0; v < V; ++v)
        if (count[v] == 1) q.push_back(v);
    int removed = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        if (count[v] != 1) continue;
        int h = -1;
        for (int i : incidence[v])
            if (!dead[i]) { h = i; break; }
        if (h < 0) continue;
        dead[h] = 1;
        ++removed;
        for (int u : t.hedra[h]) {
            if (--count[u] == 1) q.push_back(u);
        }
    }
    if (removed != n) return fail("simplicial elimination stuck");
    return true;
}

std::vector<Front> all_fronts(const KTree& t) {
    std::set<Front> fronts;
    for (const auto& h : t.hedra) {
        for (int skip = 0; skip <= t.k; ++skip) {
            Front f;
            f.reserve(t.k);
            for (int j = 0; j <= t.k; ++j)
                if (j != skip) f.push_back(h[j]);
            fronts.insert(std::move(f));
        }
    }
    return {fronts.begin(), fronts.end()};
}

std::vector<Front> unique_hedron_fronts(const KTree& t) {
    std::map<Front, int> cnt;
    for (const auto& h : t.hedra) {
        for (int skip = 0; skip <= t.k; ++skip) {
            Front f;
            for (int j = 0; j <= t.k; ++j)
                if (j != skip) f.push_back(h[j]);
            cnt[f] += 1;
        }
    }
    std::vector<Front> out;
    for (auto& [f, c] : cnt)
        if (c == 1) out.push_back(f);
    return out;
}

std::vector<std::vector<int>> adjacency_lists(const KTree& t) {
    std::vector<std::vector<int>> adj(t.vertex_count());
    for (const auto& h : t.hedra)
        for (size_t a = 0; a < h.size(); ++a)
            for (size_t b = a + 1; b < h.size(); ++b) {
                adj[h[a]].push_back(h[b]);
                adj[h[b]].push_back(h[a]);
            }
    for (auto& v : adj) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    return adj;
}

std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj, int src) {
    std::vector<int> dist(adj.size(), -1);
    std::deque<int> q{src};
    dist[src] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int w : adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
    }
    return dist;
}

int graph_distance(const KTree& t, int u, int v) {
    auto adj = adjacency_lists(t);
    if (u < 0 || u >= (int)adj.size() || v < 0 || v >= (int)adj.size())
        throw std::out_of_range("graph_distance: vertex out of range");
    return bfs_distances(adj, u)[v];
}

int graph_diameter(const KTree& t) {
    auto adj = adjacency_lists(t);
    int best = 0;
    for (int v = 0; v < (int)adj.size(); ++v) {
        auto d = bfs_distances(adj, v);
        for (int x : d) best = std::max(best, x);
    }
    return best;
}

// ---------------------------------------------------------------------------
// Generic labelled-tree canonicalization (AHU with sorted child strings)
// ---------------------------------------------------------------------------

namespace {

std::string rooted_label_string(const std::vector<std::string>& label,
                                const std::vector<std::vector<int>>& adj, int root,
                                int parent) {
    std::vector<std::string> child;
    for (int w : adj[root])
        if (w != parent) child.push_back(rooted_label_string(label, adj, w, root));
    std::sort(child.begin(), child.end());
    std::string s = "(" + label[root];
    for (auto& c : child) s += c;
    s += ")";
    return s;
}

// centre(s) of a tree restricted to the connected component of `start`
std::vector<int> component_centres(const std::vector<std::vector<int>>& adj,
                                   const std::vector<int>& comp) {
    if (comp.size() == 1) return {comp[0]};
    std::map<int, int> deg;
    for (int v : comp) deg[v] = (int)adj[v].size();
    std::set<int> alive(comp.begin(), comp.end());
    std::deque<int> q;
    for (int v : comp)
        if (deg[v] <= 1) q.push_back(v);
    while (alive.size() > 2) {
        std::deque<int> next;
        for (int v : q) {
            alive.erase(v);
            for (int w : adj[v])
                if (alive.count(w) && --deg[w] == 1) next.push_back(w);
        }
        q = std::move(next);
    }
    return {alive.begin(), alive.end()};
}

std::string component_canonical_string(const std::vector<std::string>& label,
                                       const std::vector<std::vector<int>>& adj,
                                       const std::vector<int>& comp) {
    std::string best;
    for (int c : component_centres(adj, comp)) {
        std::string s = rooted_label_string(label, adj, c, -1);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

}  // namespace

// ---------------------------------------------------------------------------
// Coding trees and the bijection
// ---------------------------------------------------------------------------

bool coding_tree_valid(const CodingTree& ct, std::string* reason) {
    auto fail = [&](const char* why) {
        if (reason) *reason = why;
        return false;
    };
    int nb = ct.black_count(), nw = ct.white_count();
    if (nb < 1) return fail("no black nodes");
    if (nw != nb * ct.k + 1) return fail("white count != n*k + 1");
    for (int w = 0; w < nw; ++w) {
        if (ct.white_colour[w] < 0 || ct.white_colour[w] > ct.k)
            return fail("white colour out of range");
        for (int b : ct.white_blacks[w]) {
            if (b < 0 || b >= nb) return fail("white adjacency out of range");
            auto& ws = ct.black_whites[b];
            if (std::find(ws.begin(), ws.end(), w) == ws.end())
                return fail("adjacency not symmetric");
        }
    }
    for (int b = 0; b < nb; ++b) {
        if ((int)ct.black_whites[b].size() != ct.k + 1)
            return fail("black degree != k+1");
        std::vector<char> got(ct.k + 1, 0);
        for (int w : ct.black_whites[b]) {
            if (w < 0 || w >= nw) return fail("black adjacency out of range");
            if (got[ct.white_colour[w]]) return fail("duplicate colour at black node");
            got[ct.white_colour[w]] = 1;
        }
    }
    // connectivity (tree-ness follows from the node/edge count identity)
    std::vector<char> vis(nb, 0);
    std::deque<int> q{0};
    vis[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int b = q.front();
        q.pop_front();
        for (int w : ct.black_whites[b])
            for (int b2 : ct.white_blacks[w])
                if (!vis[b2]) {
                    vis[b2] = 1;
                    ++cnt;
                    q.push_back(b2);
                }
    }
    if (cnt != nb) return fail("coding tree not connected");
    return true;
}

Colouring propagate_colouring(const KTree& t, int seed_hedron,
                              const std::vector<int>& opposite_colours) {
    int n = t.hedron_count();
    if (seed_hedron < 0 || seed_hedron >= n)
        throw std::out_of_range("propagate_colouring: bad seed hedron");
    if ((int)opposite_colours.size() != t.k + 1)
        throw std::invalid_argument("propagate_colouring: seed needs k+1 colours");
    {
        std::vector<char> got(t.k + 1, 0);
        for (int c : opposite_colours) {
            if (c < 0 || c > t.k || got[c])
                throw std::invalid_argument("propagate_colouring: seed not a bijection");
            got[c] = 1;
        }
    }

    // front -> hedra containing it
    std::map<Front, std::vector<int>> front_hedra;
    for (int i = 0; i < n; ++i) {
        const auto& h = t.hedra[i];
        for (int skip = 0; skip <= t.k; ++skip) {
            Front f;
            for (int j = 0; j <= t.k; ++j)
                if (j != skip) f.push_back(h[j]);
            front_hedra[std::move(f)].push_back(i);
        }
    }

    // vertex opposite the colour-c front, per hedron
    std::vector<std::vector<int>> voc(n);
    std::vector<char> visited(n, 0);
    voc[seed_hedron].assign(t.k + 1, -1);
    for (int j = 0; j <= t.k; ++j)
        voc[seed_hedron][opposite_colours[j]] = t.hedra[seed_hedron][j];
    visited[seed_hedron] = 1;

    std::deque<int> q{seed_hedron};
    while (!q.empty()) {
        int h = q.front();
        q.pop_front();
        const auto& hv = t.hedra[h];
        for (int skip = 0; skip <= t.k; ++skip) {
            Front f;
            for (int j = 0; j <= t.k; ++j)
                if (j != skip) f.push_back(hv[j]);
            int v_opp = hv[skip];
            int c_f = -1;
            for (int c = 0; c <= t.k; ++c)
                if (voc[h][c] == v_opp) { c_f = c; break; }
            check(c_f >= 0, "propagate: missing opposite colour");
            for (int h2 : front_hedra[f]) {
                if (h2 == h) continue;
                int x = -1;
                for (int u : t.hedra[h2])
                    if (!std::binary_search(f.begin(), f.end(), u)) x = u;
                check(x >= 0, "propagate: adjacent hedron without apex");
                std::vector<int> cand(t.k + 1, -1);
                for (int c = 0; c <= t.k; ++c) cand[c] = (c == c_f) ? x : voc[h][c];
                if (visited[h2]) {
                    check(voc[h2] == cand, "propagate: inconsistent colouring");
                } else {
                    voc[h2] = std::move(cand);
                    visited[h2] = 1;
                    q.push_back(h2);
                }
            }
        }
    }
    for (int i = 0; i < n; ++i) check(visited[i], "propagate: k-tree not connected");

    Colouring col;
    for (int i = 0; i < n; ++i) {
        for (int c = 0; c <= t.k; ++c) {
            Front f;
            for (int u : t.hedra[i])
                if (u != voc[i][c]) f.push_back(u);
            auto it = col.colour.find(f);
            if (it == col.colour.end())
                col.colour.emplace(std::move(f), c);
            else
                check(it->second == c, "propagate: mirror rule violated");
        }
    }
    return col;
}

std::vector<Colouring> all_colourings(const KTree& t) {
    std::vector<Colouring> out;
    std::vector<int> perm = identity_perm(t.k + 1);
    do {
        out.push_back(propagate_colouring(t, 0, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Encoded encode(const KTree& t, const Colouring& col) {
    Encoded e;
    e.ct.k = t.k;
    std::vector<Front> fronts = all_fronts(t);
    std::map<Front, int> white_id;
    for (int i = 0; i < (int)fronts.size(); ++i) white_id[fronts[i]] = i;
    e.white_front = fronts;
    e.ct.white_colour.resize(fronts.size());
    for (int i = 0; i < (int)fronts.size(); ++i)
        e.ct.white_colour[i] = col.colour.at(fronts[i]);
    e.ct.black_whites.resize(t.hedron_count());
    e.ct.white_blacks.resize(fronts.size());
    for (int h = 0; h < t.hedron_count(); ++h) {
        for (int skip = 0; skip <= t.k; ++skip) {
            Front f;
            for (int j = 0; j <= t.k; ++j)
                if (j != skip) f.push_back(t.hedra[h][j]);
            int w = white_id.at(f);
            e.ct.black_whites[h].push_back(w);
            e.ct.white_blacks[w].push_back(h);
        }
    }
    std::string why;
    check(coding_tree_valid(e.ct, &why), "encode produced invalid coding tree");
    return e;
}

Decoded decode(const CodingTree& ct) {
    std::string why;
    if (!coding_tree_valid(ct, &why))
        throw std::invalid_argument("decode: invalid coding tree: " + why);
    int nb = ct.black_count();
    int k = ct.k;

    std::vector<std::vector<int>> voc(nb);  // colour -> vertex, per black
    std::vector<char> visited(nb, 0);
    voc[0].assign(k + 1, -1);
    for (int c = 0; c <= k; ++c) voc[0][c] = c;
    visited[0] = 1;
    int next_vertex = k + 1;

    std::deque<int> q{0};
    while (!q.empty()) {
        int b = q.front();
        q.pop_front();
        std::vector<int> whites = ct.black_whites[b];
        std::sort(whites.begin(), whites.end(), [&](int a, int bb) {
            return ct.white_colour[a] < ct.white_colour[bb];
        });
        for (int w : whites) {
            int cw = ct.white_colour[w];
            for (int b2 : ct.white_blacks[w]) {
                if (visited[b2]) continue;
                voc[b2].assign(k + 1, -1);
                for (int c = 0; c <= k; ++c)
                    voc[b2][c] = (c == cw) ? next_vertex : voc[b][c];
                ++next_vertex;
                visited[b2] = 1;
                q.push_back(b2);
            }
        }
    }

    Decoded d;
    d.t.k = k;
    std::vector<std::pair<std::vector<int>, int>> hs;
    hs.reserve(nb);
    for (int b = 0; b < nb; ++b) {
        std::vector<int> h = voc[b];
        std::sort(h.begin(), h.end());
        hs.push_back({std::move(h), b});
    }
    std::sort(hs.begin(), hs.end());
    d.black_hedron.resize(nb);
    for (int i = 0; i < nb; ++i) {
        d.t.hedra.push_back(hs[i].first);
        d.black_hedron[hs[i].second] = i;
    }

    d.white_front.resize(ct.white_count());
    for (int w = 0; w < ct.white_count(); ++w) {
        int b = ct.white_blacks[w][0];
        Front f;
        for (int c = 0; c <= k; ++c)
            if (c != ct.white_colour[w]) f.push_back(voc[b][c]);
        std::sort(f.begin(), f.end());
        d.white_front[w] = f;
        auto it = d.col.colour.find(f);
        if (it == d.col.colour.end())
            d.col.colour.emplace(f, ct.white_colour[w]);
        else
            check(it->second == ct.white_colour[w], "decode: mirror rule violated");
    }
    return d;
}

std::vector<int> front_labels(const KTree& t, const Colouring& col, const Front& f) {
    for (const auto& h : t.hedra) {
        if (!std::includes(h.begin(), h.end(), f.begin(), f.end())) continue;
        std::vector<int> labels(f.size());
        for (size_t i = 0; i < f.size(); ++i) {
            Front opp;
            for (int u : h)
                if (u != f[i]) opp.push_back(u);
            labels[i] = col.colour.at(opp);
        }
        return labels;
    }
    throw std::invalid_argument("front_labels: not a front of any hedron");
}

// ---------------------------------------------------------------------------
// Canonical forms
// ---------------------------------------------------------------------------

namespace {

// unified ids: white w -> w, black b -> nw + b
struct UnifiedView {
    std::vector<std::vector<int>> adj;
    int nw = 0, nb = 0;
};

UnifiedView unified(const CodingTree& ct) {
    UnifiedView u;
    u.nw = ct.white_count();
    u.nb = ct.black_count();
    u.adj.resize(u.nw + u.nb);
    for (int b = 0; b < u.nb; ++b)
        for (int w : ct.black_whites[b]) {
            u.adj[u.nw + b].push_back(w);
            u.adj[w].push_back(u.nw + b);
        }
    return u;
}

std::vector<std::string> node_labels(const CodingTree& ct,
                                     const std::vector<int>& gamma) {
    std::vector<std::string> label(ct.white_count() + ct.black_count());
    for (int w = 0; w < ct.white_count(); ++w)
        label[w] = std::string(1, (char)('a' + gamma[ct.white_colour[w]]));
    for (int b = 0; b < ct.black_count(); ++b) label[ct.white_count() + b] = "B";
    return label;
}

std::string canonical_with_gamma(const CodingTree& ct, const UnifiedView& u,
                                 const std::vector<int>& gamma) {
    auto label = node_labels(ct, gamma);
    std::vector<int> comp(u.adj.size());
    std::iota(comp.begin(), comp.end(), 0);
    return component_canonical_string(label, u.adj, comp);
}

}  // namespace

std::string coding_canonical_form(const CodingTree& ct) {
    UnifiedView u = unified(ct);
    return canonical_with_gamma(ct, u, identity_perm(ct.k + 1));
}

std::string canonical_form(const KTree& t) {
    if (t.hedra.empty()) return "K" + std::to_string(t.k);
    Colouring col0 = propagate_colouring(t, 0, identity_perm(t.k + 1));
    Encoded enc = encode(t, col0);
    UnifiedView u = unified(enc.ct);
    std::string best;
    std::vector<int> gamma = identity_perm(t.k + 1);
    do {
        std::string s = canonical_with_gamma(enc.ct, u, gamma);
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(gamma.begin(), gamma.end()));
    return best;
}

std::string hedron_rooted_form(const KTree& t, int hedron) {
    if (hedron < 0 || hedron >= t.hedron_count())
        throw std::out_of_range("hedron_rooted_form: bad hedron");
    Colouring col0 = propagate_colouring(t, 0, identity_perm(t.k + 1));
    Encoded enc = encode(t, col0);
    UnifiedView u = unified(enc.ct);
    int root = u.nw + hedron;
    std::string best;
    std::vector<int> gamma = identity_perm(t.k + 1);
    do {
        auto label = node_labels(enc.ct, gamma);
        std::string s = rooted_label_string(label, u.adj, root, -1);
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(gamma.begin(), gamma.end()));
    return "H:" + best;
}

std::string front_labelled_form(const KTree& t, const Front& f,
                                const std::vector<int>& labels) {
    if ((int)f.size() != t.k || (int)labels.size() != t.k)
        throw std::invalid_argument("front_labelled_form: need k vertices and labels");
    // seed the unique colouring realizing the labelling
    int h0 = -1;
    for (int i = 0; i < t.hedron_count(); ++i)
        if (std::includes(t.hedra[i].begin(), t.hedra[i].end(), f.begin(), f.end())) {
            h0 = i;
            break;
        }
    if (h0 < 0) throw std::invalid_argument("front_labelled_form: not a front");
    std::vector<int> opp(t.k + 1, -1);
    for (int j = 0; j <= t.k; ++j) {
        int v = t.hedra[h0][j];
        auto it = std::lower_bound(f.begin(), f.end(), v);
        if (it != f.end() && *it == v)
            opp[j] = labels[it - f.begin()];
        else
            opp[j] = t.k;
    }
    Colouring col = propagate_colouring(t, h0, opp);
    Encoded enc = encode(t, col);
    int w = -1;
    for (int i = 0; i < (int)enc.white_front.size(); ++i)
        if (enc.white_front[i] == f) { w = i; break; }
    check(w >= 0, "front_labelled_form: front not encoded");
    UnifiedView u = unified(enc.ct);
    auto label = node_labels(enc.ct, identity_perm(t.k + 1));
    return "F:" + rooted_label_string(label, u.adj, w, -1);
}

std::string edge_rooted_form(const KTree& t, int hedron, const Front& f) {
    Colouring col0 = propagate_colouring(t, 0, identity_perm(t.k + 1));
    Encoded enc = encode(t, col0);
    int w = -1;
    for (int i = 0; i < (int)enc.white_front.size(); ++i)
        if (enc.white_front[i] == f) { w = i; break; }
    if (w < 0 || hedron < 0 || hedron >= t.hedron_count())
        throw std::invalid_argument("edge_rooted_form: bad root");
    {
        const auto& ws = enc.ct.black_whites[hedron];
        if (std::find(ws.begin(), ws.end(), w) == ws.end())
            throw std::invalid_argument("edge_rooted_form: front not in hedron");
    }
    UnifiedView u = unified(enc.ct);
    int bnode = u.nw + hedron;
    std::string best;
    std::vector<int> gamma = identity_perm(t.k + 1);
    do {
        auto label = node_labels(enc.ct, gamma);
        std::string s = "E:(" + rooted_label_string(label, u.adj, bnode, w) + "," +
                        rooted_label_string(label, u.adj, w, bnode) + ")";
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(gamma.begin(), gamma.end()));
    return best;
}

// ---------------------------------------------------------------------------
// Automorphisms via colour-compatible coding-tree matching
// ---------------------------------------------------------------------------

namespace {

struct MatchContext {
    const UnifiedView* u;
    std::vector<int> src_parent, order;          // preorder of source rooted tree
    std::vector<std::string> src_str, tgt_str;   // rooted subtree strings
    std::vector<int> tgt_parent;
    std::vector<char> used;
    std::vector<int> node_map;
    std::size_t cap = 0, found = 0;
    std::function<void(const std::vector<int>&)> emit;
};

void fill_rooted(const UnifiedView& u, const std::vector<std::string>& label, int root,
                 std::vector<int>& parent, std::vector<std::string>& str,
                 std::vector<int>* preorder) {
    parent.assign(u.adj.size(), -2);
    str.assign(u.adj.size(), "");
    if (preorder) preorder->clear();
    std::function<void(int, int)> dfs = [&](int v, int p) {
        parent[v] = p;
        if (preorder) preorder->push_back(v);
        std::vector<std::string> child;
        for (int w : u.adj[v])
            if (w != p) {
                dfs(w, v);
                child.push_back(str[w]);
            }
        std::sort(child.begin(), child.end());
        std::string s = "(" + label[v];
        for (auto& c : child) s += c;
        s += ")";
        str[v] = s;
    };
    dfs(root, -1);
}

void match_step(MatchContext& ctx, std::size_t idx) {
    if (idx == ctx.order.size()) {
        ++ctx.found;
        if (ctx.found > ctx.cap)
            throw std::runtime_error("automorphisms: enumeration cap exceeded");
        ctx.emit(ctx.node_map);
        return;
    }
    int uu = ctx.order[idx];
    int pu = ctx.src_parent[uu];
    int pv = ctx.node_map[pu];
    for (int v : ctx.u->adj[pv]) {
        if (v == ctx.tgt_parent[pv]) continue;
        if (ctx.used[v] || ctx.tgt_str[v] != ctx.src_str[uu]) continue;
        ctx.used[v] = 1;
        ctx.node_map[uu] = v;
        match_step(ctx, idx + 1);
        ctx.used[v] = 0;
        ctx.node_map[uu] = -1;
    }
}

}  // namespace

std::vector<AutRecord> automorphisms(const KTree& t, std::size_t cap) {
    std::vector<AutRecord> out;
    if (t.hedra.empty()) {
        out.push_back({{}, identity_perm(t.k + 1)});
        return out;
    }
    Colouring col0 = propagate_colouring(t, 0, identity_perm(t.k + 1));
    Encoded enc = encode(t, col0);
    UnifiedView u = unified(enc.ct);

    std::vector<int> allnodes(u.adj.size());
    std::iota(allnodes.begin(), allnodes.end(), 0);
    std::vector<int> centres = component_centres(u.adj, allnodes);

    auto src_label = node_labels(enc.ct, identity_perm(t.k + 1));
    int rs = centres[0];
    std::vector<int> src_parent, order;
    std::vector<std::string> src_str;
    fill_rooted(u, src_label, rs, src_parent, src_str, &order);

    std::vector<int> gamma = identity_perm(t.k + 1);
    do {
        auto tgt_label = node_labels(enc.ct, gamma);
        for (int rt : centres) {
            std::vector<int> tgt_parent;
            std::vector<std::string> tgt_str;
            fill_rooted(u, tgt_label, rt, tgt_parent, tgt_str, nullptr);
            if (tgt_str[rt] != src_str[rs]) continue;

            MatchContext ctx;
            ctx.u = &u;
            ctx.src_parent = src_parent;
            ctx.order = order;
            ctx.src_str = src_str;
            ctx.tgt_str = tgt_str;
            ctx.tgt_parent = tgt_parent;
            ctx.used.assign(u.adj.size(), 0);
            ctx.node_map.assign(u.adj.size(), -1);
            ctx.cap = cap;
            const std::vector<int>& g = gamma;
            ctx.emit = [&](const std::vector<int>& node_map) {
                AutRecord rec;
                rec.hedron_perm.resize(u.nb);
                for (int b = 0; b < u.nb; ++b)
                    rec.hedron_perm[b] = node_map[u.nw + b] - u.nw;
                rec.colour_perm = g;
                out.push_back(std::move(rec));
            };
            ctx.node_map[rs] = rt;
            ctx.used[rt] = 1;
            // preorder starts at the root; match the rest
            match_step(ctx, 1);
        }
    } while (std::next_permutation(gamma.begin(), gamma.end()));
    return out;
}

// ---------------------------------------------------------------------------
// Neighbourhood codes
// ---------------------------------------------------------------------------

std::string neighbourhood_code(const KTree& t, int v, int r) {
    if (r < 0) throw std::invalid_argument("neighbourhood_code: r must be >= 0");
    auto adj = adjacency_lists(t);
    if (v < 0 || v >= (int)adj.size())
        throw std::out_of_range("neighbourhood_code: vertex out of range");
    auto dist = bfs_distances(adj, v);

    std::vector<int> hs;
    for (int i = 0; i < t.hedron_count(); ++i) {
        bool inside = true;
        for (int u : t.hedra[i])
            if (dist[u] > r) { inside = false; break; }
        if (inside) hs.push_back(i);
    }
    if (hs.empty()) return "r" + std::to_string(r) + ":()";

    auto dist_tag = [&](const std::vector<int>& vs) {
        std::vector<int> d;
        for (int u : vs) d.push_back(dist[u]);
        std::sort(d.begin(), d.end());
        std::string s = "[";
        for (size_t i = 0; i < d.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(d[i]);
        }
        return s + "]";
    };

    // bipartite forest: black = hedra in range, white = their fronts
    std::map<Front, int> wid;
    std::vector<std::string> label;
    std::vector<std::vector<int>> fadj;
    std::vector<Front> wfront;
    for (int i : hs) {
        for (int skip = 0; skip <= t.k; ++skip) {
            Front f;
            for (int j = 0; j <= t.k; ++j)
                if (j != skip) f.push_back(t.hedra[i][j]);
            if (!wid.count(f)) {
                wid[f] = (int)label.size();
                label.push_back("W" + dist_tag(f));
                fadj.emplace_back();
                wfront.push_back(f);
            }
        }
    }
    int nw = (int)label.size();
    for (size_t bi = 0; bi < hs.size(); ++bi) {
        label.push_back("B" + dist_tag(t.hedra[hs[bi]]));
        fadj.emplace_back();
    }
    for (size_t bi = 0; bi < hs.size(); ++bi) {
        int bnode = nw + (int)bi;
        for (int skip = 0; skip <= t.k; ++skip) {
            Front f;
            for (int j = 0; j <= t.k; ++j)
                if (j != skip) f.push_back(t.hedra[hs[bi]][j]);
            int w = wid.at(f);
            fadj[bnode].push_back(w);
            fadj[w].push_back(bnode);
        }
    }

    // connected components, canonical string each, sorted
    std::vector<char> seen(label.size(), 0);
    std::vector<std::string> comps;
    for (int s = 0; s < (int)label.size(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::deque<int> q{s};
        seen[s] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            comp.push_back(x);
            for (int y : fadj[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    q.push_back(y);
                }
        }
        comps.push_back(component_canonical_string(label, fadj, comp));
    }
    std::sort(comps.begin(), comps.end());
    std::string out = "r" + std::to_string(r) + ":";
    for (auto& c : comps) out += c;
    return out;
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

std::string to_text(const KTree& t) {
    std::ostringstream os;
    os << t.k << " " << t.hedron_count();
    for (const auto& h : t.hedra) {
        os << " ;";
        for (size_t j = 0; j < h.size(); ++j) os << (j ? "," : " ") << h[j];
    }
    return os.str();
}

KTree from_text(const std::string& line) {
    std::istringstream is(line);
    KTree t;
    int n;
    if (!(is >> t.k >> n)) throw std::invalid_argument("from_text: bad header");
    std::string tok;
    while (is >> tok) {
        if (tok == ";") continue;
        std::vector<int> h;
        std::string cur;
        for (char ch : tok) {
            if (ch == ',') {
                h.push_back(std::stoi(cur));
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (!cur.empty()) h.push_back(std::stoi(cur));
        t.hedra.push_back(std::move(h));
    }
    if ((int)t.hedra.size() != n)
        throw std::invalid_argument("from_text: hedron count mismatch");
    t.normalize();
    std::string why;
    if (!ktree_valid(t, &why)) throw std::invalid_argument("from_text: " + why);
    return t;
}

std::string to_dot(const KTree& t) {
    std::ostringstream os;
    os << "graph ktree {\n";
    std::set<std::pair<int, int>> edges;
    for (const auto& h : t.hedra)
        for (size_t a = 0; a < h.size(); ++a)
            for (size_t b = a + 1; b < h.size(); ++b) edges.insert({h[a], h[b]});
    for (auto& [a, b] : edges) os << "  v" << a << " -- v" << b << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace ktg
