#include "doctest.h"
#include "ktreegen/ktree.hpp"
#include "ktreegen/rng.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace ktg;

namespace {

std::vector<int> iota_perm(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

// k=2 path of n hedra: h_i = {i, i+1, i+2}
KTree path2(int n) {
    KTree t;
    t.k = 2;
    for (int i = 0; i < n; ++i) t.hedra.push_back({i, i + 1, i + 2});
    t.normalize();
    return t;
}

// k=2 fan: n hedra sharing the edge {0,1}
KTree fan2(int n) {
    KTree t;
    t.k = 2;
    for (int i = 0; i < n; ++i) t.hedra.push_back({0, 1, 2 + i});
    t.normalize();
    return t;
}

// k=1 star with n edges at center 0
KTree star1(int n) {
    KTree t;
    t.k = 1;
    for (int i = 0; i < n; ++i) t.hedra.push_back({0, 1 + i});
    t.normalize();
    return t;
}

KTree path1(int n) {
    KTree t;
    t.k = 1;
    for (int i = 0; i < n; ++i) t.hedra.push_back({i, i + 1});
    t.normalize();
    return t;
}

}  // namespace

TEST_CASE("validity and count identities") {
    CHECK(ktree_valid(single_hedron(2)));
    CHECK(ktree_valid(path2(5)));
    CHECK(ktree_valid(fan2(4)));
    CHECK(ktree_valid(star1(6)));

    KTree bad;
    bad.k = 2;
    bad.hedra = {{0, 1, 2}, {3, 4, 5}};  // disconnected, labels not matching n+k
    CHECK_FALSE(ktree_valid(bad));

    KTree dup;
    dup.k = 2;
    dup.hedra = {{0, 1, 2}, {0, 1, 2}};
    CHECK_FALSE(ktree_valid(dup));

    for (const KTree& t : {path2(6), fan2(6)}) {
        std::set<std::pair<int, int>> edges;
        for (const auto& h : t.hedra)
            for (size_t a = 0; a < h.size(); ++a)
                for (size_t b = a + 1; b < h.size(); ++b) edges.insert({h[a], h[b]});
        CHECK((int)edges.size() == t.k * (t.k - 1) / 2 + t.hedron_count() * t.k);
        CHECK(t.vertex_count() == t.hedron_count() + t.k);
    }
}

TEST_CASE("propagate_colouring basics") {
    // single hedron: the seed is the full colouring
    KTree t = single_hedron(2);
    Colouring c = propagate_colouring(t, 0, {0, 1, 2});
    CHECK(c.colour.size() == 3);
    CHECK(c.colour.at({1, 2}) == 0);
    CHECK(c.colour.at({0, 2}) == 1);
    CHECK(c.colour.at({0, 1}) == 2);

    // two hedra sharing a front: mirror fronts get equal colours
    KTree t2 = path2(2);  // {0,1,2},{1,2,3}
    Colouring c2 = propagate_colouring(t2, 0, {0, 1, 2});
    // shared front {1,2} has colour 0 (opposite vertex 0)
    CHECK(c2.colour.at({1, 2}) == 0);
    // mirror of {0,2} (opp 1) across {1,2} is {2,3} (opp 1 in hedron 2)
    CHECK(c2.colour.at({2, 3}) == c2.colour.at({0, 2}));
    CHECK(c2.colour.at({1, 3}) == c2.colour.at({0, 1}));
    // the shared front's colour appears once among hedron-1 fronts
    int shared_colour = c2.colour.at({1, 2});
    CHECK(c2.colour.at({1, 3}) != shared_colour);
    CHECK(c2.colour.at({2, 3}) != shared_colour);
}

TEST_CASE("path of 3 hedra: recolouring the seed recolours the extension") {
    KTree t = path2(3);
    CHECK(all_fronts(t).size() == 7);
    std::vector<int> seed = {0, 1, 2};
    Colouring base = propagate_colouring(t, 0, seed);
    CHECK(base.colour.size() == 7);
    std::vector<int> gamma = {0, 1, 2};
    do {
        std::vector<int> recoloured_seed(3);
        for (int j = 0; j < 3; ++j) recoloured_seed[j] = gamma[seed[j]];
        Colouring got = propagate_colouring(t, 0, recoloured_seed);
        for (auto& [front, col] : base.colour) CHECK(got.colour.at(front) == gamma[col]);
    } while (std::next_permutation(gamma.begin(), gamma.end()));
}

TEST_CASE("encode examples") {
    // triangle: one black, three white leaves
    KTree tri = single_hedron(2);
    Encoded e = encode(tri, propagate_colouring(tri, 0, {0, 1, 2}));
    CHECK(e.ct.black_count() == 1);
    CHECK(e.ct.white_count() == 3);
    std::set<int> cols(e.ct.white_colour.begin(), e.ct.white_colour.end());
    CHECK(cols == std::set<int>{0, 1, 2});

    // k=1 path with 2 edges: black-white-black path plus leaf whites
    KTree p = path1(2);
    Encoded e1 = encode(p, propagate_colouring(p, 0, {0, 1}));
    CHECK(e1.ct.black_count() == 2);
    CHECK(e1.ct.white_count() == 3);

    // any 4-hedron 2-tree: 4 black nodes, 9 white nodes (front count)
    KTree q = path2(4);
    Encoded e2 = encode(q, propagate_colouring(q, 0, {0, 1, 2}));
    CHECK(e2.ct.black_count() == 4);
    CHECK(e2.ct.white_count() == 9);
    CHECK(all_fronts(q).size() == 9);
}

TEST_CASE("decode examples and roundtrip") {
    // single black with k+1 white leaves -> single hedron
    for (int k : {1, 2, 3}) {
        CodingTree ct;
        ct.k = k;
        ct.black_whites.resize(1);
        for (int c = 0; c <= k; ++c) {
            ct.white_colour.push_back(c);
            ct.white_blacks.push_back({0});
            ct.black_whites[0].push_back(c);
        }
        Decoded d = decode(ct);
        CHECK(d.t.hedron_count() == 1);
        CHECK(d.t.k == k);
        CHECK(ktree_valid(d.t));
    }

    // encode/decode roundtrip on structured instances
    for (const KTree& t : {path2(5), fan2(5), star1(5), path1(6)}) {
        std::vector<int> id(t.k + 1);
        std::iota(id.begin(), id.end(), 0);
        Colouring col = propagate_colouring(t, 0, id);
        Encoded e = encode(t, col);
        Decoded d = decode(e.ct);
        CHECK(canonical_form(d.t) == canonical_form(t));
        Encoded e2 = encode(d.t, d.col);
        CHECK(coding_canonical_form(e2.ct) == coding_canonical_form(e.ct));
    }
}

TEST_CASE("canonical form invariance under relabelling") {
    RngStream rng(42);
    for (const KTree& t : {path2(6), fan2(6), star1(7), path1(7)}) {
        std::string base = canonical_form(t);
        for (int rep = 0; rep < 40; ++rep) {
            std::vector<int> perm = iota_perm(t.vertex_count());
            for (int i = (int)perm.size() - 1; i > 0; --i)
                std::swap(perm[i], perm[rng.below_u64(i + 1)]);
            CHECK(canonical_form(relabel_vertices(t, perm)) == base);
        }
    }
}

TEST_CASE("star vs path distinct canonical forms") {
    CHECK(canonical_form(fan2(3)) != canonical_form(path2(3)));
    CHECK(canonical_form(star1(3)) != canonical_form(path1(3)));
}

TEST_CASE("automorphisms") {
    auto count_hedron_group = [](const KTree& t) {
        std::set<std::vector<int>> g;
        for (const auto& a : automorphisms(t)) g.insert(a.hedron_perm);
        return g.size();
    };
    CHECK(count_hedron_group(single_hedron(2)) == 1);
    CHECK(count_hedron_group(path2(2)) == 2);   // swap the two hedra
    CHECK(count_hedron_group(star1(3)) == 6);   // S_3 on the edges

    // group axioms: closure under composition on the hedron projections
    for (const KTree& t : {path2(4), fan2(4), star1(4)}) {
        std::set<std::vector<int>> g;
        for (const auto& a : automorphisms(t)) g.insert(a.hedron_perm);
        for (const auto& p : g)
            for (const auto& q : g) {
                std::vector<int> pq(p.size());
                for (size_t i = 0; i < p.size(); ++i) pq[i] = p[q[i]];
                CHECK(g.count(pq) == 1);
            }
        // order divides n! (it is a subgroup of S_n on hedra)
        mpz_class nf;
        mpz_fac_ui(nf.get_mpz_t(), t.hedron_count());
        CHECK(nf % mpz_class((long)g.size()) == 0);
    }
}

TEST_CASE("distances, diameter, neighbourhoods") {
    KTree tri = single_hedron(2);
    CHECK(graph_distance(tri, 0, 1) == 1);
    CHECK(graph_distance(tri, 1, 2) == 1);
    CHECK(graph_diameter(tri) == 1);

    CHECK(graph_diameter(path1(7)) == 7);
    CHECK(graph_diameter(star1(5)) == 2);

    // fan with 3 hedra: outer apexes at distance 2
    CHECK(graph_diameter(fan2(3)) == 2);
    CHECK(graph_distance(fan2(3), 2, 3) == 2);

    // r=0 ball code is a single constant
    std::set<std::string> codes;
    for (int v = 0; v < path2(5).vertex_count(); ++v)
        codes.insert(neighbourhood_code(path2(5), v, 0));
    CHECK(codes.size() == 1);

    // ball codes are invariant under relabelling
    KTree t = path2(5);
    std::vector<int> perm = iota_perm(t.vertex_count());
    std::reverse(perm.begin(), perm.end());
    KTree t2 = relabel_vertices(t, perm);
    for (int v = 0; v < t.vertex_count(); ++v)
        CHECK(neighbourhood_code(t, v, 2) ==
              neighbourhood_code(t2, perm[v], 2));
}

TEST_CASE("text format roundtrip") {
    for (const KTree& t : {path2(4), star1(5)}) {
        KTree u = from_text(to_text(t));
        CHECK(u.k == t.k);
        CHECK(u.hedra == t.hedra);
    }
    CHECK_THROWS(from_text("2 2 ; 0,1,2"));
    CHECK(to_dot(single_hedron(2)).find("v0 -- v1") != std::string::npos);
}
