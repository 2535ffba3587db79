#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace ktg {

using Front = std::vector<int>;  // sorted k-element vertex set

/// A k-tree given by its hedron list.  Vertices are dense integers
/// 0..n+k-1; each hedron is a sorted (k+1)-subset and the hedron list is
/// kept sorted lexicographically.  Edges derive as the pairs inside hedra.
struct KTree {
    int k = 1;
    std::vector<std::vector<int>> hedra;

    int hedron_count() const { return (int)hedra.size(); }
    int vertex_count() const { return hedra.empty() ? k : hedron_count() + k; }
    void normalize();  // sort each hedron and the hedron list
};

KTree single_hedron(int k);

/// Attach a new hedron (with one fresh vertex) at front f.
KTree attach_hedron(const KTree& t, const Front& f);

/// Apply a vertex permutation (perm[v] = new label) and re-normalize.
KTree relabel_vertices(const KTree& t, const std::vector<int>& perm);

/// Recursive validity: distinct sorted hedra over dense vertices, the edge
/// count identity, and simplicial elimination down to a k-clique.
bool ktree_valid(const KTree& t, std::string* reason = nullptr);

/// All fronts (k-subsets of hedra), deduplicated, in lexicographic order.
std::vector<Front> all_fronts(const KTree& t);

/// Fronts contained in exactly one hedron.
std::vector<Front> unique_hedron_fronts(const KTree& t);

std::vector<std::vector<int>> adjacency_lists(const KTree& t);
std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj, int src);
int graph_distance(const KTree& t, int u, int v);
int graph_diameter(const KTree& t);

/// Isomorphism-invariant code of the rooted r-ball around v: the sub-k-tree
/// spanned by hedra lying entirely within distance r, annotated with
/// distances to v, canonicalized per connected component.
std::string neighbourhood_code(const KTree& t, int v, int r);

/// Bipartite coding tree: black nodes (one per hedron, each with exactly
/// k+1 white neighbours of distinct colours) and white nodes carrying a
/// colour.  Colours are 0..k internally (paper colours 1..k+1).
struct CodingTree {
    int k = 1;
    std::vector<int> white_colour;
    std::vector<std::vector<int>> black_whites;
    std::vector<std::vector<int>> white_blacks;

    int black_count() const { return (int)black_whites.size(); }
    int white_count() const { return (int)white_colour.size(); }
};

bool coding_tree_valid(const CodingTree& ct, std::string* reason = nullptr);

/// Front colouring: every front of every hedron gets a colour in 0..k,
/// distinct within a hedron, equal across mirror pairs.
struct Colouring {
    std::map<Front, int> colour;
};

/// Extend a seed colouring of one hedron to the whole k-tree.
/// opposite_colours[j] is the colour of the front of the seed hedron
/// opposite its j-th (sorted) vertex; it must be a permutation of 0..k.
Colouring propagate_colouring(const KTree& t, int seed_hedron,
                              const std::vector<int>& opposite_colours);

/// All (k+1)! full colourings (each arises from one seed of hedron 0).
std::vector<Colouring> all_colourings(const KTree& t);

struct Encoded {
    CodingTree ct;
    std::vector<Front> white_front;  // front of each white node
};
Encoded encode(const KTree& t, const Colouring& col);

struct Decoded {
    KTree t;
    Colouring col;
    std::vector<int> black_hedron;   // coding black id -> hedron index in t
    std::vector<Front> white_front;  // coding white id -> front of t
};
Decoded decode(const CodingTree& ct);

/// Labels of the vertices of front f induced by a colouring: label of v is
/// the colour of the fronts opposite v in hedra containing f.
std::vector<int> front_labels(const KTree& t, const Colouring& col, const Front& f);

/// Canonical byte string; equal iff the k-trees are isomorphic.
std::string canonical_form(const KTree& t);

/// Rooted canonical forms (equal iff the rooted objects are isomorphic).
std::string hedron_rooted_form(const KTree& t, int hedron);
std::string front_labelled_form(const KTree& t, const Front& f,
                                const std::vector<int>& labels);
std::string edge_rooted_form(const KTree& t, int hedron, const Front& f);

/// Canonical string of a coloured coding tree (centre-rooted AHU).
std::string coding_canonical_form(const CodingTree& ct);

/// A k-tree automorphism projected to its action on hedron indices,
/// together with the colour permutation it induces on a reference
/// colouring (seed: hedron 0, identity seed).
struct AutRecord {
    std::vector<int> hedron_perm;  // hedron index -> hedron index
    std::vector<int> colour_perm;  // colour 0..k -> colour 0..k
};

/// All automorphisms as (hedron permutation, colour permutation) pairs,
/// found by colour-seeded coding-tree isomorphism matching.  Throws
/// std::runtime_error past `cap` enumerated matches.
std::vector<AutRecord> automorphisms(const KTree& t, std::size_t cap = 4000000);

// Text format: "k n ; v,v,v ; v,v,v ; ..."
std::string to_text(const KTree& t);
KTree from_text(const std::string& line);
std::string to_dot(const KTree& t);

}  // namespace ktg
