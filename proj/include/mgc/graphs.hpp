#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mgc/permutation.hpp"

namespace mgc {

/// One half-edge. Legs are flags with `partner == self`. `label` is the leg
/// label in 1..n, or 0 for non-legs and for legs of unlabeled graphs.
struct Flag {
    int vertex = 0;
    int partner = 0;
    bool marked = false;
    int label = 0;

    friend bool operator==(const Flag&, const Flag&) = default;
};

/// A marked graph with an orientation: a reference ordering of the edges
/// (each edge named by one of its flags) and of the marked flags D. The
/// orientation generator is e_1 ^ ... ^ e_k (x) (d_1 ^ ... ^ d_s)^-1.
struct MarkedGraph {
    int num_vertices = 1;
    int dv = 0;
    std::vector<Flag> flags;
    std::vector<int> edge_order;
    std::vector<int> marked_order;

    bool is_leg(int f) const { return flags[f].partner == f; }
    bool is_tadpole(int f) const {
        return !is_leg(f) && flags[f].vertex == flags[flags[f].partner].vertex;
    }
    int num_edges() const { return static_cast<int>(edge_order.size()); }
    int num_legs() const;
    int num_marked() const { return static_cast<int>(marked_order.size()); }
    int valence(int v) const;
    /// True when every leg carries label 0.
    bool unlabeled() const;

    friend bool operator==(const MarkedGraph&, const MarkedGraph&) = default;
};

struct GraphType {
    int g = 0;
    int n = 0;
    int r = 0;
    int excess = 0;  // 3(g-1) + 2(n-r)
    int degree = 0;  // |E| + n - r

    friend bool operator==(const GraphType&, const GraphType&) = default;
};

/// Every violated structural or admissibility clause; empty when valid.
std::vector<std::string> validate(const MarkedGraph& graph);
GraphType graph_type(const MarkedGraph& graph);

/// Isomorphism class with its reference orientation. `graph` is the
/// canonical representative; its own edge/D orderings are the reference.
struct OrientedClass {
    std::string key;
    MarkedGraph graph;
    bool vanishing = false;
};

struct Canonical {
    OrientedClass cls;
    int sign = 1;  // given orientation = sign * reference orientation
};

/// Canonical isomorphism class of a marked graph. Leg labels are respected;
/// label-0 legs are treated as interchangeable.
Canonical canonical_form(const MarkedGraph& graph);
/// Just the class key (cheaper: no representative is built).
std::string canonical_key(const MarkedGraph& graph);

/// An automorphism as a flag bijection together with its det-sign.
struct Automorphism {
    std::vector<int> flag_map;
    int sign = 1;
};

/// Generators of Aut(graph).
std::vector<Automorphism> automorphisms(const MarkedGraph& graph);
bool has_odd_automorphism(const MarkedGraph& graph);

/// Edge contraction, by any flag of the edge. Empty for tadpoles. Terms
/// that are inadmissible (neutral or double-marked tadpoles) are dropped.
/// Signs are relative to the orderings of the returned graphs.
std::vector<std::pair<MarkedGraph, int>> contract_edge(const MarkedGraph& graph, int flag);

/// Mark an unmarked flag at the distinguished vertex, placing it first in D.
/// Throws std::invalid_argument if the flag is not eligible or if the result
/// would be a double-marked tadpole.
std::pair<MarkedGraph, int> mark_flag(const MarkedGraph& graph, int flag);

/// Remove marked legs and forget all leg labels.
MarkedGraph core(const MarkedGraph& graph);
/// Number of marked legs.
int marked_leg_count(const MarkedGraph& graph);

/// New marked leg labeled n+1 at the distinguished vertex, last in D.
MarkedGraph add_marked_leg(const MarkedGraph& graph);

/// The extremal core graph theta_{g,l}(p). Throws on invalid parameters.
MarkedGraph build_theta(int g, int l, int p);

/// Cut a non-disconnecting edge into two legs labeled n+1 (the named flag)
/// and n+2. Throws if the edge is a leg, disconnecting, or g < 2.
MarkedGraph cut_edge(const MarkedGraph& graph, int flag);

/// Leg labeled i becomes sigma(i) (labels 1-based, sigma 0-based).
MarkedGraph relabel_legs(const MarkedGraph& graph, const Permutation& sigma);
/// Give the legs of an unlabeled graph the labels 1..n in flag order.
MarkedGraph label_legs(const MarkedGraph& graph);
/// Forget leg labels.
MarkedGraph unlabel_legs(const MarkedGraph& graph);

/// Rename vertices and flags: vertex v becomes vertex_map[v], flag f becomes
/// flag_map[f]. The distinguished vertex must stay put or move consistently;
/// orientations are carried along, so the result is the same oriented graph.
MarkedGraph renumber(const MarkedGraph& graph, const std::vector<int>& vertex_map,
                     const std::vector<int>& flag_map);

/// I_gamma: leg permutations sigma with sigma*gamma isomorphic to gamma, each
/// with the sign of its action on the coinvariants of det(gamma). Throws
/// std::domain_error on a vanishing class.
struct SignedPermutation {
    Permutation perm;
    int sign = 1;
};
std::vector<SignedPermutation> leg_symmetry_group(const MarkedGraph& graph);

/// Stable text encoding: "V dv ; v,p,m,l ... ; edges ; marked".
std::string encode(const MarkedGraph& graph);
MarkedGraph decode(std::string_view text);

}  // namespace mgc
