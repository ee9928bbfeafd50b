#pragma once

#include <string>

#include "hyperzagreb/hypergraph.hpp"

namespace hyperzagreb {

enum class Family { B, C };

/// Parameters of one member of the two bicyclic construction families.
///
/// Family B glues two hypercycles (lengths p and q, q >= p >= 3) to the ends
/// of a connecting hyperpath of length l >= 0:
///   variant 1: both attachments at degree-2 joint vertices,
///   variant 2: joint vertex on the p-cycle, cored vertex on the q-cycle,
///   variant 3: both attachments at cored vertices.
/// Family C glues three hyperpaths of lengths p, q, l:
///   variant 1: both triples of endpoints identified (a theta of paths),
///   variant 2: one shared endpoint, the far ends of paths p and q identified,
///              the far end of path l identified with a cored vertex of the
///              last edge of path q,
///   variant 3: paths p and q identified end-to-end into a cycle, path l
///              spanning cored vertices of the first and last edges of path q.
/// `pendants` counts extra pendant edges attached at the canonical vertex
/// (the lowest-id vertex of maximum degree, or of degree 2 when the base has
/// maximum degree 2).
struct FamilySpec {
    Family family = Family::B;
    int variant = 1;  // 1..3
    int p = 0, q = 0, l = 0;
    int pendants = 0;

    /// Parameter legality for edge size k (k > 3 is required by C3 with q=1).
    bool is_legal(int k) const;
    std::string to_string() const;

    bool operator==(const FamilySpec&) const = default;
};

/// Hyperpath with `length` edges; consecutive edges share one joint vertex.
/// Joints take ids 0..length in path order, cored fill vertices follow.
/// length = 0 yields the one-vertex hypergraph.
Hypergraph hyperpath(int k, int length);

/// Hypercycle with `length` >= 3 edges; joints take ids 0..length-1 in cycle
/// order, cored fill vertices follow.
Hypergraph hypercycle(int k, int length);

/// Base hypergraph of a family-B spec (ignores `pendants`).
Hypergraph b_base(const FamilySpec& spec, int k);

/// Base hypergraph of a family-C spec (ignores `pendants`).
Hypergraph c_base(const FamilySpec& spec, int k);

/// Adds `count` edges {v} + (k-1) fresh vertices each. Fresh vertices receive
/// the next ids after the existing ones.
Hypergraph attach_pendant_edges(const Hypergraph& h, int v, int count, int k);

/// Base of `spec` plus `spec.pendants` pendant edges at the canonical vertex.
Hypergraph build_family(const FamilySpec& spec, int k);

/// Maximizer candidate among bicyclic hypergraphs that contain two girth-g
/// hypercycles: both cycles of length g sharing one vertex, all remaining
/// edges pendant at the shared degree-4 vertex. Requires m >= 2g, g >= 3.
Hypergraph extremal_b(int k, int m, int g);

/// Maximizer candidate of girth g built from three glued hyperpaths with all
/// remaining edges pendant at the degree-3 vertex. Even g: variant C1 with
/// paths g/2 (m >= 3g/2). Odd g: variant C2 with paths (g-1)/2, (g+1)/2,
/// (g-1)/2 (m >= (3g-1)/2).
Hypergraph extremal_c(int k, int m, int g);

struct GlobalMaxResult {
    Hypergraph graph;
    /// True for m in {4, 5}: the construction exists but the extremal claim
    /// is only made for m >= 6.
    bool outside_theorem_range = false;
};

/// Candidate maximizer over all bicyclic hypergraphs with m edges: the girth-3
/// instance of extremal_c. Requires m >= 4.
GlobalMaxResult global_max(int k, int m);

/// The minimizer witness: a maximum-degree-2 bicyclic hypergraph, realized as
/// the C3 base with paths (1, 2, m-3). Requires m >= 4; no bicyclic linear
/// uniform hypergraph has fewer than 4 edges.
Hypergraph min_bicyclic(int k, int m);

}  // namespace hyperzagreb
