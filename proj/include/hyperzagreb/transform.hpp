#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hyperzagreb/construct.hpp"
#include "hyperzagreb/hypergraph.hpp"

namespace hyperzagreb {

/// Re-routes a set of edges from one vertex to another.  Every selected edge
/// must contain `from` and must not contain `to`; the selected indices must
/// be distinct.  Uniformity and edge count are preserved; the degree of
/// `from` drops by the number of selected edges and the degree of `to` rises
/// by the same amount.
struct MoveSpec {
    int from = 0;
    int to = 0;
    std::vector<int> edges;
};

struct MoveResult {
    Hypergraph graph;
    /// Change in the sum of squared degrees, new minus old.
    long long delta = 0;
};

/// Applies a move.  Throws IllegalMove for an empty selection, repeated
/// indices, `from == to`, or an edge that lacks `from` or already holds
/// `to`; ResultDuplicateEdge or ResultNotLinear when the rerouted graph
/// would collapse two edges or break linearity.  The returned delta is
/// recomputed from the degree sequences and cross-checked against the
/// closed form in formulas.hpp.
MoveResult move_edges(const Hypergraph& h, const MoveSpec& move);

/// Outcome of repeatedly deleting removable edges.  An edge is removable
/// when it is pendant (all but one member has degree 1) or isolated (every
/// member has degree 1).  Vertices that lose their last edge are dropped
/// and the survivors are renumbered in ascending order of their old ids.
struct StripResult {
    Hypergraph core;
    int removed = 0;
};

/// Picks which removable edge to delete next.  Receives the current working
/// graph and the ascending list of removable edge indices; must return one
/// of them.  The final core is independent of the choices; the hook exists
/// so tests can exercise that confluence.
using StripChooser = std::function<int(const Hypergraph&, const std::vector<int>&)>;

StripResult strip_pendant_edges(const Hypergraph& h);
StripResult strip_pendant_edges(const Hypergraph& h, const StripChooser& choose);

/// Structural identification of a connected linear uniform hypergraph whose
/// edge count exceeds its spanning-tree budget by exactly two.  The returned
/// spec names the family and cycle parameters of the core left after
/// stripping; `pendants` counts the stripped edges, wherever they were
/// attached.  `notes` flags shapes that fall outside the constructor's
/// parameter order, such as a joint-plus-cored dumbbell whose joint-side
/// cycle is the longer one.
struct ClassifyResult {
    FamilySpec spec;
    /// Edges surviving the strip; always spec.p + spec.q + spec.l.
    int core_edge_count = 0;
    std::string notes;
};

/// Throws NotUniform / NotLinear / NotConnected / NotBicyclic when the input
/// is out of scope and UnrecognizedCore when the stripped core fits no
/// family shape.
ClassifyResult classify_bicyclic(const Hypergraph& h);

}  // namespace hyperzagreb
