#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperzagreb/errors.hpp"

namespace hyperzagreb {

/// An edge is a strictly increasing list of vertex ids.
using Edge = std::vector<int>;

/// Degree histogram of a hypergraph together with the usual aggregates.
struct DegreeStats {
    std::map<int, int> histogram;  ///< degree -> number of vertices, nonzero entries only
    int max_degree = 0;
    int vertex_count = 0;
    long long degree_sum = 0;  ///< equals the sum of all edge sizes

    bool operator==(const DegreeStats&) const = default;
};

/// Coarse cycle-space classification of a connected uniform linear hypergraph,
/// keyed on the deficit m*(k-1) + 1 - n.
class StructureClass {
public:
    static StructureClass hypertree() { return StructureClass(0); }
    static StructureClass unicyclic() { return StructureClass(1); }
    static StructureClass bicyclic() { return StructureClass(2); }
    static StructureClass other(int deficit);
    static StructureClass from_deficit(int deficit);

    int deficit() const { return deficit_; }
    bool is_hypertree() const { return deficit_ == 0; }
    bool is_unicyclic() const { return deficit_ == 1; }
    bool is_bicyclic() const { return deficit_ == 2; }
    std::string name() const;

    bool operator==(const StructureClass&) const = default;

private:
    explicit StructureClass(int deficit) : deficit_(deficit) {}
    int deficit_;
};

/// Immutable hypergraph on vertices 0..n-1. Construction normalizes the
/// representation (each edge sorted, the edge list sorted lexicographically),
/// so structural equality is plain equality.
class Hypergraph {
public:
    Hypergraph() = default;  ///< empty hypergraph: n = 0, no edges

    /// Validates and normalizes. Rejects ids outside [0, n), repeated vertices
    /// within an edge, edges with fewer than two vertices, and repeated edges.
    static Hypergraph from_edges(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int index) const { return edges_.at(static_cast<size_t>(index)); }

    /// Number of edges containing v.
    int degree(int v) const;
    const std::vector<int>& degrees() const { return degrees_; }
    /// Indices of the edges containing v, ascending.
    const std::vector<int>& incident_edges(int v) const;

    DegreeStats degree_stats() const;

    /// First Zagreb index: the sum of squared vertex degrees.
    long long zagreb_index() const;

    /// Common edge size if all edges have one and m >= 1, otherwise nullopt.
    std::optional<int> uniformity() const;

    /// True when every pair of edges shares at most one vertex.
    bool is_linear() const;

    /// True when the hypergraph has one component (vacuously true for n <= 1).
    bool is_connected() const;

    /// Requires uniform, linear, connected input.
    StructureClass structure_class() const;

    /// Length of a shortest hypercycle, or nullopt when acyclic.
    /// Requires a linear hypergraph.
    std::optional<int> girth() const;

    /// Vertices of degree exactly one, ascending.
    std::vector<int> cored_vertices() const;

    /// Indices of edges all but one of whose vertices are cored. An edge with
    /// every vertex cored (an isolated edge) does not qualify.
    std::vector<int> pendant_edge_indices() const;

    /// Applies a permutation (perm[old] = new) and renormalizes.
    Hypergraph relabeled(std::span<const int> perm) const;

    bool operator==(const Hypergraph&) const = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> degrees_;
    std::vector<std::vector<int>> incidence_;  // vertex -> sorted edge indices

    void rebuild_incidence();
};

}  // namespace hyperzagreb
