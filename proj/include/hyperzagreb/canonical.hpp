#pragma once

#include <string>

#include "hyperzagreb/hypergraph.hpp"

namespace hyperzagreb {

struct CanonicalOptions {
    /// Hard limit on the vertex count; larger inputs raise TooLarge.
    int max_vertices = 20;
    /// Upper bound on refinement/branching work; exceeding it raises TooLarge
    /// instead of silently degrading.
    long long step_budget = 8'000'000;
};

struct CanonicalResult {
    /// Relabeling-invariant byte sequence; equal codes iff isomorphic.
    std::string code;
    /// A relabeling of the input realizing the code; canonicalizing it again
    /// returns the same code.
    Hypergraph form;
};

/// Canonical code and form, computed by iterated color refinement with
/// individualization backtracking on the degree-2-or-more vertices. Vertices
/// of degree one inside one edge are mutually interchangeable, so they are
/// tracked only as per-edge counts; this keeps the search small even with
/// many pendant edges.
CanonicalResult canonicalize(const Hypergraph& h, const CanonicalOptions& options = {});

std::string canonical_code(const Hypergraph& h, const CanonicalOptions& options = {});
Hypergraph canonical_form(const Hypergraph& h, const CanonicalOptions& options = {});

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b,
                    const CanonicalOptions& options = {});

}  // namespace hyperzagreb
