#pragma once

#include <optional>
#include <vector>

#include "hyperzagreb/canonical.hpp"
#include "hyperzagreb/hypergraph.hpp"

namespace hyperzagreb {

/// Largest edge count enumerated without an explicit override: 6 for edge
/// size 3, 5 for edge size 4, 4 beyond that.
int default_max_m(int k);

struct EnumerationOptions {
    /// Replaces default_max_m when set.  Exceeding the effective limit
    /// raises GuardExceeded rather than starting an open-ended search.
    std::optional<int> max_m_override;
    /// Worker threads.  The search space is split by the isomorphism
    /// classes reached after two edges; results are identical for any
    /// worker count.
    int workers = 1;
    /// Canonical-labeling limits; the vertex cap is raised automatically
    /// to fit the largest graph the requested (k, m) can produce.
    CanonicalOptions canonical;
};

/// All isomorphism classes of connected linear k-uniform hypergraphs with
/// exactly m edges and the given cycle-space class, optionally filtered to
/// one girth.  Returns one canonically labeled representative per class,
/// sorted by canonical code.
std::vector<Hypergraph> enumerate_linear(int k, int m, StructureClass target,
                                         std::optional<int> girth = std::nullopt,
                                         const EnumerationOptions& options = {});

/// Extremes of the sum of squared degrees over one enumerated family.
struct EnumerationReport {
    int k = 0;
    int m = 0;
    StructureClass structure = StructureClass::bicyclic();
    std::optional<int> girth;
    int class_count = 0;
    std::optional<long long> min_zagreb;  ///< empty when no class matches
    std::optional<long long> max_zagreb;
    std::vector<Hypergraph> minimizers;   ///< canonical forms, sorted by code
    std::vector<Hypergraph> maximizers;
};

EnumerationReport extremal_scan(int k, int m, StructureClass target,
                                std::optional<int> girth = std::nullopt,
                                const EnumerationOptions& options = {});

}  // namespace hyperzagreb
