#include "hyperzagreb/transform.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "hyperzagreb/errors.hpp"
#include "hyperzagreb/formulas.hpp"

namespace hyperzagreb {

namespace {

/// Edge indices that are currently deletable: pendant edges plus edges all
/// of whose members are exclusive to them.
std::vector<int> removable_edges(const Hypergraph& g) {
    std::vector<int> out = g.pendant_edge_indices();
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        bool isolated = std::all_of(edge.begin(), edge.end(),
                                    [&](int v) { return g.degree(v) == 1; });
        if (isolated) out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Hypergraph without_edge(const Hypergraph& g, int index) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(g.edge_count()) - 1);
    for (int e = 0; e < g.edge_count(); ++e)
        if (e != index) edges.push_back(g.edge(e));
    return Hypergraph::from_edges(g.vertex_count(), std::move(edges));
}

}  // namespace

MoveResult move_edges(const Hypergraph& h, const MoveSpec& move) {
    const int n = h.vertex_count();
    if (move.from < 0 || move.from >= n)
        fail(errc::vertex_out_of_range,
             "move source " + std::to_string(move.from) + " not in [0, " + std::to_string(n) + ")");
    if (move.to < 0 || move.to >= n)
        fail(errc::vertex_out_of_range,
             "move target " + std::to_string(move.to) + " not in [0, " + std::to_string(n) + ")");
    if (move.from == move.to)
        fail(errc::illegal_move, "source and target vertices coincide");
    if (move.edges.empty())
        fail(errc::illegal_move, "no edges selected");

    std::set<int> chosen;
    for (int e : move.edges) {
        if (e < 0 || e >= h.edge_count())
            fail(errc::parameter_out_of_range,
                 "edge index " + std::to_string(e) + " not in [0, " + std::to_string(h.edge_count()) + ")");
        if (!chosen.insert(e).second)
            fail(errc::illegal_move, "edge " + std::to_string(e) + " selected twice");
    }

    std::vector<Edge> edges(h.edges().begin(), h.edges().end());
    for (int e : chosen) {
        Edge& edge = edges[e];
        auto from_pos = std::find(edge.begin(), edge.end(), move.from);
        if (from_pos == edge.end())
            fail(errc::illegal_move,
                 "edge " + std::to_string(e) + " does not contain vertex " + std::to_string(move.from));
        if (std::find(edge.begin(), edge.end(), move.to) != edge.end())
            fail(errc::illegal_move,
                 "edge " + std::to_string(e) + " already contains vertex " + std::to_string(move.to));
        *from_pos = move.to;
    }

    Hypergraph result = [&] {
        try {
            return Hypergraph::from_edges(n, std::move(edges));
        } catch (const error& err) {
            if (err.code() == errc::duplicate_edge)
                fail(errc::result_duplicate_edge, "move collapses two edges into one");
            throw;
        }
    }();
    if (!result.is_linear())
        fail(errc::result_not_linear, "moved edges share two or more vertices with an existing edge");

    MoveResult out{std::move(result), 0};
    out.delta = out.graph.zagreb_index() - h.zagreb_index();

    const auto t = static_cast<long long>(chosen.size());
    Exact predicted = move_delta_formula(t, h.degree(move.from), h.degree(move.to));
    if (predicted != Exact(out.delta))
        throw std::logic_error("move delta " + std::to_string(out.delta) +
                               " disagrees with closed form " + predicted.str());
    return out;
}

StripResult strip_pendant_edges(const Hypergraph& h) {
    return strip_pendant_edges(h, [](const Hypergraph&, const std::vector<int>& candidates) {
        return candidates.front();
    });
}

StripResult strip_pendant_edges(const Hypergraph& h, const StripChooser& choose) {
    Hypergraph work = h;
    int removed = 0;
    for (;;) {
        std::vector<int> candidates = removable_edges(work);
        if (candidates.empty()) break;
        int pick = choose(work, candidates);
        if (!std::binary_search(candidates.begin(), candidates.end(), pick))
            fail(errc::parameter_out_of_range,
                 "chooser returned " + std::to_string(pick) + ", which is not removable");
        work = without_edge(work, pick);
        ++removed;
    }

    // Drop vertices whose edges were all stripped; keep ones that never had any.
    std::vector<int> relabel(static_cast<size_t>(h.vertex_count()), -1);
    int next = 0;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (work.degree(v) > 0 || h.degree(v) == 0) relabel[static_cast<size_t>(v)] = next++;
    std::vector<Edge> edges(work.edges().begin(), work.edges().end());
    for (Edge& edge : edges)
        for (int& v : edge) v = relabel[static_cast<size_t>(v)];
    return {Hypergraph::from_edges(next, std::move(edges)), removed};
}

namespace {

/// A maximal walk through degree-2 nodes of the trimmed incidence graph,
/// from one branch node to another (possibly the same).  Lengths count
/// incidence arcs, so vertex-to-vertex walks are even and mixed walks odd.
struct Walk {
    int from = 0;
    int to = 0;
    int length = 0;
};

[[noreturn]] void reject_core(const std::string& detail) {
    fail(errc::unrecognized_core, detail);
}

}  // namespace

ClassifyResult classify_bicyclic(const Hypergraph& h) {
    if (!h.uniformity())
        fail(errc::not_uniform, "classification needs uniform edges");
    if (!h.is_linear())
        fail(errc::not_linear, "classification needs pairwise intersections of at most one vertex");
    if (!h.is_connected())
        fail(errc::not_connected, "classification needs a connected hypergraph");
    if (!h.structure_class().is_bicyclic())
        fail(errc::not_bicyclic, "edge count does not exceed the tree budget by exactly two");

    auto [base, removed] = strip_pendant_edges(h);
    const int bn = base.vertex_count();
    const int bm = base.edge_count();

    // Trim the incidence graph to its minimum-degree-2 core: vertices of
    // degree one drop out, edges stay with their remaining members.
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(bn + bm));
    int arcs = 0;
    for (int e = 0; e < bm; ++e) {
        int kept = 0;
        for (int v : base.edge(e)) {
            if (base.degree(v) < 2) continue;
            adj[static_cast<size_t>(v)].emplace_back(bn + e, arcs);
            adj[static_cast<size_t>(bn + e)].emplace_back(v, arcs);
            ++arcs;
            ++kept;
        }
        if (kept < 2) reject_core("a core edge retains fewer than two shared vertices");
    }

    std::vector<char> is_branch(static_cast<size_t>(bn + bm), 0);
    std::vector<int> branches;
    int excess = 0;
    for (int node = 0; node < bn + bm; ++node) {
        auto degree = static_cast<int>(adj[static_cast<size_t>(node)].size());
        if (degree >= 3) {
            is_branch[static_cast<size_t>(node)] = 1;
            branches.push_back(node);
            excess += degree - 2;
        }
    }
    if (excess != 2) reject_core("branch degrees sum to " + std::to_string(excess) + " beyond a cycle");

    std::vector<char> used(static_cast<size_t>(arcs), 0);
    std::vector<Walk> walks;
    for (int b : branches) {
        for (auto [first, arc] : adj[static_cast<size_t>(b)]) {
            if (used[static_cast<size_t>(arc)]) continue;
            used[static_cast<size_t>(arc)] = 1;
            int cur = first;
            int length = 1;
            while (!is_branch[static_cast<size_t>(cur)]) {
                bool advanced = false;
                for (auto [next, step] : adj[static_cast<size_t>(cur)]) {
                    if (used[static_cast<size_t>(step)]) continue;
                    used[static_cast<size_t>(step)] = 1;
                    cur = next;
                    ++length;
                    advanced = true;
                    break;
                }
                if (!advanced) reject_core("walk stalled at a degree-one core node");
            }
            walks.push_back({b, cur, length});
        }
    }
    const size_t expected_walks = branches.size() == 1 ? 2 : 3;
    if (walks.size() != expected_walks)
        reject_core("unexpected walk count " + std::to_string(walks.size()));

    auto is_vertex_node = [&](int node) { return node < bn; };
    auto expect = [&](bool ok, const char* what) {
        if (!ok) reject_core(what);
    };

    FamilySpec spec;
    spec.pendants = removed;
    std::string notes;

    if (branches.size() == 1) {
        const int b = branches[0];
        expect(walks.size() == 2 && walks[0].to == b && walks[1].to == b,
               "a single branch node must carry two closed walks");
        int lo = std::min(walks[0].length, walks[1].length);
        int hi = std::max(walks[0].length, walks[1].length);
        expect(lo % 2 == 0 && hi % 2 == 0, "closed walks must have even length");
        if (is_vertex_node(b)) {
            // Two cycles through one shared vertex.
            spec.family = Family::B;
            spec.variant = 1;
            spec.p = lo / 2;
            spec.q = hi / 2;
            spec.l = 0;
        } else {
            // Two cycles through one shared edge: the shortest such core,
            // with the shared edge counted once.
            spec.family = Family::C;
            spec.variant = 3;
            spec.p = lo / 2 - 1;
            spec.q = 1;
            spec.l = hi / 2 - 1;
        }
    } else {
        expect(branches.size() == 2, "more than two branch nodes");
        const int b1 = branches[0];
        const int b2 = branches[1];
        std::vector<int> connectors;
        std::vector<int> loops1;
        std::vector<int> loops2;
        for (const Walk& w : walks) {
            if (w.from == w.to)
                (w.from == b1 ? loops1 : loops2).push_back(w.length);
            else
                connectors.push_back(w.length);
        }
        const int vertex_branches = (is_vertex_node(b1) ? 1 : 0) + (is_vertex_node(b2) ? 1 : 0);

        if (connectors.size() == 3) {
            std::sort(connectors.begin(), connectors.end());
            spec.family = Family::C;
            if (vertex_branches == 2) {
                expect(connectors[0] % 2 == 0 && connectors[1] % 2 == 0 && connectors[2] % 2 == 0,
                       "vertex-to-vertex walks must have even length");
                spec.variant = 1;
                spec.p = connectors[0] / 2;
                spec.q = connectors[1] / 2;
                spec.l = connectors[2] / 2;
            } else if (vertex_branches == 1) {
                expect(connectors[0] % 2 == 1 && connectors[1] % 2 == 1 && connectors[2] % 2 == 1,
                       "vertex-to-edge walks must have odd length");
                spec.variant = 2;
                int t1 = (connectors[0] - 1) / 2;
                int t2 = (connectors[1] - 1) / 2;
                int t3 = (connectors[2] - 1) / 2;
                if (t1 == 0) {
                    spec.p = t2;
                    spec.q = 1;
                    spec.l = t3;
                } else {
                    spec.p = t1;
                    spec.q = t2 + 1;
                    spec.l = t3;
                }
            } else {
                expect(connectors[0] % 2 == 0 && connectors[1] % 2 == 0 && connectors[2] % 2 == 0,
                       "edge-to-edge walks must have even length");
                spec.variant = 3;
                int t1 = connectors[0] / 2 - 1;
                int t2 = connectors[1] / 2 - 1;
                int t3 = connectors[2] / 2 - 1;
                if (t1 == 0) {
                    spec.p = t2;
                    spec.q = 2;
                    spec.l = t3;
                } else {
                    spec.p = t1;
                    spec.q = t2 + 2;
                    spec.l = t3;
                }
            }
        } else {
            expect(connectors.size() == 1 && loops1.size() == 1 && loops2.size() == 1,
                   "two branch nodes need one bridge and one closed walk each");
            const int bridge = connectors[0];
            spec.family = Family::B;
            if (vertex_branches == 2) {
                expect(bridge % 2 == 0, "vertex-to-vertex bridge must have even length");
                spec.variant = 1;
                spec.p = std::min(loops1[0], loops2[0]) / 2;
                spec.q = std::max(loops1[0], loops2[0]) / 2;
                spec.l = bridge / 2;
            } else if (vertex_branches == 1) {
                expect(bridge % 2 == 1, "vertex-to-edge bridge must have odd length");
                spec.variant = 2;
                const int vertex_loop = is_vertex_node(b1) ? loops1[0] : loops2[0];
                const int edge_loop = is_vertex_node(b1) ? loops2[0] : loops1[0];
                spec.p = vertex_loop / 2;
                spec.q = edge_loop / 2;
                spec.l = (bridge - 1) / 2;
                if (spec.p > spec.q)
                    notes = "mirror: the cycle through the shared vertex is the longer one";
            } else {
                expect(bridge % 2 == 0, "edge-to-edge bridge must have even length");
                spec.variant = 3;
                spec.p = std::min(loops1[0], loops2[0]) / 2;
                spec.q = std::max(loops1[0], loops2[0]) / 2;
                spec.l = bridge / 2 - 1;
            }
        }
    }

    expect(spec.p + spec.q + spec.l == bm, "walk lengths do not cover the core");
    return {spec, bm, std::move(notes)};
}

}  // namespace hyperzagreb
