#include "hyperzagreb/hypergraph.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace hyperzagreb {

StructureClass StructureClass::other(int deficit) {
    if (deficit == 0 || deficit == 1 || deficit == 2)
        fail(errc::illegal_parameters, "deficit " + std::to_string(deficit) + " has a named class");
    if (deficit < 0) fail(errc::illegal_parameters, "negative deficit");
    return StructureClass(deficit);
}

StructureClass StructureClass::from_deficit(int deficit) {
    if (deficit < 0) fail(errc::illegal_parameters, "negative deficit");
    return StructureClass(deficit);
}

std::string StructureClass::name() const {
    switch (deficit_) {
        case 0: return "hypertree";
        case 1: return "unicyclic";
        case 2: return "bicyclic";
        default: return "other(" + std::to_string(deficit_) + ")";
    }
}

Hypergraph Hypergraph::from_edges(int n, std::vector<Edge> edges) {
    if (n < 0) fail(errc::vertex_out_of_range, "negative vertex count");
    for (Edge& e : edges) {
        if (e.size() < 2)
            fail(errc::edge_too_small, "edge with " + std::to_string(e.size()) + " vertices");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            fail(errc::duplicate_vertex_in_edge, "repeated vertex within an edge");
        if (e.front() < 0 || e.back() >= n)
            fail(errc::vertex_out_of_range,
                 "edge vertex outside [0, " + std::to_string(n) + ")");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        fail(errc::duplicate_edge, "repeated edge");

    Hypergraph h;
    h.n_ = n;
    h.edges_ = std::move(edges);
    h.rebuild_incidence();
    return h;
}

void Hypergraph::rebuild_incidence() {
    degrees_.assign(static_cast<size_t>(n_), 0);
    incidence_.assign(static_cast<size_t>(n_), {});
    for (size_t i = 0; i < edges_.size(); ++i)
        for (int v : edges_[i]) {
            ++degrees_[static_cast<size_t>(v)];
            incidence_[static_cast<size_t>(v)].push_back(static_cast<int>(i));
        }
}

int Hypergraph::degree(int v) const {
    if (v < 0 || v >= n_) fail(errc::vertex_out_of_range, "degree of vertex " + std::to_string(v));
    return degrees_[static_cast<size_t>(v)];
}

const std::vector<int>& Hypergraph::incident_edges(int v) const {
    if (v < 0 || v >= n_) fail(errc::vertex_out_of_range, "incidence of vertex " + std::to_string(v));
    return incidence_[static_cast<size_t>(v)];
}

DegreeStats Hypergraph::degree_stats() const {
    DegreeStats stats;
    stats.vertex_count = n_;
    for (int d : degrees_) {
        ++stats.histogram[d];
        stats.max_degree = std::max(stats.max_degree, d);
        stats.degree_sum += d;
    }
    return stats;
}

long long Hypergraph::zagreb_index() const {
    long long total = 0;
    for (int d : degrees_) total += static_cast<long long>(d) * d;
    return total;
}

std::optional<int> Hypergraph::uniformity() const {
    if (edges_.empty()) return std::nullopt;
    size_t k = edges_.front().size();
    for (const Edge& e : edges_)
        if (e.size() != k) return std::nullopt;
    return static_cast<int>(k);
}

bool Hypergraph::is_linear() const {
    for (size_t i = 0; i < edges_.size(); ++i)
        for (size_t j = i + 1; j < edges_.size(); ++j) {
            const Edge& a = edges_[i];
            const Edge& b = edges_[j];
            int shared = 0;
            size_t x = 0, y = 0;
            while (x < a.size() && y < b.size()) {
                if (a[x] == b[y]) {
                    if (++shared > 1) return false;
                    ++x, ++y;
                } else if (a[x] < b[y]) {
                    ++x;
                } else {
                    ++y;
                }
            }
        }
    return true;
}

bool Hypergraph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen_vertex(static_cast<size_t>(n_), 0);
    std::vector<char> seen_edge(edges_.size(), 0);
    std::queue<int> frontier;
    frontier.push(0);
    seen_vertex[0] = 1;
    int reached = 1;
    while (!frontier.empty()) {
        int v = frontier.front();
        frontier.pop();
        for (int ei : incidence_[static_cast<size_t>(v)]) {
            if (seen_edge[static_cast<size_t>(ei)]) continue;
            seen_edge[static_cast<size_t>(ei)] = 1;
            for (int u : edges_[static_cast<size_t>(ei)])
                if (!seen_vertex[static_cast<size_t>(u)]) {
                    seen_vertex[static_cast<size_t>(u)] = 1;
                    ++reached;
                    frontier.push(u);
                }
        }
    }
    return reached == n_;
}

StructureClass Hypergraph::structure_class() const {
    std::optional<int> k = uniformity();
    if (!k) fail(errc::not_uniform, "structure class requires a uniform hypergraph");
    if (!is_linear()) fail(errc::not_linear, "structure class requires a linear hypergraph");
    if (!is_connected()) fail(errc::not_connected, "structure class requires a connected hypergraph");
    long long deficit =
        static_cast<long long>(edge_count()) * (*k - 1) + 1 - n_;
    if (deficit < 0) fail(errc::not_connected, "impossible deficit");  // unreachable when connected
    return StructureClass::from_deficit(static_cast<int>(deficit));
}

std::optional<int> Hypergraph::girth() const {
    if (!is_linear()) fail(errc::not_linear, "girth requires a linear hypergraph");

    // Shortest cycle of the bipartite incidence graph, halved. Nodes 0..n-1
    // are vertices, n..n+m-1 are edges. Every incidence cycle has even length
    // 2L and corresponds to a hypercycle of length L; linearity rules out 4-cycles.
    int m = edge_count();
    int total = n_ + m;
    auto neighbors = [&](int node, auto&& visit) {
        if (node < n_) {
            for (int ei : incidence_[static_cast<size_t>(node)]) visit(n_ + ei);
        } else {
            for (int v : edges_[static_cast<size_t>(node - n_)]) visit(v);
        }
    };

    constexpr int kInf = std::numeric_limits<int>::max();
    int best = kInf;
    std::vector<int> dist(static_cast<size_t>(total));
    std::vector<int> parent(static_cast<size_t>(total));
    for (int root = 0; root < total; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> frontier;
        dist[static_cast<size_t>(root)] = 0;
        frontier.push(root);
        while (!frontier.empty()) {
            int x = frontier.front();
            frontier.pop();
            if (best != kInf && 2 * dist[static_cast<size_t>(x)] >= best) break;
            neighbors(x, [&](int y) {
                if (dist[static_cast<size_t>(y)] < 0) {
                    dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
                    parent[static_cast<size_t>(y)] = x;
                    frontier.push(y);
                } else if (y != parent[static_cast<size_t>(x)]) {
                    // Non-tree incidence: closes a walk that contains a cycle
                    // no longer than the candidate, so the minimum is exact.
                    best = std::min(best,
                                    dist[static_cast<size_t>(x)] + dist[static_cast<size_t>(y)] + 1);
                }
            });
        }
    }
    if (best == kInf) return std::nullopt;
    return best / 2;
}

std::vector<int> Hypergraph::cored_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (degrees_[static_cast<size_t>(v)] == 1) out.push_back(v);
    return out;
}

std::vector<int> Hypergraph::pendant_edge_indices() const {
    std::vector<int> out;
    for (size_t i = 0; i < edges_.size(); ++i) {
        size_t cored = 0;
        for (int v : edges_[i]) cored += degrees_[static_cast<size_t>(v)] == 1 ? 1u : 0u;
        if (cored + 1 == edges_[i].size()) out.push_back(static_cast<int>(i));
    }
    return out;
}

Hypergraph Hypergraph::relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_)
        fail(errc::illegal_parameters, "permutation size does not match vertex count");
    std::vector<char> hit(static_cast<size_t>(n_), 0);
    for (int image : perm) {
        if (image < 0 || image >= n_) fail(errc::vertex_out_of_range, "permutation image");
        if (hit[static_cast<size_t>(image)]) fail(errc::illegal_parameters, "permutation not injective");
        hit[static_cast<size_t>(image)] = 1;
    }
    std::vector<Edge> mapped = edges_;
    for (Edge& e : mapped)
        for (int& v : e) v = perm[static_cast<size_t>(v)];
    return from_edges(n_, std::move(mapped));
}

}  // namespace hyperzagreb
