#include "hyperzagreb/enumerate.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <thread>
#include <utility>

#include "hyperzagreb/errors.hpp"

namespace hyperzagreb {

int default_max_m(int k) {
    if (k <= 3) return 6;
    if (k == 4) return 5;
    return 4;
}

namespace {

/// A partial graph carried between levels; the graph is already in
/// canonical form and the code is its deduplication key.
struct Node {
    Hypergraph graph;
    std::string code;
};

/// Calls f(combo) for every ascending s-subset of {0, .., n-1}.
template <typename F>
void for_each_combination(int n, int s, F&& f) {
    if (s > n || s <= 0) return;
    std::vector<int> combo(static_cast<size_t>(s));
    std::iota(combo.begin(), combo.end(), 0);
    for (;;) {
        f(combo);
        int i = s - 1;
        while (i >= 0 && combo[static_cast<size_t>(i)] == n - s + i) --i;
        if (i < 0) return;
        ++combo[static_cast<size_t>(i)];
        for (int j = i + 1; j < s; ++j)
            combo[static_cast<size_t>(j)] = combo[static_cast<size_t>(j - 1)] + 1;
    }
}

int sorted_overlap(const Edge& a, const std::vector<int>& b) {
    size_t i = 0, j = 0;
    int shared = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++shared; ++i; ++j; if (shared >= 2) return shared; }
    }
    return shared;
}

class Search {
public:
    Search(int k, int m, int target_deficit, std::optional<int> girth,
           const CanonicalOptions& canonical)
        : k_(k), m_(m), target_(target_deficit), girth_(girth), canonical_(canonical) {}

    /// Children of one node at the next level, deduplicated against `seen`.
    void expand(const Node& node, int next_level, std::vector<Node>& out,
                std::set<std::string>& seen) const {
        const Hypergraph& g = node.graph;
        const int n = g.vertex_count();
        const int deficit = g.edge_count() * (k_ - 1) + 1 - n;
        const bool final_level = next_level == m_;
        const int s_max = std::min({k_, n, target_ - deficit + 1});
        for (int s = 1; s <= s_max; ++s) {
            const int child_deficit = deficit + s - 1;
            if (child_deficit + (m_ - next_level) * (k_ - 1) < target_) continue;
            for_each_combination(n, s, [&](const std::vector<int>& shared) {
                for (const Edge& e : g.edges())
                    if (sorted_overlap(e, shared) >= 2) return;
                Edge fresh(shared.begin(), shared.end());
                for (int extra = 0; extra < k_ - s; ++extra) fresh.push_back(n + extra);
                if (s == k_ &&
                    std::binary_search(g.edges().begin(), g.edges().end(), fresh))
                    return;
                std::vector<Edge> edges(g.edges().begin(), g.edges().end());
                edges.push_back(std::move(fresh));
                Hypergraph child = Hypergraph::from_edges(n + k_ - s, std::move(edges));
                if (final_level && girth_ && child.girth() != girth_) return;
                CanonicalResult canon = canonicalize(child, canonical_);
                if (seen.insert(canon.code).second)
                    out.push_back({std::move(canon.form), std::move(canon.code)});
            });
        }
    }

    std::vector<Node> grow(std::vector<Node> nodes, int from_level, int to_level) const {
        for (int level = from_level; level < to_level; ++level) {
            std::vector<Node> next;
            std::set<std::string> seen;
            for (const Node& node : nodes) expand(node, level + 1, next, seen);
            nodes = std::move(next);
        }
        return nodes;
    }

private:
    int k_;
    int m_;
    int target_;
    std::optional<int> girth_;
    CanonicalOptions canonical_;
};

}  // namespace

std::vector<Hypergraph> enumerate_linear(int k, int m, StructureClass target,
                                         std::optional<int> girth,
                                         const EnumerationOptions& options) {
    if (k < 2) fail(errc::illegal_parameters, "edge size must be at least 2");
    if (m < 1) fail(errc::illegal_parameters, "edge count must be at least 1");
    if (target.deficit() < 0)
        fail(errc::illegal_parameters, "negative deficit is impossible for connected graphs");
    if (options.workers < 1) fail(errc::illegal_parameters, "worker count must be at least 1");
    const int limit = options.max_m_override.value_or(default_max_m(k));
    if (m > limit)
        fail(errc::guard_exceeded, "m=" + std::to_string(m) + " exceeds the enumeration limit " +
                                       std::to_string(limit) + " for k=" + std::to_string(k) +
                                       "; raise the limit explicitly to proceed");

    CanonicalOptions canonical = options.canonical;
    canonical.max_vertices = std::max(canonical.max_vertices, m * (k - 1) + 1);
    const Search search(k, m, target.deficit(), girth, canonical);

    Edge first(static_cast<size_t>(k));
    std::iota(first.begin(), first.end(), 0);
    Hypergraph seed = Hypergraph::from_edges(k, {first});
    CanonicalResult seed_canon = canonicalize(seed, canonical);
    std::vector<Node> frontier{{std::move(seed_canon.form), std::move(seed_canon.code)}};

    std::vector<Node> finals;
    if (m == 1) {
        finals = std::move(frontier);
        if (target.deficit() != 0) finals.clear();
        if (girth && !finals.empty() && finals.front().graph.girth() != girth) finals.clear();
    } else {
        frontier = search.grow(std::move(frontier), 1, 2);
        if (options.workers == 1 || m == 2) {
            finals = search.grow(std::move(frontier), 2, m);
        } else {
            const int workers = std::min<int>(options.workers, static_cast<int>(frontier.size()));
            std::vector<std::vector<Node>> shards(static_cast<size_t>(std::max(workers, 1)));
            for (size_t i = 0; i < frontier.size(); ++i)
                shards[i % shards.size()].push_back(std::move(frontier[i]));
            std::vector<std::vector<Node>> results(shards.size());
            std::vector<std::exception_ptr> failures(shards.size());
            std::vector<std::thread> pool;
            pool.reserve(shards.size());
            for (size_t w = 0; w < shards.size(); ++w) {
                pool.emplace_back([&, w] {
                    try {
                        results[w] = search.grow(std::move(shards[w]), 2, m);
                    } catch (...) {
                        failures[w] = std::current_exception();
                    }
                });
            }
            for (std::thread& t : pool) t.join();
            for (const std::exception_ptr& failure : failures)
                if (failure) std::rethrow_exception(failure);
            for (std::vector<Node>& shard : results)
                for (Node& node : shard) finals.push_back(std::move(node));
        }
    }

    // The final level filtered by deficit implicitly (pruning forces the
    // exact target there); dedup across workers and fix the output order.
    std::map<std::string, Hypergraph> classes;
    for (Node& node : finals) classes.emplace(std::move(node.code), std::move(node.graph));
    std::vector<Hypergraph> out;
    out.reserve(classes.size());
    for (auto& [code, graph] : classes) out.push_back(std::move(graph));
    return out;
}

EnumerationReport extremal_scan(int k, int m, StructureClass target,
                                std::optional<int> girth,
                                const EnumerationOptions& options) {
    EnumerationReport report;
    report.k = k;
    report.m = m;
    report.structure = target;
    report.girth = girth;
    std::vector<Hypergraph> classes = enumerate_linear(k, m, target, girth, options);
    report.class_count = static_cast<int>(classes.size());
    for (Hypergraph& g : classes) {
        const long long z = g.zagreb_index();
        if (!report.min_zagreb || z < *report.min_zagreb) {
            report.min_zagreb = z;
            report.minimizers.clear();
        }
        if (z == *report.min_zagreb) report.minimizers.push_back(g);
        if (!report.max_zagreb || z > *report.max_zagreb) {
            report.max_zagreb = z;
            report.maximizers.clear();
        }
        if (z == *report.max_zagreb) report.maximizers.push_back(std::move(g));
    }
    return report;
}

}  // namespace hyperzagreb
