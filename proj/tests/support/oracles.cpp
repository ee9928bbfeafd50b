#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hyperzagreb::oracle {

namespace {

std::vector<Edge> k_subsets(int n, int k) {
    std::vector<Edge> out;
    if (k > n || k <= 0) return out;
    Edge combo(static_cast<size_t>(k));
    std::iota(combo.begin(), combo.end(), 0);
    for (;;) {
        out.push_back(combo);
        int i = k - 1;
        while (i >= 0 && combo[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) return out;
        ++combo[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            combo[static_cast<size_t>(j)] = combo[static_cast<size_t>(j - 1)] + 1;
    }
}

int overlap(const Edge& a, const Edge& b) {
    size_t i = 0, j = 0;
    int shared = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++shared; ++i; ++j; }
    }
    return shared;
}

void choose_edge_sets(const std::vector<Edge>& pool, size_t from, int left,
                      std::vector<Edge>& picked, int n,
                      std::vector<Hypergraph>& out) {
    if (left == 0) {
        std::vector<char> covered(static_cast<size_t>(n), 0);
        for (const Edge& e : picked)
            for (int v : e) covered[static_cast<size_t>(v)] = 1;
        if (std::find(covered.begin(), covered.end(), 0) != covered.end()) return;
        Hypergraph h = Hypergraph::from_edges(n, picked);
        if (h.is_connected()) out.push_back(std::move(h));
        return;
    }
    for (size_t i = from; i + static_cast<size_t>(left) <= pool.size(); ++i) {
        bool linear = true;
        for (const Edge& e : picked)
            if (overlap(e, pool[i]) >= 2) { linear = false; break; }
        if (!linear) continue;
        picked.push_back(pool[i]);
        choose_edge_sets(pool, i + 1, left - 1, picked, n, out);
        picked.pop_back();
    }
}

}  // namespace

std::vector<Hypergraph> labeled_linear(int k, int m, int n) {
    std::vector<Hypergraph> out;
    std::vector<Edge> picked;
    choose_edge_sets(k_subsets(n, k), 0, m, picked, n, out);
    return out;
}

namespace {

bool extend_isomorphism(const Hypergraph& a, const Hypergraph& b,
                        const std::vector<int>& order, size_t pos,
                        std::vector<int>& image, std::vector<char>& used,
                        const std::set<Edge>& b_edges) {
    if (pos == order.size()) return true;
    const int v = order[pos];
    for (int w = 0; w < b.vertex_count(); ++w) {
        if (used[static_cast<size_t>(w)] || b.degree(w) != a.degree(v)) continue;
        image[static_cast<size_t>(v)] = w;
        used[static_cast<size_t>(w)] = 1;
        bool ok = true;
        for (int e : a.incident_edges(v)) {
            const Edge& edge = a.edge(e);
            Edge mapped;
            mapped.reserve(edge.size());
            bool complete = true;
            for (int x : edge) {
                if (image[static_cast<size_t>(x)] < 0) { complete = false; break; }
                mapped.push_back(image[static_cast<size_t>(x)]);
            }
            if (!complete) continue;
            std::sort(mapped.begin(), mapped.end());
            if (!b_edges.count(mapped)) { ok = false; break; }
        }
        if (ok && extend_isomorphism(a, b, order, pos + 1, image, used, b_edges)) return true;
        image[static_cast<size_t>(v)] = -1;
        used[static_cast<size_t>(w)] = 0;
    }
    return false;
}

}  // namespace

bool brute_force_isomorphic(const Hypergraph& a, const Hypergraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (a.degree_stats() != b.degree_stats()) return false;
    std::multiset<size_t> sizes_a, sizes_b;
    for (const Edge& e : a.edges()) sizes_a.insert(e.size());
    for (const Edge& e : b.edges()) sizes_b.insert(e.size());
    if (sizes_a != sizes_b) return false;

    std::vector<int> order(static_cast<size_t>(a.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return a.degree(x) > a.degree(y); });
    std::vector<int> image(static_cast<size_t>(a.vertex_count()), -1);
    std::vector<char> used(static_cast<size_t>(a.vertex_count()), 0);
    std::set<Edge> b_edges(b.edges().begin(), b.edges().end());
    return extend_isomorphism(a, b, order, 0, image, used, b_edges);
}

std::vector<Hypergraph> dedup_classes(const std::vector<Hypergraph>& graphs) {
    // Cheap fingerprint first so the quadratic scan only compares lookalikes.
    auto fingerprint = [](const Hypergraph& h) {
        std::vector<std::vector<int>> profile;
        for (const Edge& e : h.edges()) {
            std::vector<int> degrees;
            degrees.reserve(e.size());
            for (int v : e) degrees.push_back(h.degree(v));
            std::sort(degrees.begin(), degrees.end());
            profile.push_back(std::move(degrees));
        }
        std::sort(profile.begin(), profile.end());
        return profile;
    };
    std::map<std::vector<std::vector<int>>, std::vector<const Hypergraph*>> groups;
    std::vector<Hypergraph> reps;
    for (const Hypergraph& g : graphs) {
        auto& group = groups[fingerprint(g)];
        bool fresh = std::none_of(group.begin(), group.end(), [&](const Hypergraph* seen) {
            return brute_force_isomorphic(*seen, g);
        });
        if (fresh) {
            group.push_back(&g);
            reps.push_back(g);
        }
    }
    return reps;
}

int count_classes(int k, int m, int deficit, std::optional<int> girth) {
    const int n = m * (k - 1) + 1 - deficit;
    if (n < k) return 0;
    std::vector<Hypergraph> labeled = labeled_linear(k, m, n);
    if (girth) {
        std::erase_if(labeled,
                      [&](const Hypergraph& h) { return brute_force_girth(h) != girth; });
    }
    return static_cast<int>(dedup_classes(labeled).size());
}

std::optional<int> brute_force_girth(const Hypergraph& h) {
    if (!h.is_linear()) throw std::logic_error("girth oracle needs a linear input");
    const int m = h.edge_count();
    for (int c = 2; c <= m; ++c) {
        bool found = false;
        std::vector<int> subset;
        auto arrangements = [&](const std::vector<int>& chosen) {
            std::vector<int> rest(chosen.begin() + 1, chosen.end());
            std::sort(rest.begin(), rest.end());
            do {
                std::vector<int> cycle{chosen.front()};
                cycle.insert(cycle.end(), rest.begin(), rest.end());
                std::set<int> joints;
                bool ok = true;
                for (size_t i = 0; i < cycle.size() && ok; ++i) {
                    const Edge& cur = h.edge(cycle[i]);
                    const Edge& nxt = h.edge(cycle[(i + 1) % cycle.size()]);
                    Edge shared;
                    std::set_intersection(cur.begin(), cur.end(), nxt.begin(), nxt.end(),
                                          std::back_inserter(shared));
                    if (shared.size() != 1 || !joints.insert(shared.front()).second) ok = false;
                }
                if (ok) { found = true; return; }
            } while (std::next_permutation(rest.begin(), rest.end()));
        };
        std::function<void(int)> choose = [&](int from) {
            if (found) return;
            if (static_cast<int>(subset.size()) == c) {
                arrangements(subset);
                return;
            }
            for (int e = from; e < m && !found; ++e) {
                subset.push_back(e);
                choose(e + 1);
                subset.pop_back();
            }
        };
        choose(0);
        if (found) return c;
    }
    return std::nullopt;
}

Hypergraph random_linear(std::mt19937_64& rng, int k, int m) {
    Edge first(static_cast<size_t>(k));
    std::iota(first.begin(), first.end(), 0);
    std::vector<Edge> edges{first};
    int n = k;
    std::uniform_int_distribution<int> size_die(0, 9);
    for (int i = 1; i < m; ++i) {
        bool placed = false;
        for (int attempt = 0; attempt < 50 && !placed; ++attempt) {
            const int roll = size_die(rng);
            int s = roll < 7 ? 1 : roll < 9 ? 2 : 3;
            s = std::min({s, k, n});
            std::vector<int> pool(static_cast<size_t>(n));
            std::iota(pool.begin(), pool.end(), 0);
            std::shuffle(pool.begin(), pool.end(), rng);
            std::vector<int> shared(pool.begin(), pool.begin() + s);
            std::sort(shared.begin(), shared.end());
            bool linear = true;
            for (const Edge& e : edges)
                if (overlap(e, shared) >= 2) { linear = false; break; }
            if (!linear) continue;
            Edge next(shared.begin(), shared.end());
            for (int extra = 0; extra < k - s; ++extra) next.push_back(n + extra);
            if (s == k && std::find(edges.begin(), edges.end(), next) != edges.end()) continue;
            n += k - s;
            edges.push_back(std::move(next));
            placed = true;
        }
        if (!placed) {
            std::uniform_int_distribution<int> vertex_die(0, n - 1);
            Edge next{vertex_die(rng)};
            for (int extra = 0; extra < k - 1; ++extra) next.push_back(n + extra);
            n += k - 1;
            edges.push_back(std::move(next));
        }
    }
    return Hypergraph::from_edges(n, std::move(edges));
}

std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace hyperzagreb::oracle
