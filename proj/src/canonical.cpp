#include "hyperzagreb/canonical.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hyperzagreb {

namespace {

/// One edge over the reduced vertex set: the member core vertices plus the
/// number of degree-1 vertices it carries.
struct ReducedEdge {
    std::vector<int> core;  // indices into the core vertex list
    int cored = 0;
};

struct EncodedEdge {
    std::vector<int> ids;  // relabeled core members, ascending
    int cored = 0;

    friend bool operator<(const EncodedEdge& a, const EncodedEdge& b) {
        if (a.ids != b.ids) return a.ids < b.ids;
        return a.cored < b.cored;
    }
    friend bool operator==(const EncodedEdge& a, const EncodedEdge& b) = default;
};

class Canonicalizer {
public:
    Canonicalizer(const Hypergraph& h, const CanonicalOptions& options)
        : h_(h), options_(options) {
        if (h.vertex_count() > options.max_vertices)
            fail(errc::too_large, "canonical labeling limited to " +
                                      std::to_string(options.max_vertices) + " vertices");
        core_of_.assign(static_cast<size_t>(h.vertex_count()), -1);
        for (int v = 0; v < h.vertex_count(); ++v)
            if (h.degree(v) >= 2) {
                core_of_[static_cast<size_t>(v)] = static_cast<int>(core_.size());
                core_.push_back(v);
            }
        edges_.reserve(h.edges().size());
        incident_.assign(core_.size(), {});
        for (const Edge& e : h.edges()) {
            ReducedEdge reduced;
            for (int v : e) {
                int idx = core_of_[static_cast<size_t>(v)];
                if (idx < 0)
                    ++reduced.cored;
                else
                    reduced.core.push_back(idx);
            }
            for (int idx : reduced.core)
                incident_[static_cast<size_t>(idx)].push_back(static_cast<int>(edges_.size()));
            edges_.push_back(std::move(reduced));
        }
    }

    CanonicalResult run() {
        std::vector<int> colors(core_.size(), 0);
        search(std::move(colors));
        return finish();
    }

private:
    void spend(long long amount) {
        budget_used_ += amount;
        if (budget_used_ > options_.step_budget)
            fail(errc::too_large, "canonical labeling budget exceeded");
    }

    /// One-sided color refinement on the reduced incidence structure. Colors
    /// are dense ranks; keys embed the previous color, so the partition only
    /// ever splits and a stable class count means a fixpoint.
    void refine(std::vector<int>& colors) const {
        colors = rank(colors);  // densify after individualization
        size_t classes = count_classes(colors);
        while (true) {
            std::vector<std::tuple<int, int, std::vector<int>>> edge_keys(edges_.size());
            for (size_t e = 0; e < edges_.size(); ++e) {
                std::vector<int> member_colors;
                member_colors.reserve(edges_[e].core.size());
                for (int idx : edges_[e].core)
                    member_colors.push_back(colors[static_cast<size_t>(idx)]);
                std::sort(member_colors.begin(), member_colors.end());
                edge_keys[e] = {static_cast<int>(edges_[e].core.size()), edges_[e].cored,
                                std::move(member_colors)};
            }
            std::vector<int> edge_colors = rank(edge_keys);

            std::vector<std::pair<int, std::vector<int>>> vertex_keys(core_.size());
            for (size_t v = 0; v < core_.size(); ++v) {
                std::vector<int> around;
                around.reserve(incident_[v].size());
                for (int e : incident_[v]) around.push_back(edge_colors[static_cast<size_t>(e)]);
                std::sort(around.begin(), around.end());
                vertex_keys[v] = {colors[v], std::move(around)};
            }
            colors = rank(vertex_keys);

            size_t now = count_classes(colors);
            if (now == classes) return;
            classes = now;
        }
    }

    template <typename Key>
    std::vector<int> rank(const std::vector<Key>& keys) const {
        std::vector<size_t> order(keys.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return keys[a] < keys[b]; });
        std::vector<int> out(keys.size(), 0);
        int next = -1;
        for (size_t i = 0; i < order.size(); ++i) {
            if (i == 0 || keys[order[i]] != keys[order[i - 1]]) ++next;
            out[order[i]] = next;
        }
        return out;
    }

    static size_t count_classes(const std::vector<int>& colors) {
        return colors.empty()
                   ? 0
                   : static_cast<size_t>(*std::max_element(colors.begin(), colors.end())) + 1;
    }

    void search(std::vector<int> colors) {
        spend(static_cast<long long>(core_.size() + edges_.size()) + 1);
        refine(colors);

        std::vector<std::vector<int>> cells(count_classes(colors));
        for (size_t v = 0; v < colors.size(); ++v)
            cells[static_cast<size_t>(colors[v])].push_back(static_cast<int>(v));

        const std::vector<int>* target = nullptr;
        for (const auto& cell : cells)
            if (cell.size() > 1) {
                target = &cell;
                break;
            }

        if (!target) {
            consider(colors);
            return;
        }
        // Individualize each member of the first non-singleton cell in turn:
        // doubling makes room, the chosen vertex sorts ahead of its cell.
        for (int v : *target) {
            std::vector<int> split = colors;
            for (int& c : split) c = 2 * c + 1;
            split[static_cast<size_t>(v)] -= 1;
            search(std::move(split));
        }
    }

    void consider(const std::vector<int>& perm) {
        std::vector<EncodedEdge> candidate(edges_.size());
        for (size_t e = 0; e < edges_.size(); ++e) {
            EncodedEdge enc;
            enc.cored = edges_[e].cored;
            enc.ids.reserve(edges_[e].core.size());
            for (int idx : edges_[e].core) enc.ids.push_back(perm[static_cast<size_t>(idx)]);
            std::sort(enc.ids.begin(), enc.ids.end());
            candidate[e] = std::move(enc);
        }
        std::sort(candidate.begin(), candidate.end());
        if (!have_best_ || candidate < best_) {
            best_ = std::move(candidate);
            have_best_ = true;
        }
    }

    CanonicalResult finish() const {
        std::ostringstream code;
        code << "n" << h_.vertex_count() << ";";
        std::vector<Edge> rebuilt;
        rebuilt.reserve(best_.size());
        int next_cored = static_cast<int>(core_.size());
        for (const EncodedEdge& enc : best_) {
            Edge e = enc.ids;
            for (size_t i = 0; i < enc.ids.size(); ++i)
                code << (i ? "," : "") << enc.ids[i];
            code << "|" << enc.cored << ";";
            for (int c = 0; c < enc.cored; ++c) e.push_back(next_cored++);
            rebuilt.push_back(std::move(e));
        }
        return {code.str(), Hypergraph::from_edges(h_.vertex_count(), std::move(rebuilt))};
    }

    const Hypergraph& h_;
    CanonicalOptions options_;
    std::vector<int> core_;     // core index -> original vertex id
    std::vector<int> core_of_;  // vertex id -> core index or -1
    std::vector<ReducedEdge> edges_;
    std::vector<std::vector<int>> incident_;  // core index -> edge indices
    std::vector<EncodedEdge> best_;
    bool have_best_ = false;
    long long budget_used_ = 0;
};

}  // namespace

CanonicalResult canonicalize(const Hypergraph& h, const CanonicalOptions& options) {
    return Canonicalizer(h, options).run();
}

std::string canonical_code(const Hypergraph& h, const CanonicalOptions& options) {
    return canonicalize(h, options).code;
}

Hypergraph canonical_form(const Hypergraph& h, const CanonicalOptions& options) {
    return canonicalize(h, options).form;
}

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b, const CanonicalOptions& options) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (a.degree_stats().histogram != b.degree_stats().histogram) return false;
    return canonical_code(a, options) == canonical_code(b, options);
}

}  // namespace hyperzagreb
