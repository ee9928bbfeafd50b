#include "hyperzagreb/construct.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hyperzagreb {

namespace {

void require(bool ok, errc code, const std::string& message) {
    if (!ok) fail(code, message);
}

/// Edge lists over a scratch id space, glued by identifying vertex classes
/// and then renumbered densely in ascending representative order.
class GlueBuilder {
public:
    int append(const Hypergraph& part) {
        int offset = next_;
        next_ += part.vertex_count();
        parent_.resize(static_cast<size_t>(next_));
        std::iota(parent_.begin() + offset, parent_.end(), offset);
        for (const Edge& e : part.edges()) {
            Edge shifted = e;
            for (int& v : shifted) v += offset;
            edges_.push_back(std::move(shifted));
        }
        return offset;
    }

    void identify(int a, int b) { parent_[static_cast<size_t>(find(b))] = find(a); }

    Hypergraph finish() {
        std::vector<int> dense(static_cast<size_t>(next_), -1);
        int n = 0;
        for (int v = 0; v < next_; ++v)
            if (find(v) == v) dense[static_cast<size_t>(v)] = n++;
        for (Edge& e : edges_)
            for (int& v : e) v = dense[static_cast<size_t>(find(v))];
        return Hypergraph::from_edges(n, std::move(edges_));
    }

private:
    int find(int v) {
        while (parent_[static_cast<size_t>(v)] != v) {
            parent_[static_cast<size_t>(v)] =
                parent_[static_cast<size_t>(parent_[static_cast<size_t>(v)])];
            v = parent_[static_cast<size_t>(v)];
        }
        return v;
    }

    int next_ = 0;
    std::vector<int> parent_;
    std::vector<Edge> edges_;
};

/// Lowest cored (fill) vertex of the given hyperpath edge, in path-local ids.
int path_fill_vertex(int k, int length, int edge_index, int which) {
    return length + 1 + edge_index * (k - 2) + which;
}

int canonical_attachment_vertex(const Hypergraph& h) {
    DegreeStats stats = h.degree_stats();
    int wanted = stats.max_degree >= 3 ? stats.max_degree : 2;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) == wanted) return v;
    fail(errc::illegal_parameters, "no vertex of degree " + std::to_string(wanted));
}

}  // namespace

bool FamilySpec::is_legal(int k) const {
    if (k < 3 || pendants < 0 || variant < 1 || variant > 3) return false;
    if (family == Family::B) return q >= p && p >= 3 && l >= 0;
    switch (variant) {
        case 1: return (p == 1 && 1 < q && q <= l) || (1 < p && p <= q && q <= l);
        case 2: return (q == 1 && 1 < p && p <= l) || (q > 1 && 1 <= p && p <= q - 1 && q - 1 <= l);
        case 3:
            return (q > 2 && 1 <= p && p <= q - 2 && q - 2 <= l) ||
                   (q == 2 && 1 <= p && p <= l) || (q == 1 && k > 3 && 1 < p && p <= l);
        default: return false;
    }
}

std::string FamilySpec::to_string() const {
    std::ostringstream out;
    out << (family == Family::B ? 'B' : 'C') << variant << "(p=" << p << ",q=" << q
        << ",l=" << l;
    if (pendants) out << ",pendants=" << pendants;
    out << ")";
    return out.str();
}

Hypergraph hyperpath(int k, int length) {
    require(k >= 2, errc::illegal_parameters, "hyperpath needs k >= 2");
    require(length >= 0, errc::length_too_small, "hyperpath needs length >= 0");
    if (length == 0) return Hypergraph::from_edges(1, {});
    int n = length * (k - 1) + 1;
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(length));
    for (int i = 0; i < length; ++i) {
        Edge e = {i, i + 1};
        for (int f = 0; f < k - 2; ++f) e.push_back(path_fill_vertex(k, length, i, f));
        edges.push_back(std::move(e));
    }
    return Hypergraph::from_edges(n, std::move(edges));
}

Hypergraph hypercycle(int k, int length) {
    require(k >= 2, errc::illegal_parameters, "hypercycle needs k >= 2");
    // A length-2 cycle would duplicate an edge (k = 2) or share two vertices.
    require(length >= 3, errc::length_too_small, "hypercycle needs length >= 3");
    int n = length * (k - 1);
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(length));
    for (int i = 0; i < length; ++i) {
        Edge e = {i, (i + 1) % length};
        for (int f = 0; f < k - 2; ++f) e.push_back(length + i * (k - 2) + f);
        edges.push_back(std::move(e));
    }
    return Hypergraph::from_edges(n, std::move(edges));
}

Hypergraph b_base(const FamilySpec& spec, int k) {
    require(spec.family == Family::B, errc::illegal_parameters, "family B expected");
    require(spec.is_legal(k), errc::illegal_parameters,
            "illegal family-B parameters " + spec.to_string() + " for k=" + std::to_string(k));

    GlueBuilder glue;
    int at_p = glue.append(hypercycle(k, spec.p));
    int at_q = glue.append(hypercycle(k, spec.q));
    int at_path = glue.append(hyperpath(k, spec.l));

    // Cycle joints occupy ids 0..len-1 and cored fills start at len; the
    // lowest-id vertex of the wanted degree is always picked.
    int p_joint = at_p + 0, p_cored = at_p + spec.p;
    int q_joint = at_q + 0, q_cored = at_q + spec.q;
    int path_front = at_path + 0, path_back = at_path + spec.l;

    switch (spec.variant) {
        case 1:
            glue.identify(p_joint, path_front);
            glue.identify(q_joint, path_back);
            break;
        case 2:
            glue.identify(p_joint, path_front);
            glue.identify(q_cored, path_back);
            break;
        case 3:
            glue.identify(p_cored, path_front);
            glue.identify(q_cored, path_back);
            break;
        default: fail(errc::illegal_parameters, "variant out of range");
    }
    return glue.finish();
}

Hypergraph c_base(const FamilySpec& spec, int k) {
    require(spec.family == Family::C, errc::illegal_parameters, "family C expected");
    require(spec.is_legal(k), errc::illegal_parameters,
            "illegal family-C parameters " + spec.to_string() + " for k=" + std::to_string(k));

    GlueBuilder glue;
    int at_p = glue.append(hyperpath(k, spec.p));
    int at_q = glue.append(hyperpath(k, spec.q));
    int at_l = glue.append(hyperpath(k, spec.l));

    int p_front = at_p + 0, p_back = at_p + spec.p;
    int q_front = at_q + 0, q_back = at_q + spec.q;
    int l_front = at_l + 0, l_back = at_l + spec.l;
    // Cored vertices of the first and last edge of the q-path; the lowest-id
    // eligible vertex is used, and the second-lowest when both live in the
    // same edge (C3 with q = 1).
    int q_first_fill = at_q + path_fill_vertex(k, spec.q, 0, 0);
    int q_last_fill = at_q + path_fill_vertex(k, spec.q, spec.q - 1, 0);

    switch (spec.variant) {
        case 1:
            glue.identify(p_front, q_front);
            glue.identify(p_front, l_front);
            glue.identify(p_back, q_back);
            glue.identify(p_back, l_back);
            break;
        case 2:
            glue.identify(p_front, q_front);
            glue.identify(p_front, l_front);
            glue.identify(p_back, q_back);
            glue.identify(q_last_fill, l_back);
            break;
        case 3:
            glue.identify(p_front, q_front);
            glue.identify(p_back, q_back);
            if (spec.q == 1) q_last_fill = at_q + path_fill_vertex(k, spec.q, 0, 1);
            glue.identify(q_first_fill, l_front);
            glue.identify(q_last_fill, l_back);
            break;
        default: fail(errc::illegal_parameters, "variant out of range");
    }
    return glue.finish();
}

Hypergraph attach_pendant_edges(const Hypergraph& h, int v, int count, int k) {
    require(v >= 0 && v < h.vertex_count(), errc::vertex_out_of_range,
            "pendant attachment vertex " + std::to_string(v));
    require(count >= 0, errc::illegal_parameters, "negative pendant count");
    require(k >= 2, errc::illegal_parameters, "pendant edges need k >= 2");
    std::optional<int> uniform = h.uniformity();
    require(!uniform || *uniform == k, errc::uniformity_mismatch,
            "pendant edge size differs from the host uniformity");

    std::vector<Edge> edges = h.edges();
    int next = h.vertex_count();
    for (int i = 0; i < count; ++i) {
        Edge e = {v};
        for (int f = 0; f < k - 1; ++f) e.push_back(next++);
        edges.push_back(std::move(e));
    }
    return Hypergraph::from_edges(next, std::move(edges));
}

Hypergraph build_family(const FamilySpec& spec, int k) {
    Hypergraph base = spec.family == Family::B ? b_base(spec, k) : c_base(spec, k);
    if (spec.pendants == 0) return base;
    return attach_pendant_edges(base, canonical_attachment_vertex(base), spec.pendants, k);
}

Hypergraph extremal_b(int k, int m, int g) {
    require(k >= 3, errc::illegal_parameters, "extremal_b needs k >= 3");
    require(g >= 3, errc::illegal_parameters, "extremal_b needs g >= 3");
    require(m >= 2 * g, errc::illegal_parameters, "extremal_b needs m >= 2g");
    return build_family({Family::B, 1, g, g, 0, m - 2 * g}, k);
}

Hypergraph extremal_c(int k, int m, int g) {
    require(k >= 3, errc::illegal_parameters, "extremal_c needs k >= 3");
    require(g >= 3, errc::illegal_parameters, "extremal_c needs g >= 3");
    if (g % 2 == 0) {
        require(2 * m >= 3 * g, errc::illegal_parameters, "extremal_c needs m >= 3g/2 for even g");
        return build_family({Family::C, 1, g / 2, g / 2, g / 2, m - 3 * g / 2}, k);
    }
    require(2 * m >= 3 * g - 1, errc::illegal_parameters,
            "extremal_c needs m >= (3g-1)/2 for odd g");
    return build_family({Family::C, 2, (g - 1) / 2, (g + 1) / 2, (g - 1) / 2,
                         m - g - (g - 1) / 2},
                        k);
}

GlobalMaxResult global_max(int k, int m) {
    require(m >= 4, errc::illegal_parameters, "no bicyclic hypergraph has fewer than 4 edges");
    return {extremal_c(k, m, 3), m < 6};
}

Hypergraph min_bicyclic(int k, int m) {
    require(k >= 3, errc::illegal_parameters, "min_bicyclic needs k >= 3");
    require(m >= 4, errc::illegal_parameters, "no bicyclic hypergraph has fewer than 4 edges");
    return c_base({Family::C, 3, 1, 2, m - 3, 0}, k);
}

}  // namespace hyperzagreb
