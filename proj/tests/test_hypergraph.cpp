#include "doctest.h"

#include <algorithm>
#include <random>

#include "hyperzagreb/hypergraph.hpp"
#include "support/checks.hpp"
#include "support/oracles.hpp"

using namespace hyperzagreb;
using oracle::throws_code;

TEST_CASE("construction validates and normalizes") {
    Hypergraph h = Hypergraph::from_edges(5, {{4, 2, 0}, {1, 2, 3}});
    CHECK(h.vertex_count() == 5);
    CHECK(h.edge_count() == 2);
    CHECK(h.edge(0) == Edge{0, 2, 4});
    CHECK(h.edge(1) == Edge{1, 2, 3});
    CHECK(h == Hypergraph::from_edges(5, {{1, 2, 3}, {0, 2, 4}}));

    CHECK(throws_code(errc::vertex_out_of_range, [] { Hypergraph::from_edges(3, {{0, 1, 3}}); }));
    CHECK(throws_code(errc::vertex_out_of_range, [] { Hypergraph::from_edges(3, {{-1, 1, 2}}); }));
    CHECK(throws_code(errc::duplicate_vertex_in_edge,
                      [] { Hypergraph::from_edges(3, {{0, 1, 1}}); }));
    CHECK(throws_code(errc::edge_too_small, [] { Hypergraph::from_edges(3, {{0}}); }));
    CHECK(throws_code(errc::duplicate_edge,
                      [] { Hypergraph::from_edges(3, {{0, 1, 2}, {2, 1, 0}}); }));
}

TEST_CASE("degrees, incidence and the squared-degree sum") {
    Hypergraph h = Hypergraph::from_edges(5, {{0, 1, 2}, {0, 3, 4}, {1, 3, 4}});
    CHECK(h.degree(0) == 2);
    CHECK(h.degree(2) == 1);
    CHECK(h.incident_edges(3) == std::vector<int>{1, 2});
    CHECK(h.incident_edges(4) == std::vector<int>{1, 2});

    DegreeStats stats = h.degree_stats();
    CHECK(stats.max_degree == 2);
    CHECK(stats.vertex_count == 5);
    CHECK(stats.degree_sum == 9);
    CHECK(stats.histogram == std::map<int, int>{{1, 1}, {2, 4}});

    CHECK(h.zagreb_index() == 4 + 4 + 1 + 4 + 4);

    Hypergraph empty;
    CHECK(empty.vertex_count() == 0);
    CHECK(empty.zagreb_index() == 0);
    CHECK(empty.degree_stats().histogram.empty());
}

TEST_CASE("uniformity") {
    CHECK(Hypergraph::from_edges(4, {{0, 1, 2}, {1, 2, 3}}).uniformity() == 3);
    CHECK(Hypergraph::from_edges(4, {{0, 1}, {1, 2, 3}}).uniformity() == std::nullopt);
    CHECK(Hypergraph().uniformity() == std::nullopt);
    CHECK(Hypergraph::from_edges(2, {{0, 1}}).uniformity() == 2);
}

TEST_CASE("linearity is a pairwise one-vertex bound") {
    CHECK(Hypergraph::from_edges(5, {{0, 1, 2}, {0, 3, 4}}).is_linear());
    CHECK_FALSE(Hypergraph::from_edges(4, {{0, 1, 2}, {0, 1, 3}}).is_linear());
    CHECK(Hypergraph().is_linear());
}

TEST_CASE("connectivity spans all vertices") {
    CHECK(Hypergraph::from_edges(5, {{0, 1, 2}, {2, 3, 4}}).is_connected());
    CHECK_FALSE(Hypergraph::from_edges(6, {{0, 1, 2}, {3, 4, 5}}).is_connected());
    CHECK_FALSE(Hypergraph::from_edges(4, {{0, 1, 2}}).is_connected());  // vertex 3 isolated
    CHECK(Hypergraph().is_connected());
    CHECK(Hypergraph::from_edges(1, {}).is_connected());
}

TEST_CASE("structure class tracks the deficit") {
    // Path of two triples: 2 * 2 + 1 - 5 = 0.
    Hypergraph tree = Hypergraph::from_edges(5, {{0, 1, 2}, {2, 3, 4}});
    CHECK(tree.structure_class().is_hypertree());
    CHECK(tree.structure_class().name() == "hypertree");

    // Triangle of triples: 3 * 2 + 1 - 6 = 1.
    Hypergraph tri = Hypergraph::from_edges(6, {{0, 1, 3}, {1, 2, 4}, {0, 2, 5}});
    CHECK(tri.structure_class().is_unicyclic());

    // Two triangles sharing a vertex would be bicyclic; built in construct tests.
    CHECK(StructureClass::from_deficit(2).is_bicyclic());
    CHECK(StructureClass::from_deficit(5).deficit() == 5);
    CHECK(StructureClass::other(3).name() == "other(3)");
    CHECK(throws_code(errc::illegal_parameters, [] { StructureClass::other(2); }));

    CHECK(throws_code(errc::not_uniform,
                      [] { Hypergraph::from_edges(4, {{0, 1}, {1, 2, 3}}).structure_class(); }));
    CHECK(throws_code(errc::not_linear, [] {
        Hypergraph::from_edges(4, {{0, 1, 2}, {0, 1, 3}}).structure_class();
    }));
    CHECK(throws_code(errc::not_connected, [] {
        Hypergraph::from_edges(6, {{0, 1, 2}, {3, 4, 5}}).structure_class();
    }));
}

TEST_CASE("girth finds the shortest cycle") {
    // Triangle of triples.
    CHECK(Hypergraph::from_edges(6, {{0, 1, 3}, {1, 2, 4}, {0, 2, 5}}).girth() == 3);
    // Acyclic path.
    CHECK(Hypergraph::from_edges(5, {{0, 1, 2}, {2, 3, 4}}).girth() == std::nullopt);
    // Square of pairs.
    CHECK(Hypergraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}).girth() == 4);
    // A 4-cycle plus a chord edge through a fresh vertex drops the girth to 3.
    CHECK(Hypergraph::from_edges(
              9, {{0, 1, 4}, {1, 2, 5}, {2, 3, 6}, {3, 0, 7}, {0, 2, 8}})
              .girth() == 3);
    CHECK(throws_code(errc::not_linear,
                      [] { Hypergraph::from_edges(4, {{0, 1, 2}, {0, 1, 3}}).girth(); }));
}

TEST_CASE("girth agrees with the arrangement oracle on random graphs") {
    std::mt19937_64 rng(20240817);
    for (int sample = 0; sample < 60; ++sample) {
        const int k = 3 + static_cast<int>(rng() % 2);
        const int m = 3 + static_cast<int>(rng() % 4);
        Hypergraph h = oracle::random_linear(rng, k, m);
        CAPTURE(sample);
        CHECK(h.girth() == oracle::brute_force_girth(h));
    }
}

TEST_CASE("cored vertices and pendant edges") {
    // Center triple with one pendant triple; the pendant has two exclusive vertices.
    Hypergraph h = Hypergraph::from_edges(5, {{0, 1, 2}, {0, 3, 4}});
    CHECK(h.cored_vertices() == std::vector<int>{1, 2, 3, 4});
    CHECK(h.pendant_edge_indices() == std::vector<int>{0, 1});

    // A single edge is isolated, not pendant.
    CHECK(Hypergraph::from_edges(3, {{0, 1, 2}}).pendant_edge_indices().empty());

    // Triangle: no vertex of degree one in any edge except the fills.
    Hypergraph tri = Hypergraph::from_edges(6, {{0, 1, 3}, {1, 2, 4}, {0, 2, 5}});
    CHECK(tri.pendant_edge_indices().empty());
    CHECK(tri.cored_vertices() == std::vector<int>{3, 4, 5});
}

TEST_CASE("relabeling permutes and renormalizes") {
    Hypergraph h = Hypergraph::from_edges(5, {{0, 1, 2}, {0, 3, 4}});
    std::vector<int> perm{4, 3, 2, 1, 0};
    Hypergraph r = h.relabeled(perm);
    CHECK(r.zagreb_index() == h.zagreb_index());
    CHECK(r.degree(4) == 2);
    CHECK(r.edge_count() == 2);

    std::vector<int> identity{0, 1, 2, 3, 4};
    CHECK(h.relabeled(identity) == h);

    std::vector<int> not_a_permutation{0, 0, 1, 2, 3};
    CHECK(throws_code(errc::illegal_parameters, [&] { h.relabeled(not_a_permutation); }));
    std::vector<int> wrong_size{0, 1, 2};
    CHECK(throws_code(errc::illegal_parameters, [&] { h.relabeled(wrong_size); }));
    std::vector<int> out_of_range{0, 1, 2, 3, 9};
    CHECK(throws_code(errc::vertex_out_of_range, [&] { h.relabeled(out_of_range); }));
}

TEST_CASE("relabeling preserves invariants on random graphs") {
    std::mt19937_64 rng(991);
    for (int sample = 0; sample < 40; ++sample) {
        Hypergraph h = oracle::random_linear(rng, 3, 5);
        std::vector<int> perm = oracle::random_permutation(rng, h.vertex_count());
        Hypergraph r = h.relabeled(perm);
        CHECK(r.zagreb_index() == h.zagreb_index());
        CHECK(r.girth() == h.girth());
        CHECK(r.degree_stats() == h.degree_stats());
        CHECK(r.is_connected() == h.is_connected());
    }
}
