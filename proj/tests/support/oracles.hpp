#pragma once

#include <optional>
#include <random>
#include <vector>

#include "hyperzagreb/hypergraph.hpp"

/// Slow reference implementations used only to cross-check the library.
/// Everything here favors obviousness over speed: exhaustive generation,
/// permutation backtracking, and cyclic edge arrangements.
namespace hyperzagreb::oracle {

/// Every connected linear k-uniform hypergraph with m edges labeled over
/// exactly the vertex set {0, .., n-1} (every vertex covered).
std::vector<Hypergraph> labeled_linear(int k, int m, int n);

/// Permutation backtracking over degree-compatible images; intended for
/// n <= 10.
bool brute_force_isomorphic(const Hypergraph& a, const Hypergraph& b);

/// One representative per isomorphism class, by pairwise comparison.
std::vector<Hypergraph> dedup_classes(const std::vector<Hypergraph>& graphs);

/// Number of isomorphism classes of connected linear k-uniform hypergraphs
/// with m edges and the given deficit, optionally fixed girth.
int count_classes(int k, int m, int deficit, std::optional<int> girth = std::nullopt);

/// Shortest cyclic arrangement of distinct edges joined by distinct shared
/// vertices, found by trying every arrangement. Requires a linear input.
std::optional<int> brute_force_girth(const Hypergraph& h);

/// Random connected linear k-uniform hypergraph grown edge by edge.
Hypergraph random_linear(std::mt19937_64& rng, int k, int m);

/// Uniformly random permutation of {0, .., n-1}, perm[old] = new.
std::vector<int> random_permutation(std::mt19937_64& rng, int n);

}  // namespace hyperzagreb::oracle
