#pragma once

#include <cstdint>
#include <vector>

#include "bopd/graph.hpp"
#include "bopd/rng.hpp"

namespace bopd {

Graph cycleGraph(int n);
Graph pathGraph(int n);
Graph completeGraph(int n);
Graph starGraph(int leaves);

/// Disjoint union, vertices of h shifted past those of g.
Graph disjointUnion(const Graph& g, const Graph& h);

/// Canonical labeled key: minimum edge bitmask over all vertex
/// permutations. Brute force; requires n <= 8.
std::uint64_t canonicalGraphKey(const Graph& g);

/// All graphs on exactly n vertices up to isomorphism, deterministic order.
/// Brute force over edge subsets with canonical-key dedup; requires n <= 6.
std::vector<Graph> allGraphsUpToIso(int n);

std::vector<Graph> connectedGraphsUpToIso(int n);

/// All free trees on exactly n vertices up to isomorphism, grown by leaf
/// attachment with canonical-form dedup.
std::vector<Graph> allTreesUpToIso(int n);

/// Uniform G(n, p) conditioned on connectivity (rejection).
Graph randomConnectedGraph(int n, double edgeProb, SplitMix64& rng);

}  // namespace bopd
