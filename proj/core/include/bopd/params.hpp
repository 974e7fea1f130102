#pragma once

#include <optional>
#include <set>
#include <vector>

#include "bopd/cycle.hpp"
#include "bopd/graph.hpp"

namespace bopd {

/// Host-graph degrees along a path. Fineness folds these up to reversal
/// (paths are undirected); the anchored signatures below keep them directed.
using DegreeSequence = std::vector<int>;

/// True iff no two vertex-disjoint r-vertex paths of the tree have equal
/// degree sequences (up to reversal). Paths are enumerated by endpoint
/// pairs at distance r-1. Throws on a non-tree. Requires r >= 1.
bool isRFine(const Graph& tree, int r);

/// Least r <= cap such that the tree is r-fine, or nullopt when the cap is
/// exceeded. Scans every r without assuming monotonicity of r-fineness.
/// cap = |T| always suffices for a tree.
std::optional<int> fineness(const Graph& tree, int cap);

/// Vertices that are the exact midpoint of some pair at distance 2r.
std::vector<int> yuppieSet(const Graph& g, int r);

/// Degree sequences along the unique tree paths from w to every vertex at
/// distance exactly r (w excluded, the far endpoint included); directed,
/// since the path is anchored at w.
std::set<DegreeSequence> chSet(const Graph& tree, int w, int r);

/// Pairs {a, b} of neighbors of v such that the edges {v,a} and {v,b} lie
/// together on a pseudo-facial cycle of length <= fmax.
std::vector<Edge> adjoiningPairs(const Graph& g, int v, int fmax);

/// Variant with precomputed pseudo-facial cycles, for sweeps.
std::vector<Edge> adjoiningPairs(int v, int fmax, const std::vector<Cycle>& cycles);

/// Orders the bunch of length-<= fmax pseudo-facial cycles at v along the
/// adjoining path; the result collects all length-r contiguous subwords of
/// the cycle-size word read in both directions. nullopt when the adjoining
/// relation does not form a path through all of Gamma(v).
std::optional<std::set<std::vector<int>>> vertexSubwordSet(const Graph& g, int v, int fmax, int r);

std::optional<std::set<std::vector<int>>> vertexSubwordSet(const Graph& g, int v, int fmax, int r,
                                                           const std::vector<Cycle>& cycles);

/// Maximum number of vertices of an induced path all of whose vertices have
/// degree 2 in g. Degree-2 vertices span disjoint paths and cycles; a cycle
/// component of k vertices contributes k-1.
int longestDegreeTwoInducedPath(const Graph& g);

}  // namespace bopd
