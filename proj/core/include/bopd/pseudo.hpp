#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bopd/cycle.hpp"
#include "bopd/graph.hpp"

namespace bopd {

/// Every simple cycle of g, in canonical order. Exponential in general;
/// oracle-grade, intended for order <= ~10.
std::vector<Cycle> allCycles(const Graph& g);

std::vector<Cycle> allTriangles(const Graph& g);

/// Exhaustive per-graph cycle index: for every vertex pair, the minimum
/// cycle length through both, how many cycles attain it, and one witness.
/// Ground truth for the pseudo-facial machinery; exponential to build.
class PseudoFacialOracle {
public:
    explicit PseudoFacialOracle(const Graph& g);

    const std::vector<Cycle>& cycles() const { return cycles_; }
    std::optional<int> girthVia(int u, int v) const;
    std::optional<Cycle> shortestCycleVia(int u, int v) const;
    bool isPseudoFacial(const Cycle& c) const;

private:
    struct ViaStats {
        int minLen = 0;
        int countAtMin = 0;
        std::size_t witness = 0;
    };
    std::vector<Cycle> cycles_;
    std::map<Edge, ViaStats> table_;
};

/// Minimum length of a cycle through both u and v; nullopt if none.
/// Exhaustive enumeration (oracle). Requires u != v.
std::optional<int> girthVia(const Graph& g, int u, int v);

/// The unique cycle of minimum length through u and v, or nullopt when no
/// cycle passes through both or the minimum-length cycle is not unique.
/// Exhaustive enumeration (oracle). Requires u != v.
std::optional<Cycle> shortestCycleVia(const Graph& g, int u, int v);

/// The two paths into which u and v split a cycle, as vertex sequences
/// from u to v, with path1 the shorter one (edge counts).
struct BiconnectionSplit {
    std::vector<int> path1;
    std::vector<int> path2;
    bool antipodal = false;  // equal lengths
};

/// Requires u, v on c and non-adjacent along c (|path1| >= 2).
BiconnectionSplit splitCycleAt(const Cycle& c, int u, int v);

/// Shortest-biconnection test: in the antipodal case the two arcs are the
/// only shortest u-v paths; otherwise path1 is the unique shortest u-v path
/// and, with its interior removed, path2 is the unique path of length
/// <= |path2| (decided by shortest-path counting: when the reduced distance
/// equals |path2| every path of length <= |path2| is shortest).
bool isShortestBiconnection(const Graph& g, const Cycle& c, int u, int v);

/// True iff c is the shortest biconnection of every pair of its vertices
/// that are non-adjacent along c; triangles vacuously qualify.
bool isBoundaryLike(const Graph& g, const Cycle& c);

/// Ground-truth pseudo-facial test straight from the definition: c is the
/// unique shortest cycle via every non-adjacent-on-c pair. Exponential.
bool isPseudoFacialOracle(const Graph& g, const Cycle& c);

/// All pseudo-facial cycles: the triangles, plus for each non-adjacent
/// vertex pair the candidate assembled from the unique shortest path and
/// the unique second path, kept iff boundary-like.
std::set<Cycle> pseudoFacialCycles(const Graph& g);

struct PseudoBopReport {
    bool isPseudoBop = false;
    std::vector<Edge> outerEdges;         // edges on exactly one pseudo-facial cycle
    std::vector<std::string> violations;  // human-readable, names the failed condition
    std::vector<Cycle> cycles;            // the pseudo-facial cycles, sorted
};

/// Checks the three pseudo-BOP conditions: no isolated vertex; every edge
/// on one or two pseudo-facial cycles; a vertex with two incident outer
/// edges lies on no pseudo-facial cycle beyond theirs.
PseudoBopReport checkPseudoBop(const Graph& g);

inline bool isPseudoBop(const Graph& g) { return checkPseudoBop(g).isPseudoBop; }

/// Position of w on the cycle split by (u, v): branch is 1 or 2 for the
/// containing arc, nullopt when u and v are antipodal; dist is the walk
/// distance from u along the containing arc. Endpoints: u -> (e|1, 0),
/// v -> (e|1, |path1|).
struct CycleCoordinates {
    std::optional<int> branch;
    int dist = 0;
};

CycleCoordinates cycleCoordinates(const Cycle& c, int u, int v, int w);

}  // namespace bopd
