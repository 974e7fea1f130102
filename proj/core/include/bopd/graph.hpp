#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bopd {

/// Arbitrary-precision natural, used wherever counts can grow exponentially.
using BigInt = boost::multiprecision::cpp_int;

/// Undirected edge, normalized so that first < second.
using Edge = std::pair<int, int>;

/// Normalizes an endpoint pair. Throws std::invalid_argument on a loop.
Edge makeEdge(int u, int v);

/// Finite simple undirected graph on vertices 0..n-1.
/// Immutable after construction; all operations on it are pure functions.
class Graph {
public:
    Graph() = default;

    /// Throws std::invalid_argument on loops, out-of-range endpoints or
    /// duplicate edges.
    Graph(int vertexCount, std::vector<Edge> edges);

    int vertexCount() const { return n_; }
    int edgeCount() const { return static_cast<int>(edges_.size()); }

    /// Edges in sorted order; this order is the canonical edge indexing
    /// used by lineGraph and by the facing machinery.
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int v) const;
    bool hasEdge(int u, int v) const;
    int degree(int v) const;
    int maxDegree() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Shortest-path distance; std::nullopt encodes an infinite distance
/// (different components). Throws on out-of-range indices.
std::optional<int> distance(const Graph& g, int u, int v);

/// Max distance over all vertex pairs; nullopt iff g is disconnected.
/// Throws std::invalid_argument on the empty graph.
std::optional<int> diameter(const Graph& g);

struct PathStats {
    std::optional<int> dist;  // nullopt = no u-v path
    BigInt count;             // number of distinct shortest u-v paths
};

/// BFS layering with path-count accumulation. Requires u != v.
PathStats shortestPathStats(const Graph& g, int u, int v);

struct LineGraphResult {
    Graph graph;                   // one vertex per edge of the source
    std::vector<Edge> vertexEdge;  // vertexEdge[i] = source edge represented by vertex i
};

/// Vertices are the edges of g in sorted order; adjacency iff the edges
/// share an endpoint.
LineGraphResult lineGraph(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> oldToNew;  // -1 for removed vertices; order-preserving
    std::vector<int> newToOld;
};

/// Induced subgraph on V minus the given vertex set.
InducedSubgraph removeVertices(const Graph& g, const std::vector<int>& removed);

/// Some isomorphism g -> h as a vertex map, or nullopt. Plain backtracking
/// with degree and neighbor-degree pruning; intended for order <= ~12 and
/// may be slow above that.
std::optional<std::vector<int>> isomorphism(const Graph& g, const Graph& h);

bool isomorphic(const Graph& g, const Graph& h);

bool isConnected(const Graph& g);
bool isTree(const Graph& g);

// Text format (byte-exact): line 1 "graph <n>", then one line "e <u> <v>"
// per edge with u < v in lexicographic order. '#' starts a comment line.
// LF line endings.
Graph parseGraph(std::istream& in);
Graph parseGraphText(const std::string& text);
std::string formatGraph(const Graph& g);

}  // namespace bopd
