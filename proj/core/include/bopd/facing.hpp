#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bopd/cycle.hpp"
#include "bopd/dissection.hpp"
#include "bopd/graph.hpp"
#include "bopd/pseudo.hpp"

namespace bopd {

/// Irreflexive symmetric relation over the vertices of a host graph.
class Layout {
public:
    Layout() = default;
    Layout(int vertexCount, std::vector<Edge> pairs);

    const std::vector<Edge>& pairs() const { return pairs_; }
    bool contains(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;

    bool operator==(const Layout& other) const { return pairs_ == other.pairs_; }

private:
    std::vector<Edge> pairs_;
    std::vector<std::vector<int>> adj_;
};

/// Host graph plus layout relation plus vertex colors (default all 0).
/// Nothing is enforced at construction; validateLayout checks the five
/// layout conditions on demand.
struct GraphWithLayout {
    Graph h;
    Layout l;
    std::vector<int> colors;  // size h.vertexCount(); empty = all 0

    int colorOf(int v) const { return colors.empty() ? 0 : colors[v]; }
};

struct LayoutViolation {
    int condition;        // 0 = host-graph precondition, otherwise 2..5
    std::string message;  // names witnesses
};

/// Empty iff the host has no degree-2 vertex and no triangle and the five
/// layout conditions hold (the relation induces a cycle on every non-leaf
/// neighborhood, cross-pairs of adjacent non-leaves are disjoint and
/// consistently matched, and no unaccounted pairs exist).
std::vector<LayoutViolation> validateLayout(const GraphWithLayout& gwl);

enum class DualVertexKind { Face, OuterEdge };

/// The dual structure of a pseudo-BOP graph: one host vertex per
/// pseudo-facial cycle and per outer edge, host edges given by shared
/// edges / membership, each crossing exactly one source edge, and the
/// layout built from crossing-adjacency. For BOP sources the host is a
/// tree and the layout is valid; for general pseudo-BOP sources the
/// structure is returned unvalidated.
struct FacingStructure {
    Graph source;
    GraphWithLayout gwl;
    std::vector<Cycle> faces;       // host vertices [0, faces.size())
    std::vector<Edge> outerEdges;   // host vertices [faces.size(), ...)
    std::vector<Edge> cross;        // aligned with gwl.h.edges(): the crossed source edge

    int faceCount() const { return static_cast<int>(faces.size()); }
    DualVertexKind kindOf(int hv) const {
        return hv < faceCount() ? DualVertexKind::Face : DualVertexKind::OuterEdge;
    }
    /// The source edge crossed by the host edge {a, b}.
    Edge crossOf(int a, int b) const;
};

/// Throws std::invalid_argument (with the violations) when g is not
/// pseudo-BOP.
FacingStructure facing(const Graph& g);

/// Same structure, built from the combinatorial face data of a dissection;
/// avoids the pseudo-facial sweep and scales to large polygons.
FacingStructure facingOfDissection(const Dissection& d);

/// Line graph of a graph-with-layout: vertices are the host edges (sorted
/// order), adjacent iff some chain joins them (a path whose skip-one and
/// skip-two pairs all lie in the layout).
LineGraphResult layoutLineGraph(const GraphWithLayout& gwl);

/// The unique BOP graph whose facing structure is the given tree with
/// layout. Throws on a non-tree host or an invalid layout.
Graph reconstruct(const GraphWithLayout& t);

/// Plane rotation system on the non-leaves of a tree with layout,
/// propagated from the seed (a, p, q): the direction p -> q around a is
/// the positive one.
class Orientation {
public:
    /// Directed cyclic order of the neighbors of u; empty for leaves.
    const std::vector<int>& rotation(int u) const;
    int left(int u, int t) const;   // cyclic successor of t around u
    int right(int u, int t) const;  // cyclic predecessor

    std::map<int, std::vector<int>> rotations;
};

/// Requires: host is a tree, layout valid, a a non-leaf, p and q layout-
/// adjacent neighbors of a.
Orientation orient(const GraphWithLayout& t, int a, int p, int q);

/// Coordinate addresses relative to the seed: the root gets the empty
/// sequence, every other vertex the parent's sequence extended by its
/// local coordinates (layout-cycle distances to the two designated origin
/// neighbors of the parent).
std::vector<std::vector<std::pair<int, int>>> globalCoordinates(const GraphWithLayout& t, int a,
                                                                int p, int q);

/// Lexicographic minimum, over all seeds, of the sorted per-vertex
/// (address, degree, color) serialization. Equal canonical forms
/// characterize isomorphism of trees with layout.
std::string canonicalForm(const GraphWithLayout& t);

bool layoutIsomorphic(const GraphWithLayout& t1, const GraphWithLayout& t2);

// Text format: the graph block, then one line "l <u> <v>" per layout pair
// (u < v, sorted), then one line "c <v> <color>" per vertex with a
// non-zero color.
GraphWithLayout parseGraphWithLayout(std::istream& in);
GraphWithLayout parseGraphWithLayoutText(const std::string& text);
std::string formatGraphWithLayout(const GraphWithLayout& gwl);

}  // namespace bopd
