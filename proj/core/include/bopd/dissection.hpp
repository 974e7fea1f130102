#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bopd/cycle.hpp"
#include "bopd/graph.hpp"

namespace bopd {

/// True iff the chords cross in the interior of the convex n-gon, i.e.
/// exactly one endpoint of c2 lies strictly between the endpoints of c1
/// in cyclic order. Chords sharing an endpoint do not cross.
/// Throws if either pair is not a valid chord of the n-gon.
bool chordsCross(int n, Edge c1, Edge c2);

bool isValidChord(int n, Edge c);

/// Convex polygon with vertices 0..n-1 in cyclic order plus a set of
/// pairwise non-crossing, non-boundary chords. The canonical geometric
/// model of a biconnected outerplanar graph; the polygon labeling is fixed
/// (vertex i at position i).
class Dissection {
public:
    /// Throws std::invalid_argument naming the offending chord (pair) when
    /// an invariant fails.
    Dissection(int polygonSize, std::vector<Edge> chords);

    int polygonSize() const { return n_; }
    const std::vector<Edge>& chords() const { return chords_; }  // sorted

    bool operator==(const Dissection& other) const {
        return n_ == other.n_ && chords_ == other.chords_;
    }

private:
    int n_ = 0;
    std::vector<Edge> chords_;
};

/// Graph with edges = the n polygon sides plus the chords.
Graph buildGraph(const Dissection& d);

struct FacialData {
    Cycle outerCycle;             // (0, 1, ..., n-1)
    std::set<Cycle> facialCycles; // bounded faces
    std::vector<Edge> outerEdges; // the n polygon sides, sorted
    std::vector<Edge> innerEdges; // the chords, sorted
};

/// Faces computed combinatorially by recursive splitting of the vertex
/// interval along chords; no geometry involved.
FacialData facialData(const Dissection& d);

/// Max length of a bounded facial cycle.
int facialCircumference(const Dissection& d);

struct RecognizedBop {
    Dissection dissection;
    std::vector<int> toPolygon;  // graph vertex -> polygon position
};

/// Present iff g is biconnected outerplanar: searches for a Hamiltonian
/// cycle under which all remaining edges are pairwise non-crossing chords.
/// The Hamiltonian cycle of a BOP graph is unique, so the first hit is
/// canonical.
std::optional<RecognizedBop> recognizeBOP(const Graph& g);

// Text format (byte-exact): line 1 "polygon <n>", then one line
// "chord <i> <j>" per chord with i < j in lexicographic order.
// '#' starts a comment line; LF endings.
Dissection parseDissection(std::istream& in);
Dissection parseDissectionText(const std::string& text);
std::string formatDissection(const Dissection& d);

}  // namespace bopd
