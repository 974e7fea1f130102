#pragma once

#include <compare>
#include <vector>

#include "bopd/graph.hpp"

namespace bopd {

/// Cyclic sequence of distinct vertices, stored in canonical form: the
/// lexicographically least sequence over all rotations and both directions.
/// The canonical form is unique per vertex-cyclic-order equivalence class,
/// so Cycle works as a set/map key.
class Cycle {
public:
    /// Requires length >= 3 and distinct vertices.
    explicit Cycle(std::vector<int> vertices);

    int length() const { return static_cast<int>(verts_.size()); }
    const std::vector<int>& vertices() const { return verts_; }

    bool contains(int v) const;
    int indexOf(int v) const;  // -1 if absent

    /// The two cycle-neighbors of v, in canonical-order (predecessor, successor).
    std::pair<int, int> neighborsOn(int v) const;

    std::vector<Edge> edges() const;
    bool hasEdge(int u, int v) const;

    /// True iff consecutive vertices (cyclically) are adjacent in g.
    bool isCycleOf(const Graph& g) const;

    auto operator<=>(const Cycle&) const = default;

private:
    std::vector<int> verts_;
};

}  // namespace bopd
