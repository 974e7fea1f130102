#include "bopd/cycle.hpp"

#include <algorithm>
#include <stdexcept>

namespace bopd {

namespace {

std::vector<int> canonicalRotation(std::vector<int> seq) {
    auto best = seq;
    auto consider = [&](const std::vector<int>& s) {
        std::size_t n = s.size();
        for (std::size_t shift = 0; shift < n; ++shift) {
            std::vector<int> rot(n);
            for (std::size_t i = 0; i < n; ++i) rot[i] = s[(shift + i) % n];
            if (rot < best) best = rot;
        }
    };
    consider(seq);
    std::reverse(seq.begin(), seq.end());
    consider(seq);
    return best;
}

}  // namespace

Cycle::Cycle(std::vector<int> vertices) {
    if (vertices.size() < 3) throw std::invalid_argument("cycle length must be >= 3");
    auto sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("cycle vertices must be distinct");
    if (sorted.front() < 0) throw std::invalid_argument("negative vertex in cycle");
    verts_ = canonicalRotation(std::move(vertices));
}

bool Cycle::contains(int v) const { return indexOf(v) >= 0; }

int Cycle::indexOf(int v) const {
    for (std::size_t i = 0; i < verts_.size(); ++i)
        if (verts_[i] == v) return static_cast<int>(i);
    return -1;
}

std::pair<int, int> Cycle::neighborsOn(int v) const {
    int i = indexOf(v);
    if (i < 0) throw std::invalid_argument("vertex not on cycle: " + std::to_string(v));
    int n = length();
    return {verts_[(i + n - 1) % n], verts_[(i + 1) % n]};
}

std::vector<Edge> Cycle::edges() const {
    std::vector<Edge> out;
    int n = length();
    for (int i = 0; i < n; ++i) out.push_back(makeEdge(verts_[i], verts_[(i + 1) % n]));
    std::sort(out.begin(), out.end());
    return out;
}

bool Cycle::hasEdge(int u, int v) const {
    int i = indexOf(u);
    if (i < 0 || indexOf(v) < 0) return false;
    int n = length();
    return verts_[(i + 1) % n] == v || verts_[(i + n - 1) % n] == v;
}

bool Cycle::isCycleOf(const Graph& g) const {
    int n = length();
    for (int i = 0; i < n; ++i) {
        int u = verts_[i], v = verts_[(i + 1) % n];
        if (u >= g.vertexCount() || v >= g.vertexCount() || !g.hasEdge(u, v)) return false;
    }
    return true;
}

}  // namespace bopd
