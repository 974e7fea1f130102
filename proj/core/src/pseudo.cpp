#include "bopd/pseudo.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace bopd {

std::vector<Cycle> allCycles(const Graph& g) {
    std::set<Cycle> out;
    int n = g.vertexCount();
    std::vector<int> path;
    std::vector<bool> inPath(n, false);

    std::function<void()> extend = [&] {
        int v = path.back(), root = path.front();
        for (int w : g.neighbors(v)) {
            if (w == root && path.size() >= 3 && path[1] < path.back()) out.insert(Cycle(path));
            if (w > root && !inPath[w]) {
                path.push_back(w);
                inPath[w] = true;
                extend();
                inPath[w] = false;
                path.pop_back();
            }
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        inPath[s] = true;
        extend();
        inPath[s] = false;
    }
    return {out.begin(), out.end()};
}

std::vector<Cycle> allTriangles(const Graph& g) {
    std::set<Cycle> out;
    for (auto [u, v] : g.edges())
        for (int w : g.neighbors(u))
            if (w > v && g.hasEdge(v, w)) out.insert(Cycle({u, v, w}));
    return {out.begin(), out.end()};
}

namespace {

void requireDistinct(int u, int v) {
    if (u == v) throw std::invalid_argument("vertex pair must be distinct");
}

}  // namespace

PseudoFacialOracle::PseudoFacialOracle(const Graph& g) : cycles_(allCycles(g)) {
    for (std::size_t k = 0; k < cycles_.size(); ++k) {
        const auto& vs = cycles_[k].vertices();
        int len = cycles_[k].length();
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                Edge key = makeEdge(vs[i], vs[j]);
                auto it = table_.find(key);
                if (it == table_.end() || len < it->second.minLen)
                    table_[key] = {len, 1, k};
                else if (len == it->second.minLen)
                    ++it->second.countAtMin;
            }
    }
}

std::optional<int> PseudoFacialOracle::girthVia(int u, int v) const {
    requireDistinct(u, v);
    auto it = table_.find(makeEdge(u, v));
    if (it == table_.end()) return std::nullopt;
    return it->second.minLen;
}

std::optional<Cycle> PseudoFacialOracle::shortestCycleVia(int u, int v) const {
    requireDistinct(u, v);
    auto it = table_.find(makeEdge(u, v));
    if (it == table_.end() || it->second.countAtMin != 1) return std::nullopt;
    return cycles_[it->second.witness];
}

bool PseudoFacialOracle::isPseudoFacial(const Cycle& c) const {
    const auto& vs = c.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (c.hasEdge(vs[i], vs[j])) continue;
            auto it = table_.find(makeEdge(vs[i], vs[j]));
            if (it == table_.end() || it->second.countAtMin != 1 ||
                !(cycles_[it->second.witness] == c))
                return false;
        }
    return true;
}

std::optional<int> girthVia(const Graph& g, int u, int v) {
    return PseudoFacialOracle(g).girthVia(u, v);
}

std::optional<Cycle> shortestCycleVia(const Graph& g, int u, int v) {
    return PseudoFacialOracle(g).shortestCycleVia(u, v);
}

BiconnectionSplit splitCycleAt(const Cycle& c, int u, int v) {
    int iu = c.indexOf(u), iv = c.indexOf(v);
    if (iu < 0 || iv < 0) throw std::invalid_argument("split vertices must lie on the cycle");
    requireDistinct(u, v);
    int n = c.length();
    const auto& vs = c.vertices();
    auto walk = [&](int from, int to, int step) {
        std::vector<int> p;
        for (int i = from;; i = (i + step + n) % n) {
            p.push_back(vs[i]);
            if (i == to) break;
        }
        return p;
    };
    std::vector<int> forward = walk(iu, iv, 1);
    std::vector<int> backward = walk(iu, iv, -1);
    BiconnectionSplit out;
    out.antipodal = forward.size() == backward.size();
    if (forward.size() <= backward.size()) {
        out.path1 = std::move(forward);
        out.path2 = std::move(backward);
    } else {
        out.path1 = std::move(backward);
        out.path2 = std::move(forward);
    }
    if (out.path1.size() < 3) throw std::invalid_argument("split vertices must be non-adjacent along the cycle");
    return out;
}

namespace {

Graph withoutInterior(const Graph& g, const std::vector<int>& path, std::vector<int>& oldToNew) {
    std::vector<int> interior(path.begin() + 1, path.end() - 1);
    auto sub = removeVertices(g, interior);
    oldToNew = sub.oldToNew;
    return sub.graph;
}

}  // namespace

bool isShortestBiconnection(const Graph& g, const Cycle& c, int u, int v) {
    if (!c.isCycleOf(g)) throw std::invalid_argument("cycle is not a cycle of the graph");
    auto split = splitCycleAt(c, u, v);
    int len1 = static_cast<int>(split.path1.size()) - 1;
    int len2 = static_cast<int>(split.path2.size()) - 1;
    auto stats = shortestPathStats(g, u, v);
    if (split.antipodal) return stats.dist == len1 && stats.count == 2;
    if (!(stats.dist == len1 && stats.count == 1)) return false;
    std::vector<int> oldToNew;
    Graph reduced = withoutInterior(g, split.path1, oldToNew);
    auto stats2 = shortestPathStats(reduced, oldToNew[u], oldToNew[v]);
    return stats2.dist == len2 && stats2.count == 1;
}

bool isBoundaryLike(const Graph& g, const Cycle& c) {
    if (!c.isCycleOf(g)) throw std::invalid_argument("cycle is not a cycle of the graph");
    const auto& vs = c.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (c.hasEdge(vs[i], vs[j])) continue;
            if (!isShortestBiconnection(g, c, vs[i], vs[j])) return false;
        }
    return true;
}

bool isPseudoFacialOracle(const Graph& g, const Cycle& c) {
    if (!c.isCycleOf(g)) throw std::invalid_argument("cycle is not a cycle of the graph");
    return PseudoFacialOracle(g).isPseudoFacial(c);
}

namespace {

// Walks back through the BFS shortest-path DAG; valid when the shortest
// path is unique.
std::vector<int> uniqueShortestPath(const Graph& g, int u, int v) {
    std::vector<int> dist(g.vertexCount(), -1);
    std::vector<int> frontier{u};
    dist[u] = 0;
    for (std::size_t head = 0; head < frontier.size(); ++head) {
        int x = frontier[head];
        for (int y : g.neighbors(x))
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                frontier.push_back(y);
            }
    }
    std::vector<int> rev{v};
    int cur = v;
    while (cur != u) {
        for (int w : g.neighbors(cur))
            if (dist[w] == dist[cur] - 1) {
                cur = w;
                break;
            }
        rev.push_back(cur);
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

// All shortest u-v paths, up to the cap; used only when the count is tiny.
void collectShortestPaths(const Graph& g, const std::vector<int>& dist, int u, int cur,
                          std::vector<int>& suffix, std::vector<std::vector<int>>& out, std::size_t cap) {
    if (out.size() >= cap) return;
    if (cur == u) {
        std::vector<int> path(suffix.rbegin(), suffix.rend());
        out.push_back(std::move(path));
        return;
    }
    for (int w : g.neighbors(cur))
        if (dist[w] == dist[cur] - 1) {
            suffix.push_back(w);
            collectShortestPaths(g, dist, u, w, suffix, out, cap);
            suffix.pop_back();
        }
}

std::vector<std::vector<int>> shortestPaths(const Graph& g, int u, int v, std::size_t cap) {
    std::vector<int> dist(g.vertexCount(), -1);
    std::vector<int> frontier{u};
    dist[u] = 0;
    for (std::size_t head = 0; head < frontier.size(); ++head) {
        int x = frontier[head];
        for (int y : g.neighbors(x))
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                frontier.push_back(y);
            }
    }
    std::vector<std::vector<int>> out;
    if (dist[v] < 0) return out;
    std::vector<int> suffix{v};
    collectShortestPaths(g, dist, u, v, suffix, out, cap);
    return out;
}

bool internallyDisjoint(const std::vector<int>& p, const std::vector<int>& q) {
    std::set<int> inner(p.begin() + 1, p.end() - 1);
    for (std::size_t i = 1; i + 1 < q.size(); ++i)
        if (inner.count(q[i])) return false;
    return true;
}

std::optional<Cycle> glueCycle(const std::vector<int>& p1, const std::vector<int>& p2) {
    if (!internallyDisjoint(p1, p2)) return std::nullopt;
    std::vector<int> verts(p1.begin(), p1.end() - 1);
    for (std::size_t i = p2.size() - 1; i >= 1; --i) verts.push_back(p2[i]);
    return Cycle(verts);
}

}  // namespace

std::set<Cycle> pseudoFacialCycles(const Graph& g) {
    std::set<Cycle> out;
    for (const auto& t : allTriangles(g)) out.insert(t);

    int n = g.vertexCount();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.hasEdge(u, v)) continue;
            auto stats = shortestPathStats(g, u, v);
            if (!stats.dist) continue;
            std::optional<Cycle> candidate;
            if (stats.count == 2) {
                auto paths = shortestPaths(g, u, v, 3);
                candidate = glueCycle(paths[0], paths[1]);
            } else if (stats.count == 1) {
                auto p1 = uniqueShortestPath(g, u, v);
                std::vector<int> oldToNew;
                Graph reduced = withoutInterior(g, p1, oldToNew);
                auto stats2 = shortestPathStats(reduced, oldToNew[u], oldToNew[v]);
                if (stats2.dist && stats2.count == 1) {
                    auto p2r = uniqueShortestPath(reduced, oldToNew[u], oldToNew[v]);
                    std::vector<int> newToOld(reduced.vertexCount());
                    for (int x = 0; x < g.vertexCount(); ++x)
                        if (oldToNew[x] >= 0) newToOld[oldToNew[x]] = x;
                    std::vector<int> p2;
                    for (int x : p2r) p2.push_back(newToOld[x]);
                    candidate = glueCycle(p1, p2);
                }
            }
            if (candidate && candidate->length() >= 4 && out.count(*candidate) == 0 &&
                isBoundaryLike(g, *candidate))
                out.insert(*candidate);
        }
    return out;
}

PseudoBopReport checkPseudoBop(const Graph& g) {
    PseudoBopReport report;
    auto pfc = pseudoFacialCycles(g);
    report.cycles.assign(pfc.begin(), pfc.end());

    for (int v = 0; v < g.vertexCount(); ++v)
        if (g.degree(v) == 0)
            report.violations.push_back("condition 1: isolated vertex " + std::to_string(v));

    std::map<Edge, std::vector<const Cycle*>> onEdge;
    std::map<int, std::vector<const Cycle*>> onVertex;
    for (const auto& c : report.cycles) {
        for (auto e : c.edges()) onEdge[e].push_back(&c);
        for (int v : c.vertices()) onVertex[v].push_back(&c);
    }
    for (auto e : g.edges()) {
        std::size_t k = onEdge.count(e) ? onEdge[e].size() : 0;
        if (k == 0)
            report.violations.push_back("condition 2: edge {" + std::to_string(e.first) + "," +
                                        std::to_string(e.second) + "} on no pseudo-facial cycle");
        else if (k > 2)
            report.violations.push_back("condition 2: edge {" + std::to_string(e.first) + "," +
                                        std::to_string(e.second) + "} on " + std::to_string(k) +
                                        " pseudo-facial cycles");
        if (k == 1) report.outerEdges.push_back(e);
    }

    // Condition 3: at a vertex with two incident outer edges every
    // pseudo-facial cycle through the vertex contains one of them.
    std::set<Edge> outer(report.outerEdges.begin(), report.outerEdges.end());
    for (int v = 0; v < g.vertexCount(); ++v) {
        std::vector<Edge> outerAtV;
        for (int w : g.neighbors(v))
            if (outer.count(makeEdge(v, w))) outerAtV.push_back(makeEdge(v, w));
        if (outerAtV.size() < 2) continue;
        for (std::size_t i = 0; i < outerAtV.size(); ++i)
            for (std::size_t j = i + 1; j < outerAtV.size(); ++j) {
                auto e1 = outerAtV[i], e2 = outerAtV[j];
                for (const Cycle* c : onVertex[v]) {
                    auto hasE = [&](Edge e) { return c->hasEdge(e.first, e.second); };
                    if (!hasE(e1) && !hasE(e2))
                        report.violations.push_back("condition 3: vertex " + std::to_string(v) +
                                                    " with two outer edges lies on another pseudo-facial cycle");
                }
            }
    }

    report.isPseudoBop = report.violations.empty();
    return report;
}

CycleCoordinates cycleCoordinates(const Cycle& c, int u, int v, int w) {
    if (c.indexOf(w) < 0) throw std::invalid_argument("vertex not on cycle: " + std::to_string(w));
    auto split = splitCycleAt(c, u, v);
    int len1 = static_cast<int>(split.path1.size()) - 1;
    std::optional<int> branchOfArc1 = split.antipodal ? std::nullopt : std::optional<int>(1);
    if (w == u) return {branchOfArc1, 0};
    if (w == v) return {branchOfArc1, len1};
    for (std::size_t i = 1; i + 1 < split.path1.size(); ++i)
        if (split.path1[i] == w) return {branchOfArc1, static_cast<int>(i)};
    for (std::size_t i = 1; i + 1 < split.path2.size(); ++i)
        if (split.path2[i] == w)
            return {split.antipodal ? std::nullopt : std::optional<int>(2), static_cast<int>(i)};
    throw std::logic_error("cycle coordinate lookup failed");
}

}  // namespace bopd
