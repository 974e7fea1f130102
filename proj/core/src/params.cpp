#include "bopd/params.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "bopd/pseudo.hpp"

namespace bopd {

namespace {

std::vector<std::vector<int>> allPairsDistances(const Graph& g) {
    int n = g.vertexCount();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        std::deque<int> queue{s};
        dist[s][s] = 0;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v))
                if (dist[s][w] < 0) {
                    dist[s][w] = dist[s][v] + 1;
                    queue.push_back(w);
                }
        }
    }
    return dist;
}

// Unique u-v path of a tree, endpoints included.
std::vector<int> treePath(const Graph& tree, int u, int v) {
    std::vector<int> parent(tree.vertexCount(), -2);
    std::deque<int> queue{u};
    parent[u] = -1;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (x == v) break;
        for (int y : tree.neighbors(x))
            if (parent[y] == -2) {
                parent[y] = x;
                queue.push_back(y);
            }
    }
    std::vector<int> path;
    for (int x = v; x != -1; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

void requireTree(const Graph& g) {
    if (!isTree(g)) throw std::invalid_argument("operation requires a tree");
}

}  // namespace

bool isRFine(const Graph& tree, int r) {
    requireTree(tree);
    if (r < 1) throw std::invalid_argument("r must be >= 1");

    // All r-vertex paths with their reversal-folded degree sequences.
    std::vector<std::pair<DegreeSequence, std::vector<int>>> paths;  // (key, vertex set)
    int n = tree.vertexCount();
    if (r == 1) {
        for (int v = 0; v < n; ++v) paths.push_back({{tree.degree(v)}, {v}});
    } else {
        auto dist = allPairsDistances(tree);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (dist[u][v] != r - 1) continue;
                auto path = treePath(tree, u, v);
                DegreeSequence seq;
                for (int x : path) seq.push_back(tree.degree(x));
                DegreeSequence rev(seq.rbegin(), seq.rend());
                paths.push_back({std::min(seq, rev), path});
            }
    }

    std::map<DegreeSequence, std::vector<const std::vector<int>*>> groups;
    for (auto& [key, verts] : paths) groups[key].push_back(&verts);
    for (auto& [key, members] : groups) {
        if (members.size() < 2) continue;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                bool disjoint = true;
                for (int x : *members[i]) {
                    if (std::find(members[j]->begin(), members[j]->end(), x) != members[j]->end()) {
                        disjoint = false;
                        break;
                    }
                }
                if (disjoint) return false;
            }
    }
    return true;
}

std::optional<int> fineness(const Graph& tree, int cap) {
    requireTree(tree);
    if (cap < 1) throw std::invalid_argument("cap must be >= 1");
    for (int r = 1; r <= cap; ++r)
        if (isRFine(tree, r)) return r;
    return std::nullopt;
}

std::vector<int> yuppieSet(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    auto dist = allPairsDistances(g);
    int n = g.vertexCount();
    std::vector<int> out;
    for (int v = 0; v < n; ++v) {
        bool yuppie = false;
        for (int u = 0; u < n && !yuppie; ++u) {
            if (dist[u][v] != r) continue;
            for (int w = 0; w < n && !yuppie; ++w)
                if (dist[v][w] == r && dist[u][w] == 2 * r) yuppie = true;
        }
        if (yuppie) out.push_back(v);
    }
    return out;
}

std::set<DegreeSequence> chSet(const Graph& tree, int w, int r) {
    requireTree(tree);
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    std::set<DegreeSequence> out;
    int n = tree.vertexCount();
    for (int far = 0; far < n; ++far) {
        if (far == w) continue;
        auto path = treePath(tree, w, far);
        if (static_cast<int>(path.size()) != r + 1) continue;
        DegreeSequence seq;
        for (std::size_t i = 1; i < path.size(); ++i) seq.push_back(tree.degree(path[i]));
        out.insert(std::move(seq));
    }
    return out;
}

std::vector<Edge> adjoiningPairs(int v, int fmax, const std::vector<Cycle>& cycles) {
    std::set<Edge> out;
    for (const auto& c : cycles) {
        if (c.length() > fmax || !c.contains(v)) continue;
        auto [a, b] = c.neighborsOn(v);
        out.insert(makeEdge(a, b));
    }
    return {out.begin(), out.end()};
}

std::vector<Edge> adjoiningPairs(const Graph& g, int v, int fmax) {
    auto pfc = pseudoFacialCycles(g);
    return adjoiningPairs(v, fmax, {pfc.begin(), pfc.end()});
}

std::optional<std::set<std::vector<int>>> vertexSubwordSet(const Graph& g, int v, int fmax, int r,
                                                           const std::vector<Cycle>& cycles) {
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    const auto& nbrs = g.neighbors(v);
    int d = static_cast<int>(nbrs.size());

    // Adjoining pairs, each carrying the (unique) supporting cycle length.
    std::map<int, std::vector<std::pair<int, int>>> adj;  // neighbor -> (other, cycle length)
    for (const auto& c : cycles) {
        if (c.length() > fmax || !c.contains(v)) continue;
        auto [a, b] = c.neighborsOn(v);
        adj[a].push_back({b, c.length()});
        adj[b].push_back({a, c.length()});
    }

    if (d == 0) return std::nullopt;
    if (d == 1) return std::set<std::vector<int>>{};  // one-vertex path, no cycle word

    // A path through all of Gamma(v): exactly two endpoints of degree 1,
    // the rest of degree 2, connected and acyclic.
    int endpoints = 0, start = -1;
    for (int x : nbrs) {
        std::size_t deg = adj.count(x) ? adj[x].size() : 0;
        if (deg == 0 || deg > 2) return std::nullopt;
        if (deg == 1) {
            ++endpoints;
            if (start < 0) start = x;
        }
    }
    if (endpoints != 2) return std::nullopt;

    std::vector<int> word;
    int prev = -1, cur = start, visited = 1;
    while (true) {
        const auto& options = adj[cur];
        int next = -1, len = -1;
        for (auto [cand, l] : options)
            if (cand != prev) {
                next = cand;
                len = l;
            }
        if (next < 0) break;
        word.push_back(len);
        prev = cur;
        cur = next;
        ++visited;
    }
    if (visited != d) return std::nullopt;  // disconnected adjoining relation

    std::set<std::vector<int>> out;
    auto collect = [&](const std::vector<int>& w) {
        for (std::size_t i = 0; i + r <= w.size(); ++i)
            out.insert(std::vector<int>(w.begin() + i, w.begin() + i + r));
    };
    collect(word);
    std::vector<int> rev(word.rbegin(), word.rend());
    collect(rev);
    return out;
}

std::optional<std::set<std::vector<int>>> vertexSubwordSet(const Graph& g, int v, int fmax, int r) {
    auto pfc = pseudoFacialCycles(g);
    return vertexSubwordSet(g, v, fmax, r, {pfc.begin(), pfc.end()});
}

int longestDegreeTwoInducedPath(const Graph& g) {
    int n = g.vertexCount();
    std::vector<bool> deg2(n, false);
    for (int v = 0; v < n; ++v) deg2[v] = g.degree(v) == 2;

    std::vector<int> comp(n, -1);
    int best = 0;
    for (int s = 0; s < n; ++s) {
        if (!deg2[s] || comp[s] >= 0) continue;
        // Collect the component of s inside the degree-2-induced subgraph.
        std::vector<int> stack{s}, members;
        comp[s] = s;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : g.neighbors(v))
                if (deg2[w] && comp[w] < 0) {
                    comp[w] = s;
                    stack.push_back(w);
                }
        }
        int innerEdges = 0;
        for (int v : members)
            for (int w : g.neighbors(v))
                if (deg2[w] && comp[w] == s) ++innerEdges;
        innerEdges /= 2;
        int size = static_cast<int>(members.size());
        bool isCycle = innerEdges == size && size >= 3;
        best = std::max(best, isCycle ? size - 1 : size);
    }
    return best;
}

}  // namespace bopd
