#include "bopd/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace bopd {

Edge makeEdge(int u, int v) {
    if (u == v) throw std::invalid_argument("edge endpoints must differ: {" + std::to_string(u) + "," + std::to_string(v) + "}");
    return u < v ? Edge{u, v} : Edge{v, u};
}

Graph::Graph(int vertexCount, std::vector<Edge> edges) : n_(vertexCount) {
    if (vertexCount < 0) throw std::invalid_argument("negative vertex count");
    for (auto& e : edges) {
        e = makeEdge(e.first, e.second);
        if (e.first < 0 || e.second >= n_)
            throw std::invalid_argument("edge endpoint out of range: {" + std::to_string(e.first) + "," + std::to_string(e.second) + "}");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range: " + std::to_string(v));
    return adj_[v];
}

bool Graph::hasEdge(int u, int v) const {
    if (u == v) return false;
    const auto& nb = neighbors(u);
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range: " + std::to_string(v));
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

int Graph::maxDegree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, static_cast<int>(adj_[v].size()));
    return d;
}

namespace {

std::vector<int> bfsDistances(const Graph& g, int source) {
    std::vector<int> dist(g.vertexCount(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

}  // namespace

std::optional<int> distance(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.vertexCount() || v < 0 || v >= g.vertexCount())
        throw std::invalid_argument("vertex out of range");
    auto dist = bfsDistances(g, u);
    if (dist[v] < 0) return std::nullopt;
    return dist[v];
}

std::optional<int> diameter(const Graph& g) {
    if (g.vertexCount() == 0) throw std::invalid_argument("diameter of the empty graph");
    int best = 0;
    for (int u = 0; u < g.vertexCount(); ++u) {
        auto dist = bfsDistances(g, u);
        for (int v = 0; v < g.vertexCount(); ++v) {
            if (dist[v] < 0) return std::nullopt;
            best = std::max(best, dist[v]);
        }
    }
    return best;
}

PathStats shortestPathStats(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("shortestPathStats requires distinct endpoints");
    if (u < 0 || u >= g.vertexCount() || v < 0 || v >= g.vertexCount())
        throw std::invalid_argument("vertex out of range");
    std::vector<int> dist(g.vertexCount(), -1);
    std::vector<BigInt> count(g.vertexCount(), 0);
    std::deque<int> queue{u};
    dist[u] = 0;
    count[u] = 1;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : g.neighbors(x)) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
            if (dist[y] == dist[x] + 1) count[y] += count[x];
        }
    }
    if (dist[v] < 0) return {std::nullopt, 0};
    return {dist[v], count[v]};
}

LineGraphResult lineGraph(const Graph& g) {
    const auto& es = g.edges();
    int m = static_cast<int>(es.size());
    std::vector<Edge> adjPairs;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) adjPairs.push_back({i, j});
        }
    return {Graph(m, std::move(adjPairs)), es};
}

InducedSubgraph removeVertices(const Graph& g, const std::vector<int>& removed) {
    std::vector<bool> gone(g.vertexCount(), false);
    for (int v : removed) {
        if (v < 0 || v >= g.vertexCount()) throw std::invalid_argument("vertex out of range");
        gone[v] = true;
    }
    std::vector<int> oldToNew(g.vertexCount(), -1), newToOld;
    for (int v = 0; v < g.vertexCount(); ++v)
        if (!gone[v]) {
            oldToNew[v] = static_cast<int>(newToOld.size());
            newToOld.push_back(v);
        }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (!gone[u] && !gone[v]) edges.push_back({oldToNew[u], oldToNew[v]});
    return {Graph(static_cast<int>(newToOld.size()), std::move(edges)), std::move(oldToNew), std::move(newToOld)};
}

namespace {

// Sorted multiset of neighbor degrees; a cheap refinement key.
std::vector<int> neighborDegrees(const Graph& g, int v) {
    std::vector<int> out;
    for (int w : g.neighbors(v)) out.push_back(g.degree(w));
    std::sort(out.begin(), out.end());
    return out;
}

bool extendIsomorphism(const Graph& g, const Graph& h, const std::vector<std::vector<int>>& candidates,
                       const std::vector<int>& order, std::size_t pos, std::vector<int>& map,
                       std::vector<bool>& used) {
    if (pos == order.size()) return true;
    int v = order[pos];
    for (int w : candidates[v]) {
        if (used[w]) continue;
        bool ok = true;
        for (std::size_t i = 0; i < pos && ok; ++i) {
            int p = order[i];
            if (g.hasEdge(v, p) != h.hasEdge(w, map[p])) ok = false;
        }
        if (!ok) continue;
        map[v] = w;
        used[w] = true;
        if (extendIsomorphism(g, h, candidates, order, pos + 1, map, used)) return true;
        used[w] = false;
        map[v] = -1;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> isomorphism(const Graph& g, const Graph& h) {
    if (g.vertexCount() != h.vertexCount() || g.edgeCount() != h.edgeCount()) return std::nullopt;
    int n = g.vertexCount();
    if (n == 0) return std::vector<int>{};

    std::vector<std::vector<int>> keyG(n), keyH(n);
    for (int v = 0; v < n; ++v) {
        keyG[v] = neighborDegrees(g, v);
        keyG[v].push_back(g.degree(v));
        keyH[v] = neighborDegrees(h, v);
        keyH[v].push_back(h.degree(v));
    }
    std::vector<std::vector<int>> candidates(n);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (keyG[v] == keyH[w]) candidates[v].push_back(w);

    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return candidates[a].size() < candidates[b].size();
    });
    for (int v = 0; v < n; ++v)
        if (candidates[v].empty()) return std::nullopt;

    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    if (extendIsomorphism(g, h, candidates, order, 0, map, used)) return map;
    return std::nullopt;
}

bool isomorphic(const Graph& g, const Graph& h) { return isomorphism(g, h).has_value(); }

bool isConnected(const Graph& g) {
    if (g.vertexCount() == 0) return true;
    auto dist = bfsDistances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool isTree(const Graph& g) {
    return g.vertexCount() >= 1 && g.edgeCount() == g.vertexCount() - 1 && isConnected(g);
}

namespace {

// Strips comments; returns significant lines.
std::vector<std::string> significantLines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

}  // namespace

Graph parseGraph(std::istream& in) {
    auto lines = significantLines(in);
    if (lines.empty()) throw std::invalid_argument("empty graph file");
    std::istringstream head(lines[0]);
    std::string tag;
    int n = -1;
    if (!(head >> tag >> n) || tag != "graph" || n < 0)
        throw std::invalid_argument("expected 'graph <n>' header, got: " + lines[0]);
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream row(lines[i]);
        int u, v;
        if (!(row >> tag >> u >> v) || tag != "e")
            throw std::invalid_argument("expected 'e <u> <v>', got: " + lines[i]);
        edges.push_back({u, v});
    }
    return Graph(n, std::move(edges));
}

Graph parseGraphText(const std::string& text) {
    std::istringstream in(text);
    return parseGraph(in);
}

std::string formatGraph(const Graph& g) {
    std::string out = "graph " + std::to_string(g.vertexCount()) + "\n";
    for (auto [u, v] : g.edges()) out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace bopd
