#include "bopd/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace bopd {

Graph cycleGraph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back(makeEdge(i, (i + 1) % n));
    return Graph(n, std::move(edges));
}

Graph pathGraph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

Graph completeGraph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

Graph starGraph(int leaves) {
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return Graph(leaves + 1, std::move(edges));
}

Graph disjointUnion(const Graph& g, const Graph& h) {
    std::vector<Edge> edges = g.edges();
    int shift = g.vertexCount();
    for (auto [u, v] : h.edges()) edges.push_back({u + shift, v + shift});
    return Graph(g.vertexCount() + h.vertexCount(), std::move(edges));
}

namespace {

std::vector<Edge> pairList(int n) {
    std::vector<Edge> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    return pairs;
}

std::uint64_t edgeMask(const Graph& g, const std::vector<Edge>& pairs) {
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k)
        if (g.hasEdge(pairs[k].first, pairs[k].second)) mask |= std::uint64_t{1} << k;
    return mask;
}

}  // namespace

std::uint64_t canonicalGraphKey(const Graph& g) {
    int n = g.vertexCount();
    if (n > 8) throw std::invalid_argument("canonicalGraphKey supports order <= 8");
    std::vector<std::vector<int>> pairIndex(n, std::vector<int>(n, -1));
    {
        int k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                pairIndex[i][j] = pairIndex[j][i] = k;
                ++k;
            }
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t mask = 0;
        for (auto [u, v] : g.edges()) mask |= std::uint64_t{1} << pairIndex[perm[u]][perm[v]];
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<Graph> allGraphsUpToIso(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("allGraphsUpToIso supports 1 <= n <= 6");
    auto pairs = pairList(n);
    std::set<std::uint64_t> seen;
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((mask >> k) & 1) edges.push_back(pairs[k]);
        Graph g(n, std::move(edges));
        auto key = canonicalGraphKey(g);
        if (seen.insert(key).second) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> connectedGraphsUpToIso(int n) {
    std::vector<Graph> out;
    for (auto& g : allGraphsUpToIso(n))
        if (isConnected(g)) out.push_back(std::move(g));
    return out;
}

namespace {

// AHU canonical string for free trees: root at the centroid (or the pair).
std::string rootedCanon(const Graph& t, int v, int parent) {
    std::vector<std::string> children;
    for (int w : t.neighbors(v))
        if (w != parent) children.push_back(rootedCanon(t, w, v));
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (auto& c : children) out += c;
    out += ")";
    return out;
}

std::vector<int> treeCenters(const Graph& t) {
    int n = t.vertexCount();
    if (n == 1) return {0};
    std::vector<int> deg(n), order;
    for (int v = 0; v < n; ++v) deg[v] = t.degree(v);
    std::vector<int> layer;
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1) layer.push_back(v);
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = true;
            --remaining;
            for (int w : t.neighbors(v))
                if (!removed[w] && --deg[w] == 1) next.push_back(w);
        }
        layer = std::move(next);
    }
    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) centers.push_back(v);
    return centers;
}

std::string treeCanon(const Graph& t) {
    auto centers = treeCenters(t);
    if (centers.size() == 1) return rootedCanon(t, centers[0], -1);
    std::string a = rootedCanon(t, centers[0], centers[1]);
    std::string b = rootedCanon(t, centers[1], centers[0]);
    return a <= b ? a + "|" + b : b + "|" + a;
}

}  // namespace

std::vector<Graph> allTreesUpToIso(int n) {
    if (n < 1) throw std::invalid_argument("tree order must be >= 1");
    std::vector<Graph> level{Graph(1, {})};
    for (int k = 2; k <= n; ++k) {
        std::set<std::string> seen;
        std::vector<Graph> next;
        for (const auto& t : level)
            for (int v = 0; v < t.vertexCount(); ++v) {
                auto edges = t.edges();
                edges.push_back({v, t.vertexCount()});
                Graph grown(t.vertexCount() + 1, std::move(edges));
                auto key = treeCanon(grown);
                if (seen.insert(key).second) next.push_back(std::move(grown));
            }
        level = std::move(next);
    }
    return level;
}

Graph randomConnectedGraph(int n, double edgeProb, SplitMix64& rng) {
    if (n < 1) throw std::invalid_argument("order must be >= 1");
    if (edgeProb <= 0 || edgeProb > 1) throw std::invalid_argument("edge probability must be in (0, 1]");
    // Threshold in 2^-53 units keeps the draw integral and reproducible.
    std::uint64_t threshold = static_cast<std::uint64_t>(edgeProb * 9007199254740992.0);
    for (;;) {
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if ((rng.next() >> 11) < threshold) edges.push_back({i, j});
        Graph g(n, std::move(edges));
        if (isConnected(g)) return g;
    }
}

}  // namespace bopd
