#include "bopd/facing.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bopd {

Layout::Layout(int vertexCount, std::vector<Edge> pairs) {
    for (auto& p : pairs) {
        p = makeEdge(p.first, p.second);
        if (p.first < 0 || p.second >= vertexCount)
            throw std::invalid_argument("layout pair out of range");
    }
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
        throw std::invalid_argument("duplicate layout pair");
    pairs_ = std::move(pairs);
    adj_.assign(vertexCount, {});
    for (auto [u, v] : pairs_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Layout::contains(int u, int v) const {
    if (u == v || u < 0 || v < 0 || u >= static_cast<int>(adj_.size()) || v >= static_cast<int>(adj_.size()))
        return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

const std::vector<int>& Layout::neighbors(int v) const {
    if (v < 0 || v >= static_cast<int>(adj_.size())) throw std::invalid_argument("vertex out of range");
    return adj_[v];
}

namespace {

bool edgesAdjacent(Edge a, Edge b) {
    return a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second;
}

// The cyclic order that the layout induces on the neighborhood of v, or
// nullopt when the induced relation is not a single spanning cycle.
std::optional<std::vector<int>> inducedLayoutCycle(const GraphWithLayout& gwl, int v) {
    const auto& nbrs = gwl.h.neighbors(v);
    int d = static_cast<int>(nbrs.size());
    if (d < 3) return std::nullopt;
    std::set<int> nbrSet(nbrs.begin(), nbrs.end());
    std::map<int, std::vector<int>> within;
    for (int x : nbrs)
        for (int y : gwl.l.neighbors(x))
            if (y != x && nbrSet.count(y)) within[x].push_back(y);
    for (int x : nbrs)
        if (within[x].size() != 2) return std::nullopt;
    std::vector<int> order{nbrs[0]};
    int prev = -1;
    while (static_cast<int>(order.size()) < d) {
        int cur = order.back();
        int next = within[cur][0] == prev ? within[cur][1] : within[cur][0];
        if (next == order.front()) return std::nullopt;  // short cycle, not spanning
        prev = cur;
        order.push_back(next);
    }
    // Close the cycle.
    if (within[order.back()][0] != order.front() && within[order.back()][1] != order.front())
        return std::nullopt;
    return order;
}

}  // namespace

std::vector<LayoutViolation> validateLayout(const GraphWithLayout& gwl) {
    std::vector<LayoutViolation> out;
    const Graph& h = gwl.h;

    for (int v = 0; v < h.vertexCount(); ++v)
        if (h.degree(v) == 2)
            out.push_back({0, "host graph has a degree-2 vertex: " + std::to_string(v)});
    for (auto [u, v] : h.edges())
        for (int w : h.neighbors(u))
            if (w > v && h.hasEdge(v, w))
                out.push_back({0, "host graph contains a triangle: {" + std::to_string(u) + "," +
                                      std::to_string(v) + "," + std::to_string(w) + "}"});

    std::map<int, std::vector<int>> cycles;
    for (int v = 0; v < h.vertexCount(); ++v) {
        if (h.degree(v) < 2) continue;
        auto cyc = inducedLayoutCycle(gwl, v);
        if (!cyc) {
            if (h.degree(v) != 2)  // degree-2 hosts are already reported above
                out.push_back({3, "layout does not induce a spanning cycle on the neighborhood of " +
                                      std::to_string(v)});
            continue;
        }
        cycles[v] = *cyc;
    }

    auto cycleNeighbors = [&](int center, int member) -> std::pair<int, int> {
        const auto& cyc = cycles.at(center);
        int d = static_cast<int>(cyc.size());
        for (int i = 0; i < d; ++i)
            if (cyc[i] == member) return {cyc[(i + d - 1) % d], cyc[(i + 1) % d]};
        throw std::logic_error("member not in cycle");
    };

    // Cross pairs between the neighborhoods of adjacent non-leaves.
    std::set<Edge> allowed;
    for (auto& [v, cyc] : cycles) {
        int d = static_cast<int>(cyc.size());
        for (int i = 0; i < d; ++i) allowed.insert(makeEdge(cyc[i], cyc[(i + 1) % d]));
    }
    for (auto [u, v] : h.edges()) {
        if (h.degree(u) < 2 || h.degree(v) < 2) continue;
        if (!cycles.count(u) || !cycles.count(v)) continue;
        auto [v1, v2] = cycleNeighbors(u, v);  // neighbors of v inside Gamma(u)
        auto [u1, u2] = cycleNeighbors(v, u);  // neighbors of u inside Gamma(v)
        if (v1 == u1 || v1 == u2 || v2 == u1 || v2 == u2) {
            out.push_back({4, "cross-pair sets intersect at edge {" + std::to_string(u) + "," +
                                  std::to_string(v) + "}"});
            continue;
        }
        bool m1 = gwl.l.contains(v1, u1) && gwl.l.contains(v2, u2);
        bool m2 = gwl.l.contains(v1, u2) && gwl.l.contains(v2, u1);
        if (m1 == m2) {
            out.push_back({4, std::string(m1 ? "ambiguous" : "missing") + " cross pairing at edge {" +
                                  std::to_string(u) + "," + std::to_string(v) + "}"});
            continue;
        }
        if (m1) {
            allowed.insert(makeEdge(v1, u1));
            allowed.insert(makeEdge(v2, u2));
        } else {
            allowed.insert(makeEdge(v1, u2));
            allowed.insert(makeEdge(v2, u1));
        }
    }
    for (auto p : gwl.l.pairs())
        if (!allowed.count(p))
            out.push_back({5, "unaccounted layout pair {" + std::to_string(p.first) + "," +
                                  std::to_string(p.second) + "}"});
    return out;
}

Edge FacingStructure::crossOf(int a, int b) const {
    Edge key = makeEdge(a, b);
    const auto& es = gwl.h.edges();
    auto it = std::lower_bound(es.begin(), es.end(), key);
    if (it == es.end() || *it != key) throw std::invalid_argument("not a host edge");
    return cross[static_cast<std::size_t>(it - es.begin())];
}

namespace {

FacingStructure buildFacing(Graph source, std::vector<Cycle> faces, std::vector<Edge> outerEdges) {
    FacingStructure fs;
    fs.source = std::move(source);
    fs.faces = std::move(faces);
    fs.outerEdges = std::move(outerEdges);

    int faceCount = static_cast<int>(fs.faces.size());
    int hN = faceCount + static_cast<int>(fs.outerEdges.size());

    std::map<Edge, int> outerIndex;
    for (int j = 0; j < static_cast<int>(fs.outerEdges.size()); ++j)
        outerIndex[fs.outerEdges[j]] = faceCount + j;

    std::map<Edge, std::vector<int>> facesOnEdge;
    for (int i = 0; i < faceCount; ++i)
        for (auto e : fs.faces[i].edges()) facesOnEdge[e].push_back(i);

    std::map<Edge, Edge> crossMap;  // host edge -> source edge
    std::vector<Edge> hEdges;
    for (auto e : fs.source.edges()) {
        const auto& on = facesOnEdge[e];
        Edge hEdge;
        if (on.size() == 2)
            hEdge = makeEdge(on[0], on[1]);
        else if (on.size() == 1)
            hEdge = makeEdge(on[0], outerIndex.at(e));
        else
            throw std::logic_error("edge lies on " + std::to_string(on.size()) + " faces");
        hEdges.push_back(hEdge);
        crossMap[hEdge] = e;
    }
    Graph h(hN, hEdges);
    fs.cross.clear();
    for (auto he : h.edges()) fs.cross.push_back(crossMap.at(he));

    auto crossAt = [&](int a, int b) { return crossMap.at(makeEdge(a, b)); };

    // Layout rule 1: two neighbors of a host vertex are related iff their
    // crossing edges are adjacent in the source.
    std::set<Edge> pairs;
    for (int v = 0; v < hN; ++v) {
        const auto& nb = h.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (edgesAdjacent(crossAt(v, nb[i]), crossAt(v, nb[j])))
                    pairs.insert(makeEdge(nb[i], nb[j]));
    }
    // Layout rule 2: cross pairs between the neighborhoods of adjacent
    // non-leaves, matched by crossing-edge adjacency in the source.
    for (auto [u, v] : h.edges()) {
        if (h.degree(u) < 2 || h.degree(v) < 2) continue;
        Edge shared = crossAt(u, v);
        std::vector<int> vCand, uCand;
        for (int w : h.neighbors(u))
            if (w != v && edgesAdjacent(crossAt(u, w), shared)) vCand.push_back(w);
        for (int w : h.neighbors(v))
            if (w != u && edgesAdjacent(crossAt(v, w), shared)) uCand.push_back(w);
        for (int vi : vCand)
            for (int uj : uCand)
                if (vi != uj && edgesAdjacent(crossAt(u, vi), crossAt(v, uj)))
                    pairs.insert(makeEdge(vi, uj));
    }
    fs.gwl.h = std::move(h);
    fs.gwl.l = Layout(hN, {pairs.begin(), pairs.end()});
    fs.gwl.colors = {};
    return fs;
}

}  // namespace

FacingStructure facing(const Graph& g) {
    auto report = checkPseudoBop(g);
    if (!report.isPseudoBop) {
        std::string msg = "facing requires a pseudo-BOP graph;";
        for (const auto& v : report.violations) msg += " " + v + ";";
        throw std::invalid_argument(msg);
    }
    return buildFacing(g, std::move(report.cycles), std::move(report.outerEdges));
}

FacingStructure facingOfDissection(const Dissection& d) {
    auto fd = facialData(d);
    std::vector<Cycle> faces(fd.facialCycles.begin(), fd.facialCycles.end());
    return buildFacing(buildGraph(d), std::move(faces), fd.outerEdges);
}

LineGraphResult layoutLineGraph(const GraphWithLayout& gwl) {
    if (!validateLayout(gwl).empty()) throw std::invalid_argument("invalid layout");
    const Graph& h = gwl.h;
    const auto& es = h.edges();
    int m = static_cast<int>(es.size());
    std::map<Edge, int> edgeIndex;
    for (int i = 0; i < m; ++i) edgeIndex[es[i]] = i;

    std::set<Edge> adjacency;
    std::vector<int> path;
    std::vector<bool> inPath(h.vertexCount(), false);

    std::function<void(int)> extend = [&](int startEdge) {
        int cur = path.back();
        int k = static_cast<int>(path.size());
        int endEdge = edgeIndex.at(makeEdge(path[k - 2], cur));
        if (endEdge != startEdge) adjacency.insert(makeEdge(startEdge, endEdge));
        for (int w : h.neighbors(cur)) {
            if (inPath[w]) continue;
            if (!gwl.l.contains(path[k - 2], w)) continue;           // skip-one pair
            if (k >= 3 && !gwl.l.contains(path[k - 3], w)) continue;  // skip-two pair
            path.push_back(w);
            inPath[w] = true;
            extend(startEdge);
            inPath[w] = false;
            path.pop_back();
        }
    };

    for (int i = 0; i < m; ++i) {
        auto [a, b] = es[i];
        for (auto [s, t] : {std::pair{a, b}, std::pair{b, a}}) {
            path = {s, t};
            inPath[s] = inPath[t] = true;
            extend(i);
            inPath[s] = inPath[t] = false;
        }
    }
    return {Graph(m, {adjacency.begin(), adjacency.end()}), es};
}

namespace {

std::map<int, std::vector<int>> allLayoutCycles(const GraphWithLayout& t) {
    std::map<int, std::vector<int>> cycles;
    for (int v = 0; v < t.h.vertexCount(); ++v) {
        if (t.h.degree(v) < 2) continue;
        auto cyc = inducedLayoutCycle(t, v);
        if (!cyc) throw std::invalid_argument("layout does not induce a cycle at vertex " + std::to_string(v));
        cycles[v] = *cyc;
    }
    return cycles;
}

void requireValidTreeLayout(const GraphWithLayout& t) {
    if (!isTree(t.h)) throw std::invalid_argument("host graph must be a tree");
    auto violations = validateLayout(t);
    if (!violations.empty()) throw std::invalid_argument("invalid layout: " + violations.front().message);
}

int indexIn(const std::vector<int>& cyc, int x) {
    for (std::size_t i = 0; i < cyc.size(); ++i)
        if (cyc[i] == x) return static_cast<int>(i);
    throw std::logic_error("vertex not in rotation");
}

// Directed rotations propagated over the tree of non-leaves: adjacent
// rotations must place their two connecting cross pairs on opposite sides
// of the shared edge.
std::map<int, std::vector<int>> orientedRotations(const GraphWithLayout& t,
                                                  const std::map<int, std::vector<int>>& cycles,
                                                  int a, int p, int q) {
    if (t.h.degree(a) < 3) throw std::invalid_argument("seed vertex must be a non-leaf");
    if (!t.l.contains(p, q)) throw std::invalid_argument("seed neighbors must be a layout pair");
    auto seedCyc = cycles.at(a);
    int d = static_cast<int>(seedCyc.size());
    int ip = indexIn(seedCyc, p);
    std::vector<int> rot;
    if (seedCyc[(ip + 1) % d] == q) {
        for (int i = 0; i < d; ++i) rot.push_back(seedCyc[(ip + i) % d]);
    } else if (seedCyc[(ip + d - 1) % d] == q) {
        for (int i = 0; i < d; ++i) rot.push_back(seedCyc[(ip + d - i) % d]);
    } else {
        throw std::invalid_argument("seed neighbors are not layout-adjacent around the seed vertex");
    }

    std::map<int, std::vector<int>> rotations;
    rotations[a] = rot;
    std::deque<int> queue{a};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        const auto& rx = rotations.at(x);
        int dx = static_cast<int>(rx.size());
        for (int u : t.h.neighbors(x)) {
            if (t.h.degree(u) < 2 || rotations.count(u)) continue;
            int iu = indexIn(rx, u);
            int succX = rx[(iu + 1) % dx];  // left neighbor of u around x
            auto cyc = cycles.at(u);
            int du = static_cast<int>(cyc.size());
            int ix = indexIn(cyc, x);
            // Candidate direction "as extracted": predecessor of x is cyc[ix-1].
            int predForward = cyc[(ix + du - 1) % du];
            int predBackward = cyc[(ix + 1) % du];
            std::vector<int> ru(du);
            if (t.l.contains(succX, predForward)) {
                for (int i = 0; i < du; ++i) ru[i] = cyc[(ix + i) % du];
            } else if (t.l.contains(succX, predBackward)) {
                for (int i = 0; i < du; ++i) ru[i] = cyc[(ix + du - i) % du];
            } else {
                throw std::invalid_argument("layout cross pairs do not determine an orientation at vertex " +
                                            std::to_string(u));
            }
            rotations[u] = std::move(ru);
            queue.push_back(u);
        }
    }
    return rotations;
}

}  // namespace

const std::vector<int>& Orientation::rotation(int u) const {
    static const std::vector<int> empty;
    auto it = rotations.find(u);
    return it == rotations.end() ? empty : it->second;
}

int Orientation::left(int u, int t) const {
    const auto& rot = rotations.at(u);
    int d = static_cast<int>(rot.size());
    return rot[(indexIn(rot, t) + 1) % d];
}

int Orientation::right(int u, int t) const {
    const auto& rot = rotations.at(u);
    int d = static_cast<int>(rot.size());
    return rot[(indexIn(rot, t) + d - 1) % d];
}

Orientation orient(const GraphWithLayout& t, int a, int p, int q) {
    requireValidTreeLayout(t);
    Orientation o;
    o.rotations = orientedRotations(t, allLayoutCycles(t), a, p, q);
    return o;
}

namespace {

std::vector<std::vector<std::pair<int, int>>> coordinatesImpl(
    const GraphWithLayout& t, const std::map<int, std::vector<int>>& cycles, int a, int p, int q) {
    auto rotations = orientedRotations(t, cycles, a, p, q);
    int n = t.h.vertexCount();
    std::vector<int> parent(n, -1), order;
    std::vector<bool> seen(n, false);
    std::deque<int> queue{a};
    seen[a] = true;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        order.push_back(v);
        for (int w : t.h.neighbors(v))
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = v;
                queue.push_back(w);
            }
    }

    auto cycleDistance = [](const std::vector<int>& rot, int x, int y) {
        int d = static_cast<int>(rot.size());
        int diff = std::abs(indexIn(rot, x) - indexIn(rot, y));
        return std::min(diff, d - diff);
    };

    std::vector<std::vector<std::pair<int, int>>> glo(n);
    for (int v : order) {
        if (v == a) continue;
        int u = parent[v];
        const auto& rot = rotations.at(u);
        int pu = (u == a) ? p : parent[u];
        int d = static_cast<int>(rot.size());
        int qu = rot[(indexIn(rot, pu) + 1) % d];  // left layout-neighbor of the origin
        glo[v] = glo[u];
        glo[v].emplace_back(cycleDistance(rot, v, pu), cycleDistance(rot, v, qu));
    }
    return glo;
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> globalCoordinates(const GraphWithLayout& t, int a,
                                                                int p, int q) {
    requireValidTreeLayout(t);
    return coordinatesImpl(t, allLayoutCycles(t), a, p, q);
}

std::string canonicalForm(const GraphWithLayout& t) {
    requireValidTreeLayout(t);
    auto cycles = allLayoutCycles(t);
    std::string best;
    bool first = true;
    for (const auto& [a, cyc] : cycles) {
        int d = static_cast<int>(cyc.size());
        for (int i = 0; i < d; ++i) {
            int p = cyc[i];
            for (int q : {cyc[(i + 1) % d], cyc[(i + d - 1) % d]}) {
                auto glo = coordinatesImpl(t, cycles, a, p, q);
                std::vector<std::string> rows;
                for (int v = 0; v < t.h.vertexCount(); ++v) {
                    std::string row = std::to_string(glo[v].size());
                    for (auto [x, y] : glo[v]) row += "," + std::to_string(x) + "," + std::to_string(y);
                    row += ";" + std::to_string(t.h.degree(v)) + ";" + std::to_string(t.colorOf(v));
                    rows.push_back(std::move(row));
                }
                std::sort(rows.begin(), rows.end());
                std::string serial;
                for (auto& r : rows) serial += r + "\n";
                if (first || serial < best) {
                    best = std::move(serial);
                    first = false;
                }
            }
        }
    }
    if (first) throw std::invalid_argument("host tree has no non-leaf vertex");
    return best;
}

bool layoutIsomorphic(const GraphWithLayout& t1, const GraphWithLayout& t2) {
    if (t1.h.vertexCount() != t2.h.vertexCount() || t1.h.edgeCount() != t2.h.edgeCount() ||
        t1.l.pairs().size() != t2.l.pairs().size())
        return false;
    return canonicalForm(t1) == canonicalForm(t2);
}

Graph reconstruct(const GraphWithLayout& t) {
    requireValidTreeLayout(t);
    auto cycles = allLayoutCycles(t);
    if (cycles.empty()) throw std::invalid_argument("host tree has no non-leaf vertex");

    int root = cycles.begin()->first;
    std::map<Edge, Edge> crossEdge;  // host edge -> realized source edge
    int nextVertex = 0;

    struct Task {
        int face;
        int parent;  // -1 for the root
    };
    std::deque<Task> queue{{root, -1}};

    while (!queue.empty()) {
        auto [u, par] = queue.front();
        queue.pop_front();
        auto cyc = cycles.at(u);
        int d = static_cast<int>(cyc.size());
        std::vector<int> q(d, -1);

        if (par < 0) {
            for (int i = 0; i < d; ++i) q[i] = nextVertex++;
        } else {
            // Rotate the cycle so the parent comes first.
            std::vector<int> rotated(d);
            int ip = indexIn(cyc, par);
            for (int i = 0; i < d; ++i) rotated[i] = cyc[(ip + i) % d];
            cyc = rotated;
            auto [x, y] = crossEdge.at(makeEdge(u, par));

            // The two layout-neighbors of u around the parent carry the
            // already-realized face edges adjacent to {x, y}; whichever
            // contains x fixes the gluing direction.
            const auto& parCyc = cycles.at(par);
            int dp = static_cast<int>(parCyc.size());
            int iu = indexIn(parCyc, u);
            int n1 = parCyc[(iu + dp - 1) % dp], n2 = parCyc[(iu + 1) % dp];
            Edge e1 = crossEdge.at(makeEdge(par, n1)), e2 = crossEdge.at(makeEdge(par, n2));
            int wx, wy;
            if (e1.first == x || e1.second == x) {
                wx = n1;
                wy = n2;
                if (e2.first != y && e2.second != y) throw std::invalid_argument("layout inconsistent with gluing");
            } else {
                wx = n2;
                wy = n1;
                if ((e2.first != x && e2.second != x) || (e1.first != y && e1.second != y))
                    throw std::invalid_argument("layout inconsistent with gluing");
            }
            int c1 = cyc[1];
            if (t.l.contains(c1, wx)) {
                q[0] = y;
                q[1] = x;
            } else if (t.l.contains(c1, wy)) {
                q[0] = x;
                q[1] = y;
            } else {
                throw std::invalid_argument("layout cross pairs do not determine the gluing at vertex " +
                                            std::to_string(u));
            }
            for (int i = 2; i < d; ++i) q[i] = nextVertex++;
        }

        for (int i = 0; i < d; ++i) {
            Edge he = makeEdge(u, cyc[i]);
            Edge ge = makeEdge(q[i], q[(i + 1) % d]);
            auto it = crossEdge.find(he);
            if (it == crossEdge.end())
                crossEdge[he] = ge;
            else if (it->second != ge)
                throw std::invalid_argument("layout inconsistent: edge realized twice differently");
        }
        for (int i = (par < 0 ? 0 : 1); i < d; ++i)
            if (t.h.degree(cyc[i]) >= 2) queue.push_back({cyc[i], u});
    }

    std::vector<Edge> edges;
    for (auto& entry : crossEdge) edges.push_back(entry.second);
    return Graph(nextVertex, std::move(edges));
}

GraphWithLayout parseGraphWithLayout(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw std::invalid_argument("empty graph-with-layout file");
    std::istringstream head(lines[0]);
    std::string tag;
    int n = -1;
    if (!(head >> tag >> n) || tag != "graph" || n < 0)
        throw std::invalid_argument("expected 'graph <n>' header, got: " + lines[0]);
    std::vector<Edge> edges, layoutPairs;
    std::vector<int> colors(n, 0);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream row(lines[i]);
        int u, v;
        if (!(row >> tag >> u >> v)) throw std::invalid_argument("malformed line: " + lines[i]);
        if (tag == "e")
            edges.push_back({u, v});
        else if (tag == "l")
            layoutPairs.push_back({u, v});
        else if (tag == "c") {
            if (u < 0 || u >= n) throw std::invalid_argument("color vertex out of range: " + lines[i]);
            colors[u] = v;
        } else
            throw std::invalid_argument("unknown line tag: " + lines[i]);
    }
    GraphWithLayout gwl;
    gwl.h = Graph(n, std::move(edges));
    gwl.l = Layout(n, std::move(layoutPairs));
    bool allZero = std::all_of(colors.begin(), colors.end(), [](int c) { return c == 0; });
    gwl.colors = allZero ? std::vector<int>{} : std::move(colors);
    return gwl;
}

GraphWithLayout parseGraphWithLayoutText(const std::string& text) {
    std::istringstream in(text);
    return parseGraphWithLayout(in);
}

std::string formatGraphWithLayout(const GraphWithLayout& gwl) {
    std::string out = formatGraph(gwl.h);
    for (auto [u, v] : gwl.l.pairs()) out += "l " + std::to_string(u) + " " + std::to_string(v) + "\n";
    for (int v = 0; v < gwl.h.vertexCount(); ++v)
        if (gwl.colorOf(v) != 0) out += "c " + std::to_string(v) + " " + std::to_string(gwl.colorOf(v)) + "\n";
    return out;
}

}  // namespace bopd
